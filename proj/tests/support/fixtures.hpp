#pragma once

#include "hnnp/group.hpp"
#include "hnnp/hnn.hpp"

#include <random>
#include <string>
#include <vector>

// Shared test fixtures: the order-p^3 group H, a corpus of small p-groups
// built from presentations, and a deterministic (A, B, phi) sampler.
namespace hnnp::fixtures {

struct PresGroup {
    FiniteGroupPtr group;
    std::vector<std::string> gen_names;
    std::vector<int> gen_elems;

    int gen(const std::string& name) const;
    /// Element of a word over the presentation generators.
    int eval(const std::string& word) const;
};

PresGroup materialize(const std::vector<std::string>& gens,
                      const std::vector<std::string>& relators,
                      int max_cosets = 10000);

/// H = <a, b; a^-1 b a = b^{1+p}, a^p, b^{p^2}> of order p^3.
PresGroup h_group(int p);

/// H* = (H, t; t^-1 a t = b^p): A = <a>, B = <b^p>, phi: a -> b^p.
HNNInstance hstar_instance(int p);

struct NamedGroup {
    std::string name;
    int p;
    PresGroup pg;
};

/// Every group of order 2^k <= 16 and every group of order 27.
std::vector<NamedGroup> corpus();

/// Random (A, B, phi) instances over a fixed base. Deterministic for a
/// fixed generator state; always succeeds (phi = id on A = A fallback).
std::vector<HNNInstance> sample_instances(FiniteGroupPtr g, int p,
                                          std::mt19937& rng, int count);

/// Random word in the HNN alphabet with the given syllable count.
HNNWord random_hnn_word(const HNNInstance& inst, std::mt19937& rng, int syllables);

} // namespace hnnp::fixtures
