#pragma once

#include "hnnp/criterion.hpp"
#include "hnnp/hnn.hpp"

#include <string>
#include <vector>

namespace hnnp {

struct WitnessReport {
    bool homomorphism = false;
    bool injective_on_base = false;
    bool p_group = false;
    bool conjugation = false;

    bool ok() const { return homomorphism && injective_on_base && p_group && conjugation; }
    std::string to_string() const;
};

/// A finite p-group quotient rho: G* -> X that is injective on G.
struct WitnessResult {
    FiniteGroupPtr X;
    std::vector<int> rhoOnG; // base element index -> element of X
    int rhoT = -1;
    WitnessReport report;
};

struct WitnessOptions {
    bool faithful = false;   // W = 0 instead of the greedy invariant subspace
    int max_cosets = 200000;
};

/// |G| = p: X = G x C_p, rho identity on G, rho(t) the new generator.
WitnessResult witness_base(const HNNInstance& inst, const ChiefSeries& series);

/// G1 <= A, B: recurse on G/G1, pull the kernel back through a coset table,
/// split off G1 inside its mod-p abelianization, materialize the quotient.
WitnessResult witness_case_a(const HNNInstance& inst, const ChiefSeries& series,
                             const WitnessOptions& opts = {});

/// A cap G1 = 1: enlarge to A1 = A x G1, B1 = B x G1 with phi1(ax) = phi(a)x
/// and reduce to case a.
WitnessResult witness_case_b(const HNNInstance& inst, const ChiefSeries& series,
                             const WitnessOptions& opts = {});

/// Dispatch on the first series step; the returned witness always carries a
/// passing verification report.
WitnessResult build_witness(const HNNInstance& inst, const ChiefSeries& series,
                            const WitnessOptions& opts = {});

/// Independent re-check: homomorphism on the full table, injectivity on G,
/// X a p-group, and the conjugation relation for every a in A.
WitnessReport verify_witness(const HNNInstance& inst, const WitnessResult& w);

/// For every normal subgroup N' of X, the pullback G cap rho^-1(N') must be
/// p-compatible for the instance. Returns the conjunction.
bool pullback_family_check(const HNNInstance& inst, const WitnessResult& w);

/// Image of an HNN word under rho.
int evaluate_in_witness(const HNNInstance& inst, const WitnessResult& w,
                        const HNNWord& word);
int evaluate_in_witness(const HNNInstance& inst, const WitnessResult& w,
                        const ReducedForm& rf);

} // namespace hnnp
