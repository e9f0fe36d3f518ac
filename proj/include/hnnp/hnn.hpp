#pragma once

#include "hnnp/group.hpp"
#include "hnnp/word.hpp"

#include <string>
#include <vector>

namespace hnnp {

/// The data of an HNN-extension G* = (G, t; t^-1 A t = B, phi) over a
/// finite base group, together with the prime p under investigation.
struct HNNInstance {
    FiniteGroupPtr base;
    Subgroup A;
    Subgroup B;
    PartialIso phi;
    int p = 0;

    const FiniteGroup& group() const { return *base; }
};

HNNInstance make_instance(FiniteGroupPtr base, Subgroup a, Subgroup b,
                          PartialIso phi, int p);

/// Britton reduced form g0 t^e1 g1 ... t^en gn.
struct ReducedForm {
    int head = 0;                              // g0
    std::vector<std::pair<int, int>> syllables; // (epsilon, g_i)

    bool trivial(const FiniteGroup& g) const {
        return syllables.empty() && head == g.identity();
    }
    long long t_exponent_sum() const;
};

/// A word over the base group and the stable letter, kept as element
/// indices interleaved with t-powers.
struct HNNWord {
    // steps: pair (kind, value); kind 0 = base element, kind 1 = t^value
    std::vector<std::pair<int, int>> parts;
};

/// Parses a word whose symbols are base-element names plus the reserved
/// symbol "t". extra_names optionally maps further symbols to elements.
HNNWord parse_hnn_word(const HNNInstance& inst, const std::string& text,
                       const std::vector<std::pair<std::string, int>>& extra_names = {});

/// Repeatedly splices pinches t^-1 a t (a in A) and t b t^-1 (b in B); the
/// result has no pinch, and is the identity iff the input is trivial in G*.
ReducedForm britton_reduce(const HNNInstance& inst, const HNNWord& w);

std::string format_reduced(const HNNInstance& inst, const ReducedForm& rf);

/// True iff (A cap H) phi = B cap H.
bool is_compatible(const HNNInstance& inst, const Subgroup& h);

/// The induced instance over G/H for a normal compatible subgroup H.
/// Throws NotNormal / NotCompatible. Well-definedness of the induced iso is
/// re-verified.
HNNInstance quotient_instance(const HNNInstance& inst, const Subgroup& h,
                              QuotientMap* out_qm = nullptr);

} // namespace hnnp
