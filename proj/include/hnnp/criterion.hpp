#pragma once

#include "hnnp/hnn.hpp"

#include <optional>
#include <vector>

namespace hnnp {

/// Ascending chain of normal subgroups with order-p factors from 1 to G.
struct ChiefSeries {
    std::vector<Subgroup> terms;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct Decision {
    bool yes = false;
    std::optional<ChiefSeries> certificate;
    long long explored_nodes = 0;
};

/// Sequence witnessing (A,B,phi,p)-compatibility of its first term.
struct PCompatibleSequence {
    std::vector<Subgroup> terms; // ascending, H .. G
};

struct SearchOptions {
    bool use_visited_set = false; // dedupe subgroups reached by two chains
};

/// True iff phi(a) a^-1 lies in g_i for every a in A cap g_next; checked on
/// a generating set of A cap g_next (sufficient by normality of g_i).
bool condition2_holds(const HNNInstance& inst, const Subgroup& g_i, const Subgroup& g_next);

/// The criterion: depth-first search for a chief series satisfying the
/// compatibility and congruence conditions. Requires a p-group base; any
/// returned certificate is independently re-verified.
Decision decide(const HNNInstance& inst, const SearchOptions& opts = {});

/// Full re-verification of a certificate series (no generator shortcut).
bool verify_certificate(const HNNInstance& inst, const ChiefSeries& series);

/// Fast path for A = B cyclic with phi(a) = a^k: yes iff k = 1 (mod p).
/// Throws Inapplicable when A != B or A is not cyclic nontrivial.
Decision corollary_cyclic(const HNNInstance& inst);

/// Whether H admits an ascending compatible order-p-step chain to G.
std::pair<bool, std::optional<PCompatibleSequence>>
is_p_compatible(const HNNInstance& inst, const Subgroup& h, const SearchOptions& opts = {});

/// All (A,B,phi,p)-compatible subgroups of G (normal, p-power index).
std::vector<Subgroup> family_Fp(const HNNInstance& inst, int order_cap = 512);

/// Self-consistency probe of the quotient correspondence: membership of H
/// in the p-compatible family must match the criterion on G/H.
bool lemma22a_check(const HNNInstance& inst, const Subgroup& h);

} // namespace hnnp
