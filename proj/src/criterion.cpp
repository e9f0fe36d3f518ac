#include "hnnp/criterion.hpp"

#include "hnnp/errors.hpp"

#include <algorithm>
#include <set>

namespace hnnp {

bool condition2_holds(const HNNInstance& inst, const Subgroup& g_i, const Subgroup& g_next) {
    const FiniteGroup& g = inst.group();
    ElementSet cut = intersect(inst.A, g_next);
    for (int a : generating_set(g, cut)) {
        int diff = g.mul(inst.phi.apply(a), g.inv(a));
        if (!g_i.contains(diff)) return false;
    }
    return true;
}

namespace {

struct Search {
    const HNNInstance& inst;
    const SearchOptions& opts;
    long long nodes = 0;
    std::set<std::vector<char>> visited;

    bool dfs(std::vector<Subgroup>& chain) {
        ++nodes;
        Subgroup top = chain.back(); // copy: the recursion reallocates the chain
        if (top.size() == inst.group().order()) return true;
        for (const Subgroup& k : minimal_normal_steps(inst.group(), inst.p, top)) {
            if (!is_compatible(inst, k)) continue;
            if (!condition2_holds(inst, top, k)) continue;
            if (opts.use_visited_set && !visited.insert(k.mask).second) continue;
            chain.push_back(k);
            if (dfs(chain)) return true;
            chain.pop_back();
        }
        return false;
    }
};

} // namespace

bool verify_certificate(const HNNInstance& inst, const ChiefSeries& series) {
    const FiniteGroup& g = inst.group();
    if (series.terms.empty()) return false;
    if (!(series.terms.front() == trivial_subgroup(g))) return false;
    if (!(series.terms.back() == full_subgroup(g))) return false;
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
        const Subgroup& term = series.terms[i];
        if (!is_subgroup(term) || !is_normal(g, term)) return false;
        if (!is_compatible(inst, term)) return false;
        if (i == 0) continue;
        const Subgroup& prev = series.terms[i - 1];
        for (int x : prev.elements())
            if (!term.contains(x)) return false;
        if (term.size() != prev.size() * inst.p) return false;
        // condition (2) on the full intersection, no generator shortcut
        for (int a : intersect(inst.A, term).elements())
            if (!prev.contains(g.mul(inst.phi.apply(a), g.inv(a)))) return false;
    }
    return true;
}

Decision decide(const HNNInstance& inst, const SearchOptions& opts) {
    if (!is_p_group(inst.group(), inst.p))
        throw NotPGroup("the criterion requires a finite p-group base");
    Search s{inst, opts};
    std::vector<Subgroup> chain{trivial_subgroup(inst.group())};
    Decision d;
    if (s.dfs(chain)) {
        d.yes = true;
        d.certificate = ChiefSeries{chain};
        if (!verify_certificate(inst, *d.certificate))
            throw InternalInvariantViolation("search returned a non-verifying certificate");
    }
    d.explored_nodes = s.nodes;
    return d;
}

Decision corollary_cyclic(const HNNInstance& inst) {
    const FiniteGroup& g = inst.group();
    if (!(inst.A == inst.B)) throw Inapplicable("corollary requires A = B");
    if (inst.A.size() <= 1) throw Inapplicable("corollary requires A nontrivial");
    int gen = -1;
    for (int x : inst.A.elements())
        if (closure(g, std::vector<int>{x}) == inst.A) { gen = x; break; }
    if (gen < 0) throw Inapplicable("corollary requires A cyclic");
    // discrete log of phi(gen) in <gen>
    int k = -1, acc = g.identity();
    for (int e = 0; e < inst.A.size(); ++e) {
        if (acc == inst.phi.apply(gen)) { k = e; break; }
        acc = g.mul(acc, gen);
    }
    if (k < 0) throw InternalInvariantViolation("phi image escaped the cyclic subgroup");
    Decision d;
    d.yes = (k % inst.p) == 1 % inst.p;
    return d;
}

std::pair<bool, std::optional<PCompatibleSequence>>
is_p_compatible(const HNNInstance& inst, const Subgroup& h, const SearchOptions& opts) {
    const FiniteGroup& g = inst.group();
    if (!is_subgroup(h) || !is_normal(g, h) || !is_compatible(inst, h))
        return {false, std::nullopt};
    int index = g.order() / h.size();
    int q = index;
    while (q % inst.p == 0) q /= inst.p;
    if (q != 1) return {false, std::nullopt};
    Search s{inst, opts};
    std::vector<Subgroup> chain{h};
    if (s.dfs(chain)) return {true, PCompatibleSequence{chain}};
    return {false, std::nullopt};
}

std::vector<Subgroup> family_Fp(const HNNInstance& inst, int order_cap) {
    const FiniteGroup& g = inst.group();
    if (g.order() > order_cap)
        throw CapExceeded("group too large for family enumeration");
    std::vector<Subgroup> out;
    for (const Subgroup& n : normal_subgroups(g))
        if (is_p_compatible(inst, n).first) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

bool lemma22a_check(const HNNInstance& inst, const Subgroup& h) {
    bool member = is_p_compatible(inst, h).first;
    bool quotient_yes = false;
    try {
        HNNInstance q = quotient_instance(inst, h);
        quotient_yes = decide(q).yes;
    } catch (const NotCompatible&) {
        quotient_yes = false;
        // incompatible H cannot be in the family either
        return member == false;
    }
    return member == quotient_yes;
}

} // namespace hnnp
