#include "oracle.hpp"

#include "hnnp/errors.hpp"

#include <set>

namespace hnnp::oracle {

SubgroupLattice all_subgroups(const FiniteGroup& g) {
    if (g.order() > 64) throw CapExceeded("oracle subgroup scan capped at order 64");
    std::set<std::vector<char>> seen;
    std::vector<Subgroup> work{trivial_subgroup(g)};
    seen.insert(work[0].mask);
    for (std::size_t qi = 0; qi < work.size(); ++qi) {
        Subgroup s = work[qi]; // copy: work may reallocate
        for (int x = 0; x < g.order(); ++x) {
            if (s.contains(x)) continue;
            std::vector<int> gens = s.elements();
            gens.push_back(x);
            Subgroup bigger = closure(g, gens);
            if (seen.insert(bigger.mask).second) work.push_back(std::move(bigger));
        }
    }
    SubgroupLattice lat;
    lat.group = &g;
    for (const auto& mask : seen) {
        Subgroup s(g);
        s.mask = mask;
        lat.normal_flags.push_back(is_normal(g, s) ? 1 : 0);
        lat.subgroups.push_back(std::move(s));
    }
    return lat;
}

std::vector<ChiefSeries> all_chief_series(const FiniteGroup& g, int p) {
    if (!is_p_group(g, p)) throw NotPGroup("oracle chief series need a p-group");
    SubgroupLattice lat = all_subgroups(g);
    std::vector<ChiefSeries> out;
    std::vector<Subgroup> chain{trivial_subgroup(g)};
    auto dfs = [&](auto&& self) -> void {
        Subgroup top = chain.back(); // copy: recursion reallocates the chain
        if (top.size() == g.order()) {
            out.push_back(ChiefSeries{chain});
            return;
        }
        for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
            const Subgroup& k = lat.subgroups[i];
            if (!lat.normal_flags[i] || k.size() != top.size() * p) continue;
            bool contains_top = true;
            for (int x : top.elements())
                if (!k.contains(x)) { contains_top = false; break; }
            if (!contains_top) continue;
            chain.push_back(k);
            self(self);
            chain.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

Decision brute_decide(const HNNInstance& inst) {
    const FiniteGroup& g = inst.group();
    Decision d;
    for (const ChiefSeries& series : all_chief_series(g, inst.p)) {
        bool good = true;
        for (std::size_t i = 0; good && i < series.terms.size(); ++i) {
            const Subgroup& term = series.terms[i];
            if (!is_compatible(inst, term)) { good = false; break; }
            if (i == 0) continue;
            for (int a : intersect(inst.A, term).elements())
                if (!series.terms[i - 1].contains(g.mul(inst.phi.apply(a), g.inv(a)))) {
                    good = false;
                    break;
                }
        }
        if (good) {
            d.yes = true;
            d.certificate = series;
            return d;
        }
    }
    return d;
}

} // namespace hnnp::oracle
