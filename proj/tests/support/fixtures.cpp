#include "fixtures.hpp"

#include "hnnp/coset_table.hpp"
#include "hnnp/errors.hpp"
#include "hnnp/presentation.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <sstream>

namespace hnnp::fixtures {

int PresGroup::gen(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) return gen_elems[i];
    throw UnknownSymbol("no generator '" + name + "'");
}

int PresGroup::eval(const std::string& word) const {
    Word w = parse_word(word, gen_names);
    int acc = group->identity();
    for (const Letter& l : w.letters)
        acc = group->mul(acc, group->power(gen_elems[static_cast<std::size_t>(l.gen)], l.exp));
    return acc;
}

PresGroup materialize(const std::vector<std::string>& gens,
                      const std::vector<std::string>& relators, int max_cosets) {
    Presentation pres;
    pres.generators = gens;
    for (const std::string& r : relators)
        pres.relators.push_back(parse_word(r, gens));
    CosetTable ct = enumerate_cosets(pres, {}, max_cosets);
    PresGroup pg;
    pg.group = group_from_coset_table(ct);
    pg.gen_names = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        pg.gen_elems.push_back(ct.trace(0, Word{{{static_cast<int>(i), 1}}}));
    return pg;
}

PresGroup h_group(int p) {
    std::ostringstream ap, bpp, conj;
    ap << "a^" << p;
    bpp << "b^" << p * p;
    conj << "a^-1 b a b^-" << 1 + p;
    return materialize({"a", "b"}, {ap.str(), bpp.str(), conj.str()});
}

HNNInstance hstar_instance(int p) {
    PresGroup pg = h_group(p);
    const FiniteGroup& g = *pg.group;
    int a = pg.eval("a");
    int bp = pg.eval("b^" + std::to_string(p));
    Subgroup A = closure(g, std::vector<int>{a});
    Subgroup B = closure(g, std::vector<int>{bp});
    PartialIso phi = extend_partial_iso(g, {a}, {bp});
    return make_instance(pg.group, A, B, phi, p);
}

std::vector<NamedGroup> corpus() {
    auto comm = [](const char* x, const char* y) {
        return std::string(x) + "^-1 " + y + "^-1 " + x + " " + y;
    };
    std::vector<NamedGroup> out;
    auto add = [&](const std::string& name, int p, const std::vector<std::string>& gens,
                   const std::vector<std::string>& rels) {
        out.push_back({name, p, materialize(gens, rels)});
    };
    add("C2", 2, {"a"}, {"a^2"});
    add("C4", 2, {"a"}, {"a^4"});
    add("C2xC2", 2, {"a", "b"}, {"a^2", "b^2", comm("a", "b")});
    add("C8", 2, {"a"}, {"a^8"});
    add("C4xC2", 2, {"a", "b"}, {"a^4", "b^2", comm("a", "b")});
    add("C2xC2xC2", 2, {"a", "b", "c"},
        {"a^2", "b^2", "c^2", comm("a", "b"), comm("a", "c"), comm("b", "c")});
    add("D8", 2, {"a", "b"}, {"a^4", "b^2", "b^-1 a b a"});
    add("Q8", 2, {"a", "b"}, {"a^4", "b^2 a^-2", "b^-1 a b a"});
    add("C16", 2, {"a"}, {"a^16"});
    add("C8xC2", 2, {"a", "b"}, {"a^8", "b^2", comm("a", "b")});
    add("C4xC4", 2, {"a", "b"}, {"a^4", "b^4", comm("a", "b")});
    add("C4xC2xC2", 2, {"a", "b", "c"},
        {"a^4", "b^2", "c^2", comm("a", "b"), comm("a", "c"), comm("b", "c")});
    add("C2^4", 2, {"a", "b", "c", "d"},
        {"a^2", "b^2", "c^2", "d^2", comm("a", "b"), comm("a", "c"), comm("a", "d"),
         comm("b", "c"), comm("b", "d"), comm("c", "d")});
    add("D16", 2, {"a", "b"}, {"a^8", "b^2", "b^-1 a b a"});
    add("SD16", 2, {"a", "b"}, {"a^8", "b^2", "b^-1 a b a^-3"});
    add("Q16", 2, {"a", "b"}, {"a^8", "b^2 a^-4", "b^-1 a b a"});
    add("M16", 2, {"a", "b"}, {"a^8", "b^2", "b^-1 a b a^-5"});
    add("D8xC2", 2, {"a", "b", "c"},
        {"a^4", "b^2", "b^-1 a b a", "c^2", comm("a", "c"), comm("b", "c")});
    add("Q8xC2", 2, {"a", "b", "c"},
        {"a^4", "b^2 a^-2", "b^-1 a b a", "c^2", comm("a", "c"), comm("b", "c")});
    add("C4:C4", 2, {"a", "b"}, {"a^4", "b^4", "b^-1 a b a"});
    add("C2^2:C4", 2, {"a", "b", "c"},
        {"a^2", "b^2", "c^4", comm("a", "b"), "c^-1 a c b^-1", "c^-1 b c a^-1"});
    add("C4oD8", 2, {"a", "b", "c"},
        {"a^2", "b^2", "c^4", comm("a", "c"), comm("b", "c"), "a b a b c^2"});
    add("C27", 3, {"a"}, {"a^27"});
    add("C9xC3", 3, {"a", "b"}, {"a^9", "b^3", comm("a", "b")});
    add("C3^3", 3, {"a", "b", "c"},
        {"a^3", "b^3", "c^3", comm("a", "b"), comm("a", "c"), comm("b", "c")});
    add("Heis3", 3, {"a", "b", "c"},
        {"a^3", "b^3", "c^3", comm("a", "b") + " c^-1", comm("a", "c"), comm("b", "c")});
    out.push_back({"M27", 3, h_group(3)});
    return out;
}

namespace {

bool find_iso(const FiniteGroup& g, const Subgroup& a, const Subgroup& b,
              std::mt19937& rng, PartialIso& out) {
    std::vector<int> gens = generating_set(g, a);
    if (gens.empty()) {
        if (b.size() != 1) return false;
        out.domain = a;
        out.codomain = b;
        out.map.assign(static_cast<std::size_t>(g.order()), -1);
        out.map[static_cast<std::size_t>(g.identity())] = g.identity();
        return true;
    }
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int ord = g.element_order(gens[static_cast<std::size_t>(i)]);
        for (int x : b.elements())
            if (g.element_order(x) == ord) cands[i].push_back(x);
        std::shuffle(cands[i].begin(), cands[i].end(), rng);
        if (cands[i].empty()) return false;
    }
    std::vector<int> images;
    int attempts = 0;
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (attempts > 5000) return false;
        if (depth == gens.size()) {
            ++attempts;
            try {
                PartialIso phi = extend_partial_iso(g, gens, images);
                if (phi.codomain == b) { out = std::move(phi); return true; }
            } catch (const NotAHomomorphism&) {
            }
            return false;
        }
        std::vector<int> prefix_gens(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
        for (int c : cands[depth]) {
            images.push_back(c);
            bool prefix_ok = true;
            try {
                extend_partial_iso(g, prefix_gens, images);
            } catch (const NotAHomomorphism&) {
                prefix_ok = false;
            }
            if (prefix_ok && self(self, depth + 1)) return true;
            images.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0);
}

} // namespace

std::vector<HNNInstance> sample_instances(FiniteGroupPtr g, int p,
                                          std::mt19937& rng, int count) {
    oracle::SubgroupLattice lat = oracle::all_subgroups(*g);
    std::vector<HNNInstance> out;
    while (static_cast<int>(out.size()) < count) {
        const Subgroup& a =
            lat.subgroups[rng() % lat.subgroups.size()];
        std::vector<const Subgroup*> bs;
        for (const Subgroup& s : lat.subgroups)
            if (s.size() == a.size()) bs.push_back(&s);
        std::shuffle(bs.begin(), bs.end(), rng);
        PartialIso phi;
        bool found = false;
        for (const Subgroup* b : bs)
            if (find_iso(*g, a, *b, rng, phi)) { found = true; break; }
        if (!found) { // always possible: phi = id on A
            std::vector<int> gens = generating_set(*g, a);
            phi = extend_partial_iso(*g, gens, gens);
            if (gens.empty()) {
                phi.domain = a;
                phi.codomain = a;
                phi.map.assign(static_cast<std::size_t>(g->order()), -1);
                phi.map[static_cast<std::size_t>(g->identity())] = g->identity();
            }
        }
        out.push_back(make_instance(g, phi.domain, phi.codomain, phi, p));
    }
    return out;
}

HNNWord random_hnn_word(const HNNInstance& inst, std::mt19937& rng, int syllables) {
    const FiniteGroup& g = inst.group();
    HNNWord w;
    auto rand_elem = [&] { return static_cast<int>(rng() % static_cast<unsigned>(g.order())); };
    w.parts.push_back({0, rand_elem()});
    for (int i = 0; i < syllables; ++i) {
        w.parts.push_back({1, rng() % 2 ? 1 : -1});
        w.parts.push_back({0, rand_elem()});
    }
    return w;
}

} // namespace hnnp::fixtures
