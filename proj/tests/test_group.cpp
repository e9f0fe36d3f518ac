#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnnp/errors.hpp"
#include "hnnp/group.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <algorithm>

using namespace hnnp;
using fixtures::materialize;

namespace {

fixtures::PresGroup d8() {
    return materialize({"a", "b"}, {"a^4", "b^2", "b^-1 a b a"});
}

fixtures::PresGroup s3() {
    return materialize({"a", "b"}, {"a^3", "b^2", "b^-1 a b a"});
}

} // namespace

TEST_CASE("table validation") {
    auto pg = d8();
    CHECK(pg.group->order() == 8);

    SUBCASE("a corrupted entry is rejected") {
        std::vector<std::vector<int>> table(8, std::vector<int>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) table[i][j] = pg.group->mul(i, j);
        table[3][4] = table[3][5]; // breaks the Latin square
        CHECK_THROWS_AS(FiniteGroup(std::move(table)), Error);
    }
    SUBCASE("a non-associative Latin square is rejected") {
        // subtraction mod 3: Latin, has no two-sided identity
        std::vector<std::vector<int>> table{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
        CHECK_THROWS_AS(FiniteGroup(std::move(table)), Error);
    }
}

TEST_CASE("closure") {
    auto pg = d8();
    CHECK(closure(*pg.group, std::vector<int>{}).size() == 1);

    auto h = fixtures::h_group(2);
    CHECK(h.group->order() == 8);
    CHECK(closure(*h.group, std::vector<int>{h.eval("b")}).size() == 4);
    CHECK(closure(*h.group, std::vector<int>{h.eval("a"), h.eval("b")}).size() == 8);

    SUBCASE("idempotent") {
        Subgroup s = closure(*h.group, std::vector<int>{h.eval("a b")});
        CHECK(closure(*h.group, s.elements()) == s);
    }
}

TEST_CASE("normality and center") {
    auto pg = d8();
    const FiniteGroup& g = *pg.group;
    CHECK(is_normal(g, center(g)));
    CHECK(is_normal(g, full_subgroup(g)));

    auto sym = s3();
    Subgroup refl = closure(*sym.group, std::vector<int>{sym.eval("b")});
    CHECK(refl.size() == 2);
    CHECK_FALSE(is_normal(*sym.group, refl));

    auto h2 = fixtures::h_group(2);
    Subgroup z2 = center(*h2.group);
    CHECK(z2.size() == 2);
    CHECK(z2.contains(h2.eval("b^2")));

    auto c9 = materialize({"a"}, {"a^9"});
    CHECK(center(*c9.group).size() == 9);

    auto h3 = fixtures::h_group(3);
    Subgroup z3 = center(*h3.group);
    CHECK(z3.size() == 3);
    CHECK(z3.contains(h3.eval("b^3")));

    SUBCASE("center elements commute with everything") {
        for (int z : center(g).elements())
            for (int x = 0; x < g.order(); ++x) CHECK(g.mul(z, x) == g.mul(x, z));
    }
}

TEST_CASE("quotient") {
    auto c4 = materialize({"a"}, {"a^4"});
    Subgroup sq = closure(*c4.group, std::vector<int>{c4.eval("a^2")});
    QuotientMap qm = quotient(*c4.group, sq);
    CHECK(qm.quotient->order() == 2);

    auto h2 = fixtures::h_group(2);
    CHECK(quotient(*h2.group, center(*h2.group)).quotient->order() == 4);

    SUBCASE("trivial kernel gives an isomorphic copy") {
        QuotientMap id = quotient(*h2.group, trivial_subgroup(*h2.group));
        CHECK(id.quotient->order() == h2.group->order());
        for (int i = 0; i < h2.group->order(); ++i)
            for (int j = 0; j < h2.group->order(); ++j)
                CHECK(id.projection[static_cast<std::size_t>(h2.group->mul(i, j))] ==
                      id.quotient->mul(id.projection[static_cast<std::size_t>(i)],
                                       id.projection[static_cast<std::size_t>(j)]));
    }
    SUBCASE("non-normal kernel is rejected") {
        auto sym = s3();
        Subgroup refl = closure(*sym.group, std::vector<int>{sym.eval("b")});
        CHECK_THROWS_AS(quotient(*sym.group, refl), NotNormal);
    }
}

TEST_CASE("minimal_normal_steps") {
    auto c4 = materialize({"a"}, {"a^4"});
    auto steps = minimal_normal_steps(*c4.group, 2, trivial_subgroup(*c4.group));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].contains(c4.eval("a^2")));

    auto h2 = fixtures::h_group(2);
    auto hsteps = minimal_normal_steps(*h2.group, 2, trivial_subgroup(*h2.group));
    REQUIRE(hsteps.size() == 1);
    CHECK(hsteps[0] == center(*h2.group));

    auto klein = materialize({"a", "b"}, {"a^2", "b^2", "a^-1 b^-1 a b"});
    CHECK(minimal_normal_steps(*klein.group, 2, trivial_subgroup(*klein.group)).size() == 3);

    SUBCASE("exhaustive against the subgroup lattice") {
        for (auto& ng : fixtures::corpus()) {
            if (ng.pg.group->order() > 27) continue;
            const FiniteGroup& g = *ng.pg.group;
            auto lat = oracle::all_subgroups(g);
            for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
                if (!lat.normal_flags[i]) continue;
                const Subgroup& base = lat.subgroups[i];
                auto got = minimal_normal_steps(g, ng.p, base);
                std::vector<Subgroup> expect;
                for (std::size_t j = 0; j < lat.subgroups.size(); ++j) {
                    if (!lat.normal_flags[j]) continue;
                    const Subgroup& k = lat.subgroups[j];
                    if (k.size() != base.size() * ng.p) continue;
                    bool over = true;
                    for (int x : base.elements())
                        if (!k.contains(x)) { over = false; break; }
                    if (over) expect.push_back(k);
                }
                std::sort(expect.begin(), expect.end());
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("homomorphism checks") {
    auto h2 = fixtures::h_group(2);
    const FiniteGroup& g = *h2.group;

    GroupHom id{&g, &g, {}};
    id.map.resize(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) id.map[static_cast<std::size_t>(i)] = i;
    CHECK(check_hom(id));

    int a = h2.eval("a"), b2 = h2.eval("b^2");
    PartialIso phi = extend_partial_iso(g, {a}, {b2});
    CHECK(check_partial_iso(phi));
    CHECK(phi.apply(a) == b2);

    SUBCASE("order mismatch is rejected") {
        int b = h2.eval("b"); // order 4
        CHECK_THROWS_AS(extend_partial_iso(g, {b}, {b2}), NotAHomomorphism);
    }
    SUBCASE("iso with broken bijectivity fails") {
        PartialIso bad = phi;
        bad.map[static_cast<std::size_t>(g.identity())] = b2;
        CHECK_FALSE(check_partial_iso(bad));
    }
}

TEST_CASE("is_p_group") {
    CHECK(is_p_group(*fixtures::h_group(2).group, 2));
    CHECK_FALSE(is_p_group(*s3().group, 2));
    CHECK_FALSE(is_p_group(*s3().group, 3));
    CHECK(is_p_group(*materialize({"a"}, {"a"}).group, 5));
}

TEST_CASE("products and subgroup arithmetic") {
    auto pg = d8();
    const FiniteGroup& g = *pg.group;
    Subgroup rot = closure(g, std::vector<int>{pg.eval("a")});
    Subgroup z = center(g);
    CHECK(intersect(rot, z) == z);
    CHECK(product_set(g, rot, closure(g, std::vector<int>{pg.eval("b")})).size() == 8);

    SUBCASE("Lagrange across the lattice") {
        for (const Subgroup& s : oracle::all_subgroups(g).subgroups)
            CHECK(g.order() % s.size() == 0);
    }
    SUBCASE("direct product and cyclic group") {
        auto c6 = direct_product(*materialize({"a"}, {"a^2"}).group, *cyclic_group(3));
        CHECK(c6->order() == 6);
        CHECK_FALSE(is_p_group(*c6, 2));
        CHECK(cyclic_group(8)->element_order(1) == 8);
    }
}
