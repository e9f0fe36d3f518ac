#include "hnnp/witness.hpp"

#include "hnnp/coset_table.hpp"
#include "hnnp/errors.hpp"
#include "hnnp/gf.hpp"
#include "hnnp/presentation.hpp"
#include "hnnp/schreier.hpp"

#include <sstream>
#include <utility>

namespace hnnp {

std::string WitnessReport::to_string() const {
    std::ostringstream out;
    auto line = [&](const char* name, bool v) {
        out << name << ": " << (v ? "pass" : "FAIL") << '\n';
    };
    line("homomorphism", homomorphism);
    line("injective-on-base", injective_on_base);
    line("p-group", p_group);
    line("conjugation", conjugation);
    return out.str();
}

namespace {

void require_verified(const HNNInstance& inst, WitnessResult& w) {
    w.report = verify_witness(inst, w);
    if (!w.report.ok())
        throw InternalInvariantViolation("constructed witness failed re-verification:\n" +
                                         w.report.to_string());
}

/// Smallest subspace containing `space` and `seed` closed under the matrices.
GFRowSpace action_closure(GFRowSpace space, const GFVec& seed,
                          const std::vector<std::vector<GFVec>>& matrices, int p) {
    std::vector<GFVec> work;
    if (space.add(seed)) work.push_back(seed);
    while (!work.empty()) {
        GFVec v = std::move(work.back());
        work.pop_back();
        for (const auto& m : matrices) {
            GFVec img = gf_mat_vec(m, v, p);
            if (space.add(img)) work.push_back(std::move(img));
        }
    }
    return space;
}

} // namespace

WitnessResult witness_base(const HNNInstance& inst, const ChiefSeries& series) {
    const FiniteGroup& g = inst.group();
    if (series.length() != 1)
        throw SeriesTooLong("base construction needs a length-1 series");
    WitnessResult w;
    w.X = direct_product(g, *cyclic_group(inst.p, "x"));
    w.rhoOnG.resize(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        w.rhoOnG[static_cast<std::size_t>(i)] = i * inst.p;
    w.rhoT = g.identity() * inst.p + 1;
    require_verified(inst, w);
    return w;
}

WitnessResult witness_case_a(const HNNInstance& inst, const ChiefSeries& series,
                             const WitnessOptions& opts) {
    const FiniteGroup& g = inst.group();
    const Subgroup& g1 = series.terms[1];
    for (int x : g1.elements())
        if (!inst.A.contains(x) || !inst.B.contains(x))
            throw InternalInvariantViolation("case a requires G1 inside A and B");

    QuotientMap qm;
    HNNInstance qinst = quotient_instance(inst, g1, &qm);
    ChiefSeries qseries;
    for (std::size_t i = 1; i < series.terms.size(); ++i) {
        Subgroup s(*qm.quotient);
        for (int x : series.terms[i].elements())
            s.insert(qm.projection[static_cast<std::size_t>(x)]);
        qseries.terms.push_back(std::move(s));
    }
    WitnessResult inner = build_witness(qinst, qseries, opts);

    // sigma = inner rho composed with the projection; L = Ker sigma
    HNNPresentation hp = hnn_presentation(g, inst.A, inst.B, inst.phi);
    std::vector<int> images(hp.pres.generators.size(), -1);
    for (int i = 0; i < g.order(); ++i)
        images[static_cast<std::size_t>(hp.element_gen[static_cast<std::size_t>(i)])] =
            inner.rhoOnG[static_cast<std::size_t>(qm.projection[static_cast<std::size_t>(i)])];
    images[static_cast<std::size_t>(hp.t_gen)] = inner.rhoT;
    CosetTable lt = coset_table_from_hom(hp.pres, images, *inner.X);

    SubgroupData sd(lt);
    ModPQuotient mq = mod_p_abelianization(sd, inst.p);
    int dim = mq.dimension();

    int z = -1;
    for (int x : g1.elements())
        if (x != g.identity()) { z = x; break; }
    GFVec g1vec = express_in_V(sd, mq, hp.element_word(z));
    bool g1_nonzero = false;
    for (auto c : g1vec)
        if (c) { g1_nonzero = true; break; }
    if (!g1_nonzero)
        throw InternalInvariantViolation("G1 generator vanished in L/N");

    // conjugation action of G*'s generators on V, as dim x dim matrices
    std::vector<std::vector<GFVec>> matrices;
    {
        std::vector<int> pres_gens;
        for (int e : generating_set(g, full_subgroup(g)))
            pres_gens.push_back(hp.element_gen[static_cast<std::size_t>(e)]);
        pres_gens.push_back(hp.t_gen);
        for (int pg : pres_gens) {
            std::vector<GFVec> cols;
            for (int j = 0; j < dim; ++j) {
                Word s = sd.generator_word(mq.basis[static_cast<std::size_t>(j)]);
                Word conj = concat(concat(Word{{{pg, -1}}}, s), Word{{{pg, 1}}});
                cols.push_back(express_in_V(sd, mq, conj));
            }
            matrices.push_back(std::move(cols));
        }
    }

    GFRowSpace wspace(inst.p, dim);
    if (!opts.faithful) {
        for (int j = 0; j < dim; ++j) {
            GFVec cand(static_cast<std::size_t>(dim), 0);
            cand[static_cast<std::size_t>(j)] = 1;
            GFRowSpace grown = action_closure(wspace, cand, matrices, inst.p);
            if (!grown.contains(g1vec)) wspace = std::move(grown);
        }
    }
    if (wspace.contains(g1vec))
        throw InternalInvariantViolation("invariant subspace swallowed the G1 image");

    Presentation pres = hp.pres;
    auto push = [&](Word r) {
        if (!r.empty()) pres.relators.push_back(std::move(r));
    };
    for (int k = 0; k < sd.count(); ++k) {
        GFVec unit(static_cast<std::size_t>(sd.count()), 0);
        unit[static_cast<std::size_t>(k)] = 1;
        GFVec red = wspace.reduce(mq.relations.quotient_coords(unit));
        push(concat(sd.generator_word(k), mq.basis_word(sd, red).inverse()));
    }
    for (int i = 0; i < dim; ++i) {
        Word bi = sd.generator_word(mq.basis[static_cast<std::size_t>(i)]);
        push(word_power(bi, inst.p));
        for (int j = i + 1; j < dim; ++j)
            push(commutator_word(bi, sd.generator_word(mq.basis[static_cast<std::size_t>(j)])));
    }
    for (const GFVec& row : wspace.rows())
        push(mq.basis_word(sd, row));

    WitnessResult w;
    try {
        CosetTable xt = enumerate_cosets(pres, {}, opts.max_cosets);
        w.X = group_from_coset_table(xt);
        w.rhoOnG.resize(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i)
            w.rhoOnG[static_cast<std::size_t>(i)] = xt.trace(0, hp.element_word(i));
        w.rhoT = xt.trace(0, Word{{{hp.t_gen, 1}}});
    } catch (const Overflow& e) {
        throw WitnessTooLarge(e.what());
    }
    require_verified(inst, w);
    return w;
}

WitnessResult witness_case_b(const HNNInstance& inst, const ChiefSeries& series,
                             const WitnessOptions& opts) {
    const FiniteGroup& g = inst.group();
    const Subgroup& g1 = series.terms[1];
    if (intersect(inst.A, g1).size() != 1 || intersect(inst.B, g1).size() != 1)
        throw InternalInvariantViolation("case b requires A and B to miss G1");

    HNNInstance big;
    big.base = inst.base;
    big.A = product_set(g, inst.A, g1);
    big.B = product_set(g, inst.B, g1);
    big.p = inst.p;
    big.phi.domain = big.A;
    big.phi.codomain = big.B;
    big.phi.map.assign(static_cast<std::size_t>(g.order()), -1);
    for (int a : inst.A.elements())
        for (int x : g1.elements()) {
            int& slot = big.phi.map[static_cast<std::size_t>(g.mul(a, x))];
            int to = g.mul(inst.phi.apply(a), x);
            if (slot >= 0 && slot != to)
                throw InternalInvariantViolation("A x G1 decomposition is not unique");
            slot = to;
        }
    if (!check_partial_iso(big.phi))
        throw InternalInvariantViolation("enlarged phi fails the iso re-verification");

    WitnessResult w = witness_case_a(big, series, opts);
    require_verified(inst, w);
    return w;
}

WitnessResult build_witness(const HNNInstance& inst, const ChiefSeries& series,
                            const WitnessOptions& opts) {
    if (!verify_certificate(inst, series))
        throw Inapplicable("series is not a valid certificate for the instance");
    if (series.length() == 1) return witness_base(inst, series);
    const Subgroup& g1 = series.terms[1];
    bool inside_a = true;
    for (int x : g1.elements())
        if (!inst.A.contains(x)) { inside_a = false; break; }
    if (inside_a) return witness_case_a(inst, series, opts);
    if (intersect(inst.A, g1).size() == 1) return witness_case_b(inst, series, opts);
    throw InternalInvariantViolation("first step neither inside A nor disjoint from it");
}

WitnessReport verify_witness(const HNNInstance& inst, const WitnessResult& w) {
    const FiniteGroup& g = inst.group();
    const FiniteGroup& x = *w.X;
    WitnessReport r;
    auto rho = [&](int e) { return w.rhoOnG[static_cast<std::size_t>(e)]; };

    r.homomorphism = true;
    for (int i = 0; i < g.order() && r.homomorphism; ++i)
        for (int j = 0; j < g.order(); ++j)
            if (rho(g.mul(i, j)) != x.mul(rho(i), rho(j))) {
                r.homomorphism = false;
                break;
            }

    r.injective_on_base = true;
    std::vector<char> hit(static_cast<std::size_t>(x.order()), 0);
    for (int i = 0; i < g.order(); ++i) {
        char& c = hit[static_cast<std::size_t>(rho(i))];
        if (c) { r.injective_on_base = false; break; }
        c = 1;
    }

    r.p_group = is_p_group(x, inst.p);

    r.conjugation = true;
    for (int a : inst.A.elements())
        if (x.conj(rho(a), w.rhoT) != rho(inst.phi.apply(a))) {
            r.conjugation = false;
            break;
        }
    return r;
}

bool pullback_family_check(const HNNInstance& inst, const WitnessResult& w) {
    const FiniteGroup& g = inst.group();
    for (const Subgroup& n : normal_subgroups(*w.X)) {
        Subgroup m(g);
        for (int i = 0; i < g.order(); ++i)
            if (n.contains(w.rhoOnG[static_cast<std::size_t>(i)])) m.insert(i);
        if (!is_p_compatible(inst, m).first) return false;
    }
    return true;
}

int evaluate_in_witness(const HNNInstance& inst, const WitnessResult& w,
                        const HNNWord& word) {
    const FiniteGroup& x = *w.X;
    int acc = x.identity();
    for (auto& [kind, v] : word.parts)
        acc = x.mul(acc, kind == 0 ? w.rhoOnG[static_cast<std::size_t>(v)]
                                   : x.power(w.rhoT, v));
    (void)inst;
    return acc;
}

int evaluate_in_witness(const HNNInstance& inst, const WitnessResult& w,
                        const ReducedForm& rf) {
    const FiniteGroup& x = *w.X;
    int acc = w.rhoOnG[static_cast<std::size_t>(rf.head)];
    for (auto& [eps, ge] : rf.syllables) {
        acc = x.mul(acc, x.power(w.rhoT, eps));
        acc = x.mul(acc, w.rhoOnG[static_cast<std::size_t>(ge)]);
    }
    (void)inst;
    return acc;
}

} // namespace hnnp
