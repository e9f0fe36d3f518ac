#include "hnnp/presentation.hpp"

#include "hnnp/errors.hpp"

namespace hnnp {

int Presentation::find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

HNNPresentation hnn_presentation(const FiniteGroup& g, const Subgroup& a,
                                 const Subgroup& b, const PartialIso& phi) {
    if (!check_partial_iso(phi)) throw NotAHomomorphism("invalid partial iso");
    if (!(phi.domain == a) || !(phi.codomain == b))
        throw Inapplicable("phi does not match the associated subgroups");
    HNNPresentation out;
    out.element_gen.resize(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) {
        out.element_gen[static_cast<std::size_t>(i)] = i;
        out.pres.generators.push_back("x" + std::to_string(i));
    }
    out.t_gen = g.order();
    out.pres.generators.push_back("t");
    int e = g.identity();
    out.pres.relators.push_back(out.element_word(e));
    for (int i = 0; i < g.order(); ++i) {
        if (i == e) continue;
        for (int j = 0; j < g.order(); ++j) {
            if (j == e) continue;
            // x_i x_j x_{ij}^-1
            Word r = concat(out.element_word(i), out.element_word(j));
            int ij = g.mul(i, j);
            if (ij != e) r = concat(r, Word{{{out.element_gen[static_cast<std::size_t>(ij)], -1}}});
            out.pres.relators.push_back(r);
        }
    }
    Word t{{{out.t_gen, 1}}};
    for (int gen : generating_set(g, a)) {
        // t^-1 a t (a phi)^-1
        Word r = concat(concat(t.inverse(), out.element_word(gen)), t);
        r = concat(r, Word{{{out.element_gen[static_cast<std::size_t>(phi.apply(gen))], -1}}});
        out.pres.relators.push_back(r);
    }
    return out;
}

} // namespace hnnp
