#include "hnnp/hnn.hpp"

#include "hnnp/errors.hpp"

#include <sstream>

namespace hnnp {

HNNInstance make_instance(FiniteGroupPtr base, Subgroup a, Subgroup b,
                          PartialIso phi, int p) {
    HNNInstance inst{std::move(base), std::move(a), std::move(b), std::move(phi), p};
    if (!is_subgroup(inst.A) || !is_subgroup(inst.B))
        throw ParseError("A or B is not a subgroup");
    if (!check_partial_iso(inst.phi))
        throw NotAHomomorphism("phi is not an isomorphism A -> B");
    if (!(inst.phi.domain == inst.A) || !(inst.phi.codomain == inst.B))
        throw ParseError("phi domain/codomain do not match A/B");
    return inst;
}

long long ReducedForm::t_exponent_sum() const {
    long long s = 0;
    for (auto& [eps, g] : syllables) s += eps;
    return s;
}

HNNWord parse_hnn_word(const HNNInstance& inst, const std::string& text,
                       const std::vector<std::pair<std::string, int>>& extra_names) {
    const FiniteGroup& g = inst.group();
    HNNWord out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
        }
        if (name == "t") {
            if (exp != 0) out.parts.push_back({1, exp});
            continue;
        }
        int elem = g.find_label(name);
        if (elem < 0)
            for (auto& [n, e] : extra_names)
                if (n == name) { elem = e; break; }
        if (elem < 0) throw UnknownSymbol("unknown symbol '" + name + "'");
        out.parts.push_back({0, g.power(elem, exp)});
    }
    return out;
}

ReducedForm britton_reduce(const HNNInstance& inst, const HNNWord& w) {
    const FiniteGroup& g = inst.group();
    // flatten into head + syllables, merging adjacent base elements
    ReducedForm rf;
    rf.head = g.identity();
    auto mul_in_last = [&](int x) {
        if (rf.syllables.empty()) rf.head = g.mul(rf.head, x);
        else rf.syllables.back().second = g.mul(rf.syllables.back().second, x);
    };
    for (auto& [kind, v] : w.parts) {
        if (kind == 0) {
            mul_in_last(v);
        } else {
            int step = v > 0 ? 1 : -1;
            for (int i = 0; i < (v > 0 ? v : -v); ++i)
                rf.syllables.push_back({step, g.identity()});
        }
    }
    // splice pinches until none remain; each splice removes two t-letters
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rf.syllables.size(); ++i) {
            auto [e1, g1] = rf.syllables[i];
            auto [e2, g2] = rf.syllables[i + 1];
            if (e1 + e2 != 0) continue;
            int replacement = -1;
            if (e1 == -1 && inst.A.contains(g1)) replacement = inst.phi.apply(g1);
            else if (e1 == 1 && inst.B.contains(g1)) replacement = inst.phi.inverse().apply(g1);
            if (replacement < 0) continue;
            int merged = g.mul(replacement, g2);
            rf.syllables.erase(rf.syllables.begin() + static_cast<std::ptrdiff_t>(i),
                               rf.syllables.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            if (i == 0) rf.head = g.mul(rf.head, merged);
            else rf.syllables[i - 1].second = g.mul(rf.syllables[i - 1].second, merged);
            changed = true;
            break;
        }
    }
    return rf;
}

std::string format_reduced(const HNNInstance& inst, const ReducedForm& rf) {
    const FiniteGroup& g = inst.group();
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) out << ' ';
        first = false;
        out << s;
    };
    if (rf.head != g.identity() || rf.syllables.empty()) emit(g.label(rf.head));
    for (auto& [eps, ge] : rf.syllables) {
        emit(eps > 0 ? "t" : "t^-1");
        if (ge != g.identity()) emit(g.label(ge));
    }
    return out.str();
}

bool is_compatible(const HNNInstance& inst, const Subgroup& h) {
    ElementSet ah = intersect(inst.A, h);
    ElementSet bh = intersect(inst.B, h);
    return apply_iso(inst.phi, ah) == bh;
}

HNNInstance quotient_instance(const HNNInstance& inst, const Subgroup& h,
                              QuotientMap* out_qm) {
    const FiniteGroup& g = inst.group();
    if (!is_normal(g, h)) throw NotNormal("H is not normal in G");
    if (!is_compatible(inst, h)) throw NotCompatible("H is not (A,B,phi)-compatible");
    QuotientMap qm = quotient(g, h);
    const FiniteGroup& q = *qm.quotient;
    auto project_set = [&](const ElementSet& s) {
        Subgroup out(q);
        for (int x : s.elements()) out.insert(qm.projection[static_cast<std::size_t>(x)]);
        return out;
    };
    HNNInstance out;
    out.base = qm.quotient;
    out.A = project_set(inst.A);
    out.B = project_set(inst.B);
    out.p = inst.p;
    out.phi.domain = out.A;
    out.phi.codomain = out.B;
    out.phi.map.assign(static_cast<std::size_t>(q.order()), -1);
    for (int a : inst.A.elements()) {
        int from = qm.projection[static_cast<std::size_t>(a)];
        int to = qm.projection[static_cast<std::size_t>(inst.phi.apply(a))];
        int& slot = out.phi.map[static_cast<std::size_t>(from)];
        if (slot >= 0 && slot != to)
            throw NotCompatible("induced iso is not well defined"); // cannot happen when compatible
        slot = to;
    }
    if (!check_partial_iso(out.phi))
        throw InternalInvariantViolation("induced map fails the iso re-verification");
    if (out_qm) *out_qm = std::move(qm);
    return out;
}

} // namespace hnnp
