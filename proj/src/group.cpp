#include "hnnp/group.hpp"

#include "hnnp/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hnnp {

namespace {

std::vector<int> greedy_generators(const FiniteGroup& g);

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> labels)
    : order_(static_cast<int>(table.size())), labels_(std::move(labels)) {
    if (order_ == 0) throw ParseError("empty Cayley table");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != order_)
        throw ParseError("label count does not match group order");
    table_.reserve(static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != order_)
            throw ParseError("Cayley table is not square");
        for (int e : row) {
            if (e < 0 || e >= order_) throw ParseError("Cayley table entry out of range");
            table_.push_back(e);
        }
    }
    // Latin square
    for (int i = 0; i < order_; ++i) {
        std::vector<char> seen_row(static_cast<std::size_t>(order_), 0);
        std::vector<char> seen_col(static_cast<std::size_t>(order_), 0);
        for (int j = 0; j < order_; ++j) {
            int r = mul(i, j), c = mul(j, i);
            if (seen_row[static_cast<std::size_t>(r)]++ || seen_col[static_cast<std::size_t>(c)]++)
                throw ParseError("Cayley table is not a Latin square");
        }
    }
    // identity
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int j = 0; j < order_ && ok; ++j)
            ok = mul(e, j) == j && mul(j, e) == j;
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw ParseError("Cayley table has no identity element");
    // inverses
    inverse_.assign(static_cast<std::size_t>(order_), -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == identity_) { inverse_[static_cast<std::size_t>(a)] = b; break; }
    for (int a = 0; a < order_; ++a)
        if (inverse_[static_cast<std::size_t>(a)] < 0)
            throw ParseError("Cayley table element without inverse");
    // associativity: Light's test over a generating set
    for (int s : greedy_generators(*this))
        for (int x = 0; x < order_; ++x)
            for (int y = 0; y < order_; ++y)
                if (mul(mul(x, s), y) != mul(x, mul(s, y)))
                    throw ParseError("Cayley table is not associative");
}

int FiniteGroup::power(int a, long long e) const {
    int aa = a;
    if (e < 0) { aa = inv(a); e = -e; }
    int acc = identity_;
    while (e > 0) {
        if (e & 1) acc = mul(acc, aa);
        aa = mul(aa, aa);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity_) { x = mul(x, a); ++n; }
    return n;
}

std::string FiniteGroup::label(int a) const {
    if (has_labels()) return labels_[static_cast<std::size_t>(a)];
    return "e" + std::to_string(a);
}

int FiniteGroup::find_label(const std::string& name) const {
    for (int i = 0; i < order_; ++i)
        if (label(i) == name) return i;
    return -1;
}

int ElementSet::size() const {
    return static_cast<int>(std::count(mask.begin(), mask.end(), 1));
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mask.size()); ++i)
        if (mask[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

PartialIso PartialIso::inverse() const {
    PartialIso out;
    out.domain = codomain;
    out.codomain = domain;
    out.map.assign(map.size(), -1);
    for (std::size_t a = 0; a < map.size(); ++a)
        if (map[a] >= 0) out.map[static_cast<std::size_t>(map[a])] = static_cast<int>(a);
    return out;
}

bool is_subgroup(const ElementSet& s) {
    const FiniteGroup& g = *s.group;
    if (!s.contains(g.identity())) return false;
    auto elems = s.elements();
    if (g.order() % static_cast<int>(elems.size()) != 0) return false; // Lagrange
    for (int a : elems) {
        if (!s.contains(g.inv(a))) return false;
        for (int b : elems)
            if (!s.contains(g.mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    auto elems = h.elements();
    for (int x = 0; x < g.order(); ++x)
        for (int a : elems)
            if (!h.contains(g.conj(a, x))) return false;
    return true;
}

bool is_p_group(const FiniteGroup& g, int p) {
    int n = g.order();
    while (n % p == 0) n /= p;
    return n == 1;
}

bool check_hom(const GroupHom& h) {
    const FiniteGroup& s = *h.source;
    const FiniteGroup& t = *h.target;
    if (static_cast<int>(h.map.size()) != s.order()) return false;
    if (h.map[static_cast<std::size_t>(s.identity())] != t.identity()) return false;
    for (int a = 0; a < s.order(); ++a)
        for (int b = 0; b < s.order(); ++b)
            if (h.map[static_cast<std::size_t>(s.mul(a, b))] !=
                t.mul(h.map[static_cast<std::size_t>(a)], h.map[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

bool check_partial_iso(const PartialIso& phi) {
    const FiniteGroup& g = *phi.domain.group;
    if (!is_subgroup(phi.domain) || !is_subgroup(phi.codomain)) return false;
    if (phi.domain.size() != phi.codomain.size()) return false;
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    for (int a = 0; a < g.order(); ++a) {
        int im = phi.map[static_cast<std::size_t>(a)];
        if (phi.domain.contains(a)) {
            if (im < 0 || !phi.codomain.contains(im) || hit[static_cast<std::size_t>(im)]++)
                return false;
        } else if (im >= 0) {
            return false;
        }
    }
    auto elems = phi.domain.elements();
    for (int a : elems)
        for (int b : elems)
            if (phi.apply(g.mul(a, b)) != g.mul(phi.apply(a), phi.apply(b)))
                return false;
    return true;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    Subgroup s(g);
    s.insert(g.identity());
    return s;
}

Subgroup full_subgroup(const FiniteGroup& g) {
    Subgroup s(g);
    std::fill(s.mask.begin(), s.mask.end(), 1);
    return s;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, const std::vector<int>& elems) {
    Subgroup s(g);
    for (int e : elems) s.insert(e);
    return s;
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens) {
    Subgroup s(g);
    s.insert(g.identity());
    std::vector<int> elems{g.identity()};
    std::vector<int> queue = gens;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (s.contains(x)) continue;
        s.insert(x);
        elems.push_back(x);
        // finite group: closure under products implies closure under inverses
        for (std::size_t i = 0; i < elems.size(); ++i) {
            queue.push_back(g.mul(elems[i], x));
            queue.push_back(g.mul(x, elems[i]));
        }
    }
    return s;
}

Subgroup closure(const FiniteGroup& g, const ElementSet& gens) {
    return closure(g, gens.elements());
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<int> conj_gens;
    for (int x : gens)
        for (int t = 0; t < g.order(); ++t)
            conj_gens.push_back(g.conj(x, t));
    return closure(g, conj_gens);
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
    ElementSet out(*a.group);
    for (std::size_t i = 0; i < out.mask.size(); ++i)
        out.mask[i] = a.mask[i] & b.mask[i];
    return out;
}

ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
    ElementSet out(g);
    for (int x : a.elements())
        for (int y : b.elements())
            out.insert(g.mul(x, y));
    return out;
}

ElementSet apply_iso(const PartialIso& phi, const ElementSet& s) {
    ElementSet out(*s.group);
    for (int x : s.elements()) {
        int im = phi.apply(x);
        if (im < 0) throw Inapplicable("element outside the iso domain");
        out.insert(im);
    }
    return out;
}

Subgroup center(const FiniteGroup& g) {
    Subgroup z(g);
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            central = g.mul(x, y) == g.mul(y, x);
        if (central) z.insert(x);
    }
    return z;
}

QuotientMap quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw NotNormal("quotient by a non-normal subgroup");
    QuotientMap qm;
    qm.source = &g;
    qm.kernel = n;
    qm.projection.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    auto nelems = n.elements();
    for (int x = 0; x < g.order(); ++x) {
        if (qm.projection[static_cast<std::size_t>(x)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : nelems)
            qm.projection[static_cast<std::size_t>(g.mul(x, h))] = c;
    }
    int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                qm.projection[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))];
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (int r : reps) labels.push_back(g.label(r));
    }
    qm.quotient = std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
    return qm;
}

std::vector<int> generating_set(const FiniteGroup& g, const ElementSet& s) {
    std::vector<int> gens;
    Subgroup have = trivial_subgroup(g);
    for (int x : s.elements()) {
        if (have.contains(x)) continue;
        gens.push_back(x);
        have = closure(g, gens);
        if (have == s) break;
    }
    return gens;
}

std::vector<Subgroup> minimal_normal_steps(const FiniteGroup& g, int p, const Subgroup& base) {
    if (!is_normal(g, base)) throw NotNormal("base of minimal_normal_steps not normal");
    std::set<Subgroup> found;
    int target = base.size() * p;
    if (g.order() % target != 0) return {};
    QuotientMap qm = quotient(g, base);
    const FiniteGroup& q = *qm.quotient;
    if (is_p_group(q, p)) {
        // order-p normal subgroups of a p-group are central
        Subgroup z = center(q);
        for (int x : z.elements()) {
            if (x == q.identity() || q.element_order(x) != p) continue;
            Subgroup k = closure(q, std::vector<int>{x});
            Subgroup pre(g);
            for (int e = 0; e < g.order(); ++e)
                if (k.contains(qm.projection[static_cast<std::size_t>(e)])) pre.insert(e);
            found.insert(pre);
        }
    } else {
        for (int x = 0; x < g.order(); ++x) {
            if (base.contains(x)) continue;
            std::vector<int> gens = base.elements();
            gens.push_back(x);
            Subgroup k = closure(g, gens);
            if (k.size() != target) continue;
            if (!is_normal(g, k)) continue;
            found.insert(k);
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
    std::set<Subgroup> seen;
    std::vector<Subgroup> queue{trivial_subgroup(g)};
    seen.insert(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Subgroup n = queue[qi];
        for (int x = 0; x < g.order(); ++x) {
            if (n.contains(x)) continue;
            std::vector<int> gens = n.elements();
            gens.push_back(x);
            Subgroup bigger = normal_closure(g, gens);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {seen.begin(), seen.end()};
}

FiniteGroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    table[static_cast<std::size_t>(idx(x1, y1))][static_cast<std::size_t>(idx(x2, y2))] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    std::vector<std::string> labels;
    if (a.has_labels() || b.has_labels()) {
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < b.order(); ++y)
                labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

FiniteGroupPtr cyclic_group(int n, const std::string& gen_name) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
        labels.push_back(i == 0 ? "1" : (i == 1 ? gen_name : gen_name + "^" + std::to_string(i)));
    }
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

PartialIso extend_partial_iso(const FiniteGroup& g,
                              const std::vector<int>& domain_gens,
                              const std::vector<int>& images) {
    if (domain_gens.size() != images.size())
        throw ParseError("generator/image count mismatch");
    PartialIso phi;
    phi.domain = closure(g, domain_gens);
    phi.codomain = closure(g, images);
    phi.map.assign(static_cast<std::size_t>(g.order()), -1);
    phi.map[static_cast<std::size_t>(g.identity())] = g.identity();
    // breadth-first extension by right multiplication with generators
    std::vector<int> queue{g.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        int fx = phi.map[static_cast<std::size_t>(x)];
        for (std::size_t k = 0; k < domain_gens.size(); ++k) {
            int y = g.mul(x, domain_gens[k]);
            int fy = g.mul(fx, images[k]);
            int& slot = phi.map[static_cast<std::size_t>(y)];
            if (slot < 0) {
                slot = fy;
                queue.push_back(y);
            } else if (slot != fy) {
                throw NotAHomomorphism("generator images do not extend to an isomorphism");
            }
        }
    }
    if (!check_partial_iso(phi))
        throw NotAHomomorphism("generator images do not define an isomorphism A -> B");
    return phi;
}

namespace {

std::vector<int> greedy_generators(const FiniteGroup& g) {
    // closure by hand: FiniteGroup is not fully constructed yet when this
    // runs from the constructor, but mul() is already usable
    std::vector<char> have(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> gens;
    std::vector<int> elems;
    auto grow = [&](int x) {
        if (have[static_cast<std::size_t>(x)]) return;
        std::vector<int> queue{x};
        while (!queue.empty()) {
            int y = queue.back();
            queue.pop_back();
            if (have[static_cast<std::size_t>(y)]) continue;
            have[static_cast<std::size_t>(y)] = 1;
            elems.push_back(y);
            for (int z : elems) {
                queue.push_back(g.mul(y, z));
                queue.push_back(g.mul(z, y));
            }
        }
    };
    for (int x = 0; x < g.order(); ++x) {
        if (have[static_cast<std::size_t>(x)]) continue;
        gens.push_back(x);
        grow(x);
    }
    return gens;
}

} // namespace

} // namespace hnnp
