#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hnnp {

/// A finite group materialized as a full Cayley table.
///
/// Element indices run over [0, order). The table is validated on
/// construction: Latin-square rows/columns, identity row/column, and
/// associativity (Light's test over a generating set).
class FiniteGroup {
public:
    /// Builds and validates a group from a row-major multiplication table.
    /// labels may be empty or hold one name per element.
    FiniteGroup(std::vector<std::vector<int>> table,
                std::vector<std::string> labels = {});

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); } // g^-1 x g
    int power(int a, long long e) const;
    int element_order(int a) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;

    /// Index of the labelled element, or -1.
    int find_label(const std::string& name) const;

private:
    int order_;
    int identity_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Dense membership mask over the elements of a FiniteGroup.
struct ElementSet {
    const FiniteGroup* group = nullptr;
    std::vector<char> mask;

    ElementSet() = default;
    explicit ElementSet(const FiniteGroup& g)
        : group(&g), mask(static_cast<std::size_t>(g.order()), 0) {}

    bool contains(int x) const { return mask[static_cast<std::size_t>(x)] != 0; }
    void insert(int x) { mask[static_cast<std::size_t>(x)] = 1; }
    int size() const;
    std::vector<int> elements() const;

    bool operator==(const ElementSet& o) const { return mask == o.mask; }
    bool operator<(const ElementSet& o) const { return mask < o.mask; }
};

/// An ElementSet that is expected to satisfy the subgroup invariants.
using Subgroup = ElementSet;

/// The isomorphism phi: A -> B stored as an element map (-1 outside A).
struct PartialIso {
    Subgroup domain;
    Subgroup codomain;
    std::vector<int> map;

    int apply(int a) const { return map[static_cast<std::size_t>(a)]; }
    PartialIso inverse() const;
};

/// A total homomorphism between two materialized groups.
struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<int> map;
};

/// Quotient of a group by a normal subgroup, with the projection map.
struct QuotientMap {
    const FiniteGroup* source = nullptr;
    Subgroup kernel;
    FiniteGroupPtr quotient;
    std::vector<int> projection; // element index -> coset index
};

// -- basic predicates ------------------------------------------------------

bool is_subgroup(const ElementSet& s);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_p_group(const FiniteGroup& g, int p);
bool check_hom(const GroupHom& h);
bool check_partial_iso(const PartialIso& phi);

// -- constructions ---------------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup subgroup_from_elements(const FiniteGroup& g, const std::vector<int>& elems);

/// Smallest subgroup containing gens.
Subgroup closure(const FiniteGroup& g, const ElementSet& gens);
Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens);

/// Smallest normal subgroup of g containing gens.
Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& gens);

ElementSet intersect(const ElementSet& a, const ElementSet& b);

/// Setwise product AB; a subgroup whenever one factor normalizes the other.
ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

/// Image of s under a partial iso (s must lie inside the domain).
ElementSet apply_iso(const PartialIso& phi, const ElementSet& s);

Subgroup center(const FiniteGroup& g);

/// Quotient by a normal subgroup. Coset indices follow first-appearance
/// order of representatives; labels carry over from representatives.
QuotientMap quotient(const FiniteGroup& g, const Subgroup& n);

/// All normal subgroups K with base <= K <= g, K normal in g and
/// |K| = p*|base|. For p-group quotients g/base these are the preimages of
/// the order-p subgroups of the centre of g/base; otherwise every one-step
/// overgroup is scanned. Output sorted by membership mask.
std::vector<Subgroup> minimal_normal_steps(const FiniteGroup& g, int p, const Subgroup& base);

/// Greedy generating set of a subgroup (ascending element order).
std::vector<int> generating_set(const FiniteGroup& g, const ElementSet& s);

/// Every normal subgroup of g, sorted by membership mask.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// Direct product with elements ordered as (a, b) -> a*|B| + b.
FiniteGroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Cyclic group of order n, labels 1, a, a^2, ...
FiniteGroupPtr cyclic_group(int n, const std::string& gen_name = "a");

/// Extends generator images to a PartialIso on the closure of gens, or
/// throws NotAHomomorphism if the extension is inconsistent.
PartialIso extend_partial_iso(const FiniteGroup& g,
                              const std::vector<int>& domain_gens,
                              const std::vector<int>& images);

} // namespace hnnp
