#pragma once

#include "hnnp/group.hpp"
#include "hnnp/presentation.hpp"
#include "hnnp/word.hpp"

#include <vector>

namespace hnnp {

/// Closed coset table for a subgroup of a finitely presented group.
///
/// Columns come in pairs: column 2g is the action of generator g, column
/// 2g+1 of its inverse. Coset 0 is the subgroup itself; numbering follows
/// first-definition order.
class CosetTable {
public:
    enum class Origin { Enumeration, Homomorphism };

    CosetTable(Presentation pres, int ncosets, std::vector<int> transitions, Origin origin);

    const Presentation& presentation() const { return pres_; }
    int ngens() const { return static_cast<int>(pres_.generators.size()); }
    int cosets() const { return ncosets_; }
    Origin origin() const { return origin_; }

    int step(int coset, int column) const {
        return tab_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(2 * ngens()) + static_cast<std::size_t>(column)];
    }
    int apply_gen(int coset, int gen, int sign) const {
        return step(coset, 2 * gen + (sign > 0 ? 0 : 1));
    }

    /// Traces a word from a coset; the table is closed so this is total.
    int trace(int coset, const Word& w) const;

    /// True iff every relator traces back to its start coset from every
    /// coset (and subgroup generators fix coset 0, when given).
    bool consistent(const std::vector<Word>& subgroup_gens = {}) const;

private:
    Presentation pres_;
    int ncosets_;
    std::vector<int> tab_;
    Origin origin_;
};

/// HLT-style Todd-Coxeter enumeration of the cosets of <subgens> in the
/// presented group. Deterministic: coset numbers follow first-definition
/// order. Throws Overflow when more than max_cosets cosets would be defined.
CosetTable enumerate_cosets(const Presentation& pres,
                            const std::vector<Word>& subgens,
                            int max_cosets);

/// Coset table of Ker(images) inside the presented group, realized on the
/// subgroup of X generated by the generator images. Throws
/// NotAHomomorphism if some relator has a non-identity image.
CosetTable coset_table_from_hom(const Presentation& pres,
                                const std::vector<int>& images,
                                const FiniteGroup& x);

/// Materializes the (finite) presented group from the coset table of its
/// trivial subgroup: element i is the tree word of coset i.
FiniteGroupPtr group_from_coset_table(const CosetTable& ct);

/// Shortest-path transversal words (breadth-first over table columns).
std::vector<Word> transversal_words(const CosetTable& ct);

} // namespace hnnp
