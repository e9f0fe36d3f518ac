#pragma once

#include "hnnp/coset_table.hpp"
#include "hnnp/gf.hpp"
#include "hnnp/word.hpp"

#include <vector>

namespace hnnp {

/// Schreier generators of the subgroup belonging to a closed coset table,
/// with Reidemeister rewriting into those generators.
class SubgroupData {
public:
    explicit SubgroupData(const CosetTable& ct);

    const CosetTable& table() const { return *ct_; }
    int count() const { return static_cast<int>(gen_words_.size()); }

    /// Schreier generator as a word over the ambient presentation.
    const Word& generator_word(int k) const { return gen_words_[static_cast<std::size_t>(k)]; }

    /// Transversal word of a coset (spanning-tree path from coset 0).
    const Word& coset_word(int c) const { return coset_words_[static_cast<std::size_t>(c)]; }

    /// Index of the Schreier generator at (coset, generator), or -1 for a
    /// tree edge (whose generator is trivial).
    int schreier_index(int coset, int gen) const {
        return index_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(ct_->ngens()) + static_cast<std::size_t>(gen)];
    }

    /// Rewrites a word starting at the given coset into Schreier letters:
    /// +(k+1) / -(k+1) steps over Schreier generator indices. The word must
    /// return to the start coset (i.e. w conjugated by the start coset's
    /// transversal lies in the subgroup); throws NotInSubgroup otherwise.
    std::vector<int> rewrite(const Word& w, int start_coset = 0) const;

private:
    const CosetTable* ct_;
    std::vector<Word> coset_words_;
    std::vector<int> index_;
    std::vector<Word> gen_words_;
};

/// The mod-p abelianization L/N of the subgroup L carried by a SubgroupData,
/// where N is the intersection of all index-p normal subgroups of L.
/// Realized as GF(p)^m modulo the rows of the rewritten relator conjugates.
struct ModPQuotient {
    int p = 0;
    GFRowSpace relations{2, 0};
    std::vector<int> basis; // free columns: Schreier indices spanning L/N

    int dimension() const { return static_cast<int>(basis.size()); }

    /// Word over the ambient presentation representing the given coordinate
    /// vector (a product of basis Schreier generator words).
    Word basis_word(const SubgroupData& sd, const GFVec& coords) const;
};

ModPQuotient mod_p_abelianization(const SubgroupData& sd, int p);

/// Coordinates of the class of w (a subgroup element) in L/N.
GFVec express_in_V(const SubgroupData& sd, const ModPQuotient& mq, const Word& w);

/// Image in L/N of a rewritten (Schreier-letter) sequence.
GFVec abelianize_steps(const std::vector<int>& steps, int count, int p);

} // namespace hnnp
