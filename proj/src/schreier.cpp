#include "hnnp/schreier.hpp"

#include "hnnp/errors.hpp"

#include <set>

namespace hnnp {

SubgroupData::SubgroupData(const CosetTable& ct) : ct_(&ct) {
    int n = ct.cosets();
    int k = ct.ngens();
    coset_words_ = transversal_words(ct);
    // mark tree edges: the (parent, column) step that first reached a coset
    std::set<std::pair<int, int>> tree; // (coset, gen column) in + direction
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        seen[0] = 1;
        std::vector<int> order{0};
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int c = order[qi];
            for (int col = 0; col < 2 * k; ++col) {
                int d = ct.step(c, col);
                if (!seen[static_cast<std::size_t>(d)]) {
                    seen[static_cast<std::size_t>(d)] = 1;
                    order.push_back(d);
                    // record in forward orientation
                    if (col % 2 == 0) tree.insert({c, col / 2});
                    else tree.insert({d, col / 2});
                }
            }
        }
    }
    index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), -1);
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < k; ++g) {
            if (tree.count({c, g})) continue;
            int d = ct.step(c, 2 * g);
            index_[static_cast<std::size_t>(c) * static_cast<std::size_t>(k) + static_cast<std::size_t>(g)] =
                static_cast<int>(gen_words_.size());
            Word w = concat(coset_words_[static_cast<std::size_t>(c)], Word{{{g, 1}}});
            w = concat(w, coset_words_[static_cast<std::size_t>(d)].inverse());
            gen_words_.push_back(std::move(w));
        }
}

std::vector<int> SubgroupData::rewrite(const Word& w, int start_coset) const {
    std::vector<int> out;
    int c = start_coset;
    for (int s : w.steps()) {
        if (s > 0) {
            int g = s - 1;
            int k = schreier_index(c, g);
            if (k >= 0) out.push_back(k + 1);
            c = ct_->step(c, 2 * g);
        } else {
            int g = -s - 1;
            int d = ct_->step(c, 2 * g + 1);
            int k = schreier_index(d, g);
            if (k >= 0) out.push_back(-(k + 1));
            c = d;
        }
    }
    if (c != start_coset)
        throw NotInSubgroup("word does not stabilize its start coset");
    return out;
}

GFVec abelianize_steps(const std::vector<int>& steps, int count, int p) {
    std::vector<long long> acc(static_cast<std::size_t>(count), 0);
    for (int s : steps) {
        if (s > 0) acc[static_cast<std::size_t>(s - 1)]++;
        else acc[static_cast<std::size_t>(-s - 1)]--;
    }
    GFVec out(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < acc.size(); ++i)
        out[i] = static_cast<std::uint8_t>(((acc[i] % p) + p) % p);
    return out;
}

ModPQuotient mod_p_abelianization(const SubgroupData& sd, int p) {
    const CosetTable& ct = sd.table();
    ModPQuotient mq;
    mq.p = p;
    mq.relations = GFRowSpace(p, sd.count());
    std::set<GFVec> seen;
    for (const Word& r : ct.presentation().relators) {
        for (int c = 0; c < ct.cosets(); ++c) {
            GFVec row = abelianize_steps(sd.rewrite(r, c), sd.count(), p);
            if (seen.insert(row).second) mq.relations.add(std::move(row));
        }
    }
    mq.basis = mq.relations.free_columns();
    return mq;
}

Word ModPQuotient::basis_word(const SubgroupData& sd, const GFVec& coords) const {
    Word out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            out = concat(out, word_power(sd.generator_word(basis[i]), coords[i]));
    return out;
}

GFVec express_in_V(const SubgroupData& sd, const ModPQuotient& mq, const Word& w) {
    GFVec full = abelianize_steps(sd.rewrite(w), sd.count(), mq.p);
    return mq.relations.quotient_coords(full);
}

} // namespace hnnp
