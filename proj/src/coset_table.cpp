#include "hnnp/coset_table.hpp"

#include "hnnp/errors.hpp"

#include <algorithm>
#include <deque>

namespace hnnp {

namespace {

/// Word as a sequence of table columns.
std::vector<int> to_columns(const Word& w) {
    std::vector<int> out;
    for (int s : w.steps())
        out.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
    return out;
}

int inv_column(int c) { return c ^ 1; }

/// Mutable table state for the HLT enumeration.
class Enumerator {
public:
    Enumerator(const Presentation& pres, int max_cosets)
        : ngens_(static_cast<int>(pres.generators.size())),
          width_(2 * static_cast<int>(pres.generators.size())),
          max_cosets_(max_cosets) {
        for (const Word& r : pres.relators) rels_.push_back(to_columns(r));
        new_coset();
    }

    void add_subgroup_gen(const Word& w) { scan_and_fill(0, to_columns(w)); }

    void run() {
        // Re-scan until a full pass neither defines, merges, nor fills
        // anything; coincidences may punch holes into already-visited rows.
        long long before = -1;
        while (before != events_) {
            before = events_;
            for (int a = 0; a < static_cast<int>(parent_.size()); ++a) {
                if (!alive(a)) continue;
                for (const auto& r : rels_) {
                    scan_and_fill(a, r);
                    if (!alive(a)) break;
                }
                if (!alive(a)) continue;
                for (int c = 0; c < width_; ++c)
                    if (get(a, c) < 0) {
                        int n = new_coset();
                        set(a, c, n);
                        set(n, inv_column(c), a);
                    }
            }
        }
    }

    /// Live cosets in first-definition order, with transitions renumbered.
    std::pair<int, std::vector<int>> compact() {
        std::vector<int> newid(parent_.size(), -1);
        int live = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (parent_[i] == static_cast<int>(i)) newid[i] = live++;
        std::vector<int> out(static_cast<std::size_t>(live) * static_cast<std::size_t>(width_), -1);
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            if (newid[i] < 0) continue;
            for (int c = 0; c < width_; ++c) {
                int d = get(static_cast<int>(i), c);
                out[static_cast<std::size_t>(newid[i]) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c)] =
                    d < 0 ? -1 : newid[static_cast<std::size_t>(d)];
            }
        }
        return {live, std::move(out)};
    }

private:
    int ngens_;
    int width_;
    int max_cosets_;
    std::vector<std::vector<int>> rels_;
    std::vector<int> tab_;
    std::vector<int> parent_; // union-find; parent_[i] == i iff alive
    std::deque<int> merge_queue_;
    long long events_ = 0; // definitions + deductions + merges

    bool alive(int a) const { return parent_[static_cast<std::size_t>(a)] == a; }

    int rep(int a) {
        while (parent_[static_cast<std::size_t>(a)] != a) {
            parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
            a = parent_[static_cast<std::size_t>(a)];
        }
        return a;
    }

    int entry(int a, int c) const {
        return tab_[static_cast<std::size_t>(a) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c)];
    }
    void set(int a, int c, int v) {
        tab_[static_cast<std::size_t>(a) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c)] = v;
    }
    /// entry normalized to the representative of its class.
    int get(int a, int c) {
        int v = entry(a, c);
        return v < 0 ? -1 : rep(v);
    }

    int new_coset() {
        if (static_cast<int>(parent_.size()) >= max_cosets_)
            throw Overflow("coset cap of " + std::to_string(max_cosets_) + " exceeded");
        int n = static_cast<int>(parent_.size());
        parent_.push_back(n);
        tab_.resize(tab_.size() + static_cast<std::size_t>(width_), -1);
        events_++;
        return n;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        merge_queue_.push_back(b);
        events_++;
    }

    void process_coincidences() {
        while (!merge_queue_.empty()) {
            int dead = merge_queue_.front();
            merge_queue_.pop_front();
            for (int c = 0; c < width_; ++c) {
                int d = entry(dead, c);
                if (d < 0) continue;
                set(dead, c, -1);
                // drop the mirrored back-pointer into the dead row
                if (entry(d, inv_column(c)) == dead) set(d, inv_column(c), -1);
                int mu = rep(dead), nu = rep(d);
                int ex = get(mu, c);
                if (ex >= 0) {
                    merge(nu, ex);
                } else {
                    int ex2 = get(nu, inv_column(c));
                    if (ex2 >= 0) {
                        merge(mu, ex2);
                    } else {
                        set(mu, c, nu);
                        set(nu, inv_column(c), mu);
                    }
                }
            }
        }
    }

    void coincide(int a, int b) {
        merge(a, b);
        process_coincidences();
    }

    void scan_and_fill(int start, const std::vector<int>& w) {
        if (w.empty()) return;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        int f = rep(start), b = f;
        while (true) {
            while (i <= j && get(f, w[static_cast<std::size_t>(i)]) >= 0) {
                f = get(f, w[static_cast<std::size_t>(i)]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j >= i && get(b, inv_column(w[static_cast<std::size_t>(j)])) >= 0) {
                b = get(b, inv_column(w[static_cast<std::size_t>(j)]));
                --j;
            }
            if (j < i) {
                if (f != b) coincide(f, b);
                return;
            }
            if (j == i) { // deduction closes the gap
                events_++;
                set(f, w[static_cast<std::size_t>(i)], b);
                set(b, inv_column(w[static_cast<std::size_t>(i)]), f);
                return;
            }
            int n = new_coset();
            set(f, w[static_cast<std::size_t>(i)], n);
            set(n, inv_column(w[static_cast<std::size_t>(i)]), f);
            f = n;
            ++i;
        }
    }
};

} // namespace

CosetTable::CosetTable(Presentation pres, int ncosets, std::vector<int> transitions, Origin origin)
    : pres_(std::move(pres)), ncosets_(ncosets), tab_(std::move(transitions)), origin_(origin) {}

int CosetTable::trace(int coset, const Word& w) const {
    for (int s : w.steps())
        coset = s > 0 ? step(coset, 2 * (s - 1)) : step(coset, 2 * (-s - 1) + 1);
    return coset;
}

bool CosetTable::consistent(const std::vector<Word>& subgroup_gens) const {
    for (int c = 0; c < ncosets_; ++c) {
        for (int col = 0; col < 2 * ngens(); ++col) {
            int d = step(c, col);
            if (d < 0 || d >= ncosets_) return false;
            if (step(d, col ^ 1) != c) return false;
        }
        for (const Word& r : pres_.relators)
            if (trace(c, r) != c) return false;
    }
    for (const Word& w : subgroup_gens)
        if (trace(0, w) != 0) return false;
    return true;
}

CosetTable enumerate_cosets(const Presentation& pres,
                            const std::vector<Word>& subgens,
                            int max_cosets) {
    Enumerator en(pres, max_cosets);
    for (const Word& w : subgens) en.add_subgroup_gen(w);
    en.run();
    auto [live, tab] = en.compact();
    CosetTable ct(pres, live, std::move(tab), CosetTable::Origin::Enumeration);
    if (!ct.consistent(subgens))
        throw InternalInvariantViolation("enumeration produced an inconsistent coset table");
    return ct;
}

CosetTable coset_table_from_hom(const Presentation& pres,
                                const std::vector<int>& images,
                                const FiniteGroup& x) {
    if (images.size() != pres.generators.size())
        throw ParseError("one image per generator required");
    auto eval = [&](const Word& w) {
        int acc = x.identity();
        for (int s : w.steps())
            acc = x.mul(acc, s > 0 ? images[static_cast<std::size_t>(s - 1)]
                                   : x.inv(images[static_cast<std::size_t>(-s - 1)]));
        return acc;
    };
    for (const Word& r : pres.relators)
        if (eval(r) != x.identity())
            throw NotAHomomorphism("relator '" + format_word(r, pres.generators) +
                                   "' does not map to the identity");
    // image subgroup in first-reached order; its right-multiplication action
    // is the coset action of the kernel
    std::vector<int> elems{x.identity()};
    std::vector<int> pos(static_cast<std::size_t>(x.order()), -1);
    pos[static_cast<std::size_t>(x.identity())] = 0;
    for (std::size_t qi = 0; qi < elems.size(); ++qi) {
        for (int img : images) {
            for (int y : {x.mul(elems[qi], img), x.mul(elems[qi], x.inv(img))}) {
                if (pos[static_cast<std::size_t>(y)] < 0) {
                    pos[static_cast<std::size_t>(y)] = static_cast<int>(elems.size());
                    elems.push_back(y);
                }
            }
        }
    }
    int n = static_cast<int>(elems.size());
    int width = 2 * static_cast<int>(pres.generators.size());
    std::vector<int> tab(static_cast<std::size_t>(n) * static_cast<std::size_t>(width));
    for (int c = 0; c < n; ++c)
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
            tab[static_cast<std::size_t>(c) * static_cast<std::size_t>(width) + 2 * g] =
                pos[static_cast<std::size_t>(x.mul(elems[static_cast<std::size_t>(c)], images[g]))];
            tab[static_cast<std::size_t>(c) * static_cast<std::size_t>(width) + 2 * g + 1] =
                pos[static_cast<std::size_t>(x.mul(elems[static_cast<std::size_t>(c)], x.inv(images[g])))];
        }
    return CosetTable(pres, n, std::move(tab), CosetTable::Origin::Homomorphism);
}

std::vector<Word> transversal_words(const CosetTable& ct) {
    int n = ct.cosets();
    std::vector<int> parent(static_cast<std::size_t>(n), -1), via(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.push_back(0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int c = order[qi];
        for (int col = 0; col < 2 * ct.ngens(); ++col) {
            int d = ct.step(c, col);
            if (!seen[static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(d)] = 1;
                parent[static_cast<std::size_t>(d)] = c;
                via[static_cast<std::size_t>(d)] = col;
                order.push_back(d);
            }
        }
    }
    std::vector<Word> words(static_cast<std::size_t>(n));
    for (int c : order) {
        if (c == 0) continue;
        int col = via[static_cast<std::size_t>(c)];
        Word step{{{col / 2, col % 2 == 0 ? 1 : -1}}};
        words[static_cast<std::size_t>(c)] = concat(words[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])], step);
    }
    return words;
}

FiniteGroupPtr group_from_coset_table(const CosetTable& ct) {
    int n = ct.cosets();
    std::vector<Word> words = transversal_words(ct);
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ct.trace(i, words[static_cast<std::size_t>(j)]);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(format_word(words[static_cast<std::size_t>(i)], ct.presentation().generators));
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

} // namespace hnnp
