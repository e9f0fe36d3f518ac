#include "hnnp/gf.hpp"

#include <algorithm>
#include <cassert>

namespace hnnp {

GFRowSpace::GFRowSpace(int p, int width) : p_(p), width_(width), inv_(p, 0) {
    // inverses by Fermat via brute scan; p is a small prime
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) { inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b); break; }
}

void gf_axpy(GFVec& y, std::uint8_t c, const GFVec& x, int p) {
    if (c == 0) return;
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) {
        int t = y[i] + c * x[i];
        y[i] = static_cast<std::uint8_t>(t % p);
    }
}

GFVec GFRowSpace::reduce(GFVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint8_t c = v[static_cast<std::size_t>(pivots_[k])];
        if (c != 0)
            gf_axpy(v, static_cast<std::uint8_t>(p_ - c), rows_[k], p_);
    }
    return v;
}

bool GFRowSpace::add(GFVec row) {
    assert(static_cast<int>(row.size()) == width_);
    row = reduce(std::move(row));
    int lead = -1;
    for (int i = 0; i < width_; ++i)
        if (row[static_cast<std::size_t>(i)] != 0) { lead = i; break; }
    if (lead < 0) return false;
    std::uint8_t c = row[static_cast<std::size_t>(lead)];
    if (c != 1) {
        std::uint8_t ic = inv_[c];
        for (auto& e : row) e = static_cast<std::uint8_t>(e * ic % p_);
    }
    // eliminate the new pivot column from existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint8_t d = rows_[k][static_cast<std::size_t>(lead)];
        if (d != 0)
            gf_axpy(rows_[k], static_cast<std::uint8_t>(p_ - d), row, p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

bool GFRowSpace::contains(const GFVec& v) const {
    GFVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint8_t e) { return e == 0; });
}

std::vector<int> GFRowSpace::free_columns() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int i = 0; i < width_; ++i) {
        if (k < pivots_.size() && pivots_[k] == i) { ++k; continue; }
        out.push_back(i);
    }
    return out;
}

GFVec GFRowSpace::quotient_coords(const GFVec& v) const {
    GFVec r = reduce(v);
    GFVec out;
    std::size_t k = 0;
    for (int i = 0; i < width_; ++i) {
        if (k < pivots_.size() && pivots_[k] == i) { ++k; continue; }
        out.push_back(r[static_cast<std::size_t>(i)]);
    }
    return out;
}

GFVec gf_mat_vec(const std::vector<GFVec>& columns, const GFVec& v, int p) {
    GFVec out(columns.empty() ? 0 : columns[0].size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j)
        gf_axpy(out, v[j], columns[j], p);
    return out;
}

} // namespace hnnp
