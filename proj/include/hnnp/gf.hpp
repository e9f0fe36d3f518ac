#pragma once

#include <cstdint>
#include <vector>

namespace hnnp {

/// Dense vector over the field with p elements, entries in [0, p).
using GFVec = std::vector<std::uint8_t>;

/// Incremental row-reduced echelon basis over GF(p).
///
/// Rows are kept fully reduced against each other, so reduce() yields a
/// canonical coset representative supported on the free columns only.
class GFRowSpace {
public:
    GFRowSpace(int p, int width);

    int p() const { return p_; }
    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim_quotient() const { return width_ - rank(); }

    /// Adds a row to the span. Returns true if the rank grew.
    bool add(GFVec row);

    /// Reduces v against the basis; result has zero entries at all pivot
    /// columns. Does not change the span.
    GFVec reduce(GFVec v) const;

    /// True iff v lies in the row space.
    bool contains(const GFVec& v) const;

    /// Pivot columns, ascending.
    const std::vector<int>& pivots() const { return pivots_; }

    /// Non-pivot columns, ascending; a basis of the quotient space.
    std::vector<int> free_columns() const;

    /// Coordinates of v's coset w.r.t. the free columns.
    GFVec quotient_coords(const GFVec& v) const;

    const std::vector<GFVec>& rows() const { return rows_; }

private:
    int p_;
    int width_;
    std::vector<GFVec> rows_;   // sorted by pivot column
    std::vector<int> pivots_;   // pivots_[i] = pivot column of rows_[i]
    std::vector<std::uint8_t> inv_; // multiplicative inverses mod p
};

/// y += c*x (mod p), elementwise.
void gf_axpy(GFVec& y, std::uint8_t c, const GFVec& x, int p);

/// Dense matrix-vector product over GF(p); mat is column-major, one column
/// per input coordinate.
GFVec gf_mat_vec(const std::vector<GFVec>& columns, const GFVec& v, int p);

} // namespace hnnp
