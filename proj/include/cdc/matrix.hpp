#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

/// Dense matrix over a finite field.  Entries are element indices of the
/// attached field.  0 x k and k x 0 shapes are legal and arise at the
/// boundary layers of block constructions.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static FqMatrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElem v) { e_[i * cols_ + j] = static_cast<std::uint16_t>(v); }

    std::span<const std::uint16_t> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }

    FqMatrix transposed() const;
    FqMatrix operator-(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && Field::same(field_, o.field_);
    }

    /// Columns [first, first+count) as a new matrix.
    FqMatrix col_slice(std::size_t first, std::size_t count) const;
    /// Gather arbitrary columns.
    FqMatrix col_gather(std::span<const std::size_t> idx) const;
    /// Rows [first, first+count).
    FqMatrix row_slice(std::size_t first, std::size_t count) const;

    static FqMatrix hconcat(const FqMatrix& a, const FqMatrix& b);
    static FqMatrix vconcat(const FqMatrix& a, const FqMatrix& b);

    /// Copy `src` into this matrix with its top-left corner at (i0, j0).
    void paste(const FqMatrix& src, std::size_t i0, std::size_t j0);

    bool is_zero() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint16_t> e_;
};

struct RrefResult {
    FqMatrix matrix;                   // same shape as input, fully reduced
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

RrefResult rref(const FqMatrix& m);

/// rref with zero rows dropped: the canonical basis of the row space.
FqMatrix rref_basis(const FqMatrix& m);

std::size_t rank_of(const FqMatrix& m);

/// Rank of the matrix whose rows are the rows of a followed by the rows of b.
/// Both must have the same column count.
std::size_t stack_rank(const FqMatrix& a, const FqMatrix& b);

namespace packed {

/// Bit-packed rows of a GF(2) matrix with at most 64 columns; the packed
/// kernels carry the pairwise sweeps that dominate the test workloads.
using Rows = std::vector<std::uint64_t>;

bool packable(const FqMatrix& m);
Rows pack(const FqMatrix& m);

/// Rank by in-place elimination of a scratch copy.
std::size_t rank(std::span<const std::uint64_t> rows);
std::size_t stack_rank(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace packed

}  // namespace cdc
