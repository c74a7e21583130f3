#include "cdc/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace cdc {

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !Field::same(field_, o.field_))
        throw std::invalid_argument("matrix shape/field mismatch in subtraction");
    FqMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = static_cast<std::uint16_t>(field_->sub(e_[i], o.e_[i]));
    return r;
}

FqMatrix FqMatrix::col_slice(std::size_t first, std::size_t count) const {
    assert(first + count <= cols_);
    FqMatrix r(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
    return r;
}

FqMatrix FqMatrix::col_gather(std::span<const std::size_t> idx) const {
    FqMatrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.set(i, j, at(i, idx[j]));
    return r;
}

FqMatrix FqMatrix::row_slice(std::size_t first, std::size_t count) const {
    assert(first + count <= rows_);
    FqMatrix r(field_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(first + i, j));
    return r;
}

FqMatrix FqMatrix::hconcat(const FqMatrix& a, const FqMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("row count mismatch in hconcat");
    FqMatrix r(a.field_ ? a.field_ : b.field_, a.rows_, a.cols_ + b.cols_);
    r.paste(a, 0, 0);
    r.paste(b, 0, a.cols_);
    return r;
}

FqMatrix FqMatrix::vconcat(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("column count mismatch in vconcat");
    FqMatrix r(a.field_ ? a.field_ : b.field_, a.rows_ + b.rows_, a.cols_);
    r.paste(a, 0, 0);
    r.paste(b, a.rows_, 0);
    return r;
}

void FqMatrix::paste(const FqMatrix& src, std::size_t i0, std::size_t j0) {
    assert(i0 + src.rows_ <= rows_ && j0 + src.cols_ <= cols_);
    for (std::size_t i = 0; i < src.rows_; ++i)
        for (std::size_t j = 0; j < src.cols_; ++j) set(i0 + i, j0 + j, src.at(i, j));
}

bool FqMatrix::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

RrefResult rref(const FqMatrix& m) {
    RrefResult res;
    res.matrix = m;
    FqMatrix& a = res.matrix;
    const Field& k = *m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) {
                FieldElem t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        FieldElem s = k.inv(a.at(r, c));
        if (s != 1)
            for (std::size_t j = c; j < cols; ++j) a.set(r, j, k.mul(s, a.at(r, j)));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            FieldElem f = a.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a.set(i, j, k.sub(a.at(i, j), k.mul(f, a.at(r, j))));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

FqMatrix rref_basis(const FqMatrix& m) {
    RrefResult r = rref(m);
    return r.matrix.row_slice(0, r.rank);
}

std::size_t rank_of(const FqMatrix& m) {
    if (packed::packable(m)) {
        auto rows = packed::pack(m);
        return packed::rank(rows);
    }
    return rref(m).rank;
}

std::size_t stack_rank(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("column count mismatch in stack_rank");
    if (packed::packable(a) && packed::packable(b)) {
        auto ra = packed::pack(a);
        auto rb = packed::pack(b);
        return packed::stack_rank(ra, rb);
    }
    return rank_of(FqMatrix::vconcat(a, b));
}

namespace packed {

bool packable(const FqMatrix& m) {
    return m.field() && m.field()->size() == 2 && m.cols() <= 64;
}

Rows pack(const FqMatrix& m) {
    Rows rows(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) w |= std::uint64_t{1} << j;
        rows[i] = w;
    }
    return rows;
}

// Elimination over a scratch buffer; rows are absorbed one by one into a
// basis kept in decreasing order of leading bit.
std::size_t rank(std::span<const std::uint64_t> rows) {
    std::uint64_t basis[64];
    std::size_t n = 0;
    for (std::uint64_t v : rows) {
        for (std::size_t i = 0; i < n && v; ++i)
            if ((v ^ basis[i]) < v) v ^= basis[i];
        if (v) {
            std::size_t i = n++;
            while (i > 0 && basis[i - 1] < v) {
                basis[i] = basis[i - 1];
                --i;
            }
            basis[i] = v;
        }
    }
    return n;
}

std::size_t stack_rank(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::uint64_t basis[64];
    std::size_t n = 0;
    auto absorb = [&](std::uint64_t v) {
        for (std::size_t i = 0; i < n && v; ++i)
            if ((v ^ basis[i]) < v) v ^= basis[i];
        if (v) {
            std::size_t i = n++;
            while (i > 0 && basis[i - 1] < v) {
                basis[i] = basis[i - 1];
                --i;
            }
            basis[i] = v;
        }
    };
    for (std::uint64_t v : a) absorb(v);
    for (std::uint64_t v : b) absorb(v);
    return n;
}

}  // namespace packed

}  // namespace cdc
