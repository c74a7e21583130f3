#include "cdc/rank_metric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cdc/detail/bitset.hpp"
#include "cdc/errors.hpp"
#include "cdc/grassmann.hpp"

namespace cdc {

unsigned rank_distance(const FqMatrix& c, const FqMatrix& d) {
    if (c.rows() != d.rows() || c.cols() != d.cols())
        throw std::invalid_argument("shape mismatch in rank_distance");
    return static_cast<unsigned>(rank_of(c - d));
}

Int nr(unsigned q, unsigned m, unsigned n, unsigned d) {
    if (d > std::min(m, n)) return 0;
    Int out = gaussian_binomial(n, d, q);
    for (unsigned i = 0; i < d; ++i) out *= int_pow(q, m) - int_pow(q, i);
    return out;
}

Int vr(unsigned q, unsigned m, unsigned n, unsigned t) {
    Int out = 0;
    for (unsigned d = 0; d <= t; ++d) out += nr(q, m, n, d);
    return out;
}

FieldElem MrdCode::matrix_col_to_ext(const FqMatrix& mat, unsigned col) const {
    if (mat.rows() == 1 && Field::same(ext_, base_)) return mat.at(0, col);
    std::vector<FieldElem> coords(mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i) coords[i] = mat.at(i, col);
    return ext_->from_coords(coords);
}

MrdCode MrdCode::build(FieldPtr base, unsigned m, unsigned n, unsigned d) {
    if (m == 0 || n == 0 || d < 1 || d > std::min(m, n))
        throw std::invalid_argument("infeasible MRD parameters");
    MrdCode c;
    c.base_ = std::move(base);
    c.m_ = m;
    c.n_ = n;
    c.d_ = d;
    c.transposed_ = n > m;
    const unsigned ext_deg = c.transposed_ ? n : m;
    const unsigned npts = c.transposed_ ? m : n;
    c.ext_ = Field::extension_of(c.base_, ext_deg);
    c.k_ = npts - d + 1;
    c.points_.resize(npts);
    // evaluation points: the polynomial-basis elements 1, x, ..., x^{npts-1}
    FieldElem x = ext_deg == 1 ? 1 : c.ext_->from_coords(std::vector<FieldElem>{0, 1});
    FieldElem p = 1;
    for (unsigned i = 0; i < npts; ++i) {
        c.points_[i] = p;
        p = c.ext_->mul(p, x);
    }
    return c;
}

Int MrdCode::cardinality() const {
    Int a = int_pow(q(), static_cast<std::uint64_t>(m_) * (n_ - d_ + 1));
    Int b = int_pow(q(), static_cast<std::uint64_t>(n_) * (m_ - d_ + 1));
    return a < b ? a : b;
}

std::uint64_t MrdCode::size_u64() const { return to_u64(cardinality()); }

FqMatrix MrdCode::encode_direct(std::span<const FieldElem> message) const {
    const unsigned ext_deg = transposed_ ? n_ : m_;
    LinearizedPoly L(ext_, std::vector<FieldElem>(message.begin(), message.end()));
    FqMatrix word(base_, ext_deg, static_cast<unsigned>(points_.size()));
    for (unsigned j = 0; j < points_.size(); ++j) {
        FieldElem v = L.eval(points_[j]);
        if (ext_deg == 1) {
            word.set(0, j, v);
        } else {
            for (unsigned i = 0; i < ext_deg; ++i) word.set(i, j, ext_->coord(v, i));
        }
    }
    return word;
}

FqMatrix MrdCode::encode(std::span<const FieldElem> message) const {
    if (message.size() != k_) throw std::invalid_argument("message length mismatch");
    FqMatrix w = encode_direct(message);
    return transposed_ ? w.transposed() : w;
}

FqMatrix MrdCode::encode_index(std::uint64_t index) const {
    if (index >= size_u64()) throw std::invalid_argument("message index out of range");
    std::vector<FieldElem> msg(k_);
    const std::uint64_t qe = ext_->size();
    for (unsigned i = 0; i < k_; ++i) {
        msg[i] = static_cast<FieldElem>(index % qe);
        index /= qe;
    }
    return encode(msg);
}

std::optional<std::vector<FieldElem>> MrdCode::decode_direct(const FqMatrix& received) const {
    const Field& K = *ext_;
    const unsigned npts = static_cast<unsigned>(points_.size());
    const unsigned t = (d_ - 1) / 2;
    std::vector<FieldElem> rx(npts);
    for (unsigned i = 0; i < npts; ++i) rx[i] = matrix_col_to_ext(received, i);

    // Interpolation system V(r_i) = F(g_i), qdeg V <= t, qdeg F <= t+k-1.
    // A nonzero kernel vector always has V != 0, and when the error rank is
    // within t it satisfies F = V o L for the transmitted message poly L.
    const unsigned nv = t + 1, nf = t + k_;
    const unsigned cols = nv + nf;
    std::vector<std::vector<FieldElem>> mat(npts, std::vector<FieldElem>(cols, 0));
    for (unsigned i = 0; i < npts; ++i) {
        for (unsigned j = 0; j < nv; ++j) mat[i][j] = K.frob(rx[i], j);
        for (unsigned j = 0; j < nf; ++j) mat[i][nv + j] = K.neg(K.frob(points_[i], j));
    }

    std::vector<unsigned> pivot_col;
    unsigned row = 0;
    for (unsigned c = 0; c < cols && row < npts; ++c) {
        unsigned piv = row;
        while (piv < npts && mat[piv][c] == 0) ++piv;
        if (piv == npts) continue;
        std::swap(mat[piv], mat[row]);
        FieldElem s = K.inv(mat[row][c]);
        for (unsigned j = c; j < cols; ++j) mat[row][j] = K.mul(s, mat[row][j]);
        for (unsigned i = 0; i < npts; ++i) {
            if (i == row || mat[i][c] == 0) continue;
            FieldElem f = mat[i][c];
            for (unsigned j = c; j < cols; ++j)
                mat[i][j] = K.sub(mat[i][j], K.mul(f, mat[row][j]));
        }
        pivot_col.push_back(c);
        ++row;
    }
    if (row == cols) return std::nullopt;  // trivial kernel
    std::vector<bool> is_pivot(cols, false);
    for (unsigned c : pivot_col) is_pivot[c] = true;
    unsigned free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    assert(free_col < cols);
    std::vector<FieldElem> sol(cols, 0);
    sol[free_col] = 1;
    for (unsigned i = 0; i < pivot_col.size(); ++i)
        sol[pivot_col[i]] = K.neg(mat[i][free_col]);

    LinearizedPoly V(ext_, std::vector<FieldElem>(sol.begin(), sol.begin() + nv));
    LinearizedPoly F(ext_, std::vector<FieldElem>(sol.begin() + nv, sol.end()));
    if (V.is_zero()) return std::nullopt;
    auto [L, R] = LinearizedPoly::left_divide(F, V);
    if (!R.is_zero()) return std::nullopt;
    if (L.qdeg() >= static_cast<int>(k_)) return std::nullopt;
    std::vector<FieldElem> msg(k_, 0);
    std::copy(L.coeffs().begin(), L.coeffs().end(), msg.begin());
    FqMatrix cand = encode_direct(msg);
    if (rank_distance(cand, received) > t) return std::nullopt;
    return msg;
}

std::optional<std::pair<FqMatrix, std::vector<FieldElem>>> MrdCode::decode_bounded_message(
    const FqMatrix& received) const {
    if (received.rows() != m_ || received.cols() != n_)
        throw std::invalid_argument("received matrix shape mismatch");
    FqMatrix direct = transposed_ ? received.transposed() : received;
    auto msg = decode_direct(direct);
    if (!msg) return std::nullopt;
    return std::make_pair(encode(*msg), std::move(*msg));
}

std::optional<FqMatrix> MrdCode::decode_bounded(const FqMatrix& received) const {
    auto res = decode_bounded_message(received);
    if (!res) return std::nullopt;
    return std::move(res->first);
}

FqMatrix matrix_from_index(const FieldPtr& base, unsigned m, unsigned n, std::uint64_t index) {
    const std::uint64_t q = base->size();
    FqMatrix mat(base, m, n);
    for (std::size_t t = static_cast<std::size_t>(m) * n; t-- > 0;) {
        // entry (0,0) carries the most significant digit, so index order is
        // lexicographic order of entry sequences
        mat.set(t / n, t % n, static_cast<FieldElem>(index % q));
        index /= q;
    }
    return mat;
}

namespace {

std::uint64_t space_size_checked(const FieldPtr& base, unsigned m, unsigned n,
                                 std::uint64_t cap) {
    Int total = int_pow(base->size(), static_cast<std::uint64_t>(m) * n);
    if (total > Int(static_cast<unsigned long>(cap)))
        throw ResourceError("matrix space larger than enumeration cap");
    return to_u64(total);
}

std::vector<detail::Bitset> coverage_bitsets(const FieldPtr& base, unsigned m, unsigned n,
                                             unsigned rho, std::uint64_t total) {
    std::vector<FqMatrix> all;
    all.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) all.push_back(matrix_from_index(base, m, n, i));
    std::vector<detail::Bitset> balls(total, detail::Bitset(total));
    const bool use_packed = base->size() == 2 && n <= 64;
    std::vector<packed::Rows> prows;
    if (use_packed) {
        prows.reserve(total);
        for (const auto& w : all) prows.push_back(packed::pack(w));
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        balls[i].set(i);
        for (std::uint64_t j = i + 1; j < total; ++j) {
            unsigned dist;
            if (use_packed) {
                packed::Rows diff(prows[i]);
                for (std::size_t row = 0; row < diff.size(); ++row) diff[row] ^= prows[j][row];
                dist = static_cast<unsigned>(packed::rank(diff));
            } else {
                dist = rank_distance(all[i], all[j]);
            }
            if (dist <= rho) {
                balls[i].set(j);
                balls[j].set(i);
            }
        }
    }
    return balls;
}

std::vector<std::uint64_t> greedy_cover_indices(const std::vector<detail::Bitset>& balls,
                                                std::uint64_t total) {
    detail::Bitset uncovered(total);
    for (std::uint64_t i = 0; i < total; ++i) uncovered.set(i);
    std::vector<std::uint64_t> picks;
    while (!uncovered.none()) {
        std::uint64_t best = 0;
        std::size_t best_count = 0;
        for (std::uint64_t i = 0; i < total; ++i) {
            std::size_t c = balls[i].count_and(uncovered);
            if (c > best_count) {  // ties keep the smallest index = lex-least entries
                best_count = c;
                best = i;
            }
        }
        picks.push_back(best);
        uncovered.and_not_with(balls[best]);
    }
    return picks;
}

struct CoverSearch {
    const std::vector<detail::Bitset>& balls;
    std::uint64_t total;
    std::size_t ball_volume;
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> current;

    void run(const detail::Bitset& uncovered) {
        if (uncovered.none()) {
            if (current.size() < best.size()) best = current;
            return;
        }
        std::size_t remaining = uncovered.count();
        std::size_t need = (remaining + ball_volume - 1) / ball_volume;
        if (current.size() + need >= best.size()) return;
        std::size_t e = uncovered.first();  // every cover needs a ball containing e
        for (std::uint64_t c = 0; c < total; ++c) {
            if (!balls[c].test(e)) continue;
            current.push_back(c);
            detail::Bitset next = uncovered;
            next.and_not_with(balls[c]);
            run(next);
            current.pop_back();
        }
    }
};

}  // namespace

unsigned rank_covering_radius(const RankCodebook& book, std::uint64_t cap) {
    if (book.words.empty()) throw std::invalid_argument("covering radius of an empty codebook");
    std::uint64_t total = space_size_checked(book.field, book.m, book.n, cap);
    unsigned radius = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        FqMatrix x = matrix_from_index(book.field, book.m, book.n, i);
        unsigned best = std::min(book.m, book.n);
        for (const auto& w : book.words) best = std::min(best, rank_distance(x, w));
        radius = std::max(radius, best);
    }
    return radius;
}

RankCodebook greedy_rank_covering(const FieldPtr& base, unsigned m, unsigned n, unsigned rho,
                                  std::uint64_t cap) {
    std::uint64_t total = space_size_checked(base, m, n, cap);
    auto balls = coverage_bitsets(base, m, n, rho, total);
    RankCodebook book{base, m, n, {}};
    for (std::uint64_t idx : greedy_cover_indices(balls, total))
        book.words.push_back(matrix_from_index(base, m, n, idx));
    return book;
}

RankCodebook exact_rank_covering(const FieldPtr& base, unsigned m, unsigned n, unsigned rho,
                                 std::uint64_t cap) {
    std::uint64_t total = space_size_checked(base, m, n, cap);
    auto balls = coverage_bitsets(base, m, n, rho, total);
    CoverSearch search{balls, total, balls[0].count(), greedy_cover_indices(balls, total), {}};
    detail::Bitset uncovered(total);
    for (std::uint64_t i = 0; i < total; ++i) uncovered.set(i);
    search.run(uncovered);
    RankCodebook book{base, m, n, {}};
    for (std::uint64_t idx : search.best) book.words.push_back(matrix_from_index(base, m, n, idx));
    return book;
}

std::optional<FqMatrix> nearest_mrd_codeword(const MrdCode& code, const FqMatrix& received,
                                             unsigned radius) {
    std::uint64_t total = code.size_u64();
    if (total > (1u << 20)) throw ResourceError("MRD code too large for exhaustive search");
    std::optional<FqMatrix> best;
    unsigned best_dist = radius + 1;
    for (std::uint64_t i = 0; i < total; ++i) {
        FqMatrix w = code.encode_index(i);
        unsigned dist = rank_distance(w, received);
        if (dist < best_dist) {
            best_dist = dist;
            best = std::move(w);
        }
    }
    return best;
}

}  // namespace cdc
