#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/linpoly.hpp"
#include "cdc/matrix.hpp"

namespace cdc {

/// rk(C - D) for equal-shape matrices.
unsigned rank_distance(const FqMatrix& c, const FqMatrix& d);

/// Number of m x n matrices over GF(q) with rank exactly d.
Int nr(unsigned q, unsigned m, unsigned n, unsigned d);
/// Ball volume: matrices with rank at most t.
Int vr(unsigned q, unsigned m, unsigned n, unsigned t);

/// A maximum-rank-distance code in GF(q)^{m x n} with minimum rank distance d.
/// Built as a Gabidulin evaluation code over GF(q^m) when n <= m, or as the
/// transpose of one when n > m.  Codewords are indexed by messages of
/// k = n - d + 1 extension-field symbols (in the direct shape).
class MrdCode {
public:
    static MrdCode build(FieldPtr base, unsigned m, unsigned n, unsigned d);

    unsigned q() const { return base_->size(); }
    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    bool transposed() const { return transposed_; }
    const FieldPtr& base_field() const { return base_; }
    const FieldPtr& ext_field() const { return ext_; }
    unsigned message_length() const { return k_; }

    Int cardinality() const;
    std::uint64_t size_u64() const;

    /// Deterministic bijection from message symbols (over the extension
    /// field) to codeword matrices.
    FqMatrix encode(std::span<const FieldElem> message) const;
    FqMatrix encode_index(std::uint64_t index) const;

    /// Bounded-rank-distance decoding up to floor((d-1)/2) via
    /// Welch-Berlekamp style linearized interpolation.  Failure is a normal
    /// return.
    std::optional<FqMatrix> decode_bounded(const FqMatrix& received) const;
    /// Same, but also reports the message symbols.
    std::optional<std::pair<FqMatrix, std::vector<FieldElem>>> decode_bounded_message(
        const FqMatrix& received) const;

    /// Column i of the codeword for message L is L(eval_point(i)).
    FieldElem eval_point(unsigned i) const { return points_[i]; }

private:
    FieldPtr base_, ext_;
    unsigned m_ = 0, n_ = 0, d_ = 0, k_ = 0;
    bool transposed_ = false;
    std::vector<FieldElem> points_;  // evaluation points, direct shape

    FqMatrix encode_direct(std::span<const FieldElem> message) const;
    std::optional<std::vector<FieldElem>> decode_direct(const FqMatrix& received) const;
    FieldElem matrix_col_to_ext(const FqMatrix& mat, unsigned col) const;
};

/// An explicit small rank-metric code, e.g. a covering codebook.
struct RankCodebook {
    FieldPtr field;  // base field GF(q)
    unsigned m = 0, n = 0;
    std::vector<FqMatrix> words;
};

/// Exact covering radius by sweeping all q^{mn} matrices; guarded by `cap`.
unsigned rank_covering_radius(const RankCodebook& book, std::uint64_t cap = 1u << 20);

/// Greedy max-coverage codebook with rank covering radius <= rho.
/// Deterministic: ties pick the matrix with the smallest entry sequence.
RankCodebook greedy_rank_covering(const FieldPtr& base, unsigned m, unsigned n, unsigned rho,
                                  std::uint64_t cap = 4096);

/// Exact minimum cardinality of a covering code (branch-and-bound set
/// cover); feasible only for tiny spaces.
RankCodebook exact_rank_covering(const FieldPtr& base, unsigned m, unsigned n, unsigned rho,
                                 std::uint64_t cap = 4096);

/// All m x n matrices over the base field in index order (base-q digits,
/// row-major).
FqMatrix matrix_from_index(const FieldPtr& base, unsigned m, unsigned n, std::uint64_t index);

/// Exhaustive nearest-codeword search over an MRD code; the reference
/// decoder used as ground truth at desk scale.
std::optional<FqMatrix> nearest_mrd_codeword(const MrdCode& code, const FqMatrix& received,
                                             unsigned radius);

}  // namespace cdc
