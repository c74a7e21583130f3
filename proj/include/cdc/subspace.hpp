#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/matrix.hpp"

namespace cdc {

/// A subspace of GF(q)^n held as its canonical generator matrix: the reduced
/// row echelon form with zero rows dropped.  Equal row spaces compare equal.
class Subspace {
public:
    Subspace() = default;

    /// Canonicalize the row space of an arbitrary matrix.
    static Subspace from_matrix(const FqMatrix& m);
    /// Adopt a matrix that is already a canonical rref basis (checked with
    /// assertions only).
    static Subspace from_rref(FqMatrix basis, unsigned ambient);

    static Subspace zero(FieldPtr field, unsigned n);
    static Subspace full(FieldPtr field, unsigned n);

    unsigned ambient() const { return n_; }
    unsigned dim() const { return static_cast<unsigned>(basis_.rows()); }
    const FqMatrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.field(); }

    std::vector<std::size_t> pivot_columns() const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator<(const Subspace& o) const;

    std::size_t hash() const;

private:
    FqMatrix basis_;
    unsigned n_ = 0;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// d_S = 2 dim(U+V) - dim U - dim V; defined across dimensions.
unsigned subspace_distance(const Subspace& u, const Subspace& v);
/// d_I = dim(U+V) - min(dim U, dim V).
unsigned injection_distance(const Subspace& u, const Subspace& v);

/// Both distances between the row spaces of two raw matrices (equal column
/// counts, any rank), without canonicalizing.
std::pair<unsigned, unsigned> matrix_space_distance(const FqMatrix& a, const FqMatrix& b);

/// Orthogonal complement under the standard bilinear form.
Subspace dual(const Subspace& u);

/// Streams the Grassmannian E_r(q,n) in lexicographic order of pivot-column
/// sets, then lexicographic free entries.  Each subspace appears exactly once.
class GrassmannianEnumerator {
public:
    GrassmannianEnumerator(FieldPtr field, unsigned n, unsigned r);
    std::optional<Subspace> next();

private:
    bool advance_entries();
    bool advance_pivots();
    void reset_free_slots();
    Subspace current() const;

    FieldPtr field_;
    unsigned n_, r_;
    bool done_ = false;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots_;
    std::vector<FieldElem> values_;
};

/// Materialize the whole Grassmannian; throws ResourceError when its size
/// exceeds `cap`.
std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, unsigned n, unsigned r,
                                             std::uint64_t cap = 10'000'000);

}  // namespace cdc
