#include "cdc/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cdc/errors.hpp"
#include "cdc/grassmann.hpp"

namespace cdc {

Subspace Subspace::from_matrix(const FqMatrix& m) {
    Subspace s;
    s.basis_ = rref_basis(m);
    s.n_ = static_cast<unsigned>(m.cols());
    return s;
}

Subspace Subspace::from_rref(FqMatrix basis, unsigned ambient) {
    assert(basis.cols() == ambient);
    Subspace s;
    s.basis_ = std::move(basis);
    s.n_ = ambient;
    return s;
}

Subspace Subspace::zero(FieldPtr field, unsigned n) {
    return from_rref(FqMatrix(std::move(field), 0, n), n);
}

Subspace Subspace::full(FieldPtr field, unsigned n) {
    return from_rref(FqMatrix::identity(std::move(field), n), n);
}

std::vector<std::size_t> Subspace::pivot_columns() const {
    std::vector<std::size_t> p;
    p.reserve(dim());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t j = 0;
        while (j < basis_.cols() && basis_.at(i, j) == 0) ++j;
        assert(j < basis_.cols());
        p.push_back(j);
    }
    return p;
}

bool Subspace::operator<(const Subspace& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            FieldElem a = basis_.at(i, j), b = o.basis_.at(i, j);
            if (a != b) return a < b;
        }
    return false;
}

std::size_t Subspace::hash() const {
    std::size_t h = 1469598103934665603ull ^ n_ ^ (static_cast<std::size_t>(dim()) << 32);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            h ^= basis_.at(i, j) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
    return h;
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("ambient dimension mismatch in subspace_distance");
    std::size_t s = stack_rank(u.basis(), v.basis());
    return static_cast<unsigned>(2 * s - u.dim() - v.dim());
}

unsigned injection_distance(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("ambient dimension mismatch in injection_distance");
    std::size_t s = stack_rank(u.basis(), v.basis());
    return static_cast<unsigned>(s - std::min(u.dim(), v.dim()));
}

std::pair<unsigned, unsigned> matrix_space_distance(const FqMatrix& a, const FqMatrix& b) {
    std::size_t ra = rank_of(a), rb = rank_of(b);
    std::size_t s = stack_rank(a, b);
    unsigned ds = static_cast<unsigned>(2 * s - ra - rb);
    unsigned di = static_cast<unsigned>(s - std::min(ra, rb));
    return {ds, di};
}

Subspace dual(const Subspace& u) {
    const FieldPtr& k = u.field();
    const unsigned n = u.ambient(), r = u.dim();
    // nullspace of the basis: read solutions off the rref
    RrefResult rr = rref(u.basis());
    assert(rr.rank == r);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    FqMatrix ns(k, n - r, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ns.set(row, c, 1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            ns.set(row, rr.pivots[i], k->neg(rr.matrix.at(i, c)));
        ++row;
    }
    assert(row == n - r);
    return Subspace::from_matrix(ns);
}

GrassmannianEnumerator::GrassmannianEnumerator(FieldPtr field, unsigned n, unsigned r)
    : field_(std::move(field)), n_(n), r_(r) {
    if (r > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    pivots_.resize(r_);
    for (unsigned i = 0; i < r_; ++i) pivots_[i] = i;
    reset_free_slots();
}

void GrassmannianEnumerator::reset_free_slots() {
    free_slots_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t c : pivots_) is_pivot[c] = true;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t c = pivots_[i] + 1; c < n_; ++c)
            if (!is_pivot[c]) free_slots_.emplace_back(i, c);
    values_.assign(free_slots_.size(), 0);
}

Subspace GrassmannianEnumerator::current() const {
    FqMatrix m(field_, r_, n_);
    for (std::size_t i = 0; i < r_; ++i) m.set(i, pivots_[i], 1);
    for (std::size_t t = 0; t < free_slots_.size(); ++t)
        m.set(free_slots_[t].first, free_slots_[t].second, values_[t]);
    return Subspace::from_rref(std::move(m), n_);
}

bool GrassmannianEnumerator::advance_entries() {
    const FieldElem top = field_->size() - 1;
    for (std::size_t t = values_.size(); t-- > 0;) {
        if (values_[t] < top) {
            ++values_[t];
            return true;
        }
        values_[t] = 0;
    }
    return false;
}

bool GrassmannianEnumerator::advance_pivots() {
    // next r-combination of {0..n-1} in lexicographic order
    if (r_ == 0) return false;
    std::size_t i = r_;
    while (i-- > 0) {
        if (pivots_[i] < n_ - r_ + i) {
            ++pivots_[i];
            for (std::size_t j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            reset_free_slots();
            return true;
        }
    }
    return false;
}

std::optional<Subspace> GrassmannianEnumerator::next() {
    if (done_) return std::nullopt;
    Subspace s = current();
    if (!advance_entries() && !advance_pivots()) done_ = true;
    return s;
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, unsigned n, unsigned r,
                                             std::uint64_t cap) {
    Int total = gaussian_binomial(n, r, field->size());
    if (total > Int(cap)) throw ResourceError("Grassmannian larger than enumeration cap");
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(to_u64(total)));
    GrassmannianEnumerator gen(field, n, r);
    while (auto s = gen.next()) out.push_back(std::move(*s));
    return out;
}

}  // namespace cdc
