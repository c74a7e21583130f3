#include "cdc/grassmann.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cdc {

Int gaussian_binomial(long n, long r, unsigned q) {
    if (r < 0 || r > n) return 0;
    if (r == 0 || r == n) return 1;
    Int num = 1, den = 1;
    for (long i = 0; i < r; ++i) {
        num *= int_pow(q, n) - int_pow(q, i);
        den *= int_pow(q, r) - int_pow(q, i);
    }
    return exact_div(num, den, "gaussian_binomial");
}

double kq_constant(unsigned q) {
    double prod = 1.0;
    double qi = 1.0 / q;
    for (int j = 1; j <= 64; ++j) {
        if (qi < 1e-15) break;
        prod *= 1.0 - qi;
        qi /= q;
    }
    return prod;
}

AcBound AcBound::anticode_default(unsigned q, unsigned n, unsigned r) {
    AcBound b;
    b.upper = [q, n, r](unsigned d) -> Int {
        if (d <= 1) return gaussian_binomial(n, r, q);
        if (d > r) return 1;
        Int num = gaussian_binomial(n, r - d + 1, q);
        Int den = gaussian_binomial(r, r - d + 1, q);
        return num / den;  // floor of the anticode quotient
    };
    return b;
}

GrassmannProfile::GrassmannProfile(unsigned q, unsigned n, unsigned r) : q_(q), n_(n), r_(r) {
    if (r > n) throw std::invalid_argument("r > n in GrassmannProfile");
    whole_ = gaussian_binomial(n, r, q);
    sphere_.resize(r + 1);
    ball_.resize(r + 1);
    for (unsigned d = 0; d <= r; ++d) {
        sphere_[d] = int_pow(q, static_cast<std::uint64_t>(d) * d) * gaussian_binomial(r, d, q) *
                     gaussian_binomial(n - r, d, q);
        ball_[d] = (d == 0 ? Int(1) : ball_[d - 1] + sphere_[d]);
    }
    mu_.resize(r + 1);
    for (unsigned i = 0; i <= r; ++i)
        mu_[i] = gaussian_binomial(n, i, q) - gaussian_binomial(n, static_cast<long>(i) - 1, q);
    coeffs_.a.resize(r + 1);
    coeffs_.b.resize(r + 1);
    coeffs_.c.resize(r + 1);
    for (unsigned j = 0; j <= r; ++j) {
        coeffs_.c[j] = gaussian_binomial(j, 1, q) * gaussian_binomial(j, 1, q);
        coeffs_.b[j] = int_pow(q, 2ull * j + 1) * gaussian_binomial(r - j, 1, q) *
                       gaussian_binomial(static_cast<long>(n) - r - j, 1, q);
        coeffs_.a[j] = sphere_[1] - coeffs_.b[j] - coeffs_.c[j];
        assert(sgn(coeffs_.a[j]) >= 0);
    }
    kq_ = kq_constant(q);
}

const Int& GrassmannProfile::sphere(unsigned d) const {
    assert(d <= r_);
    return sphere_[d];
}

const Int& GrassmannProfile::ball(unsigned t) const {
    assert(t <= r_);
    return ball_[t];
}

const Int& GrassmannProfile::mu(unsigned i) const {
    assert(i <= r_);
    return mu_[i];
}

namespace {
Int binom2(unsigned x) { return Int(x) * (static_cast<long>(x) - 1) / 2; }
}  // namespace

void GrassmannProfile::build_eberlein() const {
    if (eb_built_) return;
    const unsigned R = r_ + 1;
    eb_.assign(static_cast<std::size_t>(R) * R, 0);
    for (unsigned j = 0; j < R; ++j) {
        for (unsigned i = 0; i < R; ++i) {
            Int sum = 0;
            for (unsigned l = 0; l <= j; ++l) {
                Int term = int_pow(q_, static_cast<std::uint64_t>(l) * i +
                                           to_u64(binom2(j - l)));
                term *= gaussian_binomial(static_cast<long>(r_) - l, static_cast<long>(r_) - j, q_);
                term *= gaussian_binomial(static_cast<long>(r_) - i, l, q_);
                term *= gaussian_binomial(static_cast<long>(n_ - r_) + l - i, l, q_);
                if ((j - l) % 2 == 1) term = -term;
                sum += term;
            }
            eb_[j * R + i] = sum;
        }
    }
    jc_.assign(static_cast<std::size_t>(R) * R * R, 0);
    for (unsigned u = 0; u < R; ++u)
        for (unsigned s = 0; s < R; ++s)
            for (unsigned d = 0; d < R; ++d) {
                Int num = 0;
                for (unsigned i = 0; i < R; ++i)
                    num += mu_[i] * eb_[u * R + i] * eb_[s * R + i] * eb_[d * R + i];
                Int den = whole_ * sphere_[d];
                Int val = exact_div(num, den, "Eberlein intersection number");
                if (sgn(val) < 0) throw std::logic_error("negative intersection number");
                jc_[(u * R + s) * R + d] = val;
            }
    eb_built_ = true;
}

const Int& GrassmannProfile::eberlein(unsigned j, unsigned i) const {
    assert(j <= r_ && i <= r_);
    build_eberlein();
    return eb_[j * (r_ + 1) + i];
}

const Int& GrassmannProfile::intersection_number(unsigned u, unsigned s, unsigned d) const {
    assert(u <= r_ && s <= r_ && d <= r_);
    build_eberlein();
    const unsigned R = r_ + 1;
    return jc_[(u * R + s) * R + d];
}

void GrassmannProfile::build_recursive() const {
    if (rec_built_) return;
    const unsigned R = r_ + 1;
    jc_rec_.assign(static_cast<std::size_t>(R) * R * R, 0);
    auto at = [&](long u, long s, long d) -> Int {
        if (u < 0 || s < 0 || d < 0 || u > r_ || s > r_ || d > r_) return 0;
        return jc_rec_[(static_cast<std::size_t>(u) * R + s) * R + d];
    };
    for (unsigned s = 0; s < R; ++s)
        for (unsigned d = 0; d < R; ++d) jc_rec_[(0 * R + s) * R + d] = (s == d) ? 1 : 0;
    const auto& a = coeffs_.a;
    const auto& b = coeffs_.b;
    const auto& c = coeffs_.c;
    for (unsigned u = 0; u + 1 < R; ++u) {
        for (unsigned s = 0; s < R; ++s) {
            for (unsigned d = 0; d < R; ++d) {
                Int rhs = (a[s] - a[u]) * at(u, s, d) + at(u, s + 1, d) * (s + 1 <= r_ ? c[s + 1] : Int(0));
                if (s >= 1) rhs += b[s - 1] * at(u, s - 1, d);
                if (u >= 1) rhs -= b[u - 1] * at(u - 1, s, d);
                Int val = exact_div(rhs, c[u + 1], "intersection-number recursion");
                if (sgn(val) < 0) throw std::logic_error("negative recursive intersection number");
                jc_rec_[((u + 1) * R + s) * R + d] = val;
            }
        }
    }
    rec_built_ = true;
}

const Int& GrassmannProfile::intersection_number_recursive(unsigned u, unsigned s,
                                                           unsigned d) const {
    assert(u <= r_ && s <= r_ && d <= r_);
    build_recursive();
    const unsigned R = r_ + 1;
    return jc_rec_[(u * R + s) * R + d];
}

Int GrassmannProfile::ball_intersection(unsigned u, unsigned s, unsigned d) const {
    assert(u <= r_ && s <= r_ && d <= r_);
    Int total = 0;
    for (unsigned i = 0; i <= u; ++i)
        for (unsigned j = 0; j <= s; ++j) total += intersection_number(i, j, d);
    return total;
}

std::pair<Int, double> GrassmannProfile::vc_bounds(unsigned t) const {
    if (2 * r_ > n_) throw std::invalid_argument("vc_bounds requires r <= n/2");
    assert(t <= r_);
    Int lower = int_pow(q_, static_cast<std::uint64_t>(t) * (n_ - t));
    double upper = mpz_get_d(lower.get_mpz_t()) / (kq_ * kq_);
    return {lower, upper};
}

Int union_volume_bound(const GrassmannProfile& g, const Int& K, unsigned rho, const AcBound& ac) {
    if (K < 1) throw std::invalid_argument("union_volume_bound requires K >= 1");
    assert(rho <= g.r());
    const unsigned r = g.r();
    auto ac_at = [&](long d) -> Int {
        if (d > static_cast<long>(r)) return 1;
        return ac.upper(static_cast<unsigned>(d));
    };
    unsigned l = 0;
    for (unsigned a = 1; a <= r; ++a) {
        if (K >= ac_at(static_cast<long>(r) - a + 1))
            l = a;
        else
            break;
    }
    Int bound = K * g.ball(rho);
    for (unsigned a = 1; a <= l; ++a) {
        Int drop = ac_at(static_cast<long>(r) - a + 1) - ac_at(static_cast<long>(r) - a + 2);
        bound -= drop * g.ball_intersection(rho, rho, r - a + 1);
    }
    bound -= (K - ac_at(static_cast<long>(r) - l + 1)) * g.ball_intersection(rho, rho, r - l);
    return bound;
}

}  // namespace cdc
