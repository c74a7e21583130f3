#include "cdc/field.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 16;

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over a field: coefficient vectors, low degree first, no
// trailing zeros except the zero polynomial itself.
using Poly = std::vector<FieldElem>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, const Field& k) {
    assert(!g.empty() && g.back() == 1);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        FieldElem c = f.back();
        if (c != 0) {
            std::size_t shift = f.size() - 1 - dg;
            for (std::size_t j = 0; j < dg; ++j)
                f[shift + j] = k.sub(f[shift + j], k.mul(c, g[j]));
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dg) break;
    }
    return f;
}

bool poly_divides(const Poly& g, const Poly& f, const Field& k) {
    Poly r = poly_mod(f, g, k);
    trim(r);
    return r.empty();
}

}  // namespace

FieldElem Field::add(FieldElem a, FieldElem b) const {
    if (p_ == 2) return a ^ b;
    if (is_prime_field()) return (a + b) % p_;
    FieldElem r = 0, scale = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        r += sub_->add(a % sub_q_, b % sub_q_) * scale;
        a /= sub_q_;
        b /= sub_q_;
        scale *= sub_q_;
    }
    return r;
}

FieldElem Field::neg(FieldElem a) const {
    if (p_ == 2) return a;
    if (is_prime_field()) return a == 0 ? 0 : p_ - a;
    FieldElem r = 0, scale = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        r += sub_->neg(a % sub_q_) * scale;
        a /= sub_q_;
        scale *= sub_q_;
    }
    return r;
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
}

FieldElem Field::frob(FieldElem a, unsigned i) const {
    std::uint64_t e = 1;
    for (unsigned t = 0; t < i; ++t) e = (e * sub_q_) % (q_ - 1);
    return pow(a, e);
}

FieldElem Field::coord(FieldElem a, unsigned i) const {
    for (unsigned t = 0; t < i; ++t) a /= sub_q_;
    return a % sub_q_;
}

FieldElem Field::from_coords(std::span<const FieldElem> coords) const {
    assert(coords.size() <= deg_);
    FieldElem r = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        assert(coords[i] < sub_q_);
        r = r * sub_q_ + coords[i];
    }
    return r;
}

FieldElem Field::slow_mul(FieldElem a, FieldElem b) const {
    if (is_prime_field())
        return static_cast<FieldElem>((static_cast<std::uint64_t>(a) * b) % p_);
    // polynomial product over the subfield, reduced by the modulus
    std::vector<FieldElem> da(deg_), db(deg_), prod(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i, a /= sub_q_) da[i] = a % sub_q_;
    for (unsigned i = 0; i < deg_; ++i, b /= sub_q_) db[i] = b % sub_q_;
    for (unsigned i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j)
            prod[i + j] = sub_->add(prod[i + j], sub_->mul(da[i], db[j]));
    }
    for (std::size_t t = prod.size(); t-- > deg_;) {
        FieldElem c = prod[t];
        if (c == 0) continue;
        prod[t] = 0;
        for (unsigned j = 0; j < deg_; ++j)
            prod[t - deg_ + j] = sub_->sub(prod[t - deg_ + j], sub_->mul(c, mod_[j]));
    }
    FieldElem r = 0;
    for (unsigned i = deg_; i-- > 0;) r = r * sub_q_ + prod[i];
    return r;
}

FieldElem Field::slow_pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    const std::uint32_t order = q_ - 1;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = order;
        for (std::uint32_t f = 2; f * f <= m; ++f) {
            if (m % f == 0) {
                prime_factors.push_back(f);
                while (m % f == 0) m /= f;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    gen_ = 0;
    for (FieldElem cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (std::uint32_t f : prime_factors) {
            if (slow_pow(cand, order / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0 && q_ > 2) throw std::logic_error("no primitive element found");
    if (q_ == 2) gen_ = 1;

    exp_.assign(order, 0);
    log_.assign(q_, 0);
    FieldElem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = static_cast<std::uint16_t>(x);
        log_[x] = static_cast<std::uint16_t>(i);
        x = slow_mul(x, gen_);
    }
    assert(x == 1);
}

FieldPtr Field::prime(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (p >= kMaxFieldSize) throw ResourceError("field size beyond table limit 2^16");
    static std::mutex mtx;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->deg_ = 1;
    f->abs_deg_ = 1;
    f->q_ = p;
    f->sub_q_ = p;
    f->build_tables();
    cache[p] = f;
    return f;
}

FieldPtr Field::extension(FieldPtr sub, std::vector<FieldElem> modulus) {
    if (!sub) throw std::invalid_argument("null subfield");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    unsigned deg = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < deg; ++i) {
        q *= sub->size();
        if (q > kMaxFieldSize) throw ResourceError("field size beyond table limit 2^16");
    }
    if (!is_irreducible(sub, modulus))
        throw std::invalid_argument("modulus is not irreducible over the subfield");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = sub->characteristic();
    f->deg_ = deg;
    f->abs_deg_ = deg * sub->abs_degree();
    f->q_ = static_cast<std::uint32_t>(q);
    f->sub_q_ = sub->size();
    f->sub_ = std::move(sub);
    f->mod_ = std::move(modulus);
    f->build_tables();
    return f;
}

bool Field::is_irreducible(const FieldPtr& sub, std::span<const FieldElem> poly) {
    const Field& k = *sub;
    Poly f(poly.begin(), poly.end());
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by every monic polynomial of degree 1..deg/2
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= k.size();
        Poly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i, c /= k.size())
                g[i] = static_cast<FieldElem>(c % k.size());
            if (poly_divides(g, f, k)) return false;
        }
    }
    return true;
}

std::vector<FieldElem> Field::default_modulus(const FieldPtr& sub, unsigned deg) {
    if (deg == 0) throw std::invalid_argument("extension degree must be >= 1");
    const std::uint64_t s = sub->size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) {
        count *= s;
        if (count > kMaxFieldSize) throw ResourceError("field size beyond table limit 2^16");
    }
    std::vector<FieldElem> g(deg + 1, 0);
    g[deg] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < deg; ++i, c /= s) g[i] = static_cast<FieldElem>(c % s);
        if (is_irreducible(sub, g)) return g;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldPtr Field::gf(unsigned p, unsigned e) {
    if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (e == 1) return prime(p);
    static std::mutex mtx;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr base = prime(p);
    FieldPtr f = extension(base, default_modulus(base, e));
    cache[key] = f;
    return f;
}

FieldPtr Field::extension_of(const FieldPtr& sub, unsigned m) {
    if (m == 1) return sub;
    static std::mutex mtx;
    static std::map<std::pair<const Field*, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(sub.get(), m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f = extension(sub, default_modulus(sub, m));
    cache[key] = f;
    return f;
}

}  // namespace cdc
