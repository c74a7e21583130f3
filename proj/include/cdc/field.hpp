#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cdc {

/// Index of a field element, always < field size.
using FieldElem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(s^m) presented as a degree-m extension of its subfield
/// of size s (m = 1 and no subfield for prime fields).  Elements are integer
/// indices in [0, s^m): the base-s digits of an index are the coordinates of
/// the element in the polynomial basis 1, x, ..., x^{m-1} over the subfield.
/// Multiplication runs through exp/log tables built once at construction,
/// which caps the total size at 2^16.
class Field {
public:
    static FieldPtr prime(unsigned p);

    /// Extension by a monic irreducible `modulus` over `sub` (coefficients
    /// low to high, size deg+1).
    static FieldPtr extension(FieldPtr sub, std::vector<FieldElem> modulus);

    /// GF(p^e) over the default modulus (cached).
    static FieldPtr gf(unsigned p, unsigned e);

    /// GF(q^m) as an extension of `sub` over the default modulus (cached).
    static FieldPtr extension_of(const FieldPtr& sub, unsigned m);

    /// Smallest monic irreducible of degree `deg` over `sub`, ordered by the
    /// integer encoding sum_i idx(c_i) s^i of the non-leading coefficients.
    static std::vector<FieldElem> default_modulus(const FieldPtr& sub, unsigned deg);

    static bool is_irreducible(const FieldPtr& sub, std::span<const FieldElem> poly);

    std::uint32_t size() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return deg_; }  // over the immediate subfield
    unsigned abs_degree() const { return abs_deg_; }  // over GF(p)
    const FieldPtr& subfield() const { return sub_; }
    const std::vector<FieldElem>& modulus() const { return mod_; }
    bool is_prime_field() const { return sub_ == nullptr; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(static_cast<std::uint32_t>(log_[a]) + log_[b]) % (q_ - 1)];
    }
    FieldElem inv(FieldElem a) const;  // throws std::domain_error on 0
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// a^{s^i} where s is the immediate subfield size (Frobenius over it).
    FieldElem frob(FieldElem a, unsigned i) const;

    /// One element of multiplicative order q-1.
    FieldElem generator() const { return gen_; }

    /// i-th polynomial-basis coordinate of a, an element of the subfield.
    FieldElem coord(FieldElem a, unsigned i) const;
    FieldElem from_coords(std::span<const FieldElem> coords) const;

    /// True if the two pointers denote the same field object.
    static bool same(const FieldPtr& a, const FieldPtr& b) { return a.get() == b.get(); }

private:
    Field() = default;
    void build_tables();
    FieldElem slow_mul(FieldElem a, FieldElem b) const;
    FieldElem slow_pow(FieldElem a, std::uint64_t e) const;

    unsigned p_ = 0;
    unsigned deg_ = 1;
    unsigned abs_deg_ = 1;
    std::uint32_t q_ = 0;
    std::uint32_t sub_q_ = 0;  // size of immediate subfield (p_ for prime fields)
    FieldPtr sub_;
    std::vector<FieldElem> mod_;
    FieldElem gen_ = 0;
    std::vector<std::uint16_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint16_t> log_;  // log_[exp_[i]] = i
};

}  // namespace cdc
