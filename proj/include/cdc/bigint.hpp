#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace cdc {

using Int = mpz_class;
using Rat = mpq_class;

/// q^e as an exact integer.
inline Int int_pow(std::uint64_t q, std::uint64_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

/// ceil(a / b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* context) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error(std::string("non-exact division in ") + context);
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// ceil of a rational.
inline Int ceil_rat(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

inline bool fits_u64(const Int& x) {
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& x) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    if (!fits_u64(x)) throw std::overflow_error("value does not fit in 64 bits");
    return mpz_get_ui(x.get_mpz_t());
}

}  // namespace cdc
