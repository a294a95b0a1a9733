#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jmcentre {

/// Exact arbitrary-precision integer used for every coefficient in the library.
using Int = mpz_class;

inline Int pow_int(long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && exp % 2 == 1) r = -r;
    return r;
}

/// Quotient num/den, throwing if den does not divide num exactly.
inline Int exact_div(const Int& num, long den) {
    Int d(den), q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    if (r != 0)
        throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " + std::to_string(den));
    return q;
}

inline bool is_unit(const Int& z) { return z == 1 || z == -1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace jmcentre
