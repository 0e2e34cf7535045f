#pragma once

#include <gmpxx.h>

#include <string>

namespace betticone {

using Int = mpz_class;
using Rat = mpq_class;

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Accepts "p" or "p/q" with q != 0; result is in lowest terms.
Rat parse_rational(const std::string& s);

// Lowest-terms rendering, "p" or "p/q".
std::string format_rational(const Rat& q);

}  // namespace betticone
