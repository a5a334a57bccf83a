#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace loomgen {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// we need; everything here is a thin layer on top of it.
using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest-terms string form, "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// q^e for integer e (negative exponents allowed, q != 0 in that case).
inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0)
        return Rat(1);
    Int num, den;
    if (e > 0) {
        mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (q == 0)
            throw std::domain_error("0 raised to a negative power");
        mpz_pow_ui(num.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(den.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace loomgen
