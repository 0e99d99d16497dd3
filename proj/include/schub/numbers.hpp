#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schub {

// All arithmetic in the library is exact: arbitrary-precision integers for
// intersection numbers, rationals only where a division is performed last
// (the beta coefficients).
using Int = mpz_class;
using Rat = mpq_class;

// Bad input from a caller (CLI maps this to exit code 2).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant: dual-route disagreement, integrality failure,
// degree bookkeeping (CLI maps this to exit code 3).
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw DomainError("binomial: negative upper index");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binomial(Int(n), static_cast<unsigned long>(k));
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline int to_int_checked(const Int& v, const char* what) {
    if (!v.fits_sint_p())
        throw DomainError(std::string(what) + " does not fit in a machine int: " + v.get_str());
    return static_cast<int>(v.get_si());
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, positive denominator; integers print without "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_from_str(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int int_from_str(const std::string& s) {
    Int r;
    if (r.set_str(s, 10) != 0) throw DomainError("not an integer: '" + s + "'");
    return r;
}

}  // namespace schub
