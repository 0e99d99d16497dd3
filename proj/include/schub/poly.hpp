#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "schub/schur.hpp"

namespace schub {

// Sparse exact polynomial in up to kMaxVars variables. Used as the monomial
// substrate for Chern-root products and for the alternant integration oracle.
// Symmetry is a property checked where required, not enforced on construction
// (the Vandermonde factor, for one, is antisymmetric).
class Poly {
public:
    static constexpr int kMaxVars = 12;
    using Exp = std::array<uint16_t, kMaxVars>;

    explicit Poly(int vars);
    static Poly constant(int vars, const Int& c);

    int vars() const { return vars_; }
    const std::map<Exp, Int>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Int coeff(const Exp& e) const;
    void add(const Exp& e, const Int& c);

    std::set<int> degrees() const;
    bool homogeneous() const;
    std::optional<int> degree() const;  // nullopt when zero or mixed
    bool symmetric() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scaled(const Int& c) const;
    // evaluate at integer points (exact); points.size() must equal vars()
    Int eval(const std::vector<Int>& points) const;

    bool operator==(const Poly&) const = default;

    static int exp_degree(const Exp& e) {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

private:
    int vars_;
    std::map<Exp, Int> terms_;
};

// Product. Terms with any exponent > max_exp (when >= 0) or total degree
// > max_deg (when >= 0) are dropped; exponents only grow under multiplication,
// so dropping them early never loses a surviving term.
Poly poly_mul(const Poly& a, const Poly& b, int max_exp = -1, int max_deg = -1);

enum class GenKind { elementary, complete };

// e_j or h_j in `vars` variables; e_j = 0 for j > vars, h_0 = e_0 = 1.
Poly generator(GenKind kind, int j, int vars);

// The Schur polynomial s_lam in `vars` variables as its semistandard-tableau
// generating function. Rejects partitions with more than `vars` rows.
Poly schur_to_poly(const Partition& lam, int vars);
// Same, backed by a process-wide memo; the reference stays valid for the
// lifetime of the process.
const Poly& schur_poly_cached(const Partition& lam, int vars);

// Unique Schur-basis expansion of a symmetric polynomial, by peeling the
// lexicographically leading monomial. Rejects non-symmetric input.
SchurVector schur_expand(const Poly& p);

// Integrate a symmetric polynomial of pure degree (kappa+1)(n-kappa) over
// Gr(kappa+1, n+1): multiply by the Vandermonde determinant and read off the
// coefficient of x_0^n x_1^(n-1) ... x_kappa^(n-kappa).
Int alternant_integrate(const Poly& p, int kappa, int n);

// Product of (x_i - x_j) over i < j, built literally from the binomials.
Poly vandermonde(int vars);

}  // namespace schub
