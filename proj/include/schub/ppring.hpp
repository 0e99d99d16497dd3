#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "schub/numbers.hpp"

namespace schub {

// The Chow ring of P^n x P^n: polynomials in the two hyperplane classes with
// exact rational coefficients, truncated at exponent n in each variable.
class PPClass {
public:
    explicit PPClass(int n) : n_(n) {
        if (n < 1) throw DomainError("PPClass: need n >= 1");
    }
    static PPClass constant(int n, const Rat& c);

    int n() const { return n_; }
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    void add(int i, int j, const Rat& c);
    Rat coeff(int i, int j) const;

    bool integral() const;
    PPClass swapped() const;  // H x 1 <-> 1 x H
    std::set<int> degrees() const;

    PPClass& operator+=(const PPClass& o);
    PPClass scaled(const Rat& c) const;

    bool operator==(const PPClass&) const = default;

    std::string str() const;

private:
    int n_;
    std::map<std::pair<int, int>, Rat> terms_;
};

// product with every monomial exceeding exponent n in either slot discarded
PPClass pp_mul(const PPClass& x, const PPClass& y);

// inverse of a class with constant term 1 (the rest is nilpotent here)
PPClass pp_inverse_unit(const PPClass& x);

// truncated inverse of (1 + d.H x 1)(1 + d.1 x H); closed form (-d)^(i+j)
PPClass geom_series_inverse(int d, int n);

PPClass homogeneous_part(const PPClass& x, int k);

}  // namespace schub
