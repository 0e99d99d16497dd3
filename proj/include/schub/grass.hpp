#pragma once

#include <span>
#include <vector>

#include "schub/poly.hpp"

namespace schub {

// Gr(kappa+1, n+1): kappa-dimensional projective planes in P^n. Schur classes
// live in the (kappa+1) x (n-kappa) rectangle.
class GrContext {
public:
    GrContext(int n, int kappa) : n_(n), kappa_(kappa) {
        if (kappa < 1 || kappa > n - 1)
            throw DomainError("GrContext: need 1 <= kappa <= n-1");
    }

    int n() const { return n_; }
    int kappa() const { return kappa_; }
    int rank_v() const { return kappa_ + 1; }
    int rank_qv() const { return n_ - kappa_; }
    int dim() const { return (kappa_ + 1) * (n_ - kappa_); }
    Box rectangle() const { return {kappa_ + 1, n_ - kappa_}; }
    Partition rect_partition() const;

    bool operator==(const GrContext&) const = default;

private:
    int n_, kappa_;
};

// A Chow class of the Grassmannian: a Schur vector kept truncated to the
// context rectangle.
class GrClass {
public:
    GrClass(GrContext ctx, const SchurVector& v)
        : ctx_(ctx), value_(v.truncated(ctx.rectangle())) {}

    const GrContext& ctx() const { return ctx_; }
    const SchurVector& value() const { return value_; }
    bool zero() const { return value_.zero(); }
    std::set<int> degrees() const { return value_.degrees(); }
    std::optional<int> degree() const { return value_.degree(); }

    GrClass operator+(const GrClass& o) const;
    GrClass scaled(const Int& c) const { return GrClass(ctx_, value_.scaled(c)); }

    bool operator==(const GrClass&) const = default;

private:
    GrContext ctx_;
    SchurVector value_;
};

GrClass gr_unit(const GrContext& ctx);
GrClass gr_zero(const GrContext& ctx);
GrClass class_schur(const GrContext& ctx, const Partition& lam);

// xi_j = c_j(QV) = s_(j); zero outside 0 <= j <= n-kappa (Chern convention)
GrClass class_xi(const GrContext& ctx, int j);
// c_j of the dual tautological bundle = e_j = s_(1^j)
GrClass class_e(const GrContext& ctx, int j);
// powers of the Pluecker hyperplane class c_1 = s_(1)
GrClass class_e1_pow(const GrContext& ctx, int s);

// c_j(Sym^d V*) through the multiset Chern roots; zero for j outside
// [0, C(d+kappa, kappa)] and for j above the Grassmannian dimension.
// Results are memoized per (context, d).
GrClass chern_sym_power(const GrContext& ctx, int d, const Int& j);

GrClass gr_mul(const GrContext& ctx, std::span<const GrClass> factors);
GrClass gr_mul(const GrClass& x, const GrClass& y);
GrClass gr_pow(const GrClass& x, int e);

enum class IntegrateMode { schur, oracle, both };

IntegrateMode parse_mode(const std::string& s);
std::string mode_name(IntegrateMode m);

// Monomial form of a class in kappa+1 variables (the Chern roots of V*).
Poly gr_to_poly(const GrClass& x);

// Degree of the top cell extracted two unrelated ways: `schur` reads the
// coefficient of the full rectangle, `oracle` converts to the monomial basis
// and evaluates the alternant, `both` runs the two and demands agreement.
// Pure classes of non-top degree integrate to 0; mixed degrees are rejected.
Int gr_integrate(const GrClass& x, IntegrateMode mode = IntegrateMode::schur);

// Integral of a product. The schur route multiplies in the truncated Schur
// basis; the oracle route multiplies the factors in the monomial basis and
// never touches the Littlewood-Richardson code.
Int gr_integrate_product(const GrContext& ctx, std::span<const GrClass> factors,
                         IntegrateMode mode = IntegrateMode::schur);

}  // namespace schub
