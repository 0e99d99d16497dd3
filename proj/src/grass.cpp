#include "schub/grass.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace schub {

Partition GrContext::rect_partition() const {
    return make_partition(std::vector<int>(static_cast<size_t>(kappa_ + 1), n_ - kappa_));
}

GrClass GrClass::operator+(const GrClass& o) const {
    if (!(ctx_ == o.ctx_)) throw DomainError("class addition across different Grassmannians");
    SchurVector v = value_;
    v += o.value_;
    return GrClass(ctx_, v);
}

GrClass gr_unit(const GrContext& ctx) { return GrClass(ctx, SchurVector::unit()); }

GrClass gr_zero(const GrContext& ctx) { return GrClass(ctx, SchurVector{}); }

GrClass class_schur(const GrContext& ctx, const Partition& lam) {
    return GrClass(ctx, SchurVector::single(lam));
}

GrClass class_xi(const GrContext& ctx, int j) {
    if (j < 0 || j > ctx.rank_qv()) return gr_zero(ctx);
    if (j == 0) return gr_unit(ctx);
    return class_schur(ctx, make_partition({j}));
}

GrClass class_e(const GrContext& ctx, int j) {
    if (j < 0 || j > ctx.rank_v()) return gr_zero(ctx);
    if (j == 0) return gr_unit(ctx);
    return class_schur(ctx, make_partition(std::vector<int>(static_cast<size_t>(j), 1)));
}

GrClass class_e1_pow(const GrContext& ctx, int s) {
    if (s < 0) throw DomainError("class_e1_pow: negative exponent");
    SchurVector v = SchurVector::unit();
    SchurVector e1 = SchurVector::single(make_partition({1}));
    for (int i = 0; i < s; ++i) v = lr_mul(v, e1, ctx.rectangle());
    return GrClass(ctx, v);
}

namespace {

void gen_root_multisets(int d, int vars, int v, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (v == vars - 1) {
        cur[static_cast<size_t>(v)] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[static_cast<size_t>(v)] = k;
        gen_root_multisets(d - k, vars, v + 1, cur, out);
    }
    cur[static_cast<size_t>(v)] = 0;
}

struct ChernKey {
    int n, kappa, d;
    auto operator<=>(const ChernKey&) const = default;
};

// All Chern classes of Sym^d V* on one Grassmannian, indices 0..cap.
std::map<ChernKey, std::shared_ptr<const std::vector<SchurVector>>> g_chern_cache;
std::shared_mutex g_chern_mutex;

std::vector<SchurVector> chern_table(const GrContext& ctx, int d) {
    int vars = ctx.rank_v();
    std::vector<std::vector<int>> roots;
    std::vector<int> cur(static_cast<size_t>(vars), 0);
    gen_root_multisets(d, vars, 0, cur, roots);

    Int rank = binomial(long(d + ctx.kappa()), long(ctx.kappa()));
    if (Int(roots.size()) != rank)
        throw InternalError("chern_sym_power: root count disagrees with the bundle rank");
    int cap = static_cast<int>(std::min<long>(static_cast<long>(roots.size()), ctx.dim()));

    // total Chern class as a truncated product of (1 + a.x) over the roots
    Poly total = Poly::constant(vars, 1);
    for (const auto& a : roots) {
        Poly factor = Poly::constant(vars, 1);
        for (int v = 0; v < vars; ++v) {
            if (a[static_cast<size_t>(v)] == 0) continue;
            Poly::Exp e{};
            e[static_cast<size_t>(v)] = 1;
            factor.add(e, a[static_cast<size_t>(v)]);
        }
        total = poly_mul(total, factor, -1, cap);
    }

    std::vector<Poly> graded(static_cast<size_t>(cap) + 1, Poly(vars));
    for (const auto& [e, c] : total.terms()) {
        int deg = Poly::exp_degree(e);
        graded[static_cast<size_t>(deg)].add(e, c);
    }
    std::vector<SchurVector> out;
    out.reserve(graded.size());
    for (auto& piece : graded)
        out.push_back(piece.zero() ? SchurVector{}
                                   : schur_expand(piece).truncated(ctx.rectangle()));
    return out;
}

const std::vector<SchurVector>& chern_table_cached(const GrContext& ctx, int d) {
    ChernKey key{ctx.n(), ctx.kappa(), d};
    {
        std::shared_lock lock(g_chern_mutex);
        auto it = g_chern_cache.find(key);
        if (it != g_chern_cache.end()) return *it->second;
    }
    auto val = std::make_shared<const std::vector<SchurVector>>(chern_table(ctx, d));
    std::unique_lock lock(g_chern_mutex);
    auto [it, inserted] = g_chern_cache.try_emplace(key, std::move(val));
    return *it->second;
}

}  // namespace

GrClass chern_sym_power(const GrContext& ctx, int d, const Int& j) {
    if (d < 1) throw DomainError("chern_sym_power: need d >= 1");
    if (j < 0) return gr_zero(ctx);
    if (j == 0) return gr_unit(ctx);
    if (j > ctx.dim() || j > binomial(long(d + ctx.kappa()), long(ctx.kappa())))
        return gr_zero(ctx);
    const auto& table = chern_table_cached(ctx, d);
    size_t idx = static_cast<size_t>(to_int_checked(j, "Chern index"));
    if (idx >= table.size()) return gr_zero(ctx);
    return GrClass(ctx, table[idx]);
}

GrClass gr_mul(const GrContext& ctx, std::span<const GrClass> factors) {
    SchurVector acc = SchurVector::unit();
    for (const auto& f : factors) {
        if (!(f.ctx() == ctx)) throw DomainError("gr_mul: factor from a different Grassmannian");
        acc = lr_mul(acc, f.value(), ctx.rectangle());
        if (acc.zero()) break;
    }
    return GrClass(ctx, acc);
}

GrClass gr_mul(const GrClass& x, const GrClass& y) {
    std::vector<GrClass> f{x, y};
    return gr_mul(x.ctx(), f);
}

GrClass gr_pow(const GrClass& x, int e) {
    if (e < 0) throw DomainError("gr_pow: negative exponent");
    GrClass acc = gr_unit(x.ctx());
    for (int i = 0; i < e; ++i) acc = gr_mul(acc, x);
    return acc;
}

IntegrateMode parse_mode(const std::string& s) {
    if (s == "schur") return IntegrateMode::schur;
    if (s == "oracle") return IntegrateMode::oracle;
    if (s == "both") return IntegrateMode::both;
    throw DomainError("unknown integration mode '" + s + "'");
}

std::string mode_name(IntegrateMode m) {
    switch (m) {
        case IntegrateMode::schur: return "schur";
        case IntegrateMode::oracle: return "oracle";
        default: return "both";
    }
}

Poly gr_to_poly(const GrClass& x) {
    Poly p(x.ctx().rank_v());
    for (const auto& [lam, c] : x.value().terms())
        p += schur_poly_cached(lam, x.ctx().rank_v()).scaled(c);
    return p;
}

namespace {

Int integrate_schur(const GrClass& x) { return x.value().coeff(x.ctx().rect_partition()); }

Int integrate_oracle_poly(const GrContext& ctx, const Poly& p) {
    if (p.zero()) return 0;
    return alternant_integrate(p, ctx.kappa(), ctx.n());
}

Int check_agreement(const Int& s, const Int& o) {
    if (s != o)
        throw InternalError("integration routes disagree: schur=" + s.get_str() +
                            " oracle=" + o.get_str());
    return s;
}

}  // namespace

Int gr_integrate(const GrClass& x, IntegrateMode mode) {
    if (x.zero()) return 0;
    auto deg = x.degree();
    if (!deg) throw DomainError("gr_integrate: mixed-degree class");
    if (*deg != x.ctx().dim()) return 0;
    switch (mode) {
        case IntegrateMode::schur: return integrate_schur(x);
        case IntegrateMode::oracle: return integrate_oracle_poly(x.ctx(), gr_to_poly(x));
        default:
            return check_agreement(integrate_schur(x),
                                   integrate_oracle_poly(x.ctx(), gr_to_poly(x)));
    }
}

Int gr_integrate_product(const GrContext& ctx, std::span<const GrClass> factors,
                         IntegrateMode mode) {
    int total_deg = 0;
    for (const auto& f : factors) {
        if (!(f.ctx() == ctx))
            throw DomainError("gr_integrate_product: factor from a different Grassmannian");
        if (f.zero()) return 0;
        auto deg = f.degree();
        if (!deg) throw DomainError("gr_integrate_product: mixed-degree factor");
        total_deg += *deg;
    }
    if (total_deg != ctx.dim()) {
        // a pure class of the wrong degree integrates to zero on either route
        if (mode != IntegrateMode::both) return 0;
    }

    auto schur_route = [&]() {
        return integrate_schur(gr_mul(ctx, factors));
    };
    auto oracle_route = [&]() {
        // monomial-basis convolution; exponents above n cannot reach the
        // alternant target, so they are dropped as they appear
        Poly p = Poly::constant(ctx.rank_v(), 1);
        for (const auto& f : factors) {
            p = poly_mul(p, gr_to_poly(f), ctx.n());
            if (p.zero()) return Int(0);
        }
        if (total_deg != ctx.dim()) return Int(0);
        return integrate_oracle_poly(ctx, p);
    };

    switch (mode) {
        case IntegrateMode::schur: return schur_route();
        case IntegrateMode::oracle: return oracle_route();
        default: return check_agreement(schur_route(), oracle_route());
    }
}

}  // namespace schub
