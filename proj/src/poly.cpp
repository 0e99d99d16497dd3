#include "schub/poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace schub {

Poly::Poly(int vars) : vars_(vars) {
    if (vars < 1 || vars > kMaxVars)
        throw DomainError("polynomial variable count must be in [1, " +
                          std::to_string(kMaxVars) + "]");
}

Poly Poly::constant(int vars, const Int& c) {
    Poly p(vars);
    p.add(Exp{}, c);
    return p;
}

Int Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<int> Poly::degrees() const {
    std::set<int> d;
    for (const auto& [e, c] : terms_) d.insert(exp_degree(e));
    return d;
}

bool Poly::homogeneous() const { return degrees().size() <= 1; }

std::optional<int> Poly::degree() const {
    auto d = degrees();
    if (d.size() != 1) return std::nullopt;
    return *d.begin();
}

bool Poly::symmetric() const {
    // group by the multiset of exponents: coefficients must agree across the
    // whole orbit and the orbit must be fully present
    std::map<std::vector<int>, std::pair<Int, long long>> groups;
    for (const auto& [e, c] : terms_) {
        std::vector<int> key(e.begin(), e.begin() + vars_);
        std::sort(key.begin(), key.end(), std::greater<>());
        auto [it, inserted] = groups.try_emplace(key, std::make_pair(c, 1));
        if (!inserted) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [key, cc] : groups) {
        // orbit size = vars! / prod (multiplicity of each exponent value)!
        long long orbit = 1;
        for (int i = 2; i <= vars_; ++i) orbit *= i;
        int run = 1;
        for (size_t i = 1; i <= key.size(); ++i) {
            if (i < key.size() && key[i] == key[i - 1]) {
                ++run;
            } else {
                for (int f = 2; f <= run; ++f) orbit /= f;
                run = 1;
            }
        }
        if (cc.second != orbit) return false;
    }
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.vars_ != vars_) throw DomainError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.vars_ != vars_) throw DomainError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Poly Poly::scaled(const Int& c) const {
    Poly p(vars_);
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
    return p;
}

Int Poly::eval(const std::vector<Int>& points) const {
    if (static_cast<int>(points.size()) != vars_)
        throw DomainError("eval: wrong number of points");
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int v = 0; v < vars_; ++v)
            if (e[static_cast<size_t>(v)]) t *= int_pow(points[static_cast<size_t>(v)], e[static_cast<size_t>(v)]);
        total += t;
    }
    return total;
}

Poly poly_mul(const Poly& a, const Poly& b, int max_exp, int max_deg) {
    if (a.vars() != b.vars()) throw DomainError("polynomial variable count mismatch");
    Poly out(a.vars());
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    for (const auto& [eb, cb] : big.terms()) {
        for (const auto& [es, cs] : small.terms()) {
            Poly::Exp e{};
            bool keep = true;
            int deg = 0;
            for (int v = 0; v < a.vars(); ++v) {
                int s = int(eb[static_cast<size_t>(v)]) + int(es[static_cast<size_t>(v)]);
                if (max_exp >= 0 && s > max_exp) { keep = false; break; }
                if (s > 65535) throw InternalError("polynomial exponent overflow");
                e[static_cast<size_t>(v)] = static_cast<uint16_t>(s);
                deg += s;
            }
            if (!keep || (max_deg >= 0 && deg > max_deg)) continue;
            out.add(e, cb * cs);
        }
    }
    return out;
}

namespace {

void gen_compositions(int j, int vars, int v, Poly::Exp& e, Poly& out) {
    if (v == vars - 1) {
        e[static_cast<size_t>(v)] = static_cast<uint16_t>(j);
        out.add(e, 1);
        return;
    }
    for (int k = 0; k <= j; ++k) {
        e[static_cast<size_t>(v)] = static_cast<uint16_t>(k);
        gen_compositions(j - k, vars, v + 1, e, out);
    }
    e[static_cast<size_t>(v)] = 0;
}

}  // namespace

Poly generator(GenKind kind, int j, int vars) {
    if (j < 0) throw DomainError("generator: negative degree");
    if (j > 60000) throw DomainError("generator: degree too large for the exponent encoding");
    Poly out(vars);
    if (j == 0) return Poly::constant(vars, 1);
    if (kind == GenKind::elementary) {
        if (j > vars) return out;  // e_j vanishes beyond the variable count
        std::vector<int> idx(static_cast<size_t>(j));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Poly::Exp e{};
            for (int i : idx) e[static_cast<size_t>(i)] = 1;
            out.add(e, 1);
            int i = j - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == vars - j + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
    } else {
        Poly::Exp e{};
        gen_compositions(j, vars, 0, e, out);
    }
    return out;
}

namespace {

// Semistandard fillings: weakly increasing along rows, strictly increasing
// down columns, entries in 1..vars.
class SsytEnumerator {
public:
    SsytEnumerator(const Partition& lam, int vars) : lam_(lam), vars_(vars) {
        entries_.resize(static_cast<size_t>(lam.rows()));
        for (int r = 0; r < lam.rows(); ++r)
            entries_[static_cast<size_t>(r)].assign(static_cast<size_t>(lam.part(r)), 0);
    }

    Poly run() {
        Poly out(vars_);
        content_ = Poly::Exp{};
        fill(0, 0, out);
        return out;
    }

private:
    void fill(int r, int c, Poly& out) {
        if (r == lam_.rows()) {
            out.add(content_, 1);
            return;
        }
        if (c == lam_.part(r)) {
            fill(r + 1, 0, out);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, entries_[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, entries_[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int t = lo; t <= vars_; ++t) {
            entries_[static_cast<size_t>(r)][static_cast<size_t>(c)] = t;
            ++content_[static_cast<size_t>(t - 1)];
            fill(r, c + 1, out);
            --content_[static_cast<size_t>(t - 1)];
        }
    }

    const Partition& lam_;
    int vars_;
    std::vector<std::vector<int>> entries_;
    Poly::Exp content_{};
};

std::map<std::pair<Partition, int>, std::unique_ptr<const Poly>> g_schur_poly_cache;
std::shared_mutex g_schur_poly_mutex;

}  // namespace

Poly schur_to_poly(const Partition& lam, int vars) {
    return schur_poly_cached(lam, vars);
}

const Poly& schur_poly_cached(const Partition& lam, int vars) {
    if (vars < 1 || vars > Poly::kMaxVars)
        throw DomainError("schur_to_poly: variable count must be in [1, " +
                          std::to_string(Poly::kMaxVars) + "]");
    if (lam.rows() > vars)
        throw DomainError("schur_to_poly: partition " + lam.str() + " has more than " +
                          std::to_string(vars) + " rows");
    auto key = std::make_pair(lam, vars);
    {
        std::shared_lock lock(g_schur_poly_mutex);
        auto it = g_schur_poly_cache.find(key);
        if (it != g_schur_poly_cache.end()) return *it->second;
    }
    auto val = std::make_unique<const Poly>(SsytEnumerator(lam, vars).run());
    std::unique_lock lock(g_schur_poly_mutex);
    auto [it, inserted] = g_schur_poly_cache.try_emplace(std::move(key), std::move(val));
    return *it->second;
}

SchurVector schur_expand(const Poly& p) {
    if (!p.symmetric()) throw DomainError("schur_expand: polynomial is not symmetric");
    SchurVector out;
    Poly rest = p;
    while (!rest.zero()) {
        // for a symmetric polynomial the lex-greatest exponent is already
        // sorted decreasingly, hence a partition
        const auto& [lead, c] = *rest.terms().rbegin();
        std::vector<int> parts;
        for (int v = 0; v < rest.vars(); ++v)
            if (lead[static_cast<size_t>(v)]) parts.push_back(lead[static_cast<size_t>(v)]);
        Partition lam = make_partition(std::move(parts));
        Int k = c;
        out.add(lam, k);
        rest -= schur_poly_cached(lam, rest.vars()).scaled(k);
    }
    return out;
}

Poly vandermonde(int vars) {
    Poly v = Poly::constant(vars, 1);
    for (int i = 0; i < vars; ++i) {
        for (int j = i + 1; j < vars; ++j) {
            Poly bin(vars);
            Poly::Exp ei{};
            ei[static_cast<size_t>(i)] = 1;
            bin.add(ei, 1);
            Poly::Exp ej{};
            ej[static_cast<size_t>(j)] = 1;
            bin.add(ej, -1);
            v = poly_mul(v, bin);
        }
    }
    return v;
}

Int alternant_integrate(const Poly& p, int kappa, int n) {
    int vars = kappa + 1;
    if (kappa < 1 || n < kappa + 1) throw DomainError("alternant_integrate: need 1 <= kappa <= n-1");
    if (n > 60000) throw DomainError("alternant_integrate: n too large for the exponent encoding");
    if (p.vars() != vars)
        throw DomainError("alternant_integrate: polynomial must have kappa+1 variables");
    if (p.zero()) return 0;
    if (!p.symmetric()) throw DomainError("alternant_integrate: polynomial is not symmetric");
    auto deg = p.degree();
    int want = vars * (n - kappa);
    if (!deg || *deg != want)
        throw DomainError("alternant_integrate: expected pure degree " + std::to_string(want));
    Poly::Exp target{};
    for (int i = 0; i < vars; ++i) target[static_cast<size_t>(i)] = static_cast<uint16_t>(n - i);
    Int total = 0;
    const Poly v = vandermonde(vars);
    for (const auto& [e, c] : v.terms()) {
        Poly::Exp rem{};
        bool ok = true;
        for (int v = 0; v < vars; ++v) {
            if (e[static_cast<size_t>(v)] > target[static_cast<size_t>(v)]) { ok = false; break; }
            rem[static_cast<size_t>(v)] =
                static_cast<uint16_t>(target[static_cast<size_t>(v)] - e[static_cast<size_t>(v)]);
        }
        if (!ok) continue;
        Int pc = p.coeff(rem);
        if (pc != 0) total += c * pc;
    }
    return total;
}

}  // namespace schub
