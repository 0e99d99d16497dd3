#include "schub/ppring.hpp"

namespace schub {

PPClass PPClass::constant(int n, const Rat& c) {
    PPClass p(n);
    p.add(0, 0, c);
    return p;
}

void PPClass::add(int i, int j, const Rat& c) {
    if (i < 0 || j < 0 || i > n_ || j > n_)
        throw DomainError("PPClass: exponent outside [0, n]");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat PPClass::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

bool PPClass::integral() const {
    for (const auto& [ij, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

PPClass PPClass::swapped() const {
    PPClass p(n_);
    for (const auto& [ij, c] : terms_) p.add(ij.second, ij.first, c);
    return p;
}

std::set<int> PPClass::degrees() const {
    std::set<int> d;
    for (const auto& [ij, c] : terms_) d.insert(ij.first + ij.second);
    return d;
}

PPClass& PPClass::operator+=(const PPClass& o) {
    if (o.n_ != n_) throw DomainError("PPClass: ambient dimension mismatch");
    for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, c);
    return *this;
}

PPClass PPClass::scaled(const Rat& c) const {
    PPClass p(n_);
    if (c == 0) return p;
    for (const auto& [ij, k] : terms_) p.terms_.emplace(ij, k * c);
    return p;
}

std::string PPClass::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [ij, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_str(c) + "*H1^" + std::to_string(ij.first) + "*H2^" + std::to_string(ij.second);
    }
    return s;
}

PPClass pp_mul(const PPClass& x, const PPClass& y) {
    if (x.n() != y.n()) throw DomainError("pp_mul: ambient dimension mismatch");
    PPClass out(x.n());
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            int i = a.first + b.first;
            int j = a.second + b.second;
            if (i > x.n() || j > x.n()) continue;  // H^(n+1) = 0
            out.add(i, j, ca * cb);
        }
    }
    return out;
}

PPClass pp_inverse_unit(const PPClass& x) {
    if (x.coeff(0, 0) != 1)
        throw DomainError("pp_inverse_unit: constant term must be 1");
    PPClass u = x;
    u.add(0, 0, Rat(-1));  // nilpotent part
    // Horner form of sum_k (-u)^k, enough steps to exhaust both exponents
    PPClass inv = PPClass::constant(x.n(), Rat(1));
    for (int k = 0; k < 2 * x.n(); ++k) {
        PPClass t = pp_mul(u, inv);
        inv = PPClass::constant(x.n(), Rat(1));
        inv += t.scaled(Rat(-1));
    }
    return inv;
}

PPClass geom_series_inverse(int d, int n) {
    if (d < 1 || n < 1) throw DomainError("geom_series_inverse: need d >= 1 and n >= 1");
    PPClass left(n), right(n);
    left.add(0, 0, Rat(1));
    left.add(1, 0, Rat(d));
    right.add(0, 0, Rat(1));
    right.add(0, 1, Rat(d));
    return pp_inverse_unit(pp_mul(left, right));
}

PPClass homogeneous_part(const PPClass& x, int k) {
    if (k < 0 || k > 2 * x.n()) throw DomainError("homogeneous_part: degree outside [0, 2n]");
    PPClass out(x.n());
    for (const auto& [ij, c] : x.terms())
        if (ij.first + ij.second == k) out.add(ij.first, ij.second, c);
    return out;
}

}  // namespace schub
