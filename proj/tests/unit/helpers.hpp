#pragma once

#include <random>
#include <vector>

#include "schub/poly.hpp"

namespace schub::testing {

// Exact determinant by Laplace expansion; fine for the tiny matrices here.
inline Int det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        Int term = m[r][0] * det(std::move(minor));
        total += (r % 2 == 0) ? term : -term;
    }
    return total;
}

// s_lam evaluated at integer points through the quotient of alternants:
// det(x_i^(lam_j + v-1-j)) / prod_{i<j} (x_i - x_j). A value-level oracle for
// the tableau-generated polynomial, on a completely different route.
inline Int schur_value_bialternant(const Partition& lam, const std::vector<Int>& pts) {
    int v = static_cast<int>(pts.size());
    std::vector<std::vector<Int>> num(static_cast<size_t>(v), std::vector<Int>(static_cast<size_t>(v)));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            long e = lam.part(j) + v - 1 - j;
            num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                int_pow(pts[static_cast<size_t>(i)], static_cast<unsigned long>(e));
        }
    Int numerator = det(std::move(num));
    Int denom = 1;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) denom *= pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)];
    Rat q = make_rat(numerator, denom);
    if (q.get_den() != 1) throw std::logic_error("bialternant did not divide exactly");
    return Int(q.get_num());
}

inline SchurVector random_schur_vector(std::mt19937_64& rng, int weight, int rows, int cols) {
    auto lams = partitions_in_box(weight, rows, cols);
    SchurVector v;
    if (lams.empty()) return v;
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<size_t> pick(0, lams.size() - 1);
    size_t terms = 1 + pick(rng) % std::min<size_t>(lams.size(), 4);
    for (size_t t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        v.add(lams[pick(rng)], c);
    }
    return v;
}

}  // namespace schub::testing
