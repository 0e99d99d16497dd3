#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "schub/poly.hpp"

using namespace schub;

namespace {

Poly::Exp ex(std::initializer_list<int> es) {
    Poly::Exp e{};
    size_t i = 0;
    for (int v : es) e[i++] = static_cast<uint16_t>(v);
    return e;
}

}  // namespace

TEST_CASE("generators") {
    CHECK(generator(GenKind::elementary, 1, 2) ==
          [] { Poly p(2); p.add(ex({1, 0}), 1); p.add(ex({0, 1}), 1); return p; }());
    CHECK(generator(GenKind::elementary, 3, 2).zero());
    CHECK(generator(GenKind::complete, 0, 3) == Poly::constant(3, 1));
    CHECK(generator(GenKind::elementary, 0, 3) == Poly::constant(3, 1));
    Poly h2(2);
    h2.add(ex({2, 0}), 1);
    h2.add(ex({1, 1}), 1);
    h2.add(ex({0, 2}), 1);
    CHECK(generator(GenKind::complete, 2, 2) == h2);
    CHECK_THROWS_AS(generator(GenKind::complete, -1, 2), DomainError);
}

TEST_CASE("schur_to_poly basics") {
    Poly e1(2);
    e1.add(ex({1, 0}), 1);
    e1.add(ex({0, 1}), 1);
    CHECK(schur_to_poly(make_partition({1}), 2) == e1);

    Poly sq(2);
    sq.add(ex({2, 2}), 1);
    CHECK(schur_to_poly(make_partition({2, 2}), 2) == sq);

    Poly s31(2);  // bialternant: (a^4 b - a b^4)/(a - b)
    s31.add(ex({3, 1}), 1);
    s31.add(ex({2, 2}), 1);
    s31.add(ex({1, 3}), 1);
    CHECK(schur_to_poly(make_partition({3, 1}), 2) == s31);

    CHECK_THROWS_AS(schur_to_poly(make_partition({1, 1, 1}), 2), DomainError);
}

TEST_CASE("schur_to_poly agrees with the bialternant at integer points") {
    std::vector<Int> pts2{Int(5), Int(-3)};
    std::vector<Int> pts3{Int(7), Int(2), Int(-4)};
    std::vector<Int> pts4{Int(9), Int(4), Int(1), Int(-6)};
    for (int w = 1; w <= 6; ++w) {
        for (const auto& lam : partitions_in_box(w, 2, 6))
            CHECK(schur_to_poly(lam, 2).eval(pts2) ==
                  testing::schur_value_bialternant(lam, pts2));
        for (const auto& lam : partitions_in_box(w, 3, 4))
            CHECK(schur_to_poly(lam, 3).eval(pts3) ==
                  testing::schur_value_bialternant(lam, pts3));
        for (const auto& lam : partitions_in_box(w, 4, 3))
            CHECK(schur_to_poly(lam, 4).eval(pts4) ==
                  testing::schur_value_bialternant(lam, pts4));
    }
}

TEST_CASE("schur_expand identities") {
    Poly e1sq(2);
    e1sq.add(ex({2, 0}), 1);
    e1sq.add(ex({1, 1}), 2);
    e1sq.add(ex({0, 2}), 1);
    SchurVector expect;
    expect.add(make_partition({2}), 1);
    expect.add(make_partition({1, 1}), 1);
    CHECK(schur_expand(e1sq) == expect);

    Poly p2(2);
    p2.add(ex({2, 0}), 1);
    p2.add(ex({0, 2}), 1);
    SchurVector newton;
    newton.add(make_partition({2}), 1);
    newton.add(make_partition({1, 1}), -1);
    CHECK(schur_expand(p2) == newton);

    Poly bad(2);
    bad.add(ex({2, 0}), 1);
    bad.add(ex({1, 1}), 1);
    CHECK_THROWS_AS(schur_expand(bad), DomainError);
}

TEST_CASE("round trip through the monomial basis") {
    for (int w = 0; w <= 6; ++w)
        for (const auto& lam : partitions_in_box(w, 3, 4)) {
            auto back = schur_expand(schur_to_poly(lam, 3));
            CHECK(back == SchurVector::single(lam));
        }
}

TEST_CASE("operations preserve symmetry under random permutations") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int w = 1 + int(rng() % 5);
        auto lams = partitions_in_box(w, 3, 5);
        const auto& lam = lams[rng() % lams.size()];
        Poly p = schur_to_poly(lam, 3);
        CHECK(p.symmetric());
        Poly q = poly_mul(p, generator(GenKind::complete, 2, 3));
        CHECK(q.symmetric());
        // spot-check invariance under one random transposition, term by term
        int a = int(rng() % 3), b = int(rng() % 3);
        for (const auto& [e, c] : q.terms()) {
            Poly::Exp swapped = e;
            std::swap(swapped[size_t(a)], swapped[size_t(b)]);
            CHECK(q.coeff(swapped) == c);
        }
    }
}

TEST_CASE("alternant integration over small Grassmannians") {
    // normalization on the full box
    CHECK(alternant_integrate(schur_to_poly(make_partition({2, 2}), 2), 1, 3) == 1);
    // product s2 * s2 has box coefficient 1
    Poly s2 = schur_to_poly(make_partition({2}), 2);
    CHECK(alternant_integrate(poly_mul(s2, s2), 1, 3) == 1);
    // degree mismatch rejected
    CHECK_THROWS_AS(alternant_integrate(schur_to_poly(make_partition({1}), 2), 1, 3),
                    DomainError);
    // non-symmetric rejected
    Poly bad(2);
    bad.add(ex({3, 1}), 1);
    CHECK_THROWS_AS(alternant_integrate(bad, 1, 3), DomainError);
    // wrong variable count rejected
    CHECK_THROWS_AS(alternant_integrate(schur_to_poly(make_partition({2, 2}), 3), 1, 3),
                    DomainError);
}

TEST_CASE("vandermonde expansion is the signed permutation sum") {
    Poly v = vandermonde(3);
    CHECK(v.size() == 6);
    CHECK(v.coeff(ex({2, 1, 0})) == 1);
    CHECK(v.coeff(ex({2, 0, 1})) == -1);
    CHECK(v.coeff(ex({0, 2, 1})) == 1);
    CHECK(v.coeff(ex({0, 1, 2})) == -1);
}
