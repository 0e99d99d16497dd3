#include <doctest.h>

#include "schub/ppring.hpp"

using namespace schub;

namespace {

PPClass one(int n) { return PPClass::constant(n, Rat(1)); }

}  // namespace

TEST_CASE("truncated products") {
    PPClass h1(1);
    h1.add(1, 0, Rat(1));
    CHECK(pp_mul(h1, one(1)) == h1);
    CHECK(pp_mul(h1, h1).zero());  // H^2 = 0 when n = 1

    PPClass a(2), b(2);
    a.add(0, 0, Rat(1));
    a.add(1, 0, Rat(1));
    b.add(0, 0, Rat(1));
    b.add(1, 0, Rat(-1));
    b.add(2, 0, Rat(1));
    CHECK(pp_mul(a, b) == one(2));  // telescoping against the truncation

    PPClass c(3);
    c.add(0, 0, Rat(1));
    CHECK_THROWS_AS(pp_mul(a, c), DomainError);
    CHECK_THROWS_AS(a.add(3, 0, Rat(1)), DomainError);
}

TEST_CASE("series inverse: defining property and closed form") {
    CHECK(geom_series_inverse(1, 1) == [] {
        PPClass p(1);
        p.add(0, 0, Rat(1));
        p.add(1, 0, Rat(-1));
        p.add(0, 1, Rat(-1));
        p.add(1, 1, Rat(1));
        return p;
    }());
    CHECK(geom_series_inverse(3, 2).coeff(1, 0) == Rat(-3));
    CHECK(geom_series_inverse(3, 2).coeff(2, 0) == Rat(9));
    for (int d = 1; d <= 5; ++d) {
        for (int n = 1; n <= 8; ++n) {
            PPClass inv = geom_series_inverse(d, n);
            PPClass orig(n);
            orig.add(0, 0, Rat(1));
            orig.add(1, 0, Rat(d));
            orig.add(0, 1, Rat(d));
            orig.add(1, 1, Rat(d) * Rat(d));
            CHECK(pp_mul(inv, orig) == one(n));
            // closed form (-d)^(i+j) at (i, j)
            Rat md(-d);
            for (const auto& [ij, c] : inv.terms()) {
                Rat expect(1);
                for (int k = 0; k < ij.first + ij.second; ++k) expect *= md;
                CHECK(c == expect);
            }
            CHECK(inv.terms().size() == size_t((n + 1) * (n + 1)));
            CHECK(inv.swapped() == inv);
        }
    }
}

TEST_CASE("swap commutes with multiplication") {
    PPClass a(3), b(3);
    a.add(1, 0, Rat(2));
    a.add(0, 2, Rat(-5, 3));
    b.add(2, 1, Rat(7));
    b.add(0, 0, Rat(1, 2));
    CHECK(pp_mul(a, b).swapped() == pp_mul(a.swapped(), b.swapped()));
}

TEST_CASE("homogeneous parts") {
    PPClass x(2);
    x.add(0, 0, Rat(1));
    x.add(1, 1, Rat(5));
    x.add(2, 0, Rat(1));
    CHECK(homogeneous_part(x, 0) == one(2));
    PPClass deg2(2);
    deg2.add(1, 1, Rat(5));
    deg2.add(2, 0, Rat(1));
    CHECK(homogeneous_part(x, 2) == deg2);
    CHECK(homogeneous_part(x, 3).zero());
    CHECK_THROWS_AS(homogeneous_part(x, 5), DomainError);
    CHECK(x.integral());
    PPClass frac(2);
    frac.add(1, 0, Rat(1, 2));
    CHECK(!frac.integral());
}
