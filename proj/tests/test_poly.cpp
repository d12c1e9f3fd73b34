#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "listdec/degree.hpp"
#include "listdec/poly.hpp"
#include "listdec/rng.hpp"

using namespace listdec;

TEST_CASE("degree sentinel compares below every finite degree and absorbs addition") {
    const Degree ninf = Degree::neg_inf();
    CHECK(ninf < Degree(-1000000));
    CHECK(ninf < Degree(0));
    CHECK(ninf + Degree(5) == ninf);
    CHECK(Degree(5) + ninf == ninf);
    CHECK(Degree(2) + Degree(3) == Degree(5));
    CHECK(ninf == ninf);
    CHECK_THROWS_AS(ninf.value(), std::logic_error);
    CHECK(max(ninf, Degree(0)) == Degree(0));
}

TEST_CASE("polynomials stay canonical") {
    const PrimeField f7(7);
    const Poly zero(f7);
    CHECK(zero.is_zero());
    CHECK(zero.degree().is_neg_inf());
    CHECK(Poly(f7, {1, 2, 0, 0}).degree() == Degree(1));
    CHECK(Poly(f7, {0, 0, 7}).is_zero());
    CHECK(Poly(f7, {8}) == Poly(f7, {1}));
    CHECK(Poly::from_signed(f7, {-1, 1}) == Poly(f7, {6, 1}));
    CHECK(Poly::monomial(f7, f7.element(3), 2) == Poly(f7, {0, 0, 3}));
    CHECK(Poly::constant(f7, 4).degree() == Degree(0));
    CHECK(zero.coeff(3).is_zero());
    CHECK_THROWS_AS(zero.leading_coeff(), std::domain_error);
}

TEST_CASE("addition cancels coefficientwise") {
    const PrimeField f7(7);
    CHECK(Poly(f7, {1, 1}) + Poly(f7, {6, 1}) == Poly(f7, {0, 2}));
    const Poly p(f7, {3, 0, 5});
    CHECK(p + Poly(f7) == p);
    CHECK((Poly(f7, {0, 0, 1}) - Poly(f7, {0, 0, 1})).degree().is_neg_inf());
}

TEST_CASE("multiplication expands products and tracks degrees") {
    const PrimeField f7(7);
    CHECK(Poly(f7, {1, 1}) * Poly(f7, {2, 1}) == Poly(f7, {2, 3, 1}));
    CHECK((Poly(f7, {5, 1, 3}) * Poly(f7)).is_zero());
    CHECK(Poly(f7, {1, 1}).pow(2) == Poly(f7, {1, 2, 1}));
    // Cross terms can vanish mod q: (X+1)(X+2) = X^2 + 3X + 2 = X^2 + 2 over F_3.
    const PrimeField f3(3);
    CHECK(Poly(f3, {1, 1}) * Poly(f3, {2, 1}) == Poly(f3, {2, 0, 1}));
    CHECK(Poly(f7, {0, 2}).times_x_power(2) == Poly(f7, {0, 0, 0, 2}));
}

TEST_CASE("division produces quotient and remainder with the degree bound") {
    const PrimeField f3(3);
    // X^2 + 2 = (X + 1)(X + 2) over F_3: exact division by a factor.
    const auto [q1, r1] = divrem(Poly(f3, {2, 0, 1}), Poly(f3, {1, 1}));
    CHECK(q1 == Poly(f3, {2, 1}));
    CHECK(r1.is_zero());

    const PrimeField f7(7);
    const Poly a(f7, {3, 2, 6, 1});
    const auto [q2, r2] = divrem(a, a);
    CHECK(q2 == Poly::constant(f7, 1));
    CHECK(r2.is_zero());

    const auto [q3, r3] = divrem(Poly(f7, {0, 1}), Poly(f7, {0, 0, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == Poly(f7, {0, 1}));

    CHECK_THROWS_AS(divrem(a, Poly(f7)), std::domain_error);
}

TEST_CASE("division round-trips on random inputs") {
    const PrimeField f17(17);
    Rng rng(902);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = testutil::random_poly(f17, static_cast<int>(rng.below(9)), rng);
        Poly b = testutil::random_poly(f17, static_cast<int>(rng.below(5)), rng);
        if (b.is_zero()) b = Poly::constant(f17, 1 + rng.below(16));
        const auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("ring axioms hold on random triples") {
    const PrimeField f11(11);
    Rng rng(903);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly a = testutil::random_poly(f11, static_cast<int>(rng.below(6)), rng);
        const Poly b = testutil::random_poly(f11, static_cast<int>(rng.below(6)), rng);
        const Poly c = testutil::random_poly(f11, static_cast<int>(rng.below(6)), rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("operations across fields are rejected") {
    const PrimeField f7(7), f11(11);
    CHECK_THROWS_AS(Poly(f7, {1}) + Poly(f11, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Poly(f7, {1}) * Poly(f11, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Poly(f7, {1, 1})(f11.element(2)), std::invalid_argument);
}

TEST_CASE("evaluation uses Horner's scheme") {
    const PrimeField f7(7);
    CHECK(Poly(f7, {1, 1})(f7.element(3)) == f7.element(4));
    CHECK(Poly(f7)(f7.element(5)) == f7.zero());
    CHECK(Poly(f7, {0, 0, 0, 0, 0, 0, 1})(f7.element(3)) == f7.one());
}

TEST_CASE("interpolation recovers polynomials from their values") {
    const PrimeField f7(7);
    const std::vector<std::pair<FieldElement, FieldElement>> line{
        {f7.element(1), f7.element(2)}, {f7.element(2), f7.element(3)}};
    CHECK(lagrange_interpolate(f7, line) == Poly(f7, {1, 1}));

    const std::vector<std::pair<FieldElement, FieldElement>> point{
        {f7.element(5), f7.element(4)}};
    CHECK(lagrange_interpolate(f7, point) == Poly(f7, {4}));

    const std::vector<std::pair<FieldElement, FieldElement>> dup{
        {f7.element(1), f7.element(2)}, {f7.element(1), f7.element(3)}};
    CHECK_THROWS_AS(lagrange_interpolate(f7, dup), std::invalid_argument);
    CHECK_THROWS_AS(
        lagrange_interpolate(f7, std::span<const std::pair<FieldElement, FieldElement>>{}),
        std::invalid_argument);
}

TEST_CASE("interpolation round-trips random evaluations") {
    const PrimeField f17(17);
    Rng rng(904);
    for (int trial = 0; trial < 50; ++trial) {
        const int points = 1 + static_cast<int>(rng.below(16));
        const Poly f = testutil::random_poly(f17, points - 1, rng);
        std::vector<std::pair<FieldElement, FieldElement>> samples;
        for (int x = 1; x <= points; ++x) {
            const FieldElement at = f17.element(static_cast<std::uint64_t>(x));
            samples.emplace_back(at, f(at));
        }
        CHECK(lagrange_interpolate(f17, samples) == f);
    }
}

TEST_CASE("roots product builds the monic locator") {
    const PrimeField f7(7);
    const std::vector<FieldElement> roots{f7.element(1), f7.element(2)};
    const Poly g = poly_from_roots(f7, roots);
    CHECK(g == Poly(f7, {2, 4, 1}));
    CHECK(g(f7.element(1)).is_zero());
    CHECK(g(f7.element(2)).is_zero());
}

TEST_CASE("taylor shift translates the argument") {
    const PrimeField f7(7);
    CHECK(taylor_shift(Poly(f7, {0, 0, 1}), f7.one()) == Poly(f7, {1, 2, 1}));
    const Poly p(f7, {3, 1, 0, 5});
    CHECK(taylor_shift(p, f7.zero()) == p);
    CHECK(taylor_shift(taylor_shift(p, f7.element(4)), f7.element_from_signed(-4)) == p);

    Rng rng(905);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly f = testutil::random_poly(f7, static_cast<int>(rng.below(7)), rng);
        const FieldElement a = f7.element(rng.below(7));
        const FieldElement x = f7.element(rng.below(7));
        CHECK(taylor_shift(f, a)(x) == f(x + a));
    }
}

TEST_CASE("lexicographic order is a strict total order on canonical forms") {
    const PrimeField f7(7);
    // Ascending coefficient vectors compare lexicographically, so the zero
    // polynomial sorts first and a prefix sorts before its extensions.
    CHECK(Poly::lex_less(Poly(f7), Poly(f7, {1})));
    CHECK(Poly::lex_less(Poly(f7, {1}), Poly(f7, {2})));
    CHECK(Poly::lex_less(Poly(f7, {0, 1}), Poly(f7, {5})));
    CHECK(Poly::lex_less(Poly(f7, {1}), Poly(f7, {1, 1})));
    CHECK_FALSE(Poly::lex_less(Poly(f7, {0, 1}), Poly(f7, {0, 1})));

    std::vector<Poly> all{Poly(f7, {3}), Poly(f7), Poly(f7, {0, 1}), Poly(f7, {1})};
    std::sort(all.begin(), all.end(), Poly::lex_less);
    CHECK(all[0].is_zero());
    CHECK(all[1] == Poly(f7, {0, 1}));
    CHECK(all[2] == Poly(f7, {1}));
    CHECK(all[3] == Poly(f7, {3}));
}

TEST_CASE("to_string renders readable terms") {
    const PrimeField f7(7);
    CHECK(Poly(f7).to_string() == "0");
    CHECK(Poly(f7, {2, 0, 1}).to_string() == "X^2 + 2");
}
