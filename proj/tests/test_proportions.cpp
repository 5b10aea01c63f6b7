#include <doctest.h>

#include <cmath>

#include "qk/proportions.hpp"

using namespace qk;

namespace {
constexpr double kSlack = 1e-12;
}

TEST_CASE("p_not_m known values") {
    CHECK(p_not_m(2, 2) == Rational(1, 2));
    CHECK(p_not_m(3, 3) == Rational(2, 3));
    CHECK(p_not_m(3, 5) == Rational(1));  // m > n: nothing to avoid
    CHECK(p_not_m(0, 2) == Rational(1));
}

TEST_CASE("b_exact known values") {
    CHECK(b_exact(4, 2) == Rational(1, 4));
    CHECK(b_exact(6, 3) == Rational(2, 9));
    CHECK(b_exact(3, 5) == Rational(0));
    CHECK(b_exact(3, 3) == Rational(1, 3));
}

TEST_CASE("b_exact equals the brute-force oracle on spot checks") {
    CHECK(brute_force_b(4, 2) == Rational(1, 4));
    CHECK(brute_force_b(6, 3) == Rational(2, 9));
    CHECK(brute_force_b(3, 3) == Rational(1, 3));
    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned m = 2; m <= n; ++m)
            CHECK(b_exact(n, m) == brute_force_b(n, m));
}

TEST_CASE("Weyl class proportion divides by the family factor") {
    CHECK(weyl_class_proportion(Family::SL, 6, 3) == Rational(2, 9));
    CHECK(weyl_class_proportion(Family::Sp, 6, 3) == Rational(1, 9));
    CHECK(weyl_class_proportion(Family::SU, 6, 3) == Rational(2, 9));
    CHECK_THROWS_AS(weyl_class_proportion(Family::SL, 3, 3),
                    std::invalid_argument);
}

TEST_CASE("per-torus lower bounds") {
    CHECK(torus_lower_bound(Tier::ppd, 2, 3, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(torus_lower_bound(Tier::qk, 2, 3, 1) ==
          doctest::Approx(1.0 - 2.0 / std::pow(2.0, 1.5)).epsilon(1e-9));
    CHECK(torus_lower_bound(Tier::full, 2, 3, 1) ==
          doctest::Approx(std::log(2.0) / (3.0 * std::log(3.0))).epsilon(1e-9));
    CHECK(torus_lower_bound(Tier::qk, 2, 3, 1) == doctest::Approx(0.29289).epsilon(1e-4));
    CHECK(torus_lower_bound(Tier::full, 2, 3, 1) == doctest::Approx(0.21031).epsilon(1e-4));
}

TEST_CASE("main bound interval") {
    BoundInterval b = bounds_main(1, 1, 8, 2, 3, Tier::ppd);
    CHECK(b.lower == doctest::Approx(0.02726).epsilon(1e-3));
    CHECK(b.upper == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
    BoundInterval c = bounds_main(2, 1, 6, 3, 3, Tier::ppd);
    CHECK(c.lower == doctest::Approx(0.01703).epsilon(1e-3));
    CHECK(c.upper == doctest::Approx(5.0 / 18.0).epsilon(1e-12));
    CHECK_THROWS_AS(bounds_main(1, 1, 8, 2, 8, Tier::ppd), std::invalid_argument);
}

TEST_CASE("headline bound interval") {
    BoundInterval a = bounds_short(1, 2, 3, Tier::ppd);
    CHECK(a.lower == doctest::Approx(0.027245).epsilon(1e-4));
    CHECK(a.upper == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
    BoundInterval b = bounds_short(2, 3, 3, Tier::ppd);
    CHECK(b.lower == doctest::Approx(0.013623).epsilon(1e-4));
    CHECK(b.upper == doctest::Approx(5.0 / 18.0).epsilon(1e-12));
    BoundInterval c = bounds_short(1, 2, 3, Tier::full);
    CHECK(c.lower == doctest::Approx(0.0074).epsilon(1e-2));
    CHECK(c.source == BoundSource::headline);
}

TEST_CASE("log-window bound interval") {
    // n = 8: window (2.079, 4.159]; k = 3 qualifies
    BoundInterval b = bounds_logwindow(1, 1, 8, 2, 3, Tier::ppd);
    const double logn = std::log(8.0);
    CHECK(b.lower == doctest::Approx((1.0 - 1.0 / logn) /
                                     (6.0 * std::exp(1.0) * logn)).epsilon(1e-9));
    CHECK(b.upper == doctest::Approx(5.0 / (3.0 * logn)).epsilon(1e-12));
    CHECK_THROWS_AS(bounds_logwindow(1, 1, 300, 2, 3, Tier::ppd),
                    std::invalid_argument);
}

TEST_CASE("large-n lower bound") {
    CHECK(large_n_bound(1, 5) == doctest::Approx(0.01429).epsilon(1e-3));
    CHECK(large_n_bound(2, 100) == doctest::Approx(0.002496).epsilon(1e-3));
    CHECK_THROWS_AS(large_n_bound(1, 4), std::invalid_argument);
}

TEST_CASE("bound k-range predicate") {
    CHECK(k_in_bound_range(8, 3));
    CHECK(k_in_bound_range(8, 4));
    CHECK_FALSE(k_in_bound_range(8, 5));
    CHECK_FALSE(k_in_bound_range(8, 2));
    CHECK_FALSE(k_in_bound_range(100, 4));  // log 100 = 4.6 > 4
}

TEST_CASE("totient ratio dominates log(2)/log(m) except at m = 6") {
    // m = 6 is the unique counterexample in this range:
    // phi(6)/6 = 1/3 < log(2)/log(6) = 0.3869...
    unsigned violations = 0;
    for (unsigned long m = 3; m <= 100000; ++m) {
        const double phi = euler_phi(BigNat(m)).get_d();
        if (phi / double(m) + kSlack < std::log(2.0) / std::log(double(m))) {
            CHECK(m == 6);
            ++violations;
        }
    }
    CHECK(violations == 1);
}

TEST_CASE("p_not_m is nonincreasing in n for fixed m") {
    for (unsigned m : {2u, 3u, 5u}) {
        Rational prev = p_not_m(0, m);
        for (unsigned n = 1; n <= 40; ++n) {
            Rational cur = p_not_m(n, m);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("rational serialization") {
    CHECK(rational_to_text(Rational(2, 9)) == "2/9");
    CHECK(rational_to_text(Rational(0)) == "0/1");
}
