#include <doctest.h>

#include <algorithm>

#include "qk/poly.hpp"
#include "qk/rng.hpp"

using namespace qk;

namespace {

Poly random_poly(const FieldPtr& F, unsigned degree, Rng& rng) {
    std::vector<Fel> c(degree + 1);
    for (auto& v : c) v = Fel(rng.below(F->q()));
    if (c.back() == 0) c.back() = 1;
    return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("divmod round trip") {
    Rng rng(7);
    for (auto [p, e] : {std::pair<std::uint32_t, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto F = FieldSpec::make(p, e);
        for (int it = 0; it < 50; ++it) {
            Poly a = random_poly(F, 1 + unsigned(rng.below(8)), rng);
            Poly b = random_poly(F, 1 + unsigned(rng.below(4)), rng);
            auto [quo, rem] = poly_divmod(a, b);
            CHECK(poly_add(poly_mul(quo, b), rem) == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd divides both arguments and is monic") {
    Rng rng(11);
    auto F = FieldSpec::make(3, 1);
    for (int it = 0; it < 50; ++it) {
        Poly a = random_poly(F, 2 + unsigned(rng.below(5)), rng);
        Poly b = random_poly(F, 2 + unsigned(rng.below(5)), rng);
        Poly g = poly_gcd(a, b);
        CHECK(g.lead() == 1);
        CHECK(poly_mod(a, g).is_zero());
        CHECK(poly_mod(b, g).is_zero());
    }
}

TEST_CASE("factorization round trip over several fields") {
    Rng rng(13);
    for (auto [p, e] : {std::pair<std::uint32_t, unsigned>{2, 1},
                        {3, 1},
                        {2, 2},
                        {3, 2},
                        {5, 1}}) {
        auto F = FieldSpec::make(p, e);
        for (int it = 0; it < 40; ++it) {
            Poly f = random_poly(F, 1 + unsigned(rng.below(9)), rng);
            FactoredPoly fac = factorize_poly(f);
            Poly prod = poly_scale(Poly::one(F), fac.unit);
            for (const auto& [g, mult] : fac.factors) {
                CHECK(g.lead() == 1);
                CHECK(is_irreducible(g));
                for (unsigned i = 0; i < mult; ++i) prod = poly_mul(prod, g);
            }
            CHECK(prod == f);
            CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end(),
                                 [](const auto& x, const auto& y) {
                                     return poly_less(x.first, y.first);
                                 }));
        }
    }
}

TEST_CASE("repeated factors and characteristic-p squarefree part") {
    auto F2 = FieldSpec::make(2, 1);
    Poly f(F2, {1, 1, 1});  // x^2+x+1
    Poly sq = poly_mul(f, f);
    FactoredPoly fac = factorize_poly(sq);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == f);
    CHECK(fac.factors[0].second == 2);

    // p-th power: (x^3+x+1)^2 = x^6+x^2+1 over F_2
    Poly g(F2, {1, 1, 0, 1});
    FactoredPoly fac2 = factorize_poly(poly_mul(g, g));
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].first == g);
    CHECK(fac2.factors[0].second == 2);
}

TEST_CASE("irreducible counts match the necklace formula") {
    // number of monic irreducibles: deg 2: (q^2-q)/2, deg 3: (q^3-q)/3
    for (auto [p, e] : {std::pair<std::uint32_t, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto F = FieldSpec::make(p, e);
        const unsigned long q = F->q();
        CHECK(all_monic_irreducibles(F, 2).size() == (q * q - q) / 2);
        CHECK(all_monic_irreducibles(F, 3).size() == (q * q * q - q) / 3);
    }
}

TEST_CASE("conjugate polynomial is an involution that inverts roots") {
    auto F = FieldSpec::make(2, 1);
    Poly f(F, {1, 1, 0, 1});  // x^3+x+1, roots of order 7
    Poly fc = conjugate_poly(f);
    CHECK(fc == Poly(F, {1, 0, 1, 1}));  // x^3+x^2+1
    CHECK(conjugate_poly(fc) == f);
    CHECK_FALSE(is_self_conjugate(f));

    CHECK(is_self_conjugate(Poly(F, {1, 1, 1})));          // x^2+x+1
    CHECK(is_self_conjugate(Poly(F, {1, 0, 0, 1, 0, 0, 1})));  // x^6+x^3+1

    Rng rng(17);
    auto F9 = FieldSpec::make(3, 2);
    for (int it = 0; it < 30; ++it) {
        Poly g = random_poly(F9, 1 + unsigned(rng.below(6)), rng);
        if (g.coeff(0) == 0) continue;
        Poly gm = poly_monic(g);
        CHECK(conjugate_poly(conjugate_poly(gm)) == gm);
    }
}

TEST_CASE("self-conjugate irreducibles of degree > 1 have even degree") {
    for (auto [p, e] : {std::pair<std::uint32_t, unsigned>{2, 1}, {3, 1}, {5, 1},
                        {2, 2}}) {
        auto F = FieldSpec::make(p, e);
        for (unsigned deg : {3u, 5u}) {
            for (const Poly& f : all_monic_irreducibles(F, deg))
                CHECK_FALSE(is_self_conjugate(f));
        }
    }
}

TEST_CASE("text round trip") {
    auto F = FieldSpec::make(2, 1);
    Poly f(F, {1, 1, 1});
    CHECK(poly_to_text(f) == "1 1 1");
    CHECK(poly_from_text(F, "1 1 1") == f);
}

TEST_CASE("is_irreducible agrees with factor count") {
    auto F = FieldSpec::make(2, 1);
    CHECK(is_irreducible(Poly(F, {1, 1, 1, 1, 1})));       // x^4+x^3+x^2+x+1
    CHECK_FALSE(is_irreducible(Poly(F, {1, 0, 0, 0, 1})));  // (x+1)^4
    CHECK(is_irreducible(Poly(F, {1, 1, 0, 0, 0, 0, 1})));  // x^6+x+1
}
