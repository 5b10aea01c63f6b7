#include <doctest.h>

#include "qk/arith.hpp"

using namespace qk;

TEST_CASE("is_prime on small and structured inputs") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK(is_prime(BigNat("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));    // Carmichael
    CHECK_FALSE(is_prime(1048575));
}

TEST_CASE("factorize_nat recovers known factorizations") {
    FactoredNat f = factorize_nat(BigNat(1048575));  // 2^20 - 1
    std::map<BigNat, unsigned> want{{3, 1}, {5, 2}, {11, 1}, {31, 1}, {41, 1}};
    CHECK(f.factors == want);
    CHECK(f.value == 1048575);

    CHECK(factorize_nat(BigNat(64)).factors == std::map<BigNat, unsigned>{{2, 6}});
    CHECK(factorize_nat(BigNat(97)).factors == std::map<BigNat, unsigned>{{97, 1}});

    // product of two 10-digit primes exercises the rho path
    BigNat a("1000000007"), b("1000000009");
    FactoredNat g = factorize_nat(a * b);
    CHECK(g.factors == std::map<BigNat, unsigned>{{a, 1}, {b, 1}});
}

TEST_CASE("factorize_nat round-trips") {
    for (unsigned long n : {2ul, 6ul, 360ul, 2310ul, 999999937ul, 4294967295ul}) {
        FactoredNat f = factorize_nat(BigNat(n));
        BigNat prod(1);
        for (const auto& [r, m] : f.factors) {
            CHECK(is_prime(r));
            prod *= pow_nat(r, m);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("ppd_primes matches known values") {
    CHECK(ppd_primes(2, 4) == std::vector<BigNat>{5});
    CHECK(ppd_primes(2, 6).empty());   // 63 = 7 * 9, both orders < 6
    CHECK(ppd_primes(3, 2).empty());   // 8 = 2^3, 2 | 3 - 1
    CHECK(ppd_primes(2, 3) == std::vector<BigNat>{7});
    CHECK(ppd_primes(2, 11) == std::vector<BigNat>{23, 89});
    CHECK(ppd_primes(2, 12) == std::vector<BigNat>{13});
    CHECK(ppd_primes(3, 6) == std::vector<BigNat>{7});
}

TEST_CASE("r_part extracts the exact prime power") {
    CHECK(r_part(360, 2) == 8);
    CHECK(r_part(360, 3) == 9);
    CHECK(r_part(360, 7) == 1);
    CHECK(r_part(1, 5) == 1);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
    CHECK(euler_phi(100) == 40);
}

TEST_CASE("pow_nat") {
    CHECK(pow_nat(BigNat(2), 20) == 1048576);
    CHECK(pow_nat(BigNat(7), 0) == 1);
}
