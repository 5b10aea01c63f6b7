#include "qk/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk {

namespace {

// Fixed witness set: deterministic below 3.3e24, and in practice far beyond.
const unsigned long kMrBases[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                  23, 29, 31, 37, 41, 43, 47};

bool miller_rabin(const BigNat& n) {
    BigNat d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long a : kMrBases) {
        if (n <= a) continue;
        BigNat base(a);
        BigNat x;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle-finding variant of Pollard rho; deterministic parameter
// schedule so factorizations are reproducible.
BigNat pollard_brent(const BigNat& n) {
    if (mpz_even_p(n.get_mpz_t())) return BigNat(2);
    for (unsigned long c = 1;; ++c) {
        BigNat y(2 + (c % 7)), m(128), g(1), r(1), q(1), x, ys;
        while (g == 1) {
            x = y;
            for (BigNat i = 0; i < r; ++i) y = (y * y + c) % n;
            BigNat k(0);
            while (k < r && g == 1) {
                ys = y;
                BigNat lim = std::min(m, BigNat(r - k));
                for (BigNat i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    BigNat diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                BigNat diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // Degenerate cycle for this c; try the next increment.
    }
}

void factor_into(const BigNat& n, std::map<BigNat, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    BigNat g = pollard_brent(n);
    factor_into(g, out);
    factor_into(n / g, out);
}

}  // namespace

bool is_prime(const BigNat& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul,
                            23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    return miller_rabin(n);
}

FactoredNat factorize_nat(const BigNat& n) {
    if (n < 2) throw std::invalid_argument("factorize_nat: n must be >= 2");
    FactoredNat fn;
    fn.value = n;
    BigNat rest = n;
    for (unsigned long d = 2; d <= 1000000ul; d += (d == 2 ? 1 : 2)) {
        if (BigNat(d) * d > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            fn.factors[BigNat(d)] += 1;
            rest /= d;
        }
    }
    factor_into(rest == 1 ? BigNat(1) : rest, fn.factors);
    if (rest != 1 && fn.factors.empty())
        throw std::logic_error("factorize_nat: internal failure");
    return fn;
}

std::vector<BigNat> ppd_primes(const BigNat& q, unsigned m) {
    if (q < 2 || m < 1) throw std::invalid_argument("ppd_primes: q>=2, m>=1");
    BigNat qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), m);
    FactoredNat fn = factorize_nat(qm - 1);
    // Prime divisors of m, for the multiplicative-order test.
    std::vector<unsigned> mprimes;
    {
        unsigned rest = m;
        for (unsigned d = 2; d * d <= rest; ++d)
            if (rest % d == 0) {
                mprimes.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        if (rest > 1) mprimes.push_back(rest);
    }
    std::vector<BigNat> out;
    for (const auto& [r, e] : fn.factors) {
        (void)e;
        // ord_r(q) = m  <=>  q^m = 1 (given) and q^(m/s) != 1 for prime s | m.
        bool primitive = true;
        for (unsigned s : mprimes) {
            BigNat x, exp(m / s);
            mpz_powm(x.get_mpz_t(), q.get_mpz_t(), exp.get_mpz_t(),
                     r.get_mpz_t());
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) out.push_back(r);
    }
    return out;
}

BigNat r_part(const BigNat& n, const BigNat& r) {
    BigNat part(1), rest = n;
    while (rest != 0 && mpz_divisible_p(rest.get_mpz_t(), r.get_mpz_t())) {
        rest /= r;
        part *= r;
    }
    return part;
}

BigNat euler_phi(const BigNat& m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m >= 1");
    if (m == 1) return BigNat(1);
    FactoredNat fn = factorize_nat(m);
    BigNat phi(1);
    for (const auto& [p, e] : fn.factors) {
        BigNat pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pk * (p - 1);
    }
    return phi;
}

BigNat pow_nat(const BigNat& b, unsigned long e) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace qk
