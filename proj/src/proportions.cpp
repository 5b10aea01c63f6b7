#include "qk/proportions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qk {

namespace {

constexpr double kE = 2.718281828459045235;

BigNat factorial(unsigned n) {
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

std::string rational_to_text(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational p_not_m(unsigned n, unsigned m) {
    if (m < 2) throw std::invalid_argument("p_not_m: m >= 2");
    // c(j) = number of elements of S_j with no cycle length divisible by m:
    // choose the cycle containing the last point, of length l not divisible
    // by m, in (j-1)!/(j-l)! ways.
    std::vector<BigNat> c(n + 1);
    c[0] = 1;
    for (unsigned j = 1; j <= n; ++j) {
        BigNat sum(0);
        BigNat falling(1);  // (j-1)!/(j-l)! accumulated over l
        for (unsigned l = 1; l <= j; ++l) {
            // falling = (j-1)(j-2)...(j-l+1)
            if (l > 1) falling *= (j - l + 1);
            if (l % m != 0) sum += falling * c[j - l];
        }
        c[j] = sum;
    }
    Rational r(c[n], factorial(n));
    r.canonicalize();
    return r;
}

Rational b_exact(unsigned n, unsigned m) {
    if (m < 2) throw std::invalid_argument("b_exact: m >= 2");
    if (m > n) return Rational(0);
    Rational r = p_not_m(n - m, m);
    r /= m;
    r.canonicalize();
    return r;
}

Rational brute_force_b(unsigned n, unsigned m) {
    if (n > 9) throw std::invalid_argument("brute_force_b: n <= 9");
    if (m < 2) throw std::invalid_argument("brute_force_b: m >= 2");
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    unsigned long count = 0, total = 0;
    do {
        ++total;
        std::vector<bool> seen(n, false);
        unsigned m_cycles = 0;
        bool bad = false;
        for (unsigned s = 0; s < n && !bad; ++s) {
            if (seen[s]) continue;
            unsigned len = 0, cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = perm[cur];
                ++len;
            }
            if (len == m)
                ++m_cycles;
            else if (len % m == 0)
                bad = true;
        }
        if (!bad && m_cycles == 1) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational r(count, total);
    r.canonicalize();
    return r;
}

Rational weyl_class_proportion(Family family, unsigned n, unsigned k) {
    if (k < 2 || k >= n)
        throw std::invalid_argument("weyl_class_proportion: 2 <= k < n");
    Rational b = b_exact(n, k);
    const unsigned alpha =
        (family == Family::SL || family == Family::SU) ? 1 : 2;
    b /= alpha;
    b.canonicalize();
    return b;
}

double torus_lower_bound(Tier kind, std::uint64_t q, unsigned k, unsigned alpha) {
    switch (kind) {
        case Tier::qk:
            return 1.0 - 2.0 / std::pow(double(q), double(k) / 2.0);
        case Tier::ppd:
            return 1.0 - 1.0 / (double(alpha) * k);
        case Tier::full:
            return std::log(2.0) / (double(k) * std::log(double(q) + 1.0));
        default:
            throw std::invalid_argument("torus_lower_bound: kind must be qk/ppd/full");
    }
}

bool k_in_bound_range(unsigned n, unsigned k) {
    const double logn = std::log(double(n));
    return double(k) >= std::max(3.0, logn) && 2 * k <= n;
}

BoundInterval bounds_main(unsigned alpha, unsigned delta, unsigned n,
                          std::uint64_t q, unsigned k, Tier kind) {
    (void)delta;
    if (!k_in_bound_range(n, k))
        throw std::invalid_argument("bounds_main: k outside [max(3, log n), n/2]");
    const double l = torus_lower_bound(kind, q, k, alpha);
    return BoundInterval{l / (3.0 * kE * alpha * k), 5.0 / (3.0 * alpha * k),
                         BoundSource::detailed};
}

BoundInterval bounds_logwindow(unsigned alpha, unsigned delta, unsigned n,
                           std::uint64_t q, unsigned k, Tier kind) {
    (void)delta;
    const double logn = std::log(double(n));
    if (!k_in_bound_range(n, k) || !(logn < double(k) && double(k) <= 2 * logn))
        throw std::invalid_argument("bounds_logwindow: k outside (log n, 2 log n]");
    double m;
    switch (kind) {
        case Tier::qk:
            m = 1.0 - 2.0 / std::pow(double(q), logn / 2.0);
            break;
        case Tier::ppd:
            m = 1.0 - 1.0 / (double(alpha) * logn);
            break;
        case Tier::full:
            m = std::log(2.0) / (2.0 * logn * std::log(double(q) + 1.0));
            break;
        default:
            throw std::invalid_argument("bounds_logwindow: kind must be qk/ppd/full");
    }
    return BoundInterval{m / (6.0 * kE * alpha * logn), 5.0 / (3.0 * alpha * logn),
                         BoundSource::log_window};
}

BoundInterval bounds_short(unsigned alpha, std::uint64_t q, unsigned k, Tier kind) {
    const double upper = 5.0 / (3.0 * alpha * k);
    if (kind == Tier::full)
        return BoundInterval{
            2.0 / (10.0 * kE * alpha * double(k) * k * std::log(double(q) + 1.0)),
            upper, BoundSource::headline};
    if (kind == Tier::qk || kind == Tier::ppd)
        return BoundInterval{2.0 / (9.0 * kE * alpha * k), upper, BoundSource::headline};
    throw std::invalid_argument("bounds_short: kind must be qk/ppd/full");
}

double large_n_bound(unsigned alpha, unsigned n) {
    if (n < 5) throw std::invalid_argument("large_n_bound: n >= 5");
    return 1.0 / (16.0 * kE * alpha * std::log(double(n)));
}

}  // namespace qk
