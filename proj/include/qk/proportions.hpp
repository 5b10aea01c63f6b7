#pragma once

#include <string>

#include "qk/classify.hpp"

namespace qk {

using Rational = mpq_class;

std::string rational_to_text(const Rational& r);  // "num/den"

enum class BoundSource { headline, detailed, log_window, torus, weyl, large_n };

struct BoundInterval {
    double lower;
    double upper;
    BoundSource source;
};

/// Exact proportion of S_n elements with no cycle of length divisible by m.
Rational p_not_m(unsigned n, unsigned m);

/// Exact proportion of S_n elements with exactly one m-cycle and no other
/// cycle length divisible by m; equals p_not_m(n-m)/m for m <= n, else 0.
Rational b_exact(unsigned n, unsigned m);

/// Independent oracle: full enumeration of S_n (n <= 9).
Rational brute_force_b(unsigned n, unsigned m);

/// Weyl-class mass: b_exact(n,k)/alpha for the given family.
Rational weyl_class_proportion(Family family, unsigned n, unsigned k);

/// Per-torus lower bounds: 1 - 2/q^(k/2) (qk), 1 - 1/(alpha k) (ppd),
/// log(2)/(k log(q+1)) (full).
double torus_lower_bound(Tier kind, std::uint64_t q, unsigned k, unsigned alpha);

/// Detailed bound: (l_{k,Q}/(3 e alpha k), 5/(3 alpha k)).
BoundInterval bounds_main(unsigned alpha, unsigned delta, unsigned n,
                          std::uint64_t q, unsigned k, Tier kind);

/// Short-range variant for log(n) < k <= 2 log(n):
/// (m_{n,Q}/(6 e alpha log n), 5/(3 alpha log n)).
BoundInterval bounds_logwindow(unsigned alpha, unsigned delta, unsigned n,
                           std::uint64_t q, unsigned k, Tier kind);

/// Headline bound: (2/(9 e alpha k), 5/(3 alpha k)) for qk/ppd and
/// (2/(10 e alpha k^2 log(q+1)), 5/(3 alpha k)) for full.
BoundInterval bounds_short(unsigned alpha, std::uint64_t q, unsigned k, Tier kind);

/// 1/(16 e alpha log n), n >= 5.
double large_n_bound(unsigned alpha, unsigned n);

/// True iff max(3, log n) <= k <= n/2 (the k-range for the detailed bounds).
bool k_in_bound_range(unsigned n, unsigned k);

}  // namespace qk
