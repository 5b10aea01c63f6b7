#pragma once

#include <optional>
#include <string>

#include "qk/proportions.hpp"

namespace qk {

enum class Verdict { within, below, above, not_applicable };

std::string verdict_name(Verdict v);

struct ScanConfig {
    GroupSpec spec;
    std::optional<unsigned> k;  // nullopt: auto mode via find_good_k
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t cap = 1000000;  // exhaustive-mode element cap
};

struct KindStats {
    std::uint64_t hits = 0;
    double phat = 0.0;
    double wilson_lo = 0.0, wilson_hi = 0.0;
    std::optional<BoundInterval> bound;  // absent when not applicable
    Verdict verdict = Verdict::not_applicable;
    std::optional<Rational> exact;  // exhaustive mode only
};

struct ScanReport {
    std::string group;
    std::optional<unsigned> k;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool exhaustive = false;
    KindStats qk, ppd, full;
    std::uint64_t structural_failures = 0;
    std::string failure_dump;  // matrix text of the first offending element
    double runtime_sec = 0.0;  // informational; not serialized
};

/// Wilson score interval at confidence z (99% by default).
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n,
                                          double z = 2.5758293035489004);

/// Survival function of the chi-square distribution (regularized upper
/// incomplete gamma).
double chi2_sf(double x, unsigned dof);

Verdict compare_with_bounds(double phat, double wilson_lo, double wilson_hi,
                            const std::optional<BoundInterval>& bound);

/// Seeded Monte Carlo estimate of the Q_k / Q_k^ppd / Q_k^full proportions.
/// Deterministic for fixed (config, seed, workers): work is split into
/// fixed-size chunks whose generator streams depend only on (seed, index).
ScanReport scan_montecarlo(const ScanConfig& cfg);

/// Exact proportions by full enumeration (order must be <= cfg.cap).
ScanReport scan_exhaustive(const ScanConfig& cfg);

/// Versioned JSON ("schema": 1); byte-identical for identical runs.
std::string report_to_json(const ScanReport& rep);
std::string report_to_csv(const ScanReport& rep);

}  // namespace qk
