#include "qk/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace qk {

namespace {

constexpr std::uint64_t kChunk = 1024;

struct ChunkResult {
    std::uint64_t qk = 0, ppd = 0, full = 0, failures = 0;
    std::string dump;
};

struct OneResult {
    Tier tier = Tier::none;
    bool structural_ok = true;
};

OneResult classify_one(const GroupSpec& spec, const MatF& g,
                       const std::optional<unsigned>& kopt) {
    OneResult res;
    const CharPolyProfile prof = profile(spec, g);
    unsigned k;
    if (kopt) {
        k = *kopt;
    } else {
        auto good = find_good_k(spec, prof);
        if (!good) return res;
        k = *good;
    }
    Tier t = classify_k(spec, prof, k);
    if (t == Tier::none) return res;
    t = refine_tier(spec, g, prof, k, t);
    res.tier = t;
    auto [B, beta] = compute_B(spec, prof, k);
    (void)beta;
    const PowerReport rep = verify_power_structure(spec, g, k, B);
    res.structural_ok = rep.eigenspace_ok &&
                        (t == Tier::qk || rep.irreducible);
    return res;
}

void fill_bound(KindStats& ks, const GroupSpec& spec,
                const std::optional<unsigned>& kopt, Tier kind) {
    if (kopt) {
        const bool odd_ok = spec.family != Family::SU || *kopt % 2 == 1;
        if (k_in_bound_range(spec.n, *kopt) && odd_ok)
            ks.bound = bounds_short(spec.alpha, spec.q, *kopt, kind);
    } else if (kind == Tier::qk && spec.n >= 5) {
        ks.bound = BoundInterval{large_n_bound(spec.alpha, spec.n), 1.0,
                                 BoundSource::large_n};
    }
    ks.verdict = compare_with_bounds(ks.phat, ks.wilson_lo, ks.wilson_hi, ks.bound);
}

void finish_kind(KindStats& ks, std::uint64_t n, const GroupSpec& spec,
                 const std::optional<unsigned>& kopt, Tier kind) {
    ks.phat = double(ks.hits) / double(n);
    std::tie(ks.wilson_lo, ks.wilson_hi) = wilson_interval(ks.hits, n);
    fill_bound(ks, spec, kopt, kind);
}

nlohmann::json kind_json(const KindStats& ks) {
    nlohmann::json j;
    j["hits"] = ks.hits;
    j["proportion"] = ks.phat;
    j["wilson99"] = {ks.wilson_lo, ks.wilson_hi};
    if (ks.exact) j["exact"] = rational_to_text(*ks.exact);
    if (ks.bound)
        j["bound"] = {ks.bound->lower, ks.bound->upper};
    else
        j["bound"] = nullptr;
    j["verdict"] = verdict_name(ks.verdict);
    return j;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::within: return "within";
        case Verdict::below: return "below";
        case Verdict::above: return "above";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n,
                                          double z) {
    if (n == 0) throw std::invalid_argument("wilson_interval: n >= 1");
    const double p = double(hits) / double(n);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / double(n);
    const double center = (p + z2 / (2.0 * double(n))) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / double(n) + z2 / (4.0 * double(n) * double(n))) /
        denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Regularized incomplete gamma, series and continued-fraction forms.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi2_sf(double x, unsigned dof) {
    if (x <= 0) return 1.0;
    const double a = dof / 2.0, hx = x / 2.0;
    if (hx < a + 1.0) return 1.0 - gamma_p_series(a, hx);
    return gamma_q_cf(a, hx);
}

Verdict compare_with_bounds(double phat, double wilson_lo, double wilson_hi,
                            const std::optional<BoundInterval>& bound) {
    if (!bound) return Verdict::not_applicable;
    const bool point_in = phat >= bound->lower && phat <= bound->upper;
    const bool overlap = wilson_lo <= bound->upper && wilson_hi >= bound->lower;
    if (point_in || overlap) return Verdict::within;
    return phat < bound->lower ? Verdict::below : Verdict::above;
}

ScanReport scan_montecarlo(const ScanConfig& cfg) {
    if (cfg.samples == 0) throw std::invalid_argument("scan: samples >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t nchunks = (cfg.samples + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(nchunks);
    std::atomic<std::uint64_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            Rng rng(Rng::mix(cfg.seed, c));
            const std::uint64_t lo = c * kChunk;
            const std::uint64_t hi = std::min(cfg.samples, lo + kChunk);
            ChunkResult& out = results[c];
            for (std::uint64_t i = lo; i < hi; ++i) {
                const MatF g = sample_uniform(cfg.spec, rng);
                const OneResult r = classify_one(cfg.spec, g, cfg.k);
                if (r.tier >= Tier::qk) ++out.qk;
                if (r.tier >= Tier::ppd) ++out.ppd;
                if (r.tier >= Tier::full) ++out.full;
                if (!r.structural_ok) {
                    if (out.failures == 0) out.dump = mat_to_text(g);
                    ++out.failures;
                }
            }
        }
    };

    const unsigned nworkers = std::max(1u, cfg.workers);
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < nworkers; ++w) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();

    ScanReport rep;
    rep.group = cfg.spec.to_string();
    rep.k = cfg.k;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    rep.workers = nworkers;
    for (const auto& r : results) {
        rep.qk.hits += r.qk;
        rep.ppd.hits += r.ppd;
        rep.full.hits += r.full;
        if (rep.structural_failures == 0 && r.failures > 0) rep.failure_dump = r.dump;
        rep.structural_failures += r.failures;
    }
    finish_kind(rep.qk, cfg.samples, cfg.spec, cfg.k, Tier::qk);
    finish_kind(rep.ppd, cfg.samples, cfg.spec, cfg.k, Tier::ppd);
    finish_kind(rep.full, cfg.samples, cfg.spec, cfg.k, Tier::full);
    rep.runtime_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ScanReport scan_exhaustive(const ScanConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(Rng::mix(cfg.seed, 0xE0E0E0E0ULL));
    const std::vector<MatF> all = enumerate_group(cfg.spec, cfg.cap, rng);
    ScanReport rep;
    rep.group = cfg.spec.to_string();
    rep.k = cfg.k;
    rep.samples = all.size();
    rep.seed = cfg.seed;
    rep.workers = 1;
    rep.exhaustive = true;
    for (const auto& g : all) {
        const OneResult r = classify_one(cfg.spec, g, cfg.k);
        if (r.tier >= Tier::qk) ++rep.qk.hits;
        if (r.tier >= Tier::ppd) ++rep.ppd.hits;
        if (r.tier >= Tier::full) ++rep.full.hits;
        if (!r.structural_ok) {
            if (rep.structural_failures == 0) rep.failure_dump = mat_to_text(g);
            ++rep.structural_failures;
        }
    }
    const std::uint64_t n = all.size();
    for (auto* ks : {&rep.qk, &rep.ppd, &rep.full}) {
        Rational ex(static_cast<unsigned long>(ks->hits),
                    static_cast<unsigned long>(n));
        ex.canonicalize();
        ks->exact = ex;
    }
    finish_kind(rep.qk, n, cfg.spec, cfg.k, Tier::qk);
    finish_kind(rep.ppd, n, cfg.spec, cfg.k, Tier::ppd);
    finish_kind(rep.full, n, cfg.spec, cfg.k, Tier::full);
    rep.runtime_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_to_json(const ScanReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["mode"] = rep.exhaustive ? "exhaustive" : "montecarlo";
    j["group"] = rep.group;
    if (rep.k)
        j["k"] = *rep.k;
    else
        j["k"] = "auto";
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["workers"] = rep.workers;
    j["kinds"] = {{"qk", kind_json(rep.qk)},
                  {"ppd", kind_json(rep.ppd)},
                  {"full", kind_json(rep.full)}};
    j["structural_failures"] = rep.structural_failures;
    return j.dump(2);
}

std::string report_to_csv(const ScanReport& rep) {
    std::string out =
        "group,k,kind,hits,samples,proportion,wilson_lo,wilson_hi,bound_lo,bound_hi,"
        "verdict\n";
    const std::string k = rep.k ? std::to_string(*rep.k) : "auto";
    auto line = [&](const char* kind, const KindStats& ks) {
        std::ostringstream os;
        os << rep.group << ',' << k << ',' << kind << ',' << ks.hits << ','
           << rep.samples << ',' << ks.phat << ',' << ks.wilson_lo << ','
           << ks.wilson_hi << ',';
        if (ks.bound)
            os << ks.bound->lower << ',' << ks.bound->upper;
        else
            os << ',';
        os << ',' << verdict_name(ks.verdict) << '\n';
        return os.str();
    };
    out += line("qk", rep.qk);
    out += line("ppd", rep.ppd);
    out += line("full", rep.full);
    return out;
}

}  // namespace qk
