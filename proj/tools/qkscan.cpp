// qkscan: classify elements of finite classical groups by characteristic
// polynomial structure and estimate the proportions of the classified sets.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qk/harness.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"classical group element classification and proportion scans"};
    app.require_subcommand(1);

    // classify
    std::string cl_group, cl_in, cl_format = "json";
    int cl_k = -1;
    bool cl_auto = false;
    auto* classify = app.add_subcommand("classify", "classify a matrix from file");
    classify->add_option("--group", cl_group, "group spec, e.g. SL:8:2")->required();
    classify->add_option("--in", cl_in, "matrix file ('d p e' header)")->required();
    classify->add_option("--k", cl_k, "classification level k");
    classify->add_flag("--auto-k", cl_auto, "pick k via the good-k search");
    classify->add_option("--format", cl_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // scan
    std::string sc_group, sc_set = "ppd", sc_format = "json";
    int sc_k = -1;
    bool sc_auto = false, sc_exhaustive = false;
    std::uint64_t sc_samples = 10000, sc_seed = 0, sc_cap = 1000000;
    unsigned sc_workers = 1;
    auto* scan = app.add_subcommand("scan", "estimate |Q|/|H|");
    scan->add_option("--group", sc_group)->required();
    scan->add_option("--k", sc_k, "classification level k");
    scan->add_flag("--auto-k", sc_auto, "per-element good-k search");
    scan->add_option("--set", sc_set, "headline kind: qk|ppd|full")
        ->check(CLI::IsMember({"qk", "ppd", "full"}));
    scan->add_option("--samples", sc_samples);
    scan->add_option("--seed", sc_seed);
    scan->add_option("--workers", sc_workers);
    scan->add_flag("--exhaustive", sc_exhaustive);
    scan->add_option("--cap", sc_cap, "exhaustive-mode element cap");
    scan->add_option("--format", sc_format)->check(CLI::IsMember({"json", "csv"}));

    // enumerate
    std::string en_group;
    std::uint64_t en_cap = 1000000, en_seed = 0;
    bool en_print = false;
    auto* enumerate = app.add_subcommand("enumerate", "list all group elements");
    enumerate->add_option("--group", en_group)->required();
    enumerate->add_option("--cap", en_cap);
    enumerate->add_option("--seed", en_seed);
    enumerate->add_flag("--print", en_print, "print every element");

    // bounds
    std::string bd_group, bd_set = "ppd", bd_which = "short";
    int bd_k = 3;
    auto* bounds = app.add_subcommand("bounds", "evaluate bound intervals");
    bounds->add_option("--group", bd_group)->required();
    bounds->add_option("--k", bd_k)->required();
    bounds->add_option("--set", bd_set)->check(CLI::IsMember({"qk", "ppd", "full"}));
    bool bd_short = false, bd_main = false, bd_logwin = false;
    bounds->add_flag("--short", bd_short);
    bounds->add_flag("--main", bd_main);
    bounds->add_flag("--log-window", bd_logwin);

    // small numeric helpers
    std::uint64_t bx_n = 0, bx_m = 0;
    auto* bexact = app.add_subcommand("bexact", "exact b_m(n)");
    bexact->add_option("--n", bx_n)->required();
    bexact->add_option("--m", bx_m)->required();
    std::uint64_t pn_n = 0, pn_m = 0;
    auto* pnotm = app.add_subcommand("pnotm", "exact p_!m(n)");
    pnotm->add_option("--n", pn_n)->required();
    pnotm->add_option("--m", pn_m)->required();
    std::uint64_t pp_q = 0, pp_m = 0;
    auto* ppd = app.add_subcommand("ppd", "primitive prime divisors of q^m-1");
    ppd->add_option("--q", pp_q)->required();
    ppd->add_option("--m", pp_m)->required();
    std::string or_group;
    auto* order = app.add_subcommand("order", "group order");
    order->add_option("--group", or_group)->required();

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        if ((cl_k < 0) == !cl_auto)
            throw std::invalid_argument("classify: exactly one of --k / --auto-k");
        qk::GroupSpec spec = qk::GroupSpec::parse(cl_group);
        std::ifstream in(cl_in);
        if (!in) throw std::invalid_argument("cannot open " + cl_in);
        std::stringstream buf;
        buf << in.rdbuf();
        qk::MatF m = qk::mat_from_text(buf.str());
        if (!qk::is_member(spec, m))
            throw std::invalid_argument("matrix is not a member of " + cl_group);
        unsigned k;
        if (cl_auto) {
            auto prof = qk::profile(spec, m);
            auto good = qk::find_good_k(spec, prof);
            if (!good) {
                if (cl_format == "json")
                    std::cout << "{\"tier\":\"none\",\"k\":null}\n";
                else
                    std::cout << "no good k in (log n, 2 log n]\n";
                return 0;
            }
            k = *good;
        } else {
            k = unsigned(cl_k);
        }
        qk::Classification c = qk::classify_element(spec, m, k);
        if (cl_format == "json") {
            std::cout << qk::classification_to_json(c) << '\n';
        } else {
            std::cout << "k=" << c.k << " tier=" << qk::tier_name(c.tier);
            if (c.tier >= qk::Tier::qk)
                std::cout << " B=" << c.B.get_str() << " beta=" << c.beta
                          << " eigenspace_dim=" << c.witness.one_eigenspace_dim
                          << " complement_dim=" << c.witness.complement_dim
                          << " irreducible=" << (c.witness.irreducible ? "yes" : "no");
            std::cout << '\n';
        }
        if (c.tier >= qk::Tier::qk && !c.witness.eigenspace_ok) {
            std::cerr << "structural check failed: unexpected 1-eigenspace dimension\n";
            return 2;
        }
        return 0;
    }

    if (scan->parsed()) {
        if (sc_k < 0 && !sc_auto)
            throw std::invalid_argument("scan: need --k or --auto-k");
        qk::ScanConfig cfg;
        cfg.spec = qk::GroupSpec::parse(sc_group);
        if (!sc_auto) cfg.k = unsigned(sc_k);
        cfg.samples = sc_samples;
        cfg.seed = sc_seed;
        cfg.workers = sc_workers;
        cfg.cap = sc_cap;
        qk::ScanReport rep =
            sc_exhaustive ? qk::scan_exhaustive(cfg) : qk::scan_montecarlo(cfg);
        std::cout << (sc_format == "json" ? qk::report_to_json(rep)
                                          : qk::report_to_csv(rep));
        if (sc_format == "json") std::cout << '\n';
        std::cerr << "runtime: " << rep.runtime_sec << " s\n";
        if (rep.structural_failures > 0) {
            std::cerr << "structural check failures: " << rep.structural_failures
                      << "\noffending element:\n"
                      << rep.failure_dump;
            return 2;
        }
        return 0;
    }

    if (enumerate->parsed()) {
        qk::GroupSpec spec = qk::GroupSpec::parse(en_group);
        qk::Rng rng(en_seed);
        auto all = qk::enumerate_group(spec, en_cap, rng);
        std::cout << "order " << all.size() << '\n';
        if (en_print)
            for (const auto& m : all) std::cout << qk::mat_to_text(m);
        return 0;
    }

    if (bounds->parsed()) {
        qk::GroupSpec spec = qk::GroupSpec::parse(bd_group);
        qk::Tier kind = bd_set == "qk"   ? qk::Tier::qk
                        : bd_set == "ppd" ? qk::Tier::ppd
                                          : qk::Tier::full;
        if (!bd_short && !bd_main && !bd_logwin) bd_short = true;
        auto show = [&](const char* name, const qk::BoundInterval& b) {
            std::cout << name << " [" << b.lower << ", " << b.upper << "]\n";
        };
        if (bd_short)
            show("short", qk::bounds_short(spec.alpha, spec.q, unsigned(bd_k), kind));
        if (bd_main)
            show("main", qk::bounds_main(spec.alpha, spec.delta, spec.n, spec.q,
                                         unsigned(bd_k), kind));
        if (bd_logwin)
            show("log-window", qk::bounds_logwindow(spec.alpha, spec.delta, spec.n, spec.q,
                                           unsigned(bd_k), kind));
        return 0;
    }

    if (bexact->parsed()) {
        std::cout << qk::rational_to_text(
                         qk::b_exact(unsigned(bx_n), unsigned(bx_m)))
                  << '\n';
        return 0;
    }
    if (pnotm->parsed()) {
        std::cout << qk::rational_to_text(
                         qk::p_not_m(unsigned(pn_n), unsigned(pn_m)))
                  << '\n';
        return 0;
    }
    if (ppd->parsed()) {
        auto primes = qk::ppd_primes(qk::BigNat(static_cast<unsigned long>(pp_q)),
                                     unsigned(pp_m));
        for (std::size_t i = 0; i < primes.size(); ++i)
            std::cout << (i ? " " : "") << primes[i].get_str();
        std::cout << '\n';
        return 0;
    }
    if (order->parsed()) {
        std::cout << qk::group_order(qk::GroupSpec::parse(or_group)).get_str() << '\n';
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::length_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
