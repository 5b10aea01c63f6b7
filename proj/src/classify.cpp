#include "qk/classify.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qk {

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::none: return "none";
        case Tier::qk: return "qk";
        case Tier::ppd: return "ppd";
        case Tier::full: return "full";
    }
    return "?";
}

CharPolyProfile profile(const GroupSpec& spec, const MatF& g) {
    CharPolyProfile prof;
    Poly cp = char_poly(g);
    prof.total_degree = unsigned(cp.degree());
    FactoredPoly fp = factorize_poly(cp);
    for (auto& [f, mult] : fp.factors) {
        FactorInfo info;
        info.degree = unsigned(f.degree());
        info.mult = mult;
        info.self_conjugate = false;
        info.f = std::move(f);
        prof.factors.push_back(std::move(info));
    }
    if (spec.is_bilinear()) {
        for (std::size_t i = 0; i < prof.factors.size(); ++i) {
            Poly conj = conjugate_poly(prof.factors[i].f);
            if (conj == prof.factors[i].f) {
                prof.factors[i].self_conjugate = true;
                continue;
            }
            for (std::size_t j = 0; j < prof.factors.size(); ++j)
                if (prof.factors[j].f == conj) {
                    prof.factors[i].partner = j;
                    break;
                }
        }
    }
    return prof;
}

Tier classify_k(const GroupSpec& spec, const CharPolyProfile& prof, unsigned k) {
    if (k < 2 || k > spec.d)
        throw std::invalid_argument("classify_k: k out of range [2, d]");
    if (spec.family == Family::SL || spec.family == Family::SU) {
        if (spec.family == Family::SU && k % 2 == 0) return Tier::none;
        // Exactly one factor of degree divisible by k; it must have degree
        // exactly k and multiplicity 1.
        const FactorInfo* hit = nullptr;
        for (const auto& fi : prof.factors) {
            if (fi.degree % k != 0) continue;
            if (hit != nullptr) return Tier::none;
            hit = &fi;
        }
        if (hit == nullptr || hit->degree != k || hit->mult != 1) return Tier::none;
        return Tier::qk;
    }
    // Symplectic / orthogonal.
    const FactorInfo* hit = nullptr;
    for (const auto& fi : prof.factors) {
        if (fi.self_conjugate) {
            if (fi.degree % (2 * k) != 0) continue;
            if (hit != nullptr) return Tier::none;
            hit = &fi;
        } else if (fi.degree % k == 0) {
            return Tier::none;
        }
    }
    if (hit == nullptr || hit->degree != 2 * k || hit->mult != 1) return Tier::none;
    return Tier::qk;
}

std::size_t distinguished_index(const GroupSpec& spec, const CharPolyProfile& prof,
                                unsigned k) {
    const unsigned target = spec.alpha * k;
    for (std::size_t i = 0; i < prof.factors.size(); ++i) {
        const auto& fi = prof.factors[i];
        if (fi.degree == target && fi.mult == 1 &&
            (!spec.is_bilinear() || fi.self_conjugate))
            return i;
    }
    throw std::invalid_argument("distinguished_index: no factor of degree alpha*k");
}

std::pair<BigNat, unsigned> compute_B(const GroupSpec& spec,
                                      const CharPolyProfile& prof, unsigned k) {
    const std::size_t dist = distinguished_index(spec, prof, k);
    unsigned maxmult = 1;
    for (const auto& fi : prof.factors) maxmult = std::max(maxmult, fi.mult);
    unsigned beta = 0;
    {
        BigNat pw(1);
        while (pw < maxmult) {
            pw *= spec.p;
            ++beta;
        }
    }
    const BigNat q(static_cast<unsigned long>(spec.q));
    BigNat B = pow_nat(BigNat(spec.p), beta);
    for (std::size_t i = 0; i < prof.factors.size(); ++i) {
        if (i == dist) continue;
        B *= pow_nat(q, (unsigned long)spec.delta * prof.factors[i].degree) - 1;
    }
    return {B, beta};
}

BigNat annihilating_exponent(const GroupSpec& spec, const CharPolyProfile& prof) {
    unsigned maxmult = 1;
    for (const auto& fi : prof.factors) maxmult = std::max(maxmult, fi.mult);
    unsigned beta = 0;
    {
        BigNat pw(1);
        while (pw < maxmult) {
            pw *= spec.p;
            ++beta;
        }
    }
    const BigNat q(static_cast<unsigned long>(spec.q));
    BigNat l(1);
    for (const auto& fi : prof.factors) {
        BigNat term = pow_nat(q, (unsigned long)spec.delta * fi.degree) - 1;
        if (term > 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.get_mpz_t());
    }
    return pow_nat(BigNat(spec.p), beta) * l;
}

BigNat element_r_part(const MatF& g, const BigNat& E, const BigNat& r) {
    const BigNat rv = r_part(E, r);
    const BigNat rest = E / rv;
    const MatF id = MatF::identity(g.F, g.d);
    MatF h = mat_pow(g, rest);
    BigNat part(1);
    while (!(h == id)) {
        h = mat_pow(h, r);
        part *= r;
        if (part > rv)
            throw std::domain_error("element_r_part: E is not an annihilating exponent");
    }
    return part;
}

Tier refine_tier(const GroupSpec& spec, const MatF& g, const CharPolyProfile& prof,
                 unsigned k, Tier base) {
    if (base != Tier::qk) throw std::invalid_argument("refine_tier: base must be qk");
    const unsigned m = spec.delta * spec.alpha * k;
    const BigNat q(static_cast<unsigned long>(spec.q));
    const std::vector<BigNat> ppds = ppd_primes(q, m);
    if (ppds.empty()) return Tier::qk;

    const BigNat E = annihilating_exponent(spec, prof);
    std::map<BigNat, BigNat> parts;
    for (const auto& r : ppds) parts[r] = element_r_part(g, E, r);

    bool has_ppd = false;
    for (const auto& [r, part] : parts)
        if (part > 1) has_ppd = true;
    if (!has_ppd) return Tier::qk;

    const BigNat qm1 = pow_nat(q, m) - 1;
    const BigNat horder = group_order(spec);
    for (const auto& r : ppds) {
        if (!mpz_divisible_p(horder.get_mpz_t(), r.get_mpz_t())) continue;
        if (parts[r] != r_part(qm1, r)) return Tier::ppd;
    }
    return Tier::full;
}

PowerReport verify_power_structure(const GroupSpec& spec, const MatF& g,
                                   unsigned k, const BigNat& B) {
    const CharPolyProfile prof = profile(spec, g);
    const std::size_t dist = distinguished_index(spec, prof, k);

    PowerReport rep;
    const MatF h = mat_pow(g, B);
    rep.one_eigenspace_dim =
        nullspace(mat_sub(h, MatF::identity(g.F, g.d))).dim();
    const Subspace u = kernel_of_poly(g, prof.factors[dist].f);
    rep.complement_dim = u.dim();
    rep.irreducible = is_irreducible_action(restrict_action(h, u));
    rep.eigenspace_ok = (rep.one_eigenspace_dim == spec.d - spec.alpha * k);
    return rep;
}

std::optional<unsigned> find_good_k(const GroupSpec& spec,
                                    const CharPolyProfile& prof) {
    const double logn = std::log(double(spec.n));
    unsigned k = unsigned(std::floor(logn)) + 1;
    if (k % 2 == 0) ++k;
    for (; double(k) <= 2.0 * logn; k += 2) {
        if (double(k) <= logn) continue;
        if (k < 2 || k > spec.d) continue;
        if (classify_k(spec, prof, k) == Tier::qk) return k;
    }
    return std::nullopt;
}

Classification classify_element(const GroupSpec& spec, const MatF& g, unsigned k) {
    Classification c;
    c.k = k;
    const CharPolyProfile prof = profile(spec, g);
    c.tier = classify_k(spec, prof, k);
    if (c.tier == Tier::none) return c;
    c.distinguished = distinguished_index(spec, prof, k);
    std::tie(c.B, c.beta) = compute_B(spec, prof, k);
    c.ppd_set =
        ppd_primes(BigNat(static_cast<unsigned long>(spec.q)), spec.delta * spec.alpha * k);
    c.tier = refine_tier(spec, g, prof, k, c.tier);
    c.witness = verify_power_structure(spec, g, k, c.B);
    return c;
}

std::string classification_to_json(const Classification& c) {
    nlohmann::json j;
    j["k"] = c.k;
    j["tier"] = tier_name(c.tier);
    j["B"] = c.B.get_str();
    j["beta"] = c.beta;
    std::vector<std::string> ppd;
    for (const auto& r : c.ppd_set) ppd.push_back(r.get_str());
    j["ppd"] = ppd;
    j["eigenspace_dim"] = c.witness.one_eigenspace_dim;
    j["complement_dim"] = c.witness.complement_dim;
    j["irreducible"] = c.witness.irreducible;
    return j.dump();
}

}  // namespace qk
