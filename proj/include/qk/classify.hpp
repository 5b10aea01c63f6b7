#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/groups.hpp"

namespace qk {

struct FactorInfo {
    Poly f;                 // monic irreducible over the entry field
    unsigned degree;
    unsigned mult;
    bool self_conjugate;
    std::optional<std::size_t> partner;  // index of the conjugate factor
};

struct CharPolyProfile {
    std::vector<FactorInfo> factors;  // sorted by (degree, coefficients)
    unsigned total_degree = 0;
};

enum class Tier { none, qk, ppd, full };

// Tiers are nested: full => ppd => qk.
inline bool operator<(Tier a, Tier b) { return int(a) < int(b); }
inline bool operator>=(Tier a, Tier b) { return int(a) >= int(b); }

std::string tier_name(Tier t);

struct PowerReport {
    unsigned one_eigenspace_dim = 0;
    unsigned complement_dim = 0;
    bool irreducible = false;
    bool eigenspace_ok = false;  // one_eigenspace_dim == d - alpha*k
};

struct Classification {
    unsigned k = 0;
    Tier tier = Tier::none;
    std::optional<std::size_t> distinguished;  // index of f_1 in the profile
    BigNat B = 1;
    unsigned beta = 0;
    std::vector<BigNat> ppd_set;
    PowerReport witness;
};

/// Factorization of the characteristic polynomial over the entry field,
/// with self-conjugacy and conjugate-partner annotations.
CharPolyProfile profile(const GroupSpec& spec, const MatF& g);

/// The degree test of the Q_k definition (no order conditions yet).
Tier classify_k(const GroupSpec& spec, const CharPolyProfile& prof, unsigned k);

/// Index of the distinguished factor f_1 (degree alpha*k, multiplicity 1).
std::size_t distinguished_index(const GroupSpec& spec, const CharPolyProfile& prof,
                                unsigned k);

/// B = p^beta * prod over distinct factors other than f_1 of (q^(delta k_i) - 1),
/// beta = ceil(log_p(max multiplicity)).
std::pair<BigNat, unsigned> compute_B(const GroupSpec& spec,
                                      const CharPolyProfile& prof, unsigned k);

/// E = p^beta * lcm over all factors of (q^(delta k_i) - 1); g^E = 1 for any g
/// with this profile.
BigNat annihilating_exponent(const GroupSpec& spec, const CharPolyProfile& prof);

/// r-part of |g|, given an annihilating exponent E.
BigNat element_r_part(const MatF& g, const BigNat& E, const BigNat& r);

/// Upgrade a Q_k classification to ppd/full using the order conditions.
Tier refine_tier(const GroupSpec& spec, const MatF& g, const CharPolyProfile& prof,
                 unsigned k, Tier base);

PowerReport verify_power_structure(const GroupSpec& spec, const MatF& g,
                                   unsigned k, const BigNat& B);

/// Smallest odd k with log(n) < k <= 2 log(n) whose degree test passes.
std::optional<unsigned> find_good_k(const GroupSpec& spec,
                                    const CharPolyProfile& prof);

/// Full pipeline: profile, degree test, order refinement, B, power check.
Classification classify_element(const GroupSpec& spec, const MatF& g, unsigned k);

/// {"k", "tier", "B" (decimal string), "beta", "ppd", "eigenspace_dim",
///  "complement_dim", "irreducible"} as a JSON object string.
std::string classification_to_json(const Classification& c);

}  // namespace qk
