#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/matgf.hpp"
#include "qk/rng.hpp"

namespace qk {

enum class Family { SL, SU, Sp, SOodd, SOplus, SOminus };

std::string family_name(Family f);

/// One row of the classical-group table: family, rank parameter n, field
/// size q, with the derived dimension d and the constants alpha, delta, eps.
/// Entry field is F_q, or F_{q^2} for SU. Orthogonal families require odd q.
struct GroupSpec {
    Family family;
    unsigned n;
    std::uint64_t q;
    std::uint32_t p;
    unsigned e;  // q = p^e

    unsigned d;
    unsigned alpha;
    unsigned delta;
    int eps;

    FieldPtr field;               // entry field (F_{q^2} for SU)
    std::optional<MatF> form;     // Gram matrix; absent for SL

    static GroupSpec make(Family family, unsigned n, std::uint64_t q);

    /// Grammar: "SL:n:q", "SU:n:q", "Sp:n:q", "SO:odd:n:q", "SO:+:n:q",
    /// "SO:-:n:q".
    static GroupSpec parse(const std::string& s);
    std::string to_string() const;

    bool is_unitary() const { return family == Family::SU; }
    bool is_bilinear() const {
        return family == Family::Sp || family == Family::SOodd ||
               family == Family::SOplus || family == Family::SOminus;
    }
    /// Conjugation a -> a^q in the entry field (identity unless unitary).
    Fel conj(Fel a) const { return is_unitary() ? field->pow_u64(a, q) : a; }
};

struct GroupElement {
    const GroupSpec* spec;
    MatF m;
};

BigNat group_order(const GroupSpec& spec);

/// The Gram matrix of the defining form (nullopt for SL).
std::optional<MatF> standard_form(const GroupSpec& spec);

bool is_member(const GroupSpec& spec, const MatF& m);

/// Exactly uniform over the group. SL via the GL -> SL coset bijection;
/// isometry groups via vector-by-vector framed-basis sampling with a
/// determinant correction (reflection for SO, diag(t,1,...,1) for SU).
MatF sample_uniform(const GroupSpec& spec, Rng& rng);

/// All elements by breadth-first closure over a random generating set,
/// resampled until the closure size matches the order formula.
/// Throws if group_order(spec) > cap.
std::vector<MatF> enumerate_group(const GroupSpec& spec, std::uint64_t cap,
                                  Rng& rng);

}  // namespace qk
