#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qk/arith.hpp"

namespace qk {

/// A field element is its integer encoding sum c_i p^i of the coefficient
/// vector of the residue, with 0 <= c_i < p. Elements only make sense
/// relative to the FieldSpec that owns them.
using Fel = std::uint32_t;

/// F_{p^e} with a deterministically chosen irreducible modulus (the monic
/// irreducible of degree e whose integer encoding is smallest). Immutable
/// after construction; share via FieldPtr.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> make(std::uint32_t p, unsigned e,
                                                 std::uint64_t limit = 1u << 20);

    std::uint32_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint32_t q() const { return q_; }
    /// Modulus coefficients, ascending degree, length e+1 (monic). For e=1
    /// this is x (arithmetic is plain mod p).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;  // throws on zero
    Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
    Fel pow(Fel a, const BigNat& n) const;
    Fel pow_u64(Fel a, std::uint64_t n) const;
    Fel frobenius(Fel a) const { return pow_u64(a, p_); }

    /// "p e m_0 m_1 ... m_e" header used by the matrix text format.
    std::string header() const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_;
    }

private:
    FieldSpec() = default;

    Fel mul_slow(Fel a, Fel b) const;

    std::uint32_t p_ = 0;
    unsigned e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    // Discrete log/exp tables over a primitive element, built when q fits.
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
    bool has_tables_ = false;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

}  // namespace qk
