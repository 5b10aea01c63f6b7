#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qk/field.hpp"

namespace qk {

/// Dense univariate polynomial over a FieldSpec. Coefficients ascending;
/// normalized so the leading coefficient is nonzero (zero polynomial has an
/// empty coefficient vector).
struct Poly {
    FieldPtr F;
    std::vector<Fel> c;

    Poly() = default;
    Poly(FieldPtr f, std::vector<Fel> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }  // -1 for zero
    Fel lead() const { return c.back(); }
    Fel coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Fel s);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_monic(const Poly& a);
Poly poly_derivative(const Poly& a);
Fel poly_eval(const Poly& a, Fel x);
Poly poly_powmod(const Poly& base, const BigNat& n, const Poly& mod);

/// Deterministic total order: degree first, then coefficient encodings from
/// the top coefficient down.
bool poly_less(const Poly& a, const Poly& b);

struct FactoredPoly {
    Fel unit;  // leading coefficient of the input
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, mult
};

/// Squarefree decomposition, distinct-degree split, Cantor-Zassenhaus
/// equal-degree split (trace variant in characteristic 2). Deterministic:
/// the internal splitting generator uses a fixed library seed.
FactoredPoly factorize_poly(const Poly& f);

bool is_irreducible(const Poly& f);

/// f*(x) = f(0)^{-1} x^{deg f} f(1/x); roots are the inverses of f's roots.
/// Requires f(0) != 0.
Poly conjugate_poly(const Poly& f);

bool is_self_conjugate(const Poly& f);

/// Space-separated ascending coefficient encodings ("1 1 1" = x^2+x+1).
std::string poly_to_text(const Poly& f);
Poly poly_from_text(FieldPtr F, const std::string& text);

/// Companion matrix helper lives in matgf; exposed here for tests that need
/// all monic irreducibles of a given degree.
std::vector<Poly> all_monic_irreducibles(const FieldPtr& F, unsigned degree);

}  // namespace qk
