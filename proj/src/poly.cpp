#include "qk/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qk/rng.hpp"

namespace qk {

namespace {

void trim(std::vector<Fel>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly random_poly_below(const FieldPtr& F, int deg_bound, Rng& rng) {
    std::vector<Fel> c(deg_bound);
    for (auto& x : c) x = Fel(rng.below(F->q()));
    trim(c);
    return Poly(F, std::move(c));
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<Fel> coeffs) : F(std::move(f)), c(std::move(coeffs)) {
    trim(c);
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<Fel> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.F->add(a.coeff(i), b.coeff(i));
    return Poly(a.F, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<Fel> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.F->sub(a.coeff(i), b.coeff(i));
    return Poly(a.F, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.F);
    std::vector<Fel> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
    }
    return Poly(a.F, std::move(c));
}

Poly poly_scale(const Poly& a, Fel s) {
    std::vector<Fel> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.F->mul(a.c[i], s);
    return Poly(a.F, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(a.F), a};
    std::vector<Fel> rem = a.c;
    std::vector<Fel> quo(a.c.size() - b.c.size() + 1, 0);
    const Fel linv = a.F->inv(b.lead());
    for (std::size_t i = rem.size(); i-- > b.c.size() - 1;) {
        Fel q = a.F->mul(rem[i], linv);
        if (q != 0) {
            std::size_t off = i - (b.c.size() - 1);
            quo[off] = q;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                rem[off + j] = a.F->sub(rem[off + j], a.F->mul(q, b.c[j]));
        }
    }
    rem.resize(b.c.size() - 1);
    return {Poly(a.F, std::move(quo)), Poly(a.F, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_monic(const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(a, a.F->inv(a.lead()));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& a) {
    if (a.c.size() <= 1) return Poly::zero(a.F);
    std::vector<Fel> c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        Fel mult = Fel(i % a.F->p());
        Fel m = 0;
        for (Fel t = 0; t < mult; ++t) m = a.F->add(m, 1);
        c[i - 1] = a.F->mul(a.c[i], m);
    }
    return Poly(a.F, std::move(c));
}

Fel poly_eval(const Poly& a, Fel x) {
    Fel r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        r = a.F->add(a.F->mul(r, x), a.c[i]);
    return r;
}

Poly poly_powmod(const Poly& base, const BigNat& n, const Poly& mod) {
    Poly r = Poly::one(base.F);
    Poly b = poly_mod(base, mod);
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0) return poly_mod(r, mod);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) r = poly_mod(poly_mul(r, b), mod);
        if (i + 1 < bits) b = poly_mod(poly_mul(b, b), mod);
    }
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

namespace {

// Inverse Frobenius on coefficients: a^(p^(e-1)).
Poly pth_root(const Poly& f) {
    const auto& F = f.F;
    std::uint64_t exp = 1;
    for (unsigned i = 0; i + 1 < F->e(); ++i) exp *= F->p();
    std::vector<Fel> c;
    for (std::size_t i = 0; i < f.c.size(); i += F->p())
        c.push_back(F->pow_u64(f.c[i], exp));
    return Poly(F, std::move(c));
}

// Squarefree decomposition in characteristic p. Appends (part, multiplicity)
// pairs; each part is monic squarefree, parts pairwise coprime.
void squarefree_decompose(Poly f, unsigned mult,
                          std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() <= 0) return;
    Poly fd = poly_derivative(f);
    if (fd.is_zero()) {
        squarefree_decompose(pth_root(f), mult * f.F->p(), out);
        return;
    }
    Poly c = poly_gcd(f, fd);
    Poly w = poly_divmod(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(poly_monic(z), mult * i);
        ++i;
        w = std::move(y);
        c = poly_divmod(c, w).first;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * f.F->p(), out);
}

// Equal-degree splitting of a monic squarefree product of degree-d
// irreducibles (Cantor-Zassenhaus; trace map in characteristic 2).
void equal_degree_split(const Poly& f, unsigned d, Rng& rng,
                        std::vector<Poly>& out) {
    if (unsigned(f.degree()) == d) {
        out.push_back(poly_monic(f));
        return;
    }
    const auto& F = f.F;
    const BigNat q(F->q());
    Poly g = Poly::zero(F);
    for (;;) {
        Poly r = random_poly_below(F, f.degree(), rng);
        if (r.degree() < 1) continue;
        g = poly_gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) break;
        if (F->p() == 2) {
            // Trace of r over F_2: sum of r^(2^i) for i < e*d.
            Poly t = poly_mod(r, f);
            Poly acc = t;
            const unsigned steps = F->e() * d;
            for (unsigned i = 1; i < steps; ++i) {
                t = poly_powmod(t, BigNat(2), f);
                acc = poly_add(acc, t);
            }
            g = poly_gcd(acc, f);
        } else {
            BigNat m = (pow_nat(q, d) - 1) / 2;
            Poly s = poly_powmod(r, m, f);
            s = poly_sub(s, Poly::one(F));
            g = poly_gcd(s, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree_split(g, d, rng, out);
    equal_degree_split(poly_divmod(f, g).first, d, rng, out);
}

}  // namespace

FactoredPoly factorize_poly(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factorize_poly: zero polynomial");
    FactoredPoly res;
    res.unit = f.lead();
    Poly g = poly_monic(f);
    if (g.degree() == 0) return res;

    // Fixed internal seed: factorization is a deterministic function of f.
    Rng rng(0x5eedf0c705ULL);

    // Strip powers of x first (roots at zero).
    unsigned xmult = 0;
    while (!g.is_zero() && g.c[0] == 0) {
        g.c.erase(g.c.begin());
        ++xmult;
    }
    if (xmult > 0) res.factors.emplace_back(Poly::x(f.F), xmult);

    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree_decompose(g, 1, parts);

    for (auto& [part, mult] : parts) {
        // Distinct-degree split of the squarefree part.
        Poly rest = part;
        Poly h = Poly::x(f.F);
        const BigNat q(f.F->q());
        for (unsigned d = 1; 2 * d <= unsigned(rest.degree()); ++d) {
            h = poly_powmod(h, q, rest);
            Poly diff = poly_sub(h, Poly::x(f.F));
            Poly gd = poly_gcd(diff, rest);
            if (gd.degree() > 0) {
                std::vector<Poly> irs;
                equal_degree_split(gd, d, rng, irs);
                for (auto& ir : irs) res.factors.emplace_back(ir, mult);
                rest = poly_divmod(rest, gd).first;
                h = poly_mod(h, rest);
            }
        }
        if (rest.degree() > 0) res.factors.emplace_back(rest, mult);
    }

    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return res;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const unsigned n = unsigned(f.degree());
    const Poly fm = poly_monic(f);
    const Poly X = Poly::x(f.F);
    const BigNat q(f.F->q());
    // Rabin: x^(q^n) = x mod f, and gcd(x^(q^(n/s)) - x, f) = 1 for prime s|n.
    std::vector<unsigned> sprimes;
    {
        unsigned rest = n;
        for (unsigned d = 2; d * d <= rest; ++d)
            if (rest % d == 0) {
                sprimes.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        if (rest > 1) sprimes.push_back(rest);
    }
    for (unsigned s : sprimes) {
        Poly h = poly_powmod(X, pow_nat(q, n / s), fm);
        Poly g = poly_gcd(poly_sub(h, X), fm);
        if (g.degree() != 0) return false;
    }
    Poly h = poly_powmod(X, pow_nat(q, n), fm);
    return poly_sub(h, X).is_zero();
}

Poly conjugate_poly(const Poly& f) {
    if (f.is_zero() || f.c[0] == 0)
        throw std::domain_error("conjugate_poly: f(0) must be nonzero");
    std::vector<Fel> c(f.c.rbegin(), f.c.rend());
    Poly r(f.F, std::move(c));
    return poly_scale(r, f.F->inv(f.c[0]));
}

bool is_self_conjugate(const Poly& f) { return conjugate_poly(f) == f; }

std::string poly_to_text(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ' ';
        os << f.c[i];
    }
    return os.str();
}

Poly poly_from_text(FieldPtr F, const std::string& text) {
    std::istringstream is(text);
    std::vector<Fel> c;
    std::uint64_t v;
    while (is >> v) {
        if (v >= F->q()) throw std::invalid_argument("coefficient out of range");
        c.push_back(Fel(v));
    }
    return Poly(std::move(F), std::move(c));
}

std::vector<Poly> all_monic_irreducibles(const FieldPtr& F, unsigned degree) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= F->q();
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Fel> c(degree + 1, 0);
        std::uint64_t v = code;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = Fel(v % F->q());
            v /= F->q();
        }
        c[degree] = 1;
        Poly f(F, std::move(c));
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace qk
