#include "qk/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qk {

namespace {

using FpPoly = std::vector<std::uint32_t>;  // ascending coefficients mod p

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod,
                 std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    FpPoly r(acc.begin(), acc.end());
    // mod is monic of degree mod.size()-1
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > deg;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            r[i - deg + j] =
                (r[i - deg + j] + p - std::uint32_t(c * mod[j] % p)) % p;
    }
    r.resize(deg);
    fp_trim(r);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint64_t r = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return std::uint32_t(r);
    };
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lb = inv_mod_p(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t c = std::uint64_t(a.back()) * lb % p;
            if (c != 0) {
                std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[off + j] =
                        (a[off + j] + p - std::uint32_t(c * b[j] % p)) % p;
            }
            a.pop_back();
            fp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Monic degree-e polynomial over F_p with no irreducible factor of degree
// <= e/2 is irreducible.
bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    FpPoly h = {0, 1};  // x
    for (std::size_t i = 1; i <= e / 2; ++i) {
        // h = h^p mod f
        FpPoly acc = {1}, base = h;
        std::uint32_t exp = p;
        while (exp) {
            if (exp & 1) acc = fp_mulmod(acc, base, f, p);
            base = fp_mulmod(base, base, f, p);
            exp >>= 1;
        }
        h = acc;
        FpPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(diff, f, p);
        if (g.size() != 1) return false;  // nontrivial gcd (or diff == 0)
    }
    return true;
}

std::mutex g_cache_mutex;
std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> g_cache;

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint32_t p, unsigned e,
                                                 std::uint64_t limit) {
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_cache.find({p, e});
        if (it != g_cache.end()) return it->second;
    }
    if (!is_prime(BigNat(p))) throw std::invalid_argument("make_field: p not prime");
    if (e < 1) throw std::invalid_argument("make_field: e >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > limit) throw std::invalid_argument("make_field: q exceeds size limit");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->e_ = e;
    spec->q_ = std::uint32_t(q);

    if (e == 1) {
        spec->modulus_ = {0, 1};  // x
    } else {
        // Smallest integer-encoded monic irreducible of degree e.
        for (std::uint64_t code = 0; code < q; ++code) {
            FpPoly f(e + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = std::uint32_t(c % p);
                c /= p;
            }
            f[e] = 1;
            if (fp_irreducible(f, p)) {
                spec->modulus_.assign(f.begin(), f.end());
                break;
            }
        }
        if (spec->modulus_.empty())
            throw std::logic_error("make_field: no irreducible found");
    }

    // Discrete log tables for fast multiplication in small fields.
    if (q <= (1u << 16)) {
        FactoredNat fq1;
        if (q > 2) fq1 = factorize_nat(BigNat(q - 1));
        auto pow_slow = [&](Fel a, std::uint64_t n) {
            Fel r = 1, base = a;
            while (n) {
                if (n & 1) r = spec->mul_slow(r, base);
                base = spec->mul_slow(base, base);
                n >>= 1;
            }
            return r;
        };
        Fel gen = 0;
        for (Fel cand = 1; cand < q; ++cand) {
            bool ok = true;
            for (const auto& [r, m] : fq1.factors) {
                (void)m;
                if (pow_slow(cand, (q - 1) / r.get_ui()) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
        spec->exp_.resize(q - 1);
        spec->log_.assign(q, 0);
        Fel cur = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            spec->exp_[i] = cur;
            spec->log_[cur] = std::uint32_t(i);
            cur = spec->mul_slow(cur, gen);
        }
        spec->has_tables_ = true;
    }

    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto [it, inserted] = g_cache.emplace(std::make_pair(p, e), spec);
    (void)inserted;
    return it->second;
}

Fel FieldSpec::add(Fel a, Fel b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    Fel r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Fel FieldSpec::neg(Fel a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return (p_ - a) % p_;
    Fel r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += (p_ - (a % p_)) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Fel FieldSpec::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel FieldSpec::mul_slow(Fel a, Fel b) const {
    if (e_ == 1) return std::uint32_t(std::uint64_t(a) * b % p_);
    FpPoly fa(e_), fb(e_);
    for (unsigned i = 0; i < e_; ++i) {
        fa[i] = a % p_;
        a /= p_;
        fb[i] = b % p_;
        b /= p_;
    }
    fp_trim(fa);
    fp_trim(fb);
    FpPoly mod(modulus_.begin(), modulus_.end());
    FpPoly r = fp_mulmod(fa, fb, mod, p_);
    Fel code = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        code += (i < r.size() ? r[i] : 0) * mult;
        mult *= p_;
    }
    return code;
}

Fel FieldSpec::mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_)
        return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_slow(a, b);
}

Fel FieldSpec::inv(Fel a) const {
    if (a == 0) throw std::domain_error("field inversion of zero");
    if (has_tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow_u64(a, q_ - 2);
}

Fel FieldSpec::pow_u64(Fel a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    if (has_tables_)
        return exp_[std::uint64_t(log_[a]) * (n % (q_ - 1)) % (q_ - 1)];
    Fel r = 1, base = a;
    n %= (q_ - 1);  // a^(q-1) = 1 for a != 0
    if (n == 0) return 1;
    while (n) {
        if (n & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        n >>= 1;
    }
    return r;
}

Fel FieldSpec::pow(Fel a, const BigNat& n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    return pow_u64(a, mpz_fdiv_ui(n.get_mpz_t(), q_ - 1));
}

std::string FieldSpec::header() const {
    std::ostringstream os;
    os << p_ << ' ' << e_;
    for (auto c : modulus_) os << ' ' << c;
    return os.str();
}

}  // namespace qk
