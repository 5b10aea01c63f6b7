#include "qk/groups.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qk {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Fel>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (Fel x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::pair<std::uint32_t, unsigned> prime_power_split(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    FactoredNat fn = factorize_nat(BigNat(static_cast<unsigned long>(q)));
    if (fn.factors.size() != 1)
        throw std::invalid_argument("q must be a prime power");
    const auto& [p, e] = *fn.factors.begin();
    return {std::uint32_t(p.get_ui()), e};
}

// Smallest non-square in the multiplicative group of F (q odd).
Fel non_square(const FieldPtr& F) {
    const std::uint64_t q = F->q();
    for (Fel c = 2; c < q; ++c)
        if (F->pow_u64(c, (q - 1) / 2) != 1) return c;
    throw std::logic_error("non_square: not found");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::SOodd: return "SO:odd";
        case Family::SOplus: return "SO:+";
        case Family::SOminus: return "SO:-";
    }
    return "?";
}

GroupSpec GroupSpec::make(Family family, unsigned n, std::uint64_t q) {
    GroupSpec s;
    s.family = family;
    s.n = n;
    s.q = q;
    std::tie(s.p, s.e) = prime_power_split(q);
    switch (family) {
        case Family::SL:
            if (n < 2) throw std::invalid_argument("SL requires n >= 2");
            s.d = n; s.alpha = 1; s.delta = 1; s.eps = 1;
            s.field = FieldSpec::make(s.p, s.e);
            break;
        case Family::SU:
            if (n < 2) throw std::invalid_argument("SU requires n >= 2");
            s.d = n; s.alpha = 1; s.delta = 2; s.eps = -1;
            s.field = FieldSpec::make(s.p, 2 * s.e);
            break;
        case Family::Sp:
            if (n < 1) throw std::invalid_argument("Sp requires n >= 1");
            s.d = 2 * n; s.alpha = 2; s.delta = 1; s.eps = 1;
            s.field = FieldSpec::make(s.p, s.e);
            break;
        case Family::SOodd:
            if (n < 1) throw std::invalid_argument("SO odd requires n >= 1");
            if (s.p == 2) throw std::invalid_argument("orthogonal families require odd q");
            s.d = 2 * n + 1; s.alpha = 2; s.delta = 1; s.eps = 1;
            s.field = FieldSpec::make(s.p, s.e);
            break;
        case Family::SOplus:
        case Family::SOminus:
            if (n < 1) throw std::invalid_argument("SO even requires n >= 1");
            if (s.p == 2) throw std::invalid_argument("orthogonal families require odd q");
            s.d = 2 * n; s.alpha = 2; s.delta = 1;
            s.eps = (family == Family::SOplus) ? 1 : -1;
            s.field = FieldSpec::make(s.p, s.e);
            break;
    }
    s.form = standard_form(s);
    return s;
}

GroupSpec GroupSpec::parse(const std::string& str) {
    std::vector<std::string> parts;
    std::stringstream ss(str);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto num = [](const std::string& x) -> std::uint64_t {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(x, &pos);
        if (pos != x.size()) throw std::invalid_argument("bad number in group spec");
        return v;
    };
    if (parts.size() == 3) {
        Family f;
        if (parts[0] == "SL") f = Family::SL;
        else if (parts[0] == "SU") f = Family::SU;
        else if (parts[0] == "Sp") f = Family::Sp;
        else throw std::invalid_argument("unknown group family: " + parts[0]);
        return make(f, unsigned(num(parts[1])), num(parts[2]));
    }
    if (parts.size() == 4 && parts[0] == "SO") {
        Family f;
        if (parts[1] == "odd") f = Family::SOodd;
        else if (parts[1] == "+") f = Family::SOplus;
        else if (parts[1] == "-") f = Family::SOminus;
        else throw std::invalid_argument("unknown SO type: " + parts[1]);
        return make(f, unsigned(num(parts[2])), num(parts[3]));
    }
    throw std::invalid_argument("bad group spec: " + str);
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << family_name(family) << ':' << n << ':' << q;
    return os.str();
}

BigNat group_order(const GroupSpec& s) {
    const BigNat q(static_cast<unsigned long>(s.q));
    BigNat order(1);
    switch (s.family) {
        case Family::SL: {
            order = pow_nat(q, (unsigned long)s.n * (s.n - 1) / 2);
            for (unsigned i = 2; i <= s.n; ++i) order *= pow_nat(q, i) - 1;
            break;
        }
        case Family::SU: {
            order = pow_nat(q, (unsigned long)s.n * (s.n - 1) / 2);
            for (unsigned i = 2; i <= s.n; ++i)
                order *= pow_nat(q, i) - (i % 2 == 0 ? 1 : -1);
            break;
        }
        case Family::Sp:
        case Family::SOodd: {
            order = pow_nat(q, (unsigned long)s.n * s.n);
            for (unsigned i = 1; i <= s.n; ++i) order *= pow_nat(q, 2 * i) - 1;
            break;
        }
        case Family::SOplus:
        case Family::SOminus: {
            order = pow_nat(q, (unsigned long)s.n * (s.n - 1));
            order *= pow_nat(q, s.n) - s.eps;
            for (unsigned i = 1; i + 1 <= s.n; ++i) order *= pow_nat(q, 2 * i) - 1;
            break;
        }
    }
    return order;
}

std::optional<MatF> standard_form(const GroupSpec& s) {
    const FieldPtr& F = s.field;
    switch (s.family) {
        case Family::SL:
            return std::nullopt;
        case Family::SU:
            return MatF::identity(F, s.d);
        case Family::Sp: {
            MatF f(F, s.d);
            for (unsigned b = 0; b < s.n; ++b) {
                f.at(2 * b, 2 * b + 1) = 1;
                f.at(2 * b + 1, 2 * b) = F->neg(1);
            }
            return f;
        }
        case Family::SOodd:
            return MatF::identity(F, s.d);
        case Family::SOplus: {
            MatF f(F, s.d);
            for (unsigned b = 0; b < s.n; ++b) {
                f.at(2 * b, 2 * b + 1) = 1;
                f.at(2 * b + 1, 2 * b) = 1;
            }
            return f;
        }
        case Family::SOminus: {
            MatF f(F, s.d);
            for (unsigned b = 0; b + 1 < s.n; ++b) {
                f.at(2 * b, 2 * b + 1) = 1;
                f.at(2 * b + 1, 2 * b) = 1;
            }
            // Anisotropic tail: the norm form x^2 - nu*y^2 of F_{q^2}.
            f.at(s.d - 2, s.d - 2) = 1;
            f.at(s.d - 1, s.d - 1) = F->neg(non_square(F));
            return f;
        }
    }
    return std::nullopt;
}

bool is_member(const GroupSpec& s, const MatF& m) {
    if (m.d != s.d || !(*m.F == *s.field))
        throw std::invalid_argument("is_member: dimension or field mismatch");
    if (mat_det(m) != 1) return false;
    if (s.family == Family::SL) return true;
    MatF left = s.is_unitary() ? mat_entrywise_pow(mat_transpose(m), s.q)
                               : mat_transpose(m);
    return mat_mul(mat_mul(left, *s.form), m) == *s.form;
}

namespace {

// A fixed isometry of determinant -1 used to fold O onto SO.
MatF so_reflection(const GroupSpec& s) {
    const FieldPtr& F = s.field;
    MatF r = MatF::identity(F, s.d);
    switch (s.family) {
        case Family::SOodd:
            r.at(0, 0) = F->neg(1);
            return r;
        case Family::SOplus:
            r.at(0, 0) = 0; r.at(0, 1) = 1;
            r.at(1, 1) = 0; r.at(1, 0) = 1;
            return r;
        case Family::SOminus:
            if (s.n >= 2) {
                r.at(0, 0) = 0; r.at(0, 1) = 1;
                r.at(1, 1) = 0; r.at(1, 0) = 1;
            } else {
                r.at(0, 0) = F->neg(1);
            }
            return r;
        default:
            throw std::logic_error("so_reflection: not orthogonal");
    }
}

// Uniform sample of the full isometry group of spec.form (GU for unitary,
// Sp for symplectic, O for orthogonal): build the columns of the matrix one
// at a time, choosing uniformly among all vectors that satisfy the pairing
// constraints against the previous columns and the norm constraint. Witt's
// extension theorem makes the count of valid extensions independent of the
// choices made so far, so the final matrix is exactly uniform.
MatF sample_isometry(const GroupSpec& s, Rng& rng) {
    const FieldPtr& F = s.field;
    const unsigned d = s.d;
    const MatF& form = *s.form;
    const std::uint64_t q_entry = F->q();

    std::vector<std::vector<Fel>> cols;
    std::vector<std::vector<Fel>> constraint;  // conj(b_j)^T * form
    // Row-echelon accumulator of accepted columns, for independence checks.
    std::vector<std::vector<Fel>> echelon;

    auto reduce = [&](std::vector<Fel> v) {
        for (const auto& row : echelon) {
            unsigned l = 0;
            while (row[l] == 0) ++l;
            if (v[l] != 0) {
                const Fel c = F->div(v[l], row[l]);
                for (unsigned j = l; j < d; ++j)
                    v[j] = F->sub(v[j], F->mul(c, row[j]));
            }
        }
        return v;
    };

    for (unsigned i = 0; i < d; ++i) {
        // Affine solution set of the linear pairing constraints.
        std::vector<std::vector<Fel>> aug;
        for (unsigned j = 0; j < i; ++j) {
            std::vector<Fel> row = constraint[j];
            row.push_back(form.at(j, i));
            aug.push_back(std::move(row));
        }
        // RREF over width d+1
        std::vector<unsigned> pivots;
        {
            unsigned r = 0;
            for (unsigned c = 0; c < d && r < aug.size(); ++c) {
                unsigned piv = r;
                while (piv < aug.size() && aug[piv][c] == 0) ++piv;
                if (piv == aug.size()) continue;
                std::swap(aug[piv], aug[r]);
                const Fel pinv = F->inv(aug[r][c]);
                for (unsigned j = 0; j <= d; ++j) aug[r][j] = F->mul(aug[r][j], pinv);
                for (unsigned t = 0; t < aug.size(); ++t) {
                    if (t == r || aug[t][c] == 0) continue;
                    const Fel f = aug[t][c];
                    for (unsigned j = 0; j <= d; ++j)
                        aug[t][j] = F->sub(aug[t][j], F->mul(f, aug[r][j]));
                }
                pivots.push_back(c);
                ++r;
            }
            if (r != aug.size())
                throw std::logic_error("sample_isometry: inconsistent constraints");
        }
        std::vector<Fel> x0(d, 0);
        for (unsigned r = 0; r < pivots.size(); ++r) x0[pivots[r]] = aug[r][d];
        std::vector<bool> is_pivot(d, false);
        for (unsigned c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Fel>> nullb;
        for (unsigned f = 0; f < d; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Fel> v(d, 0);
            v[f] = 1;
            for (unsigned r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = F->neg(aug[r][f]);
            nullb.push_back(std::move(v));
        }

        for (;;) {
            std::vector<Fel> x = x0;
            for (const auto& nv : nullb) {
                const Fel c = Fel(rng.below(q_entry));
                if (c == 0) continue;
                for (unsigned j = 0; j < d; ++j)
                    x[j] = F->add(x[j], F->mul(c, nv[j]));
            }
            // Norm constraint (automatic for the alternating symplectic form).
            if (s.family != Family::Sp) {
                Fel norm = 0;
                for (unsigned r = 0; r < d; ++r) {
                    if (x[r] == 0) continue;
                    const Fel xr = s.conj(x[r]);
                    for (unsigned c = 0; c < d; ++c)
                        norm = F->add(norm, F->mul(F->mul(xr, form.at(r, c)), x[c]));
                }
                if (norm != form.at(i, i)) continue;
            }
            std::vector<Fel> res = reduce(x);
            if (std::all_of(res.begin(), res.end(), [](Fel v) { return v == 0; }))
                continue;  // linearly dependent on previous columns
            cols.push_back(x);
            echelon.push_back(std::move(res));
            std::sort(echelon.begin(), echelon.end(), [](const auto& a, const auto& b) {
                unsigned la = 0, lb = 0;
                while (a[la] == 0) ++la;
                while (b[lb] == 0) ++lb;
                return la < lb;
            });
            std::vector<Fel> crow(d, 0);
            for (unsigned c = 0; c < d; ++c) {
                Fel sum = 0;
                for (unsigned r = 0; r < d; ++r)
                    sum = F->add(sum, F->mul(s.conj(x[r]), form.at(r, c)));
                crow[c] = sum;
            }
            constraint.push_back(std::move(crow));
            break;
        }
    }

    MatF m(F, d);
    for (unsigned j = 0; j < d; ++j)
        for (unsigned i = 0; i < d; ++i) m.at(i, j) = cols[j][i];
    return m;
}

}  // namespace

MatF sample_uniform(const GroupSpec& s, Rng& rng) {
    const FieldPtr& F = s.field;
    if (s.family == Family::SL) {
        // Uniform GL by rejection, then the coset bijection GL -> SL.
        for (;;) {
            MatF m(F, s.d);
            for (auto& v : m.a) v = Fel(rng.below(F->q()));
            const Fel det = mat_det(m);
            if (det == 0) continue;
            const Fel dinv = F->inv(det);
            for (unsigned j = 0; j < s.d; ++j) m.at(0, j) = F->mul(m.at(0, j), dinv);
            return m;
        }
    }
    MatF m = sample_isometry(s, rng);
    const Fel det = mat_det(m);
    if (s.family == Family::Sp) {
        if (det != 1) throw std::logic_error("symplectic sample with det != 1");
        return m;
    }
    if (s.is_unitary()) {
        // det lies in the norm-one subgroup; fold GU onto SU.
        if (det != 1) {
            MatF dcorr = MatF::identity(F, s.d);
            dcorr.at(0, 0) = F->inv(det);
            m = mat_mul(dcorr, m);
        }
        return m;
    }
    // Orthogonal: fold O onto SO.
    if (det != 1) m = mat_mul(m, so_reflection(s));
    return m;
}

std::vector<MatF> enumerate_group(const GroupSpec& s, std::uint64_t cap, Rng& rng) {
    const BigNat order = group_order(s);
    if (order > BigNat(static_cast<unsigned long>(cap)))
        throw std::length_error("enumerate_group: group order exceeds cap");
    const std::uint64_t target = order.get_ui();

    std::vector<MatF> gens;
    gens.push_back(sample_uniform(s, rng));
    gens.push_back(sample_uniform(s, rng));
    for (;;) {
        std::unordered_set<std::vector<Fel>, VecHash> seen;
        std::deque<std::vector<Fel>> queue;
        MatF id = MatF::identity(s.field, s.d);
        seen.insert(id.a);
        queue.push_back(id.a);
        std::vector<MatF> out;
        out.push_back(id);
        while (!queue.empty()) {
            MatF cur(s.field, s.d);
            cur.a = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                MatF nxt = mat_mul(cur, g);
                if (seen.insert(nxt.a).second) {
                    queue.push_back(nxt.a);
                    out.push_back(nxt);
                }
            }
        }
        if (out.size() == target) return out;
        // Proper subgroup: enlarge the generating set and retry.
        gens.push_back(sample_uniform(s, rng));
    }
}

}  // namespace qk
