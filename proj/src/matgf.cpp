#include "qk/matgf.hpp"

#include <sstream>
#include <stdexcept>

namespace qk {

MatF MatF::identity(FieldPtr f, unsigned dim) {
    MatF m(std::move(f), dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

MatF MatF::companion(const Poly& monic) {
    if (monic.degree() < 1 || monic.lead() != 1)
        throw std::invalid_argument("companion: monic polynomial of degree >= 1");
    const unsigned d = unsigned(monic.degree());
    MatF m(monic.F, d);
    for (unsigned i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (unsigned i = 0; i < d; ++i)
        m.at(i, d - 1) = monic.F->neg(monic.c[i]);
    return m;
}

MatF MatF::block_diag(const std::vector<MatF>& blocks) {
    unsigned d = 0;
    for (const auto& b : blocks) d += b.d;
    MatF m(blocks.front().F, d);
    unsigned off = 0;
    for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.d; ++i)
            for (unsigned j = 0; j < b.d; ++j)
                m.at(off + i, off + j) = b.at(i, j);
        off += b.d;
    }
    return m;
}

MatF mat_mul(const MatF& x, const MatF& y) {
    MatF r(x.F, x.d);
    for (unsigned i = 0; i < x.d; ++i)
        for (unsigned k = 0; k < x.d; ++k) {
            const Fel v = x.at(i, k);
            if (v == 0) continue;
            for (unsigned j = 0; j < x.d; ++j)
                r.at(i, j) = x.F->add(r.at(i, j), x.F->mul(v, y.at(k, j)));
        }
    return r;
}

MatF mat_add(const MatF& x, const MatF& y) {
    MatF r(x.F, x.d);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->add(x.a[i], y.a[i]);
    return r;
}

MatF mat_sub(const MatF& x, const MatF& y) {
    MatF r(x.F, x.d);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->sub(x.a[i], y.a[i]);
    return r;
}

MatF mat_scale(const MatF& x, Fel s) {
    MatF r(x.F, x.d);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->mul(x.a[i], s);
    return r;
}

MatF mat_transpose(const MatF& x) {
    MatF r(x.F, x.d);
    for (unsigned i = 0; i < x.d; ++i)
        for (unsigned j = 0; j < x.d; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

MatF mat_entrywise_pow(const MatF& x, std::uint64_t n) {
    MatF r(x.F, x.d);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->pow_u64(x.a[i], n);
    return r;
}

Fel mat_det(const MatF& x) {
    MatF m = x;
    const auto& F = m.F;
    Fel det = 1;
    for (unsigned c = 0; c < m.d; ++c) {
        unsigned piv = c;
        while (piv < m.d && m.at(piv, c) == 0) ++piv;
        if (piv == m.d) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < m.d; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = F->neg(det);
        }
        det = F->mul(det, m.at(c, c));
        const Fel pinv = F->inv(m.at(c, c));
        for (unsigned i = c + 1; i < m.d; ++i) {
            const Fel f = F->mul(m.at(i, c), pinv);
            if (f == 0) continue;
            for (unsigned j = c; j < m.d; ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(f, m.at(c, j)));
        }
    }
    return det;
}

std::optional<MatF> mat_inverse(const MatF& x) {
    MatF m = x;
    MatF inv = MatF::identity(x.F, x.d);
    const auto& F = m.F;
    for (unsigned c = 0; c < m.d; ++c) {
        unsigned piv = c;
        while (piv < m.d && m.at(piv, c) == 0) ++piv;
        if (piv == m.d) return std::nullopt;
        if (piv != c)
            for (unsigned j = 0; j < m.d; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        const Fel pinv = F->inv(m.at(c, c));
        for (unsigned j = 0; j < m.d; ++j) {
            m.at(c, j) = F->mul(m.at(c, j), pinv);
            inv.at(c, j) = F->mul(inv.at(c, j), pinv);
        }
        for (unsigned i = 0; i < m.d; ++i) {
            if (i == c) continue;
            const Fel f = m.at(i, c);
            if (f == 0) continue;
            for (unsigned j = 0; j < m.d; ++j) {
                m.at(i, j) = F->sub(m.at(i, j), F->mul(f, m.at(c, j)));
                inv.at(i, j) = F->sub(inv.at(i, j), F->mul(f, inv.at(c, j)));
            }
        }
    }
    return inv;
}

MatF mat_pow(const MatF& x, const BigNat& n) {
    MatF r = MatF::identity(x.F, x.d);
    if (n == 0) return r;
    MatF b = x;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) r = mat_mul(r, b);
        if (i + 1 < bits) b = mat_mul(b, b);
    }
    return r;
}

namespace {

// Row-reduce in place to RREF; returns pivot column per pivot row.
std::vector<unsigned> rref(std::vector<std::vector<Fel>>& rows, const FieldPtr& F,
                           unsigned width) {
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < width && r < rows.size(); ++c) {
        unsigned piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Fel pinv = F->inv(rows[r][c]);
        for (unsigned j = 0; j < width; ++j) rows[r][j] = F->mul(rows[r][j], pinv);
        for (unsigned i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Fel f = rows[i][c];
            for (unsigned j = 0; j < width; ++j)
                rows[i][j] = F->sub(rows[i][j], F->mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

unsigned mat_rank(MatF x) {
    std::vector<std::vector<Fel>> rows(x.d, std::vector<Fel>(x.d));
    for (unsigned i = 0; i < x.d; ++i)
        for (unsigned j = 0; j < x.d; ++j) rows[i][j] = x.at(i, j);
    return unsigned(rref(rows, x.F, x.d).size());
}

Poly char_poly(const MatF& m) {
    const auto& F = m.F;
    const unsigned d = m.d;
    MatF h = m;
    // Similarity reduction to upper Hessenberg form.
    for (unsigned j = 0; j + 2 < d; ++j) {
        unsigned piv = j + 1;
        while (piv < d && h.at(piv, j) == 0) ++piv;
        if (piv == d) continue;
        if (piv != j + 1) {
            for (unsigned t = 0; t < d; ++t) std::swap(h.at(piv, t), h.at(j + 1, t));
            for (unsigned t = 0; t < d; ++t) std::swap(h.at(t, piv), h.at(t, j + 1));
        }
        const Fel pinv = F->inv(h.at(j + 1, j));
        for (unsigned i = j + 2; i < d; ++i) {
            const Fel c = F->mul(h.at(i, j), pinv);
            if (c == 0) continue;
            for (unsigned t = 0; t < d; ++t)
                h.at(i, t) = F->sub(h.at(i, t), F->mul(c, h.at(j + 1, t)));
            for (unsigned t = 0; t < d; ++t)
                h.at(t, j + 1) = F->add(h.at(t, j + 1), F->mul(c, h.at(t, i)));
        }
    }
    // p_m = (x - h[m][m]) p_{m-1} - sum_i h[i][m] (prod of subdiagonals) p_{i-1}.
    std::vector<Poly> p(d + 1, Poly::one(F));
    for (unsigned mi = 1; mi <= d; ++mi) {
        Poly xm(F, {F->neg(h.at(mi - 1, mi - 1)), 1});
        Poly acc = poly_mul(xm, p[mi - 1]);
        Fel subprod = 1;
        for (unsigned i = mi - 1; i >= 1; --i) {
            subprod = F->mul(subprod, h.at(i, i - 1));
            if (subprod == 0) break;
            const Fel coeff = F->mul(h.at(i - 1, mi - 1), subprod);
            if (coeff != 0) acc = poly_sub(acc, poly_scale(p[i - 1], coeff));
        }
        p[mi] = std::move(acc);
    }
    return p[d];
}

Subspace nullspace(const MatF& m) {
    std::vector<std::vector<Fel>> rows(m.d, std::vector<Fel>(m.d));
    for (unsigned i = 0; i < m.d; ++i)
        for (unsigned j = 0; j < m.d; ++j) rows[i][j] = m.at(i, j);
    std::vector<unsigned> pivots = rref(rows, m.F, m.d);

    std::vector<bool> is_pivot(m.d, false);
    for (unsigned c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fel>> basis;
    for (unsigned f = 0; f < m.d; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fel> v(m.d, 0);
        v[f] = 1;
        for (unsigned r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = m.F->neg(rows[r][f]);
        basis.push_back(std::move(v));
    }
    rref(basis, m.F, m.d);  // canonical representation
    return Subspace{m.F, m.d, std::move(basis)};
}

Subspace kernel_of_poly(const MatF& m, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("kernel_of_poly: zero polynomial");
    MatF acc(m.F, m.d);
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = mat_mul(acc, m);
        if (f.c[i] != 0)
            acc = mat_add(acc, mat_scale(MatF::identity(m.F, m.d), f.c[i]));
    }
    return nullspace(acc);
}

MatF restrict_action(const MatF& m, const Subspace& u) {
    const auto& F = m.F;
    const unsigned k = u.dim();
    // Pivot columns of the RREF basis give coordinates directly.
    std::vector<unsigned> pivots;
    for (const auto& row : u.basis) {
        unsigned c = 0;
        while (c < u.ambient && row[c] == 0) ++c;
        pivots.push_back(c);
    }
    MatF r(F, k);
    for (unsigned i = 0; i < k; ++i) {
        // image of basis vector i under M (vectors act as columns)
        std::vector<Fel> w(m.d, 0);
        for (unsigned row = 0; row < m.d; ++row) {
            Fel s = 0;
            for (unsigned col = 0; col < m.d; ++col)
                s = F->add(s, F->mul(m.at(row, col), u.basis[i][col]));
            w[row] = s;
        }
        // coordinates of w in the basis, then check the residual vanishes
        std::vector<Fel> coords(k);
        for (unsigned j = 0; j < k; ++j) coords[j] = w[pivots[j]];
        for (unsigned col = 0; col < m.d; ++col) {
            Fel s = w[col];
            for (unsigned j = 0; j < k; ++j)
                s = F->sub(s, F->mul(coords[j], u.basis[j][col]));
            if (s != 0)
                throw std::invalid_argument("restrict_action: subspace not invariant");
        }
        for (unsigned j = 0; j < k; ++j) r.at(j, i) = coords[j];
    }
    return r;
}

bool is_irreducible_action(const MatF& m) { return is_irreducible(char_poly(m)); }

std::string mat_to_text(const MatF& m) {
    std::ostringstream os;
    os << m.d << ' ' << m.F->p() << ' ' << m.F->e() << '\n';
    for (unsigned i = 0; i < m.d; ++i) {
        for (unsigned j = 0; j < m.d; ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

MatF mat_from_text(const std::string& text) {
    std::istringstream is(text);
    unsigned d, p, e;
    if (!(is >> d >> p >> e)) throw std::invalid_argument("matrix header: expected 'd p e'");
    FieldPtr F = FieldSpec::make(p, e);
    MatF m(F, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            std::uint64_t v;
            if (!(is >> v)) throw std::invalid_argument("matrix body: too few entries");
            if (v >= F->q()) throw std::invalid_argument("matrix entry out of field range");
            m.at(i, j) = Fel(v);
        }
    return m;
}

}  // namespace qk
