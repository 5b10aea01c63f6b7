#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/poly.hpp"

namespace qk {

/// Dense square matrix over a FieldSpec, row-major entry encodings.
struct MatF {
    FieldPtr F;
    unsigned d = 0;
    std::vector<Fel> a;

    MatF() = default;
    MatF(FieldPtr f, unsigned dim) : F(std::move(f)), d(dim), a(dim * dim, 0) {}

    Fel& at(unsigned i, unsigned j) { return a[i * d + j]; }
    Fel at(unsigned i, unsigned j) const { return a[i * d + j]; }

    static MatF identity(FieldPtr f, unsigned dim);
    static MatF companion(const Poly& monic);
    static MatF block_diag(const std::vector<MatF>& blocks);

    bool operator==(const MatF& o) const { return d == o.d && a == o.a; }
};

MatF mat_mul(const MatF& x, const MatF& y);
MatF mat_add(const MatF& x, const MatF& y);
MatF mat_sub(const MatF& x, const MatF& y);
MatF mat_scale(const MatF& x, Fel s);
MatF mat_transpose(const MatF& x);
/// Entrywise a -> a^n (used for the unitary conjugation a -> a^q).
MatF mat_entrywise_pow(const MatF& x, std::uint64_t n);
Fel mat_det(const MatF& x);
std::optional<MatF> mat_inverse(const MatF& x);
MatF mat_pow(const MatF& x, const BigNat& n);
unsigned mat_rank(MatF x);

/// Characteristic polynomial det(xI - M) via Hessenberg reduction and the
/// determinant recurrence; O(d^3) field operations.
Poly char_poly(const MatF& m);

/// Subspace with a canonical reduced-row-echelon basis, so equality of
/// subspaces is equality of representations.
struct Subspace {
    FieldPtr F;
    unsigned ambient = 0;
    std::vector<std::vector<Fel>> basis;  // RREF rows

    unsigned dim() const { return unsigned(basis.size()); }
    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

/// Canonical basis of the right kernel {v : Mv = 0}.
Subspace nullspace(const MatF& m);

/// Kernel of f(M) (Horner evaluation of f at M).
Subspace kernel_of_poly(const MatF& m, const Poly& f);

/// Matrix of the action induced by M on U in the basis of U.
/// Throws std::invalid_argument if U is not M-invariant.
MatF restrict_action(const MatF& m, const Subspace& u);

/// True iff char_poly(M) is irreducible; equivalently M leaves no proper
/// nonzero subspace invariant when that holds.
bool is_irreducible_action(const MatF& m);

/// Text format: header "d p e" then d rows of d entry encodings.
std::string mat_to_text(const MatF& m);
MatF mat_from_text(const std::string& text);

}  // namespace qk
