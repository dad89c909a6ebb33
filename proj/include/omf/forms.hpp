#pragma once

#include <optional>
#include <vector>

#include "omf/linalg.hpp"

namespace omf {

// Labeled standard basis e_1,f_1,...,e_{m-1},f_{m-1},d,d' stored as rows of
// a change-of-basis matrix (row i = i-th labeled vector in ambient
// coordinates).  For hermitian spaces the labels are E_1,F_1,...,D (and D'
// in the even-dimensional quadratic case over the extension field).
struct BasisLabels {
    Mat rows;
    Vec e(int i) const { return rows.row(2 * i); }      // i from 0
    Vec f(int i) const { return rows.row(2 * i + 1); }
    Vec d() const { return rows.row(rows.rows - 2); }
    Vec dprime() const { return rows.row(rows.rows - 1); }
};

// Quadratic form stored as an upper-triangular Gram matrix U with
// Q(v) = v U v^T; polar form beta(u,v) = u (U + U^T) v^T.
struct QuadraticSpace {
    const Field* F = nullptr;
    int dim = 0;
    Mat upper;
    Mat polar;  // U + U^T, cached
    std::optional<BasisLabels> labels;
    Fel zeta = 0;  // anisotropic-plane constant when constructed standard

    Fel Q(const Vec& v) const;
    Fel B(const Vec& u, const Vec& v) const;
};

QuadraticSpace make_quadratic_space(const Field& F, Mat upper);

// 2m-dimensional minus-type space with m-1 hyperbolic pairs and anisotropic
// plane <d, d'>: Q(d) = 1, beta(d, d') = 1, Q(d') = zeta with x^2 + x + zeta
// irreducible over F_q.
QuadraticSpace minus_standard_space(int m, const Field& F);

// Hermitian form over GF(q^2): herm(u,v) = u H conj(v)^T with conj the
// q-power Frobenius; H equals its conjugate-transpose.
struct HermitianSpace {
    const Field* F = nullptr;  // GF(q^2), sub_degree = f
    int dim = 0;
    Mat gram;

    Fel herm(const Vec& u, const Vec& v) const;
    Vec E(int i) const { return unit(*F, dim, 2 * i); }
    Vec Fv(int i) const { return unit(*F, dim, 2 * i + 1); }
    Vec D() const { return unit(*F, dim, dim - 1); }
};

// standard hermitian space with basis E_1,F_1,...,E_l,F_l,D (m odd)
HermitianSpace hermitian_standard(int m, const Field& Fq2);

// reflection r_w: v -> v - beta(v,w)/Q(w) * w
Semilinear reflection(const QuadraticSpace& sp, const Vec& w);

// Eichler transformation for singular u and v in u-perp:
// x -> x + beta(x,v) u - beta(x,u) v - Q(v) beta(x,u) u
Semilinear eichler(const QuadraticSpace& sp, const Vec& u, const Vec& v);

// semilinear isometry test: Q(g b_i) = frob^k(Q(b_i)) and the polar form is
// preserved up to the same twist on all basis pairs
bool is_isometry(const QuadraticSpace& sp, const Semilinear& g);
bool is_herm_isometry(const HermitianSpace& hs, const Semilinear& g);

// Omega-membership parity for linear isometries: Dickson invariant
// rank(g - I) mod 2 for even q; reflection-factorization spinor/determinant
// test for odd q.  Returns 0 iff g lies in Omega.
int dickson_or_spinor(const QuadraticSpace& sp, const Semilinear& g);

// basis of the common perp (under the polar form) of the given vectors
std::vector<Vec> perp_basis(const QuadraticSpace& sp, const std::vector<Vec>& vs);

// all nonzero v with Q(v) = c, lexicographically sorted by coordinates
std::vector<Vec> enumerate_value_set(const QuadraticSpace& sp, Fel c,
                                     uint64_t cap = uint64_t(1) << 24);

enum class FormType { plus, minus };
FormType classify_type(const QuadraticSpace& sp);

// serialization: "GRAM-UT" tag + matrix exchange of the upper Gram matrix
std::string space_to_text(const QuadraticSpace& sp);
QuadraticSpace space_from_text(const std::string& text);
std::string vector_set_to_text(const std::vector<Vec>& vs);

}  // namespace omf
