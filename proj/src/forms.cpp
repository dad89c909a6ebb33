#include "omf/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace omf {

namespace {

Fel dot(const Vec& a, const Vec& b) {
    const Field& F = *a.F;
    Fel r = 0;
    for (int i = 0; i < a.dim(); ++i) r = F.add(r, F.mul(a.c[i], b.c[i]));
    return r;
}

}  // namespace

Fel QuadraticSpace::Q(const Vec& v) const { return dot(mul(v, upper), v); }

Fel QuadraticSpace::B(const Vec& u, const Vec& v) const { return dot(mul(u, polar), v); }

QuadraticSpace make_quadratic_space(const Field& F, Mat upper) {
    QuadraticSpace sp;
    sp.F = &F;
    sp.dim = upper.rows;
    for (int i = 0; i < sp.dim; ++i)
        for (int j = 0; j < i; ++j)
            if (upper.at(i, j)) throw std::invalid_argument("Gram matrix must be upper-triangular");
    sp.polar = add(upper, transpose(upper));
    sp.upper = std::move(upper);
    if (rank(sp.polar) != sp.dim)
        throw std::invalid_argument("quadratic space: degenerate polar form");
    return sp;
}

QuadraticSpace minus_standard_space(int m, const Field& F) {
    if (m < 2) throw std::invalid_argument("minus_standard_space: need m >= 2");
    int n = 2 * m;
    Fel zeta = find_irreducible_mu(F);
    Mat U(F, n, n);
    for (int i = 0; i + 1 < n - 2; i += 2) U.at(i, i + 1) = 1;
    U.at(n - 2, n - 2) = 1;
    U.at(n - 2, n - 1) = 1;
    U.at(n - 1, n - 1) = zeta;
    QuadraticSpace sp = make_quadratic_space(F, std::move(U));
    sp.labels = BasisLabels{Mat::identity(F, n)};
    sp.zeta = zeta;
    return sp;
}

Fel HermitianSpace::herm(const Vec& u, const Vec& v) const {
    return dot(mul(u, gram), frob_vec(v, F->sub_degree));
}

HermitianSpace hermitian_standard(int m, const Field& Fq2) {
    if (m < 2) throw std::invalid_argument("hermitian_standard: need m >= 2");
    if (Fq2.sub_degree == 0)
        throw std::invalid_argument("hermitian_standard: field must be a quadratic extension");
    HermitianSpace hs;
    hs.F = &Fq2;
    hs.dim = m;
    hs.gram = Mat(Fq2, m, m);
    // hyperbolic pairs, plus an anisotropic vector D when the dimension is odd
    int pairs_end = (m % 2 == 0) ? m : m - 1;
    for (int i = 0; i + 1 < pairs_end; i += 2) {
        hs.gram.at(i, i + 1) = 1;
        hs.gram.at(i + 1, i) = 1;
    }
    if (m % 2 == 1) hs.gram.at(m - 1, m - 1) = 1;
    return hs;
}

Semilinear reflection(const QuadraticSpace& sp, const Vec& w) {
    Fel qw = sp.Q(w);
    if (qw == 0) throw std::invalid_argument("reflection: Q(w) must be nonzero");
    const Field& F = *sp.F;
    Fel qi = F.inv(qw);
    Mat m(F, sp.dim, sp.dim);
    for (int i = 0; i < sp.dim; ++i) {
        Vec b = unit(F, sp.dim, i);
        Vec img = add(b, scale(F.neg(F.mul(qi, sp.B(b, w))), w));
        m.set_row(i, img);
    }
    return Semilinear{std::move(m), 0};
}

Semilinear eichler(const QuadraticSpace& sp, const Vec& u, const Vec& v) {
    if (u.is_zero() || sp.Q(u) != 0) throw std::invalid_argument("eichler: u must be singular, nonzero");
    if (sp.B(u, v) != 0) throw std::invalid_argument("eichler: v must lie in the perp of u");
    const Field& F = *sp.F;
    Fel qv = sp.Q(v);
    Mat m(F, sp.dim, sp.dim);
    for (int i = 0; i < sp.dim; ++i) {
        Vec x = unit(F, sp.dim, i);
        Fel bxv = sp.B(x, v), bxu = sp.B(x, u);
        Vec img = add(x, scale(bxv, u));
        img = add(img, scale(F.neg(bxu), v));
        img = add(img, scale(F.neg(F.mul(qv, bxu)), u));
        m.set_row(i, img);
    }
    return Semilinear{std::move(m), 0};
}

bool is_isometry(const QuadraticSpace& sp, const Semilinear& g) {
    if (g.dim() != sp.dim || g.m.F != sp.F) return false;
    int k = g.frob;
    const Field& F = *sp.F;
    for (int i = 0; i < sp.dim; ++i) {
        Vec gi = g.m.row(i);
        if (sp.Q(gi) != F.frob(sp.Q(unit(F, sp.dim, i)), k)) return false;
        for (int j = i + 1; j < sp.dim; ++j) {
            Vec gj = g.m.row(j);
            if (sp.B(gi, gj) != F.frob(sp.polar.at(i, j), k)) return false;
        }
    }
    return true;
}

bool is_herm_isometry(const HermitianSpace& hs, const Semilinear& g) {
    if (g.dim() != hs.dim || g.m.F != hs.F) return false;
    int k = g.frob;
    const Field& F = *hs.F;
    for (int i = 0; i < hs.dim; ++i)
        for (int j = 0; j < hs.dim; ++j) {
            Fel expect = F.frob(hs.gram.at(i, j), k);
            if (hs.herm(g.m.row(i), g.m.row(j)) != expect) return false;
        }
    return true;
}

namespace {

// orthogonal basis of anisotropic vectors (odd characteristic)
std::vector<Vec> anisotropic_basis(const QuadraticSpace& sp) {
    const Field& F = *sp.F;
    std::vector<Vec> basis;
    std::vector<Vec> current;  // basis of the remaining perp space
    for (int i = 0; i < sp.dim; ++i) current.push_back(unit(F, sp.dim, i));
    while (!current.empty()) {
        // anisotropic vector in the span: some basis vector or a sum of two
        Vec pick;
        bool found = false;
        for (const Vec& b : current)
            if (sp.Q(b) != 0) {
                pick = b;
                found = true;
                break;
            }
        if (!found) {
            for (size_t i = 0; i < current.size() && !found; ++i)
                for (size_t j = i + 1; j < current.size() && !found; ++j) {
                    Vec s = add(current[i], current[j]);
                    if (sp.Q(s) != 0) {
                        pick = s;
                        found = true;
                    }
                }
        }
        if (!found) throw std::logic_error("anisotropic_basis: degenerate restriction");
        basis.push_back(pick);
        // project the rest onto pick-perp: w -> w - B(w,pick)/B(pick,pick) * pick
        Fel bpp = sp.B(pick, pick);  // = 2 Q(pick), nonzero in odd char
        Fel bi = F.inv(bpp);
        std::vector<Vec> next;
        for (const Vec& w : current) {
            Vec proj = add(w, scale(F.neg(F.mul(bi, sp.B(w, pick))), pick));
            if (!proj.is_zero()) next.push_back(proj);
        }
        // reduce to an independent set
        Mat rows(F, int(next.size()), sp.dim);
        for (size_t i = 0; i < next.size(); ++i) rows.set_row(int(i), next[i]);
        // row-reduce and keep nonzero rows
        std::vector<Vec> indep;
        {
            Mat w = rows;
            int r = 0;
            for (int col = 0; col < sp.dim && r < w.rows; ++col) {
                int piv = -1;
                for (int i = r; i < w.rows; ++i)
                    if (w.at(i, col)) {
                        piv = i;
                        break;
                    }
                if (piv < 0) continue;
                for (int j = 0; j < sp.dim; ++j) std::swap(w.at(piv, j), w.at(r, j));
                Fel d = F.inv(w.at(r, col));
                for (int j = 0; j < sp.dim; ++j) w.at(r, j) = F.mul(d, w.at(r, j));
                for (int i = 0; i < w.rows; ++i) {
                    if (i == r) continue;
                    Fel c = w.at(i, col);
                    if (!c) continue;
                    for (int j = 0; j < sp.dim; ++j)
                        w.at(i, j) = F.sub(w.at(i, j), F.mul(c, w.at(r, j)));
                }
                ++r;
            }
            for (int i = 0; i < r; ++i) indep.push_back(w.row(i));
        }
        current = std::move(indep);
    }
    return basis;
}

}  // namespace

int dickson_or_spinor(const QuadraticSpace& sp, const Semilinear& g) {
    if (g.frob != 0) throw std::invalid_argument("dickson_or_spinor: linear isometries only");
    if (!is_isometry(sp, g)) throw std::invalid_argument("dickson_or_spinor: not an isometry");
    const Field& F = *sp.F;
    if (F.p == 2) {
        Mat diff = add(g.m, Mat::identity(F, sp.dim));
        return rank(std::move(diff)) % 2;
    }
    // odd characteristic: factor into reflections over an orthogonal
    // anisotropic basis, tracking the reflection count and the square class
    // of the product of the Q(w_i)
    std::vector<Vec> cached_basis = anisotropic_basis(sp);
    Semilinear cur = g;
    int count = 0;
    Fel spinor = 1;
    for (const Vec& x : cached_basis) {
        Vec u = apply(cur, x);
        if (u == x) continue;
        Vec diff = add(u, scale(F.neg(Fel(1)), x));
        if (sp.Q(diff) != 0) {
            cur = compose(cur, reflection(sp, diff));
            spinor = F.mul(spinor, sp.Q(diff));
            ++count;
        } else {
            Vec sum = add(u, x);
            cur = compose(cur, reflection(sp, sum));
            cur = compose(cur, reflection(sp, x));
            spinor = F.mul(spinor, F.mul(sp.Q(sum), sp.Q(x)));
            count += 2;
        }
    }
    if (!cur.is_identity()) throw std::logic_error("reflection factorization failed");
    bool in_omega = (count % 2 == 0) && F.is_square(spinor);
    return in_omega ? 0 : 1;
}

std::vector<Vec> perp_basis(const QuadraticSpace& sp, const std::vector<Vec>& vs) {
    const Field& F = *sp.F;
    int n = sp.dim;
    // nullspace of the constraint matrix beta(x, v_i) = 0 via RREF
    Mat w(F, int(vs.size()), n);
    for (size_t i = 0; i < vs.size(); ++i) w.set_row(int(i), mul(vs[i], sp.polar));
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n && r < w.rows; ++col) {
        int piv = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(r, j));
        Fel d = F.inv(w.at(r, col));
        for (int j = 0; j < n; ++j) w.at(r, j) = F.mul(d, w.at(r, j));
        for (int i = 0; i < w.rows; ++i) {
            if (i == r) continue;
            Fel c = w.at(i, col);
            if (!c) continue;
            for (int j = 0; j < n; ++j) w.at(i, j) = F.sub(w.at(i, j), F.mul(c, w.at(r, j)));
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec b(F, n);
        b.c[free] = 1;
        for (int i = 0; i < r; ++i) b.c[pivots[i]] = F.neg(w.at(i, free));
        basis.push_back(std::move(b));
    }
    return basis;
}

std::vector<Vec> enumerate_value_set(const QuadraticSpace& sp, Fel c, uint64_t cap) {
    const Field& F = *sp.F;
    uint64_t total = 1;
    for (int i = 0; i < sp.dim; ++i) {
        total *= uint64_t(F.size);
        if (total > cap) throw std::runtime_error("enumerate_value_set: cap exceeded");
    }
    std::vector<Vec> out;
    for (uint64_t code = 1; code < total; ++code) {
        Vec v = decode(F, sp.dim, code);
        if (sp.Q(v) == c) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FormType classify_type(const QuadraticSpace& sp) {
    if (sp.dim % 2 != 0) throw std::invalid_argument("classify_type: even dimension required");
    uint64_t m = sp.dim / 2, q = sp.F->size;
    uint64_t singular = enumerate_value_set(sp, 0).size();
    uint64_t qm = 1, qm1 = 1;
    for (uint64_t i = 0; i < m; ++i) qm *= q;
    for (uint64_t i = 0; i + 1 < m; ++i) qm1 *= q;
    if (singular == (qm1 - 1) * (qm + 1)) return FormType::minus;
    if (singular == (qm1 + 1) * (qm - 1)) return FormType::plus;
    throw std::runtime_error("classify_type: singular count matches neither type");
}

std::string space_to_text(const QuadraticSpace& sp) {
    return "GRAM-UT\n" + to_exchange(Semilinear{sp.upper, 0});
}

QuadraticSpace space_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::getline(is, tag);
    if (tag != "GRAM-UT") throw std::invalid_argument("space_from_text: missing GRAM-UT tag");
    std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    std::istringstream hs(rest);
    int p, e, n, frob;
    hs >> p >> e >> n >> frob;
    const Field& F = Field::get(p, e);
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            hs >> tok;
            m.at(i, j) = F.parse(tok);
        }
    return make_quadratic_space(F, std::move(m));
}

std::string vector_set_to_text(const std::vector<Vec>& vs) {
    std::vector<Vec> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const Vec& v : sorted) {
        for (int i = 0; i < v.dim(); ++i) {
            if (i) os << ' ';
            os << v.F->str(v.c[i]);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace omf
