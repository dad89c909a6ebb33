#include "omf/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace omf {

Vec add(const Vec& a, const Vec& b) {
    if (a.F != b.F || a.dim() != b.dim()) throw std::invalid_argument("vector add: mismatch");
    Vec r(*a.F, a.dim());
    for (int i = 0; i < a.dim(); ++i) r.c[i] = a.F->add(a.c[i], b.c[i]);
    return r;
}

Vec scale(Fel s, const Vec& a) {
    Vec r(*a.F, a.dim());
    for (int i = 0; i < a.dim(); ++i) r.c[i] = a.F->mul(s, a.c[i]);
    return r;
}

Vec frob_vec(const Vec& v, int k) {
    Vec r(*v.F, v.dim());
    for (int i = 0; i < v.dim(); ++i) r.c[i] = v.F->frob(v.c[i], k);
    return r;
}

Vec unit(const Field& F, int n, int i) {
    Vec r(F, n);
    r.c[i] = 1;
    return r;
}

uint64_t encode(const Vec& v) {
    uint64_t code = 0;
    for (int i = v.dim() - 1; i >= 0; --i) code = code * v.F->size + v.c[i];
    return code;
}

Vec decode(const Field& F, int n, uint64_t code) {
    Vec v(F, n);
    for (int i = 0; i < n; ++i) {
        v.c[i] = Fel(code % F.size);
        code /= F.size;
    }
    return v;
}

Vec Mat::row(int i) const {
    Vec v(*F, cols);
    for (int j = 0; j < cols; ++j) v.c[j] = at(i, j);
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols; ++j) at(i, j) = v.c[j];
}

Mat Mat::identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.F != y.F || x.cols != y.rows) throw std::invalid_argument("matrix mul: mismatch");
    const Field& F = *x.F;
    Mat r(F, x.rows, y.cols);
    const Fel* tab = F.mul_table();
    int S = F.size;
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            Fel xv = x.at(i, k);
            if (!xv) continue;
            if (tab && F.p == 2) {
                const Fel* trow = tab + size_t(xv) * S;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) ^= trow[y.at(k, j)];
            } else {
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(xv, y.at(k, j)));
            }
        }
    }
    return r;
}

Vec mul(const Vec& v, const Mat& m) {
    if (v.F != m.F || v.dim() != m.rows) throw std::invalid_argument("vec*mat: mismatch");
    const Field& F = *v.F;
    Vec r(F, m.cols);
    const Fel* tab = F.mul_table();
    int S = F.size;
    for (int i = 0; i < m.rows; ++i) {
        Fel vv = v.c[i];
        if (!vv) continue;
        if (tab && F.p == 2) {
            const Fel* trow = tab + size_t(vv) * S;
            const Fel* mrow = m.a.data() + size_t(i) * m.cols;
            for (int j = 0; j < m.cols; ++j) r.c[j] ^= trow[mrow[j]];
        } else {
            for (int j = 0; j < m.cols; ++j) r.c[j] = F.add(r.c[j], F.mul(vv, m.at(i, j)));
        }
    }
    return r;
}

Mat add(const Mat& x, const Mat& y) {
    if (x.F != y.F || x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix add: mismatch");
    Mat r(*x.F, x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.F->add(x.a[i], y.a[i]);
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(*m.F, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat frob_mat(const Mat& m, int k) {
    Mat r(*m.F, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.F->frob(m.a[i], k);
    return r;
}

namespace {

// Gauss-Jordan; returns rank, optionally accumulating the inverse
int eliminate(Mat& m, Mat* inv_out) {
    const Field& F = *m.F;
    int n = m.rows, cols = m.cols;
    Mat inv;
    if (inv_out) inv = Mat::identity(F, n);
    int r = 0;
    for (int col = 0; col < cols && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            if (inv_out)
                for (int j = 0; j < n; ++j) std::swap(inv.at(piv, j), inv.at(r, j));
        }
        Fel d = F.inv(m.at(r, col));
        for (int j = 0; j < cols; ++j) m.at(r, j) = F.mul(d, m.at(r, j));
        if (inv_out)
            for (int j = 0; j < n; ++j) inv.at(r, j) = F.mul(d, inv.at(r, j));
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            Fel c = m.at(i, col);
            if (!c) continue;
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(r, j)));
            if (inv_out)
                for (int j = 0; j < n; ++j)
                    inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(r, j)));
        }
        ++r;
    }
    if (inv_out) *inv_out = inv;
    return r;
}

}  // namespace

int rank(Mat m) { return eliminate(m, nullptr); }

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    Mat work = m, inv;
    if (eliminate(work, &inv) != m.rows) throw std::domain_error("inverse: singular matrix");
    return inv;
}

bool invertible(const Mat& m) {
    if (m.rows != m.cols) return false;
    Mat work = m;
    return eliminate(work, nullptr) == m.rows;
}

Semilinear Semilinear::identity(const Field& f, int n) {
    return Semilinear{Mat::identity(f, n), 0};
}

Semilinear make_semilinear(Mat m, int frob) {
    if (!invertible(m)) throw std::domain_error("semilinear element: singular matrix");
    int e = m.F->e;
    frob %= e;
    if (frob < 0) frob += e;
    return Semilinear{std::move(m), frob};
}

Semilinear compose(const Semilinear& a, const Semilinear& b) {
    if (a.m.F != b.m.F || a.dim() != b.dim()) throw std::invalid_argument("compose: mismatch");
    int e = a.field().e;
    return Semilinear{mul(frob_mat(a.m, b.frob), b.m), (a.frob + b.frob) % e};
}

Semilinear inverse(const Semilinear& a) {
    int e = a.field().e;
    int k = (e - a.frob) % e;
    return Semilinear{frob_mat(inverse(a.m), k), k};
}

Vec apply(const Semilinear& g, const Vec& v) { return mul(frob_vec(v, g.frob), g.m); }

Semilinear power(const Semilinear& g, long long k) {
    Semilinear r = Semilinear::identity(g.field(), g.dim());
    Semilinear b = k >= 0 ? g : inverse(g);
    unsigned long long n = k >= 0 ? k : -(unsigned long long)k;
    while (n) {
        if (n & 1) r = compose(r, b);
        b = compose(b, b);
        n >>= 1;
    }
    return r;
}

int element_order(const Semilinear& g, int cap) {
    Semilinear x = g;
    for (int k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = compose(x, g);
    }
    throw std::runtime_error("element_order: cap exceeded");
}

std::string to_exchange(const Semilinear& g) {
    const Field& F = g.field();
    std::ostringstream os;
    os << F.p << ' ' << F.e << ' ' << g.dim() << ' ' << g.frob << '\n';
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            if (j) os << ' ';
            os << F.str(g.m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

Semilinear from_exchange(const std::string& text) {
    std::istringstream is(text);
    int p, e, n, frob;
    if (!(is >> p >> e >> n >> frob)) throw std::invalid_argument("exchange: bad header");
    const Field& F = Field::get(p, e);
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("exchange: truncated matrix");
            m.at(i, j) = F.parse(tok);
        }
    return make_semilinear(std::move(m), frob);
}

}  // namespace omf
