#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "omf/field.hpp"

namespace omf {

struct Vec {
    const Field* F = nullptr;
    std::vector<Fel> c;

    Vec() = default;
    Vec(const Field& f, int n) : F(&f), c(n, 0) {}
    int dim() const { return int(c.size()); }
    bool is_zero() const {
        for (Fel x : c)
            if (x) return false;
        return true;
    }
    bool operator==(const Vec& o) const { return F == o.F && c == o.c; }
    bool operator<(const Vec& o) const { return c < o.c; }
};

Vec add(const Vec& a, const Vec& b);
Vec scale(Fel s, const Vec& a);
Vec frob_vec(const Vec& v, int k);
// unit coordinate vector
Vec unit(const Field& F, int n, int i);

// point encoding for orbit machinery: index = sum c_i * size^i (must fit u64)
uint64_t encode(const Vec& v);
Vec decode(const Field& F, int n, uint64_t code);

struct Mat {
    const Field* F = nullptr;
    int rows = 0, cols = 0;
    std::vector<Fel> a;

    Mat() = default;
    Mat(const Field& f, int r, int c) : F(&f), rows(r), cols(c), a(size_t(r) * c, 0) {}
    Fel& at(int i, int j) { return a[size_t(i) * cols + j]; }
    Fel at(int i, int j) const { return a[size_t(i) * cols + j]; }
    Vec row(int i) const;
    void set_row(int i, const Vec& v);
    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    static Mat identity(const Field& f, int n);
    bool is_identity() const;
};

Mat mul(const Mat& x, const Mat& y);
Vec mul(const Vec& v, const Mat& m);
Mat add(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Mat frob_mat(const Mat& m, int k);  // entrywise p^k power
int rank(Mat m);
// inverse; throws std::domain_error on singular input
Mat inverse(const Mat& m);
bool invertible(const Mat& m);

// Semilinear map v -> frob^k(v) * m (row-vector convention).
// Composition (a, k) o (b, l) = (frob^l(a) * b, k + l mod e): "a then b".
struct Semilinear {
    Mat m;
    int frob = 0;

    int dim() const { return m.rows; }
    const Field& field() const { return *m.F; }
    bool operator==(const Semilinear& o) const { return frob == o.frob && m == o.m; }
    bool is_identity() const { return frob == 0 && m.is_identity(); }
    static Semilinear identity(const Field& f, int n);
};

Semilinear make_semilinear(Mat m, int frob);  // checks invertibility
Semilinear compose(const Semilinear& a, const Semilinear& b);
Semilinear inverse(const Semilinear& a);
Vec apply(const Semilinear& g, const Vec& v);
Semilinear power(const Semilinear& g, long long k);
int element_order(const Semilinear& g, int cap = 1 << 20);

// Matrix exchange text format: header "p e n frob", then n lines of n
// elements, each a comma-separated list of e residues.  Bit-exact.
std::string to_exchange(const Semilinear& g);
Semilinear from_exchange(const std::string& text);

}  // namespace omf
