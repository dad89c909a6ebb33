#include "omf/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace omf {

namespace {

// polynomial helpers over GF(p); polys are coefficient vectors c_0..c_d
using Poly = std::vector<int>;

int deg(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = deg(m);
    for (int i = deg(a); i >= dm; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        // m is monic
        for (int j = 0; j <= dm; ++j) {
            a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(dm);
    for (auto& c : a) c = ((c % p) + p) % p;
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c %= p;
    return poly_mod(std::move(r), m, p);
}

bool divides(const Poly& d, Poly a, int p) {
    // d monic; true iff d | a
    Poly r = poly_mod(std::move(a), d, p);
    return deg(r) < 0;
}

Poly index_to_poly(long long idx, int len, int p) {
    Poly c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = int(idx % p);
        idx /= p;
    }
    return c;
}

bool is_irreducible(const Poly& f, int p) {
    int d = deg(f);
    if (d <= 0) return false;
    if (f[0] == 0) return d == 1;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g = index_to_poly(idx, dd + 1, p);
            g[dd] = 1;  // monic of degree dd
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p_, int e_) : p(p_), e(e_) {
    if ((p != 2 && p != 3) || e < 1 || e > 8)
        throw std::invalid_argument("Field: supported parameters are p in {2,3}, 1 <= e <= 8");
    size = 1;
    for (int i = 0; i < e; ++i) size *= p;
    sub_degree = (e % 2 == 0) ? e / 2 : 0;

    // first irreducible monic polynomial of degree e, in index order
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        Poly f = index_to_poly(idx, e + 1, p);
        f[e] = 1;
        if (is_irreducible(f, p)) {
            modulus = f;
            break;
        }
    }
    if (modulus.empty()) throw std::logic_error("no irreducible modulus found");

    if (size <= 4096) {
        mul_.assign(size_t(size) * size, 0);
        for (int a = 0; a < size; ++a) {
            Poly pa = index_to_poly(a, e, p);
            for (int b = 0; b <= a; ++b) {
                Poly pb = index_to_poly(b, e, p);
                Poly r = poly_mulmod(pa, pb, modulus, p);
                El v = 0;
                for (int i = e - 1; i >= 0; --i) v = El(v * p + r[i]);
                mul_[size_t(a) * size + b] = v;
                mul_[size_t(b) * size + a] = v;
            }
        }
        inv_.assign(size, 0);
        for (int a = 1; a < size; ++a) {
            if (inv_[a]) continue;
            for (int b = 1; b < size; ++b) {
                if (mul_[size_t(a) * size + b] == 1) {
                    inv_[a] = El(b);
                    inv_[b] = El(a);
                    break;
                }
            }
        }
    }
    frob1_.assign(size, 0);
    for (int a = 0; a < size; ++a) {
        El r = El(a);
        for (int i = 1; i < p; ++i) r = mul(r, El(a));
        frob1_[a] = r;
    }
}

const Field& Field::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
    return *it->second;
}

Fel Field::mul_slow(El a, El b) const {
    Poly pa = index_to_poly(a, e, p);
    Poly pb = index_to_poly(b, e, p);
    Poly r = poly_mulmod(pa, pb, modulus, p);
    El v = 0;
    for (int i = e - 1; i >= 0; --i) v = El(v * p + r[i]);
    return v;
}

Fel Field::add_digits(El a, El b) const {
    El r = 0, mult = 1;
    for (int i = 0; i < e; ++i) {
        int da = a % p, db = b % p;
        a = El(a / p);
        b = El(b / p);
        r = El(r + mult * ((da + db) % p));
        mult = El(mult * p);
    }
    return r;
}

Fel Field::neg_digits(El a) const {
    El r = 0, mult = 1;
    for (int i = 0; i < e; ++i) {
        int da = a % p;
        a = El(a / p);
        r = El(r + mult * ((p - da) % p));
        mult = El(mult * p);
    }
    return r;
}

Fel Field::inv(El a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    if (!inv_.empty()) return inv_[a];
    return pow(a, (long long)size - 2);  // a^(q-2), q = size
}

Fel Field::pow(El a, long long k) const {
    long long ord = size - 1;
    if (a == 0) {
        if (k < 0) throw std::domain_error("field inverse of zero");
        return k == 0 ? El(1) : El(0);
    }
    k %= ord;
    if (k < 0) k += ord;
    El r = 1, b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

Fel Field::frob(El a, int k) const {
    k %= e;
    if (k < 0) k += e;
    El r = a;
    for (int i = 0; i < k; ++i) r = frob1_[r];
    return r;
}

Fel Field::rel_trace(El a) const {
    if (sub_degree == 0)
        throw std::domain_error("rel_trace: field has no distinguished index-2 subfield");
    return add(a, frob(a, sub_degree));
}

bool Field::in_subfield(El a) const {
    if (sub_degree == 0) return e == 1;
    return frob(a, sub_degree) == a;
}

bool Field::is_square(El a) const {
    if (p == 2) return true;  // Frobenius is onto
    if (a == 0) return true;
    return pow(a, (size - 1) / 2) == 1;
}

int Field::coeff(El a, int i) const {
    for (int k = 0; k < i; ++k) a = El(a / p);
    return a % p;
}

Fel Field::from_coeffs(std::span<const int> c) const {
    if (int(c.size()) != e) throw std::invalid_argument("from_coeffs: wrong length");
    El v = 0;
    for (int i = e - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p) throw std::invalid_argument("from_coeffs: residue out of range");
        v = El(v * p + c[i]);
    }
    return v;
}

std::string Field::str(El a) const {
    std::ostringstream os;
    for (int i = 0; i < e; ++i) {
        if (i) os << ',';
        os << coeff(a, i);
    }
    return os.str();
}

Fel Field::parse(const std::string& s) const {
    std::vector<int> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(std::stoi(tok));
    return from_coeffs(c);
}

Fel solve_lambda(const Field& ext) {
    if (ext.sub_degree == 0) throw std::domain_error("solve_lambda: need a quadratic extension");
    for (int a = 0; a < ext.size; ++a)
        if (ext.rel_trace(Fel(a)) == 1) return Fel(a);
    throw std::logic_error("solve_lambda: relative trace not surjective");
}

Fel find_irreducible_mu(const Field& f) {
    for (int m = 0; m < f.size; ++m) {
        bool has_root = false;
        for (int x = 0; x < f.size; ++x) {
            // x^2 + x + m
            Fel v = f.add(f.add(f.mul(Fel(x), Fel(x)), Fel(x)), Fel(m));
            if (v == 0) {
                has_root = true;
                break;
            }
        }
        if (!has_root) return Fel(m);
    }
    throw std::logic_error("find_irreducible_mu: no candidate found");
}

}  // namespace omf
