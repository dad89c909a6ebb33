#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace omf {

// Exact arithmetic in GF(p^e), p in {2,3}, e <= 8.  Elements are indices
// 0..p^e-1 encoding polynomial coordinates base p (index = sum c_i * p^i,
// c_0 the constant term).  The modulus is the first irreducible monic
// polynomial of degree e in index order, so every field is reproducible
// from (p, e) alone.  Fields of size <= 4096 carry full multiplication
// tables; larger ones fall back to polynomial arithmetic.
class Field {
public:
    static const Field& get(int p, int e);

    int p;
    int e;
    int size;                  // p^e
    int sub_degree;            // e/2 when e is even, else 0
    std::vector<int> modulus;  // coefficients c_0..c_e, monic

    using El = uint16_t;

    El add(El a, El b) const {
        if (p == 2) return a ^ b;
        return add_digits(a, b);
    }
    El neg(El a) const {
        if (p == 2) return a;
        return neg_digits(a);
    }
    El sub(El a, El b) const { return add(a, neg(b)); }
    El mul(El a, El b) const {
        if (!mul_.empty()) return mul_[size_t(a) * size + b];
        return mul_slow(a, b);
    }
    El inv(El a) const;
    El pow(El a, long long k) const;
    // a^(p^k)
    El frob(El a, int k) const;
    // relative trace to the index-2 subfield: a + a^q, q = p^(e/2)
    El rel_trace(El a) const;
    // true iff a is fixed by the q-power Frobenius (lies in the subfield)
    bool in_subfield(El a) const;
    // square class of a (odd p): true iff a is a square
    bool is_square(El a) const;

    int coeff(El a, int i) const;
    El from_coeffs(std::span<const int> c) const;
    std::string str(El a) const;  // comma-separated residues c_0,..,c_{e-1}
    El parse(const std::string& s) const;

    // direct table access for hot loops; null when the field is table-free
    const El* mul_table() const { return mul_.empty() ? nullptr : mul_.data(); }

private:
    Field(int p, int e);
    std::vector<El> mul_;
    std::vector<El> inv_;
    std::vector<El> frob1_;  // a -> a^p
    El mul_slow(El a, El b) const;
    El add_digits(El a, El b) const;
    El neg_digits(El a) const;
};

using Fel = Field::El;

// lambda with lambda + lambda^q = 1 in GF(q^2); first in index order
Fel solve_lambda(const Field& ext);
// mu such that x^2 + x + mu has no root in the field; first in index order
Fel find_irreducible_mu(const Field& f);

}  // namespace omf
