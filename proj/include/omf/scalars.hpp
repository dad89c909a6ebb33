#pragma once

#include <utility>

#include "omf/forms.hpp"

namespace omf {

// Identifies the m-dimensional GF(q^2)-space with the 2m-dimensional
// GF(q)-space through the basis {1, xi} of the extension, xi the canonical
// field generator (class of x under the tower modulus).
struct ScalarBridge {
    const Field* ext = nullptr;  // GF(q^2)
    const Field* sub = nullptr;  // GF(q)
    Fel xi = 0;
    int m = 0;  // extension-side dimension

    Fel embed(Fel a) const { return embed_[a]; }
    // v = a + b*xi with a, b in the subfield
    std::pair<Fel, Fel> split(Fel v) const { return dec_[v]; }
    Fel join(Fel a, Fel b) const { return ext->add(embed_[a], ext->mul(embed_[b], xi)); }

    std::vector<Fel> embed_;
    std::vector<std::pair<Fel, Fel>> dec_;
};

ScalarBridge make_bridge(const Field& sub, const Field& ext, int m);

Vec blowup_vector(const ScalarBridge& br, const Vec& v);
Vec blowdown_vector(const ScalarBridge& br, const Vec& v);

// the unique GF(q)-side element acting as g under the identification;
// frobenius exponents reduce mod [GF(q):GF(p)]
Semilinear blowup_element(const ScalarBridge& br, const Semilinear& g);

// odd m: the 2m-dimensional quadratic space with Q(blowup(v)) = herm(v, v)
QuadraticSpace unitary_restriction(const ScalarBridge& br, const HermitianSpace& hs);

// even m: Q = Tr o Q_ext under blowup, for a minus-type extension-field space
QuadraticSpace trace_restriction(const ScalarBridge& br, const QuadraticSpace& ext_space);

// (e1, f1) = (blowup(lambda E1), blowup(F1)); asserts the hyperbolic-pair
// identities Q(e1) = Q(f1) = 0, B(e1, f1) = 1, Q(e1 + f1) = 1
std::pair<Vec, Vec> transported_pair(const ScalarBridge& br, const HermitianSpace& hs,
                                     const QuadraticSpace& sp, Fel lambda);

// greedy hyperbolic-pair extraction extending partial (a prefix of
// e1,f1,e2,f2,...) to a full labeled standard basis
BasisLabels complete_standard_basis(const QuadraticSpace& sp, const std::vector<Vec>& partial);

// convenience: copy of sp carrying the labels
QuadraticSpace with_labels(QuadraticSpace sp, BasisLabels labels);

}  // namespace omf
