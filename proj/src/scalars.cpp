#include "omf/scalars.hpp"

#include <stdexcept>

namespace omf {

ScalarBridge make_bridge(const Field& sub, const Field& ext, int m) {
    if (ext.p != sub.p || ext.e != 2 * sub.e)
        throw std::invalid_argument("make_bridge: ext must be the quadratic extension of sub");
    ScalarBridge br;
    br.ext = &ext;
    br.sub = &sub;
    br.m = m;
    br.xi = Fel(ext.p);  // class of x

    // embedding: send the subfield generator to the first root of the
    // subfield modulus in the extension field
    Fel root = 0;
    bool found = false;
    for (int z = 0; z < ext.size && !found; ++z) {
        Fel acc = 0, power = 1;
        for (size_t i = 0; i < sub.modulus.size(); ++i) {
            Fel coeff = Fel(sub.modulus[i]);  // prime-field residue
            acc = ext.add(acc, ext.mul(coeff, power));
            power = ext.mul(power, Fel(z));
        }
        if (acc == 0) {
            root = Fel(z);
            found = true;
        }
    }
    if (!found) throw std::logic_error("make_bridge: subfield modulus has no root upstairs");

    br.embed_.assign(sub.size, 0);
    for (int a = 0; a < sub.size; ++a) {
        Fel acc = 0, power = 1;
        for (int i = 0; i < sub.e; ++i) {
            Fel digit = Fel(sub.coeff(Fel(a), i));
            acc = ext.add(acc, ext.mul(digit, power));
            power = ext.mul(power, root);
        }
        br.embed_[a] = acc;
    }

    br.dec_.assign(ext.size, {0, 0});
    std::vector<bool> seen(ext.size, false);
    for (int a = 0; a < sub.size; ++a)
        for (int b = 0; b < sub.size; ++b) {
            Fel v = br.join(Fel(a), Fel(b));
            if (seen[v]) throw std::logic_error("make_bridge: {1, xi} not independent");
            seen[v] = true;
            br.dec_[v] = {Fel(a), Fel(b)};
        }
    return br;
}

Vec blowup_vector(const ScalarBridge& br, const Vec& v) {
    if (v.F != br.ext || v.dim() != br.m) throw std::invalid_argument("blowup_vector: mismatch");
    Vec r(*br.sub, 2 * br.m);
    for (int i = 0; i < br.m; ++i) {
        auto [a, b] = br.split(v.c[i]);
        r.c[2 * i] = a;
        r.c[2 * i + 1] = b;
    }
    return r;
}

Vec blowdown_vector(const ScalarBridge& br, const Vec& v) {
    if (v.F != br.sub || v.dim() != 2 * br.m)
        throw std::invalid_argument("blowdown_vector: mismatch");
    Vec r(*br.ext, br.m);
    for (int i = 0; i < br.m; ++i) r.c[i] = br.join(v.c[2 * i], v.c[2 * i + 1]);
    return r;
}

Semilinear blowup_element(const ScalarBridge& br, const Semilinear& g) {
    if (g.m.F != br.ext || g.dim() != br.m) throw std::invalid_argument("blowup_element: mismatch");
    int n = 2 * br.m;
    Mat m(*br.sub, n, n);
    for (int j = 0; j < n; ++j) {
        Vec vj(*br.ext, br.m);
        vj.c[j / 2] = (j % 2 == 0) ? Fel(1) : br.xi;
        m.set_row(j, blowup_vector(br, apply(g, vj)));
    }
    return make_semilinear(std::move(m), g.frob % br.sub->e);
}

namespace {

Fel to_subfield(const ScalarBridge& br, Fel v, const char* what) {
    auto [a, b] = br.split(v);
    if (b != 0) throw std::logic_error(std::string(what) + ": value not in the subfield");
    return a;
}

Vec ext_basis_vector(const ScalarBridge& br, int j) {
    Vec v(*br.ext, br.m);
    v.c[j / 2] = (j % 2 == 0) ? Fel(1) : br.xi;
    return v;
}

}  // namespace

QuadraticSpace unitary_restriction(const ScalarBridge& br, const HermitianSpace& hs) {
    if (hs.F != br.ext || hs.dim != br.m) throw std::invalid_argument("unitary_restriction: mismatch");
    if (br.m % 2 == 0) throw std::invalid_argument("unitary_restriction: odd dimension required");
    int n = 2 * br.m;
    Mat U(*br.sub, n, n);
    for (int j = 0; j < n; ++j) {
        Vec vj = ext_basis_vector(br, j);
        U.at(j, j) = to_subfield(br, hs.herm(vj, vj), "unitary_restriction");
        for (int k = j + 1; k < n; ++k) {
            Vec vk = ext_basis_vector(br, k);
            Fel b = br.ext->add(hs.herm(vj, vk), hs.herm(vk, vj));
            U.at(j, k) = to_subfield(br, b, "unitary_restriction");
        }
    }
    return make_quadratic_space(*br.sub, std::move(U));
}

QuadraticSpace trace_restriction(const ScalarBridge& br, const QuadraticSpace& ext_space) {
    if (ext_space.F != br.ext || ext_space.dim != br.m)
        throw std::invalid_argument("trace_restriction: mismatch");
    if (br.m % 2 != 0) throw std::invalid_argument("trace_restriction: even dimension required");
    int n = 2 * br.m;
    Mat U(*br.sub, n, n);
    for (int j = 0; j < n; ++j) {
        Vec vj = ext_basis_vector(br, j);
        U.at(j, j) = to_subfield(br, br.ext->rel_trace(ext_space.Q(vj)), "trace_restriction");
        for (int k = j + 1; k < n; ++k) {
            Vec vk = ext_basis_vector(br, k);
            U.at(j, k) =
                to_subfield(br, br.ext->rel_trace(ext_space.B(vj, vk)), "trace_restriction");
        }
    }
    return make_quadratic_space(*br.sub, std::move(U));
}

std::pair<Vec, Vec> transported_pair(const ScalarBridge& br, const HermitianSpace& hs,
                                     const QuadraticSpace& sp, Fel lambda) {
    if (br.ext->rel_trace(lambda) != 1)
        throw std::invalid_argument("transported_pair: lambda must have relative trace 1");
    Vec e1 = blowup_vector(br, scale(lambda, hs.E(0)));
    Vec f1 = blowup_vector(br, hs.Fv(0));
    if (sp.Q(e1) != 0 || sp.Q(f1) != 0 || sp.B(e1, f1) != 1 || sp.Q(add(e1, f1)) != 1)
        throw std::logic_error("transported_pair: hyperbolic-pair identities failed");
    return {e1, f1};
}

namespace {

// first vector (coefficient tuples in index order) in the span satisfying
// the predicate
template <typename Pred>
Vec scan_span(const QuadraticSpace& sp, const std::vector<Vec>& basis, Pred pred) {
    const Field& F = *sp.F;
    int d = int(basis.size());
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= uint64_t(F.size);
    for (uint64_t code = 1; code < total; ++code) {
        uint64_t c = code;
        Vec v(F, sp.dim);
        for (int i = 0; i < d; ++i) {
            Fel ci = Fel(c % F.size);
            c /= F.size;
            if (ci) v = add(v, scale(ci, basis[i]));
        }
        if (pred(v)) return v;
    }
    throw std::logic_error("scan_span: no vector with the required property");
}

}  // namespace

BasisLabels complete_standard_basis(const QuadraticSpace& sp, const std::vector<Vec>& partial) {
    const Field& F = *sp.F;
    int n = sp.dim;
    if (n % 2 != 0) throw std::invalid_argument("complete_standard_basis: even dimension required");
    int m = n / 2;

    std::vector<Vec> chosen = partial;
    // validate the partial prefix against the hyperbolic profile
    for (size_t i = 0; i < chosen.size(); ++i) {
        if (sp.Q(chosen[i]) != 0)
            throw std::invalid_argument("complete_standard_basis: partial vector not singular");
        for (size_t j = 0; j < i; ++j) {
            Fel expect = (j + 1 == i && i % 2 == 1) ? Fel(1) : Fel(0);
            if (sp.B(chosen[j], chosen[i]) != expect)
                throw std::invalid_argument("complete_standard_basis: partial Gram mismatch");
        }
    }

    // complete a dangling e without its partner f
    if (chosen.size() % 2 == 1) {
        Vec e = chosen.back();
        std::vector<Vec> others(chosen.begin(), chosen.end() - 1);
        std::vector<Vec> room = perp_basis(sp, others);
        Vec x = scan_span(sp, room, [&](const Vec& v) { return sp.B(e, v) != 0; });
        Vec f = scale(F.inv(sp.B(e, x)), x);
        f = add(f, scale(F.neg(sp.Q(f)), e));
        chosen.push_back(f);
    }

    while (int(chosen.size()) < 2 * (m - 1)) {
        std::vector<Vec> room = perp_basis(sp, chosen);
        Vec e = scan_span(sp, room, [&](const Vec& v) { return sp.Q(v) == 0; });
        chosen.push_back(e);
        room = perp_basis(sp, std::vector<Vec>(chosen.begin(), chosen.end() - 1));
        Vec x = scan_span(sp, room, [&](const Vec& v) { return sp.B(e, v) != 0; });
        Vec f = scale(F.inv(sp.B(e, x)), x);
        f = add(f, scale(F.neg(sp.Q(f)), e));
        chosen.push_back(f);
    }

    // anisotropic plane
    std::vector<Vec> plane = perp_basis(sp, chosen);
    if (plane.size() != 2)
        throw std::logic_error("complete_standard_basis: residual space is not a plane");
    Vec d = scan_span(sp, plane, [&](const Vec& v) { return sp.Q(v) == 1; });
    // the partner must be independent of d: in odd characteristic
    // beta(d, d) = 2 Q(d) != 0, so scalar multiples of d pass the pairing
    // test but degenerate the plane
    Vec dp0 = scan_span(sp, plane, [&](const Vec& v) {
        if (sp.B(d, v) != 1) return false;
        Mat pair(F, 2, n);
        pair.set_row(0, d);
        pair.set_row(1, v);
        return rank(std::move(pair)) == 2;
    });
    auto irreducible = [&](Fel z) {
        for (int x = 0; x < F.size; ++x) {
            Fel val = F.add(F.add(F.mul(Fel(x), Fel(x)), Fel(x)), z);
            if (val == 0) return false;
        }
        return true;
    };
    Fel canonical = find_irreducible_mu(F);
    Vec dp;
    bool set = false;
    for (int c = 0; c < F.size && !set; ++c) {
        Vec cand = add(dp0, scale(Fel(c), d));
        if (sp.Q(cand) == canonical) {
            dp = cand;
            set = true;
        }
    }
    for (int c = 0; c < F.size && !set; ++c) {
        Vec cand = add(dp0, scale(Fel(c), d));
        if (irreducible(sp.Q(cand))) {
            dp = cand;
            set = true;
        }
    }
    if (!set) throw std::logic_error("complete_standard_basis: anisotropic normalization failed");

    chosen.push_back(d);
    chosen.push_back(dp);
    Mat rows(F, n, n);
    for (int i = 0; i < n; ++i) rows.set_row(i, chosen[i]);
    if (!invertible(rows)) throw std::logic_error("complete_standard_basis: basis not independent");
    return BasisLabels{std::move(rows)};
}

QuadraticSpace with_labels(QuadraticSpace sp, BasisLabels labels) {
    sp.labels = std::move(labels);
    sp.zeta = sp.Q(sp.labels->dprime());
    return sp;
}

}  // namespace omf
