#include "omf/gens.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "omf/orders.hpp"

#ifndef OMFACT_DATA_DIR
#define OMFACT_DATA_DIR "data"
#endif

namespace omf {

Semilinear in_labels(const QuadraticSpace& sp, const Mat& A, int k) {
    if (!sp.labels) throw std::invalid_argument("in_labels: space carries no basis labels");
    const Mat& L = sp.labels->rows;
    return make_semilinear(mul(mul(inverse(frob_mat(L, k)), A), L), k);
}

namespace {

int ext_subfield_size(const Field& E) {
    if (E.sub_degree == 0)
        throw std::invalid_argument("field is not a quadratic extension");
    int q = 1;
    for (int i = 0; i < E.sub_degree; ++i) q *= E.p;
    return q;
}

Fel primitive_element(const Field& F) {
    for (int a = 2; a < F.size; ++a) {
        Fel x = Fel(a);
        int ord = 1;
        Fel y = x;
        while (y != 1) {
            y = F.mul(y, x);
            ++ord;
        }
        if (ord == F.size - 1) return x;
    }
    throw std::logic_error("primitive_element: none found");
}

GroupHandle gated(const Field& F, int dim, std::vector<Semilinear> gens, const cpp_int& expect,
                  const char* what) {
    GroupHandle h = make_group(F, dim, std::move(gens));
    cpp_int got = group_order(h);
    if (got == expect) return h;
    // one deterministic enlargement round: conjugates of generators
    std::vector<Semilinear> extra = h.gens;
    for (const Semilinear& a : h.gens)
        for (const Semilinear& b : h.gens) extra.push_back(compose(compose(inverse(b), a), b));
    h = make_group(F, dim, std::move(extra));
    got = group_order(h);
    if (got == expect) return h;
    std::ostringstream os;
    os << what << ": generated order " << got << " != expected " << expect;
    throw std::logic_error(os.str());
}

}  // namespace

GroupHandle omega_minus_gens(const QuadraticSpace& sp, bool gate) {
    if (!sp.labels) throw std::invalid_argument("omega_minus_gens: labeled basis required");
    const Field& F = *sp.F;
    int m = sp.dim / 2;
    std::vector<Semilinear> gens;
    auto add_for = [&](const Vec& u, bool all_scalars) {
        for (const Vec& v : perp_basis(sp, {u})) {
            for (int c = 1; c < F.size; ++c) {
                gens.push_back(eichler(sp, u, scale(Fel(c), v)));
                if (!all_scalars) break;
            }
        }
    };
    for (int i = 0; i < m - 1; ++i) {
        add_for(sp.labels->e(i), false);
        add_for(sp.labels->f(i), false);
    }
    cpp_int expect = omega_minus_order(m, F.size);
    if (!gate) return make_group(F, sp.dim, std::move(gens));
    try {
        return gated(F, sp.dim, gens, expect, "omega_minus_gens");
    } catch (const std::logic_error&) {
        // enlarge: Eichler maps with all scalar multiples
        gens.clear();
        for (int i = 0; i < m - 1; ++i) {
            add_for(sp.labels->e(i), true);
            add_for(sp.labels->f(i), true);
        }
        return gated(F, sp.dim, gens, expect, "omega_minus_gens");
    }
}

GroupHandle su_gens(const HermitianSpace& hs) {
    const Field& E = *hs.F;
    int m = hs.dim, sd = E.sub_degree;
    int q = ext_subfield_size(E);
    std::vector<Semilinear> gens;

    // unitary transvections x -> x + c herm(x,u) u, with u running over the
    // singular vectors supported on at most two basis positions
    std::vector<Fel> trace_zero;
    for (int c = 1; c < E.size; ++c)
        if (E.add(Fel(c), E.frob(Fel(c), sd)) == 0) trace_zero.push_back(Fel(c));
    std::vector<Vec> directions;
    for (int a = 0; a < m; ++a) {
        directions.push_back(unit(E, m, a));
        for (int b = a + 1; b < m; ++b)
            for (int s = 1; s < E.size; ++s)
                directions.push_back(add(unit(E, m, a), scale(Fel(s), unit(E, m, b))));
    }
    for (const Vec& u : directions) {
        if (hs.herm(u, u) != 0) continue;
        for (Fel c : trace_zero) {
            Mat M(E, m, m);
            for (int i = 0; i < m; ++i) {
                Vec x = unit(E, m, i);
                M.set_row(i, add(x, scale(E.mul(c, hs.herm(x, u)), u)));
            }
            gens.push_back(make_semilinear(std::move(M), 0));
        }
    }

    // per-pair root, swap and torus elements (needed when transvections
    // alone generate a proper subgroup, e.g. dimension 3 over GF(4));
    // they lean on the anisotropic vector D, so they exist only in odd
    // dimension — in even dimension the transvections must already close
    Fel lambda = solve_lambda(E);
    Fel alpha = primitive_element(E);
    for (int i = 0; m % 2 == 1 && 2 * i + 1 < m; ++i) {
        int ei = 2 * i, fi = 2 * i + 1, di = m - 1;
        for (int b = 1; b < E.size; ++b) {
            Fel beta = Fel(b);
            Fel gamma = E.neg(E.frob(beta, sd));
            Fel norm = E.mul(beta, E.frob(beta, sd));
            Fel delta = E.neg(E.mul(norm, lambda));
            Mat M = Mat::identity(E, m);
            M.at(di, ei) = beta;            // D -> D + beta E_i
            M.at(fi, di) = gamma;           // F_i -> F_i + gamma D + delta E_i
            M.at(fi, ei) = delta;
            gens.push_back(make_semilinear(std::move(M), 0));
        }
        Mat S(E, m, m);
        for (int j = 0; j < m; ++j) S.at(j, j) = 1;
        S.at(ei, ei) = 0;
        S.at(fi, fi) = 0;
        S.at(ei, fi) = 1;
        S.at(fi, ei) = 1;
        S.at(m - 1, m - 1) = E.neg(1);
        gens.push_back(make_semilinear(std::move(S), 0));
        Mat T = Mat::identity(E, m);
        T.at(ei, ei) = alpha;
        T.at(fi, fi) = E.inv(E.frob(alpha, sd));
        T.at(m - 1, m - 1) = E.mul(E.frob(alpha, sd), E.inv(alpha));
        gens.push_back(make_semilinear(std::move(T), 0));
    }
    // adjacent pair exchanges
    for (int i = 0; 2 * (i + 1) + 1 < m; ++i) {
        Mat P = Mat::identity(E, m);
        int a = 2 * i, b = 2 * (i + 1);
        P.at(a, a) = P.at(a + 1, a + 1) = P.at(b, b) = P.at(b + 1, b + 1) = 0;
        P.at(a, b) = P.at(b, a) = P.at(a + 1, b + 1) = P.at(b + 1, a + 1) = 1;
        gens.push_back(make_semilinear(std::move(P), 0));
    }
    return gated(E, m, std::move(gens), su_order(m, q), "su_gens");
}

GroupHandle su_gens_blownup(const ScalarBridge& br, const HermitianSpace& hs) {
    GroupHandle native = su_gens(hs);
    std::vector<Semilinear> blown;
    for (const Semilinear& g : native.gens) blown.push_back(blowup_element(br, g));
    return make_group(*br.sub, 2 * br.m, std::move(blown));
}

Semilinear frobenius_element(const ScalarBridge& br) {
    return blowup_element(br, make_semilinear(Mat::identity(*br.ext, br.m), 1));
}

Semilinear phi_like_element(const QuadraticSpace& sp) {
    const Field& F = *sp.F;
    if (F.p != 2 || F.e < 2)
        throw std::invalid_argument("phi_like_element: base field must be GF(2^e), e >= 2");
    if (!sp.labels) throw std::invalid_argument("phi_like_element: labeled basis required");
    int n = sp.dim;
    Vec w = add(sp.labels->e(0), sp.labels->f(0));
    Semilinear r = reflection(sp, w);
    for (int a = 0; a < F.size; ++a)
        for (int b = 0; b < F.size; ++b) {
            Mat A = Mat::identity(F, n);
            A.at(n - 1, n - 2) = Fel(a);
            A.at(n - 1, n - 1) = Fel(b);
            if (!invertible(A)) continue;
            Semilinear g = in_labels(sp, A, 1);
            if (!is_isometry(sp, g)) continue;
            bool fixes = true;
            for (int i = 0; i < n - 1 && fixes; ++i)
                fixes = apply(g, sp.labels->rows.row(i)) == sp.labels->rows.row(i);
            if (!fixes) continue;
            if (!(compose(g, r) == compose(r, g))) continue;
            if (!power(g, 2 * F.e).is_identity()) continue;
            return g;
        }
    throw std::logic_error("phi_like_element: no correction found");
}

Semilinear rho_element(const QuadraticSpace& sp, RhoVariant variant) {
    const Field& F = *sp.F;
    if (!sp.labels) throw std::invalid_argument("rho_element: labeled basis required");
    Vec w = add(sp.labels->e(0), sp.labels->f(0));
    if (F.size == 2) return reflection(sp, w);
    if (F.size == 4) {
        Semilinear phi = phi_like_element(sp);
        if (variant == RhoVariant::plain) return phi;
        return compose(reflection(sp, w), phi);
    }
    throw std::invalid_argument("rho_element: q must be 2 or 4");
}

namespace {

Vec from12(const Field& F2, std::vector<int> x) {
    if (x[10]) {
        for (int& b : x) b ^= 1;
    }
    Vec v(F2, 10);
    for (int i = 0; i < 10; ++i) v.c[i] = Fel(x[i]);
    return v;
}

}  // namespace

PermModule deleted_perm_module() {
    const Field& F2 = Field::get(2, 1);
    Mat U(F2, 10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = i; j < 10; ++j) U.at(i, j) = 1;
    QuadraticSpace sp = make_quadratic_space(F2, std::move(U));
    return PermModule{std::move(sp)};
}

Semilinear PermModule::lift(const std::vector<int>& perm) const {
    if (perm.size() != 12) throw std::invalid_argument("lift: permutation of 12 points required");
    const Field& F2 = *space.F;
    Mat M(F2, 10, 10);
    for (int i = 0; i < 10; ++i) {
        std::vector<int> x(12, 0);
        x[perm[i]] ^= 1;
        x[perm[11]] ^= 1;
        M.set_row(i, from12(F2, std::move(x)));
    }
    return make_semilinear(std::move(M), 0);
}

GroupHandle alternating12_gens(const PermModule& pm) {
    std::vector<int> c3{1, 2, 0, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    std::vector<int> c11{0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 1};
    std::vector<Semilinear> gens{pm.lift(c3), pm.lift(c11)};
    return gated(*pm.space.F, 10, std::move(gens), factorial(12) / 2, "alternating12_gens");
}

GroupHandle mathieu12_gens(const PermModule& pm, const std::string& data_path) {
    std::ifstream in(data_path);
    if (!in) throw std::runtime_error("mathieu12_gens: cannot open " + data_path);
    std::vector<Semilinear> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> perm;
        int v;
        while (ls >> v) perm.push_back(v - 1);
        if (perm.size() != 12)
            throw std::runtime_error("mathieu12_gens: malformed generator row");
        gens.push_back(pm.lift(perm));
    }
    return gated(*pm.space.F, 10, std::move(gens), mathieu12_order(), "mathieu12_gens");
}

std::string default_m12_data_path() { return std::string(OMFACT_DATA_DIR) + "/m12_generators.txt"; }

}  // namespace omf
