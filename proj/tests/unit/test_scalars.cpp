#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "omf/scalars.hpp"

using namespace omf;

namespace {

Vec random_vec(const Field& F, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, F.size - 1);
    Vec v(F, n);
    for (Fel& x : v.c) x = Fel(d(rng));
    return v;
}

}  // namespace

TEST_CASE("vector blowup") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 1);
    Vec zero(F4, 1);
    CHECK(blowup_vector(br, zero).is_zero());
    Vec w(F4, 1);
    w.c = {2};  // (omega)
    Vec down = blowup_vector(br, w);
    CHECK(down.c == std::vector<Fel>{0, 1});  // coordinates in basis {1, omega}
    std::mt19937 rng(11);
    for (int i = 0; i < 1000; ++i) {
        Vec v = random_vec(F4, 3, rng);
        ScalarBridge br3 = make_bridge(F2, F4, 3);
        CHECK(blowdown_vector(br3, blowup_vector(br3, v)) == v);
    }
}

TEST_CASE("element blowup: identity, scalars, functoriality") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 2);
    CHECK(blowup_element(br, Semilinear::identity(F4, 2)).is_identity());

    // scalar multiplication by xi has the multiplicative order of xi (3)
    Mat s = Mat::identity(F4, 2);
    s.at(0, 0) = s.at(1, 1) = br.xi;
    Semilinear xi_mul = make_semilinear(std::move(s), 0);
    Semilinear blown = blowup_element(br, xi_mul);
    CHECK(element_order(blown) == 3);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(0, 3);
    auto rand_inv = [&]() {
        for (;;) {
            Mat m(F4, 2, 2);
            for (Fel& x : m.a) x = Fel(d(rng));
            if (invertible(m)) return make_semilinear(std::move(m), 0);
        }
    };
    for (int i = 0; i < 100; ++i) {
        Semilinear a = rand_inv(), b = rand_inv();
        CHECK(blowup_element(br, compose(a, b)) ==
              compose(blowup_element(br, a), blowup_element(br, b)));
        // intertwining with the vector blowup
        Vec v = random_vec(F4, 2, rng);
        CHECK(blowup_vector(br, apply(a, v)) == apply(blowup_element(br, a), blowup_vector(br, v)));
    }
}

TEST_CASE("unitary restriction at (m,q)=(5,2)") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 5);
    HermitianSpace hs = hermitian_standard(5, F4);
    QuadraticSpace sp = unitary_restriction(br, hs);
    CHECK(classify_type(sp) == FormType::minus);
    CHECK(enumerate_value_set(sp, 0).size() == 495);
    CHECK(sp.Q(blowup_vector(br, hs.D())) == 1);
    std::mt19937 rng(31);
    for (int i = 0; i < 1000; ++i) {
        Vec v = random_vec(F4, 5, rng);
        Fel h = hs.herm(v, v);
        CHECK(F4.in_subfield(h));
        CHECK(sp.Q(blowup_vector(br, v)) == br.split(h).first);
    }
}

TEST_CASE("trace restriction at (m,q)=(4,2)") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    QuadraticSpace ext_sp = minus_standard_space(2, F4);  // dim 4 over GF(4)
    ScalarBridge br = make_bridge(F2, F4, 4);
    QuadraticSpace sp = trace_restriction(br, ext_sp);
    CHECK(sp.dim == 8);
    CHECK(classify_type(sp) == FormType::minus);
    CHECK(enumerate_value_set(sp, 0).size() == 119);
    Fel mu = ext_sp.Q(ext_sp.labels->dprime());
    Fel tr = F4.rel_trace(mu);
    CHECK(tr != 0);
    CHECK(sp.Q(blowup_vector(br, ext_sp.labels->dprime())) == br.split(tr).first);
    std::mt19937 rng(37);
    for (int i = 0; i < 1000; ++i) {
        Vec v = random_vec(F4, 4, rng);
        CHECK(sp.Q(blowup_vector(br, v)) == br.split(F4.rel_trace(ext_sp.Q(v))).first);
    }
}

TEST_CASE("transported hyperbolic pair") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 5);
    HermitianSpace hs = hermitian_standard(5, F4);
    QuadraticSpace sp = unitary_restriction(br, hs);
    Fel lambda = solve_lambda(F4);
    auto [e1, f1] = transported_pair(br, hs, sp, lambda);
    CHECK(sp.Q(e1) == 0);
    CHECK(sp.Q(f1) == 0);
    CHECK(sp.B(e1, f1) == 1);
    CHECK(sp.Q(add(e1, f1)) == 1);
    CHECK(e1 == blowup_vector(br, scale(lambda, hs.E(0))));
    CHECK(f1 == blowup_vector(br, hs.Fv(0)));
}

TEST_CASE("complete_standard_basis") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(5, F2);
    BasisLabels lab = complete_standard_basis(sp, {});
    // the completed labels satisfy the standard Gram profile
    auto check_profile = [&](const QuadraticSpace& s, const BasisLabels& L) {
        int m = s.dim / 2;
        for (int i = 0; i + 1 < m; ++i) {
            CHECK(s.Q(L.e(i)) == 0);
            CHECK(s.Q(L.f(i)) == 0);
            CHECK(s.B(L.e(i), L.f(i)) == 1);
        }
        CHECK(s.Q(L.d()) == 1);
        CHECK(s.B(L.d(), L.dprime()) == 1);
        Fel zeta = s.Q(L.dprime());
        for (int x = 0; x < s.F->size; ++x)
            CHECK(s.F->add(s.F->add(s.F->mul(Fel(x), Fel(x)), Fel(x)), zeta) != 0);
        CHECK(invertible(L.rows));
    };
    check_profile(sp, lab);

    // every nonzero singular vector extends to a standard basis with e1 = v
    for (const Vec& v : enumerate_value_set(sp, 0)) {
        BasisLabels L = complete_standard_basis(sp, {v});
        CHECK(L.e(0) == v);
        check_profile(sp, L);
    }
}

TEST_CASE("double blowup tower") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Field& F16 = Field::get(2, 4);
    ScalarBridge br1 = make_bridge(F4, F16, 1);
    ScalarBridge br2 = make_bridge(F2, F4, 2);
    // scalar multiplication by a generator of GF(16)* keeps its order 15
    Mat s = Mat::identity(F16, 1);
    s.at(0, 0) = 2;
    Semilinear g = blowup_element(br2, blowup_element(br1, make_semilinear(std::move(s), 0)));
    CHECK(g.dim() == 4);
    CHECK(element_order(g) == 15);
    // the coordinatewise square map blows down to an order-4 element
    Semilinear psi =
        blowup_element(br2, blowup_element(br1, make_semilinear(Mat::identity(F16, 1), 1)));
    CHECK(psi.frob == 0);
    CHECK(element_order(psi) == 4);
}
