#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "omf/forms.hpp"

using namespace omf;

namespace {

Vec random_vec(const Field& F, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, F.size - 1);
    Vec v(F, n);
    for (Fel& x : v.c) x = Fel(d(rng));
    return v;
}

}  // namespace

TEST_CASE("singular vector counts in minus-type standard spaces") {
    const Field& F2 = Field::get(2, 1);
    CHECK(enumerate_value_set(minus_standard_space(4, F2), 0).size() == 119);  // 7*17
    CHECK(enumerate_value_set(minus_standard_space(5, F2), 0).size() == 495);  // 15*33
    CHECK(enumerate_value_set(minus_standard_space(5, F2), 1).size() == 528);
    CHECK(enumerate_value_set(minus_standard_space(4, F2), 1).size() == 136);
}

TEST_CASE("standard basis form values") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(5, F2);
    Vec e1 = sp.labels->e(0), f1 = sp.labels->f(0);
    CHECK(sp.Q(e1) == 0);
    CHECK(sp.Q(f1) == 0);
    CHECK(sp.B(e1, f1) == 1);
    // Q(d') = zeta with x^2 + x + zeta rootless
    Fel zeta = sp.Q(sp.labels->dprime());
    CHECK(zeta == sp.zeta);
    for (int x = 0; x < 2; ++x)
        CHECK(F2.add(F2.add(F2.mul(Fel(x), Fel(x)), Fel(x)), zeta) != 0);
}

TEST_CASE("polar identity over GF(3)") {
    const Field& F3 = Field::get(3, 1);
    QuadraticSpace sp = minus_standard_space(3, F3);
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
        Vec u = random_vec(F3, 6, rng), v = random_vec(F3, 6, rng);
        Fel lhs = sp.B(u, v);
        Fel rhs = F3.sub(F3.sub(sp.Q(add(u, v)), sp.Q(u)), sp.Q(v));
        CHECK(lhs == rhs);
        CHECK(sp.B(v, v) == F3.add(sp.Q(v), sp.Q(v)));  // beta(v,v) = 2 Q(v)
    }
}

TEST_CASE("reflections") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(5, F2);
    Vec e1 = sp.labels->e(0), f1 = sp.labels->f(0);
    Vec w = add(e1, f1);
    Semilinear r = reflection(sp, w);
    CHECK(compose(r, r).is_identity());
    CHECK(apply(r, e1) == f1);  // swap in characteristic 2
    CHECK(apply(r, f1) == e1);
    CHECK(is_isometry(sp, r));
    CHECK(dickson_or_spinor(sp, r) == 1);

    const Field& F3 = Field::get(3, 1);
    QuadraticSpace sp3 = minus_standard_space(3, F3);
    Vec w3 = sp3.labels->d();
    Semilinear r3 = reflection(sp3, w3);
    CHECK(dickson_or_spinor(sp3, r3) == 1);
    for (const Vec& b : perp_basis(sp3, {w3})) CHECK(apply(r3, b) == b);
    CHECK(apply(r3, w3) == scale(F3.neg(1), w3));
}

TEST_CASE("Eichler maps lie in the kernel of the Dickson invariant") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(4, F2);
    Vec u = sp.labels->e(0);
    Vec zero(F2, 8);
    CHECK(eichler(sp, u, zero).is_identity());
    CHECK(eichler(sp, u, u).is_identity());  // v = u, char 2
    std::mt19937 rng(17);
    int tested = 0;
    while (tested < 1000) {
        Vec su = random_vec(F2, 8, rng);
        if (su.is_zero() || sp.Q(su) != 0) continue;
        Vec v = random_vec(F2, 8, rng);
        if (sp.B(su, v) != 0) continue;
        Semilinear g = eichler(sp, su, v);
        CHECK(is_isometry(sp, g));
        CHECK(dickson_or_spinor(sp, g) == 0);
        ++tested;
    }
}

TEST_CASE("Dickson/spinor marks Omega membership in odd characteristic") {
    const Field& F3 = Field::get(3, 1);
    QuadraticSpace sp = minus_standard_space(2, F3);
    std::vector<Vec> aniso;
    for (uint64_t code = 1; code < 81; ++code) {
        Vec v = decode(F3, 4, code);
        if (sp.Q(v) != 0) aniso.push_back(v);
    }
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, aniso.size() - 1);
    for (int i = 0; i < 200; ++i) {
        Vec a = aniso[pick(rng)], b = aniso[pick(rng)];
        Semilinear ra = reflection(sp, a), rb = reflection(sp, b);
        // a single reflection never lies in Omega (odd reflection count)
        CHECK(dickson_or_spinor(sp, ra) == 1);
        // a reflection product lies in Omega iff the square classes agree
        int expected = F3.is_square(sp.Q(a)) == F3.is_square(sp.Q(b)) ? 0 : 1;
        CHECK(dickson_or_spinor(sp, compose(ra, rb)) == expected);
        // the invariant is conjugation-invariant
        Vec c = aniso[pick(rng)];
        Semilinear rc = reflection(sp, c);
        Semilinear conj = compose(compose(rc, compose(ra, rb)), rc);
        CHECK(dickson_or_spinor(sp, conj) == expected);
    }
    CHECK(dickson_or_spinor(sp, Semilinear::identity(F3, 4)) == 0);
}

TEST_CASE("type classification") {
    const Field& F2 = Field::get(2, 1);
    CHECK(classify_type(minus_standard_space(5, F2)) == FormType::minus);
    // four hyperbolic pairs: plus type with 135 = (2^3+1)(2^4-1) singular vectors
    Mat U(F2, 8, 8);
    for (int i = 0; i < 4; ++i) U.at(2 * i, 2 * i + 1) = 1;
    QuadraticSpace hyp = make_quadratic_space(F2, U);
    CHECK(enumerate_value_set(hyp, 0).size() == 135);
    CHECK(classify_type(hyp) == FormType::plus);
}

TEST_CASE("standard hermitian space") {
    const Field& F4 = Field::get(2, 2);
    HermitianSpace hs = hermitian_standard(5, F4);
    CHECK(hs.herm(hs.D(), hs.D()) == 1);
    CHECK(hs.herm(hs.E(0), hs.Fv(0)) == 1);
    CHECK(hs.herm(hs.E(0), hs.E(0)) == 0);
    CHECK(hs.herm(hs.E(0), hs.Fv(1)) == 0);
    // gram equals its conjugate transpose
    Mat ct = transpose(frob_mat(hs.gram, hs.F->sub_degree));
    CHECK(ct == hs.gram);
}

TEST_CASE("space serialization round trip") {
    const Field& F4 = Field::get(2, 2);
    QuadraticSpace sp = minus_standard_space(3, F4);
    std::string text = space_to_text(sp);
    CHECK(text.substr(0, 7) == "GRAM-UT");
    QuadraticSpace back = space_from_text(text);
    CHECK(back.upper == sp.upper);
    CHECK(space_to_text(back) == text);
}

TEST_CASE("perp basis dimensions") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(4, F2);
    Vec e1 = sp.labels->e(0);
    auto pb = perp_basis(sp, {e1});
    CHECK(pb.size() == 7);
    for (const Vec& v : pb) CHECK(sp.B(e1, v) == 0);
    auto pb2 = perp_basis(sp, {e1, sp.labels->f(0)});
    CHECK(pb2.size() == 6);
}
