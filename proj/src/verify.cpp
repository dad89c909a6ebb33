#include "omf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "omf/forms.hpp"
#include "omf/gens.hpp"
#include "omf/scalars.hpp"

namespace omf {

namespace {

struct FieldParams {
    int p = 0, f = 0;
};

FieldParams field_params(int q) {
    for (int p : {2, 3}) {
        int v = p, f = 1;
        while (v < q) {
            v *= p;
            ++f;
        }
        if (v == q) return {p, f};
    }
    throw std::invalid_argument("q must be a power of 2 or 3");
}

const Field& base_field(int q) {
    FieldParams fp = field_params(q);
    return Field::get(fp.p, fp.f);
}

const Field& ext_field(int q) {
    FieldParams fp = field_params(q);
    return Field::get(fp.p, 2 * fp.f);
}

int log_degree(int q) { return field_params(q).f; }

std::string big(const cpp_int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void fail(RowReport& rep, const std::string& what) {
    rep.notes.push_back("FAIL: " + what);
    rep.status = "failed";
}

void finish(RowReport& rep) {
    if (rep.status.empty()) rep.status = "verified";
}

// |X| * |Y| == |Z| * |X cap Y| with the measured intersection
void check_product(RowReport& rep) {
    if (rep.x_order * rep.y_order != rep.z_order * rep.intersection_order)
        fail(rep, "|X||Y| != |Z||X cap Y|: " + big(rep.x_order) + " * " + big(rep.y_order) +
                      " vs " + big(rep.z_order) + " * " + big(rep.intersection_order));
}

// gate policy for the ambient special-orthogonal factory: full chain
// verification when the point count is desk-scale, closed-form order (with
// a note) otherwise
GroupHandle ambient_omega(const QuadraticSpace& sp, RowReport& rep) {
    double points = std::pow(double(sp.F->size), sp.dim);
    bool gate = (sp.F->p == 2) ? points <= 65536.0 : points <= 6561.0;
    if (!gate)
        rep.notes.push_back(
            "ambient Omega generators ungated at this size; Eichler transformations "
            "generate Omega in dimension >= 5, order taken from the closed form");
    return omega_minus_gens(sp, gate);
}

// method (a): T-orbit of the datum must equal the Z-orbit as a set; the
// stabilizer-side factor is the full Z-stabilizer, so |T_datum| = |X cap Y|
void run_orbit_vector(RowReport& rep, const GroupHandle& T, const cpp_int& t_order,
                      const GroupHandle& Z, const Vec& datum, const cpp_int& expected_orbit,
                      uint64_t cap) {
    std::vector<Point> ot = vector_orbit(T, datum, cap);
    std::vector<Point> oz = vector_orbit(Z, datum, cap);
    rep.orbit_size = ot.size();
    if (ot != oz)
        fail(rep, "orbit mismatch: factor orbit " + std::to_string(ot.size()) +
                      " points, ambient orbit " + std::to_string(oz.size()) + " points");
    if (rep.orbit_size != expected_orbit)
        fail(rep, "orbit size " + big(rep.orbit_size) + " != expected " + big(expected_orbit));
    if (t_order % cpp_int(ot.size()) != 0) {
        fail(rep, "orbit length does not divide the factor order");
        return;
    }
    rep.intersection_order = t_order / cpp_int(ot.size());
    if (rep.intersection_order != rep.expected_value)
        fail(rep, "stabilizer order " + big(rep.intersection_order) + " != expected " +
                      big(rep.expected_value));
    check_product(rep);
}

// canonical representative of the 1-space <v>: scaled so that the first
// nonzero coordinate is 1
Vec canon_line(const Vec& v) {
    for (Fel x : v.c)
        if (x) return scale(v.F->inv(x), v);
    return v;
}

// orbit of the 1-space <start> under g, as sorted encodings of canonical
// representatives; semilinear generators act on lines, so this is the right
// datum when scalars do not preserve the form value
std::vector<Point> line_orbit(const GroupHandle& g, const Vec& start, uint64_t cap) {
    Vec s = canon_line(start);
    std::unordered_set<Point> seen{encode(s)};
    std::vector<Vec> frontier{std::move(s)};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (const Semilinear& x : g.gens) {
                Vec w = canon_line(apply(x, v));
                if (seen.insert(encode(w)).second) {
                    if (seen.size() > cap) throw std::runtime_error("line_orbit: cap exceeded");
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Point> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// method (a) on 1-spaces instead of vectors
void run_orbit_line(RowReport& rep, const GroupHandle& T, const cpp_int& t_order,
                    const GroupHandle& Z, const Vec& datum, const cpp_int& expected_orbit,
                    uint64_t cap) {
    std::vector<Point> ot = line_orbit(T, datum, cap);
    std::vector<Point> oz = line_orbit(Z, datum, cap);
    rep.orbit_size = ot.size();
    if (ot != oz)
        fail(rep, "line orbit mismatch: factor orbit " + std::to_string(ot.size()) +
                      " lines, ambient orbit " + std::to_string(oz.size()) + " lines");
    if (rep.orbit_size != expected_orbit)
        fail(rep, "line orbit size " + big(rep.orbit_size) + " != expected " +
                      big(expected_orbit));
    if (t_order % cpp_int(ot.size()) != 0) {
        fail(rep, "line orbit length does not divide the factor order");
        return;
    }
    rep.intersection_order = t_order / cpp_int(ot.size());
    if (rep.intersection_order != rep.expected_value)
        fail(rep, "line stabilizer order " + big(rep.intersection_order) + " != expected " +
                      big(rep.expected_value));
    check_product(rep);
}

// context shared by the odd-m rows 1-5: hermitian space downstairs via
// restriction of scalars, with the transported hyperbolic pair (e1, f1)
struct OddCtx {
    const Field* Fq = nullptr;
    const Field* Fq2 = nullptr;
    ScalarBridge br;
    HermitianSpace hs;
    QuadraticSpace V;
    Vec e1, f1;
};

OddCtx make_odd_ctx(int m, int q) {
    OddCtx c;
    c.Fq = &base_field(q);
    c.Fq2 = &ext_field(q);
    c.br = make_bridge(*c.Fq, *c.Fq2, m);
    c.hs = hermitian_standard(m, *c.Fq2);
    QuadraticSpace V0 = unitary_restriction(c.br, c.hs);
    Fel lambda = solve_lambda(*c.Fq2);
    auto [e1, f1] = transported_pair(c.br, c.hs, V0, lambda);
    c.e1 = e1;
    c.f1 = f1;
    BasisLabels lab = complete_standard_basis(V0, {e1, f1});
    c.V = with_labels(std::move(V0), std::move(lab));
    return c;
}

RowReport arithmetic_fallback(RowReport rep, const std::string& why) {
    rep.method = "arithmetic";
    rep.notes.push_back("NOTICE: " + why);
    bool ok = true;
    for (const IdentityResult& r : identity_row(rep.row, rep.m, rep.q)) {
        if (!r.pass) ok = false;
        rep.notes.push_back((r.pass ? "identity pass: " : "identity FAIL: ") + r.name + " " +
                            r.detail);
    }
    rep.status = ok ? "arithmetic-only" : "failed";
    return rep;
}

RowReport row_1_2(const RowSpec& spec, const VerifyOptions& opt) {
    int m = spec.m, q = spec.q;
    RowReport rep;
    rep.row = spec.row;
    rep.m = m;
    rep.q = q;
    rep.method = "orbit";
    OddCtx c = make_odd_ctx(m, q);
    GroupHandle T = su_gens_blownup(c.br, c.hs);  // order chain-gated inside
    cpp_int t_order = su_order(m, q);
    rep.y_order = t_order;
    rep.z_order = omega_minus_order(m, q);
    GroupHandle Z = ambient_omega(c.V, rep);
    Vec datum;
    cpp_int expected_orbit;
    if (spec.row == 1) {
        datum = add(c.e1, c.f1);
        rep.datum = "e1+f1";
        expected_orbit = ipow(q, unsigned(m - 1)) * (ipow(q, unsigned(m)) + 1);
        rep.x_order = omega_odd_order(m - 1, q);
        rep.expected_value = su_order(m - 1, q);
        rep.expected_provenance = "|SU_{m-1}(q)|; orbit index q^{m-1}(q^m+1)";
    } else {
        datum = blowup_vector(c.br, c.hs.E(0));
        rep.datum = "blowup(E1)";
        expected_orbit = (ipow(q, unsigned(m)) + 1) * (ipow(q, unsigned(m - 1)) - 1);
        rep.expected_value = ipow(q, unsigned(2 * m - 3)) * su_order(m - 2, q);
        rep.expected_provenance = "q^{2m-3} |SU_{m-2}(q)| (extension-shape check by order)";
        rep.x_order = rep.z_order * rep.expected_value / rep.y_order;
    }
    run_orbit_vector(rep, T, t_order, Z, datum, expected_orbit, opt.cap);
    finish(rep);
    return rep;
}

RowReport row_3(const RowSpec& spec, const VerifyOptions& opt) {
    int m = spec.m, q = spec.q;
    RowReport rep;
    rep.row = 3;
    rep.m = m;
    rep.q = q;
    rep.method = "orbit";
    rep.datum = "{e1,f1}";
    OddCtx c = make_odd_ctx(m, q);
    GroupHandle T = su_gens_blownup(c.br, c.hs);
    cpp_int t_order = su_order(m, q);
    rep.y_order = t_order;
    rep.z_order = omega_minus_order(m, q);
    rep.x_order = 2 * omega_minus_order(m - 1, q);
    rep.expected_value = su_order(m - 2, q);
    rep.expected_provenance = "|SU_{m-2}(q)| (pointwise pair stabilizer)";
    GroupHandle Z = ambient_omega(c.V, rep);
    cpp_int expected_pairs =
        ipow(q, unsigned(2 * m - 3)) * (ipow(q, unsigned(m)) + 1) * (ipow(q, unsigned(m - 1)) - 1);

    auto pt = unordered_pair_orbit(T, c.e1, c.f1, opt.cap);
    auto pz = unordered_pair_orbit(Z, c.e1, c.f1, opt.cap);
    rep.orbit_size = pt.size();
    if (pt != pz)
        fail(rep, "pair orbit mismatch: factor " + std::to_string(pt.size()) + ", ambient " +
                      std::to_string(pz.size()));
    if (rep.orbit_size != expected_pairs)
        fail(rep, "pair orbit size " + big(rep.orbit_size) + " != expected " +
                      big(expected_pairs));

    auto ordered = ordered_pair_orbit(T, c.e1, c.f1, opt.cap);
    std::pair<Point, Point> swapped{encode(c.f1), encode(c.e1)};
    bool swap_absent = !std::binary_search(ordered.begin(), ordered.end(), swapped);
    if (!swap_absent) fail(rep, "swapped pair reached by the unitary factor");
    rep.notes.push_back(std::string("swap_absence_check: ") + (swap_absent ? "true" : "false") +
                        " (no unitary element exchanges e1 and f1)");
    auto ordered_z = ordered_pair_orbit(Z, c.e1, c.f1, opt.cap);
    bool swap_in_z = std::binary_search(ordered_z.begin(), ordered_z.end(), swapped);
    rep.notes.push_back(std::string("control: ambient group ") +
                        (swap_in_z ? "does" : "does NOT") + " reach the swapped pair");
    if (!swap_in_z) fail(rep, "control failed: ambient group should reach the swapped pair");

    if (t_order % cpp_int(ordered.size()) != 0) {
        fail(rep, "ordered pair orbit length does not divide the factor order");
        return rep;
    }
    rep.intersection_order = t_order / cpp_int(ordered.size());
    if (rep.intersection_order != rep.expected_value)
        fail(rep, "pointwise stabilizer order " + big(rep.intersection_order) + " != expected " +
                      big(rep.expected_value));
    check_product(rep);
    finish(rep);
    return rep;
}

RowReport row_4_5(const RowSpec& spec, const VerifyOptions& opt) {
    int m = spec.m, q = spec.q;
    RowReport rep;
    rep.row = spec.row;
    rep.m = m;
    rep.q = q;
    rep.method = "intersection";
    rep.datum = "{e1,f1}";
    int f = log_degree(q);
    if (q == 4 && !opt.heavy)
        return arithmetic_fallback(rep,
                                   "certification chains at q=4 exceed the default caps; "
                                   "rerun with raised caps (--include-optional / --cap)");
    OddCtx c = make_odd_ctx(m, q);
    rep.y_order = cpp_int(2 * f) * su_order(m, q);
    rep.z_order = cpp_int(2 * f) * omega_minus_order(m, q);
    rep.x_order = cpp_int(2 * f) * omega_minus_order(m - 1, q);
    rep.expected_value = su_order(m - 2, q);
    rep.expected_provenance = "|SU_{m-2}(q)|";
    rep.notes.push_back(
        "X extension realized by elements fixing e1 and f1 pointwise: the reflection in d "
        "(Dickson 1)" +
        std::string(q == 4 ? " and the semilinear phi-like correction" : ""));

    // Y = (unitary factor):(coordinatewise p-power), chain-certified
    GroupHandle su = su_gens_blownup(c.br, c.hs);
    std::vector<Semilinear> ygens = su.gens;
    ygens.push_back(frobenius_element(c.br));
    GroupHandle Y = make_group(*c.Fq, 2 * m, std::move(ygens));
    cpp_int y_chain = StabChain(Y).order();
    if (y_chain != rep.y_order)
        fail(rep, "chain order of Y " + big(y_chain) + " != 2f |SU_m(q)| = " + big(rep.y_order));

    // X = Omega(V)_{e1,f1} : <rho>; certify the pointwise-stabilizer order
    // through a hinted chain when the ambient space is desk-scale
    if (q == 2) {
        GroupHandle Om = omega_minus_gens(c.V, false);
        StabChain omch(Om, {encode(c.e1), encode(c.f1)});
        if (omch.order() != omega_minus_order(m, q))
            fail(rep, "ambient chain order " + big(omch.order()) + " != " +
                          big(omega_minus_order(m, q)));
        cpp_int stab2 =
            omch.order() / (cpp_int(omch.orbit_size(0)) * cpp_int(omch.orbit_size(1)));
        if (cpp_int(2 * f) * stab2 != rep.x_order)
            fail(rep, "pointwise-stabilizer chain order disagrees with |X|/2f");
    } else {
        rep.notes.push_back("|X| taken from the closed form at q=4");
    }

    // coset representatives of X over its Omega-pointwise-stabilizer core:
    // products of the reflection in d (fixes e1, f1; Dickson 1) and the
    // phi-like field extension element (fixes e1, f1; frob layers)
    std::vector<Semilinear> reps{Semilinear::identity(*c.Fq, 2 * m)};
    {
        Semilinear rd = reflection(c.V, c.V.labels->d());
        std::vector<Semilinear> frob_layers{Semilinear::identity(*c.Fq, 2 * m)};
        if (q == 4) {
            Semilinear phi = phi_like_element(c.V);
            for (int b = 1; b < f; ++b) frob_layers.push_back(power(phi, b));
        }
        reps.clear();
        for (const Semilinear& fb : frob_layers) {
            reps.push_back(fb);
            reps.push_back(compose(rd, fb));
        }
    }
    uint64_t pair_orbit_n = 0;
    bool swap_in_y = false;
    GroupHandle P = setwise_pair_stabilizer(Y, c.e1, c.f1, &pair_orbit_n, &swap_in_y);
    rep.notes.push_back(std::string("setwise pair stabilizer of Y: orbit ") +
                        std::to_string(pair_orbit_n) + ", swap " +
                        (swap_in_y ? "present" : "absent"));
    std::vector<Semilinear> elems = enumerate_group(P, opt.cap);
    if (cpp_int(elems.size()) * cpp_int(pair_orbit_n) != rep.y_order)
        fail(rep, "|P| * pair-orbit != |Y|");

    // g in X iff g t^{-1} is linear, fixes e1 and f1, and has Dickson
    // invariant 0 for some coset representative t
    cpp_int inter = 0;
    for (const Semilinear& g : elems) {
        for (const Semilinear& t : reps) {
            Semilinear h = compose(g, inverse(t));
            if (h.frob != 0) continue;
            if (!(apply(h, c.e1) == c.e1) || !(apply(h, c.f1) == c.f1)) continue;
            if (dickson_or_spinor(c.V, h) != 0) continue;
            inter += 1;
            break;
        }
    }
    rep.intersection_order = inter;
    if (inter != rep.expected_value)
        fail(rep, "|X cap Y| = " + big(inter) + " != expected " + big(rep.expected_value));
    check_product(rep);
    finish(rep);
    return rep;
}

RowReport row_6_7(const RowSpec& spec, const VerifyOptions& opt) {
    int m = spec.m, q = spec.q;
    RowReport rep;
    rep.row = spec.row;
    rep.m = m;
    rep.q = q;
    rep.method = "orbit";
    rep.datum = "blowup(D')";
    int f = log_degree(q);
    const Field& Fq = base_field(q);
    const Field& Fq2 = ext_field(q);
    QuadraticSpace Vs = minus_standard_space(m / 2, Fq2);
    ScalarBridge br = make_bridge(Fq, Fq2, m);
    QuadraticSpace V0 = trace_restriction(br, Vs);
    BasisLabels lab = complete_standard_basis(V0, {});
    QuadraticSpace V = with_labels(std::move(V0), std::move(lab));
    Vec datum = blowup_vector(br, Vs.labels->dprime());

    // X: the extension-field semilinear orthogonal group, blown down
    GroupHandle OmS = omega_minus_gens(Vs, true);
    std::vector<Semilinear> xg;
    for (const Semilinear& g : OmS.gens) xg.push_back(blowup_element(br, g));
    xg.push_back(blowup_element(br, reflection(Vs, Vs.labels->dprime())));
    xg.push_back(blowup_element(br, phi_like_element(Vs)));
    GroupHandle T = make_group(Fq, 2 * m, std::move(xg));
    rep.x_order = gamma_o_minus_order(m / 2, q * q);
    cpp_int x_chain = StabChain(T).order();
    if (x_chain != rep.x_order)
        fail(rep, "chain order of X " + big(x_chain) + " != |GammaO^-_m(q^2)| = " +
                      big(rep.x_order));

    GroupHandle Om = ambient_omega(V, rep);
    std::vector<Semilinear> zg = Om.gens;
    zg.push_back(reflection(V, V.labels->d()));
    if (q == 4) zg.push_back(phi_like_element(V));
    GroupHandle Z = make_group(Fq, 2 * m, std::move(zg));
    rep.z_order = gamma_o_minus_order(m, q);
    rep.y_order = cpp_int(2 * f) * omega_odd_order(m - 1, q);
    cpp_int expected_orbit = ipow(q, unsigned(m - 1)) * (ipow(q, unsigned(m)) + 1);
    if (rep.y_order * expected_orbit != rep.z_order)
        fail(rep, "nonsingular-point stabilizer index inconsistent");

    rep.expected_value = 2 * omega_odd_order((m - 2) / 2, q * q);
    rep.expected_provenance = "2 |Omega_{m-1}(q^2)| (display discrepancy resolved to the "
                              "extension-field reading)";
    cpp_int base_reading = 2 * omega_odd_order((m - 2) / 2, q);
    rep.datum = "<blowup(D')> (nonsingular 1-space)";
    run_orbit_line(rep, T, rep.x_order, Z, datum, expected_orbit, opt.cap);
    rep.notes.push_back("display check: measured " + big(rep.intersection_order) +
                        "; extension-field reading 2|Omega_{m-1}(q^2)| = " +
                        big(rep.expected_value) + "; base-field reading 2|Omega_{m-1}(q)| = " +
                        big(base_reading));
    finish(rep);
    return rep;
}

RowReport row_8_9(const RowSpec& spec, const VerifyOptions& opt) {
    int m = spec.m, q = spec.q;
    RowReport rep;
    rep.row = spec.row;
    rep.m = m;
    rep.q = q;
    rep.method = "orbit";
    rep.datum = "blowup(D')";
    int f = log_degree(q);
    if (q == 4 && !opt.heavy)
        return arithmetic_fallback(rep,
                                   "certification chains at q=4 exceed the default caps; "
                                   "rerun with raised caps (--include-optional / --cap)");
    int l = m / 2;
    FieldParams fp = field_params(q);
    const Field& Fq = base_field(q);
    const Field& Fq2 = ext_field(q);
    const Field& Fq4 = Field::get(fp.p, 4 * fp.f);
    HermitianSpace hs = hermitian_standard(l, Fq4);
    ScalarBridge br1 = make_bridge(Fq2, Fq4, l);
    QuadraticSpace Vs0 = unitary_restriction(br1, hs);
    BasisLabels labS = complete_standard_basis(Vs0, {});
    QuadraticSpace Vs = with_labels(std::move(Vs0), std::move(labS));
    ScalarBridge br2 = make_bridge(Fq, Fq2, m);
    QuadraticSpace V0 = trace_restriction(br2, Vs);
    BasisLabels lab = complete_standard_basis(V0, {});
    QuadraticSpace V = with_labels(std::move(V0), std::move(lab));
    Vec datum = blowup_vector(br2, Vs.labels->dprime());

    GroupHandle su = su_gens(hs);
    std::vector<Semilinear> base;
    for (const Semilinear& g : su.gens)
        base.push_back(blowup_element(br2, blowup_element(br1, g)));
    Semilinear psi = blowup_element(
        br2, blowup_element(br1, make_semilinear(Mat::identity(Fq4, l), 1)));
    std::vector<Semilinear> xg = base;
    xg.push_back(psi);
    GroupHandle T = make_group(Fq, 2 * m, std::move(xg));
    rep.x_order = cpp_int(4 * f) * su_order(l, q * q);
    cpp_int x_chain = StabChain(T).order();
    if (x_chain != rep.x_order)
        fail(rep, "chain order of X " + big(x_chain) + " != 4f |SU_l(q^2)| = " +
                      big(rep.x_order));

    GroupHandle Om = ambient_omega(V, rep);
    std::vector<Semilinear> zg = Om.gens;
    zg.push_back(reflection(V, V.labels->d()));
    if (q == 4) zg.push_back(phi_like_element(V));
    GroupHandle Z = make_group(Fq, 2 * m, std::move(zg));
    rep.z_order = gamma_o_minus_order(m, q);
    rep.y_order = cpp_int(2 * f) * omega_odd_order(m - 1, q);
    cpp_int expected_orbit = ipow(q, unsigned(m - 1)) * (ipow(q, unsigned(m)) + 1);
    rep.expected_value = 2 * su_order(l - 1, q * q);
    rep.expected_provenance = "2 |SU_{l-1}(q^2)|";

    rep.datum = "<blowup(D')> (nonsingular 1-space)";
    run_orbit_line(rep, T, rep.x_order, Z, datum, expected_orbit, opt.cap);

    // record which extension layer is genuinely needed for transitivity
    GroupHandle T0 = make_group(Fq, 2 * m, base);
    uint64_t orbit0 = line_orbit(T0, datum, opt.cap).size();
    std::vector<Semilinear> half = base;
    half.push_back(power(psi, 2));
    uint64_t orbit2 = line_orbit(make_group(Fq, 2 * m, std::move(half)), datum, opt.cap).size();
    rep.notes.push_back("extension requirement: orbit under the unitary factor alone " +
                        std::to_string(orbit0) + "; with the index-2 extension " +
                        std::to_string(orbit2) + "; full extension " + big(rep.orbit_size));
    if (cpp_int(orbit0) == rep.orbit_size)
        rep.notes.push_back("the unitary factor alone is already transitive");
    else if (cpp_int(orbit2) == rep.orbit_size)
        rep.notes.push_back("the index-2 extension suffices for transitivity");
    else
        rep.notes.push_back("the full degree-4 extension is required for transitivity");
    finish(rep);
    return rep;
}

RowReport row_10(const RowSpec& spec, const VerifyOptions& opt) {
    RowReport rep;
    rep.row = 10;
    rep.m = 5;
    rep.q = 2;
    rep.variant = spec.variant.empty() ? "A12" : spec.variant;
    rep.method = "orbit";
    PermModule pm = deleted_perm_module();
    QuadraticSpace V = with_labels(pm.space, complete_standard_basis(pm.space, {}));
    if (classify_type(V) != FormType::minus) fail(rep, "permutation module is not minus type");
    std::vector<Vec> sing = enumerate_value_set(V, 0);
    rep.notes.push_back("deleted permutation module: " + std::to_string(sing.size()) +
                        " nonzero singular vectors");
    if (sing.size() != 495) fail(rep, "singular vector count != 495");
    Vec datum = sing.front();
    rep.datum = "first singular vector";

    GroupHandle T;
    cpp_int t_order;
    if (rep.variant == "M12") {
        std::string path = opt.m12_data_path.empty() ? default_m12_data_path() : opt.m12_data_path;
        T = mathieu12_gens(pm, path);
        t_order = mathieu12_order();
        rep.expected_value = 192;
        rep.expected_provenance = "|2^{1+4}.S3| = 192";
    } else {
        T = alternating12_gens(pm);
        t_order = factorial(12) / 2;
        rep.expected_value = 483840;
        rep.expected_provenance = "|(A4 x A8).2| = 483840";
    }
    rep.x_order = t_order;
    rep.z_order = omega_minus_order(5, 2);
    rep.y_order = rep.z_order / 495;  // 2^8 : Omega_8^-(2)
    if (rep.y_order != ipow(2, 8) * omega_minus_order(4, 2))
        fail(rep, "singular-point stabilizer order != 2^8 |Omega_8^-(2)|");
    GroupHandle Z = ambient_omega(V, rep);
    run_orbit_vector(rep, T, t_order, Z, datum, 495, opt.cap);
    finish(rep);
    return rep;
}

RowReport row_11(const RowSpec&) {
    RowReport rep;
    rep.row = 11;
    rep.m = 9;
    rep.q = 2;
    rep.method = "arithmetic";
    rep.datum = "none (arithmetic-only row)";
    rep.z_order = omega_minus_order(9, 2);
    rep.x_order = triple_janko3_order();
    rep.y_order = ipow(2, 16) * omega_minus_order(8, 2);
    rep.expected_value = 1152;
    rep.expected_provenance = "|X| / ((2^9+1)(2^8-1)) = 150698880 / 130815";
    if (rep.x_order * rep.y_order % rep.z_order != 0) {
        fail(rep, "|X||Y| not divisible by |Z|");
        return rep;
    }
    rep.intersection_order = rep.x_order * rep.y_order / rep.z_order;
    bool ok = rep.intersection_order == rep.expected_value;
    rep.notes.push_back("display: 150698880 / 1152 = 130815 = (2^9+1)(2^8-1)");
    for (const IdentityResult& r : identity_row(11, 9, 2)) {
        if (!r.pass) ok = false;
        rep.notes.push_back((r.pass ? "identity pass: " : "identity FAIL: ") + r.name + " " +
                            r.detail);
    }
    rep.status = ok ? "arithmetic-only" : "failed";
    return rep;
}

}  // namespace

std::vector<RowSpec> mandatory_matrix() {
    return {
        {1, 5, 2, "", false},  {1, 5, 3, "", false},    {2, 5, 2, "", false},
        {3, 5, 2, "", false},  {4, 5, 2, "", false},    {6, 4, 2, "", false},
        {7, 4, 4, "", false},  {8, 6, 2, "", false},    {10, 5, 2, "A12", false},
        {10, 5, 2, "M12", false}, {11, 9, 2, "", false},
    };
}

std::vector<RowSpec> optional_matrix() {
    return {{5, 5, 4, "", true}, {9, 6, 4, "", true}};
}

bool row_params_ok(int row, int m, int q, std::string* reason) {
    auto bad = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (row < 1 || row > 11) return bad("row must be in 1..11");
    if (row == 10 || row == 11) return true;  // fixed parameters
    try {
        field_params(q);
    } catch (const std::invalid_argument&) {
        return bad("q must be a power of 2 or 3");
    }
    if (row <= 5) {
        if (m < 3 || m % 2 == 0) return bad("rows 1-5 require odd m >= 3");
    }
    if (row == 3 || row == 4) {
        if (q != 2) return bad("rows 3-4 require q = 2");
    }
    if (row == 5 && q != 4) return bad("row 5 requires q = 4");
    if (row == 6 || row == 7) {
        if (m < 4 || m % 2 != 0) return bad("rows 6-7 require even m >= 4");
        if (row == 6 && q != 2) return bad("row 6 requires q = 2");
        if (row == 7 && q != 4) return bad("row 7 requires q = 4");
    }
    if (row == 8 || row == 9) {
        if (m < 6 || m % 4 != 2) return bad("rows 8-9 require m = 2l with odd l >= 3");
        if (row == 8 && q != 2) return bad("row 8 requires q = 2");
        if (row == 9 && q != 4) return bad("row 9 requires q = 4");
    }
    if (row <= 2 && q > 9) return bad("rows 1-2 support q up to 9 (field tower bound)");
    return true;
}

RowReport verify_row(const RowSpec& spec, const VerifyOptions& opt) {
    std::string reason;
    if (!row_params_ok(spec.row, spec.m, spec.q, &reason))
        throw std::invalid_argument("row " + std::to_string(spec.row) + ": " + reason);
    switch (spec.row) {
        case 1:
        case 2:
            return row_1_2(spec, opt);
        case 3:
            return row_3(spec, opt);
        case 4:
        case 5:
            return row_4_5(spec, opt);
        case 6:
        case 7:
            return row_6_7(spec, opt);
        case 8:
        case 9:
            return row_8_9(spec, opt);
        case 10:
            return row_10(spec, opt);
        default:
            return row_11(spec);
    }
}

RowReport verify_row(int row, int m, int q, const VerifyOptions& opt) {
    return verify_row(RowSpec{row, m, q, "", false}, opt);
}

bool swap_absence_check(int m, int q, uint64_t cap) {
    OddCtx c = make_odd_ctx(m, q);
    GroupHandle T = su_gens_blownup(c.br, c.hs);
    auto ordered = ordered_pair_orbit(T, c.e1, c.f1, cap);
    std::pair<Point, Point> swapped{encode(c.f1), encode(c.e1)};
    return !std::binary_search(ordered.begin(), ordered.end(), swapped);
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace

std::string emit_report_json(const std::vector<RowReport>& reports) {
    std::ostringstream os;
    os << "{\n  \"schema_version\": 1,\n  \"rows\": [";
    for (size_t i = 0; i < reports.size(); ++i) {
        const RowReport& r = reports[i];
        os << (i ? ",\n" : "\n");
        os << "    {\n";
        os << "      \"row\": " << r.row << ",\n";
        os << "      \"m\": " << r.m << ",\n";
        os << "      \"q\": " << r.q << ",\n";
        if (!r.variant.empty()) os << "      \"variant\": \"" << json_escape(r.variant) << "\",\n";
        os << "      \"method\": \"" << json_escape(r.method) << "\",\n";
        os << "      \"z_order\": " << r.z_order << ",\n";
        os << "      \"x_order\": " << r.x_order << ",\n";
        os << "      \"y_order\": " << r.y_order << ",\n";
        os << "      \"datum\": \"" << json_escape(r.datum) << "\",\n";
        os << "      \"orbit_size\": " << r.orbit_size << ",\n";
        os << "      \"intersection_order\": " << r.intersection_order << ",\n";
        os << "      \"expected\": {\"value\": " << r.expected_value << ", \"provenance\": \""
           << json_escape(r.expected_provenance) << "\"},\n";
        os << "      \"status\": \"" << json_escape(r.status) << "\",\n";
        os << "      \"notes\": [";
        for (size_t j = 0; j < r.notes.size(); ++j)
            os << (j ? ", " : "") << "\"" << json_escape(r.notes[j]) << "\"";
        os << "],\n";
        os << "      \"elapsed_ms\": " << r.elapsed_ms << "\n";
        os << "    }";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::string emit_report_text(const std::vector<RowReport>& reports) {
    std::ostringstream os;
    os << "Factorization row verification report\n";
    os << "======================================\n";
    for (const RowReport& r : reports) {
        os << "\nRow " << r.row;
        if (!r.variant.empty()) os << " [" << r.variant << "]";
        os << " (m=" << r.m << ", q=" << r.q << ") method=" << r.method << "\n";
        os << "  |Z| = " << r.z_order << "\n";
        os << "  |X| = " << r.x_order << "\n";
        os << "  |Y| = " << r.y_order << "\n";
        os << "  datum: " << r.datum << "\n";
        if (r.orbit_size != 0) os << "  orbit size: " << r.orbit_size << "\n";
        os << "  |X cap Y| = " << r.intersection_order << " (expected " << r.expected_value
           << ", " << r.expected_provenance << ")\n";
        os << "  status: " << r.status << "\n";
        for (const std::string& n : r.notes) os << "  note: " << n << "\n";
    }
    os << "\nInfinite-family cross-reference (socle, H-core, K-core):\n";
    os << "  1  POmega^-_{2m}(q) | Omega_{2m-1}(q), Omega^-_{2m-2}(q), "
          "q^{2m-2}:Omega^-_{2m-2}(q) | SU_m(q) | m odd\n";
    os << "  2  Omega^-_{2m}(2)  | SU_{m/2}(4) (m/2 odd), Omega^-_m(4), SU_{m/4}(16) (m/4 odd), "
          "Omega^-_{m/2}(16) | Sp_{2m-2}(2) |\n";
    os << "  3  Omega^-_{2m}(4)  | SU_{m/2}(16) (m/2 odd), Omega^-_m(16) | Sp_{2m-2}(4) |\n";
    os << "  4  Omega^-_10(2)    | A12, M12 | 2^8:Omega^-_8(2) |\n";
    os << "  5  Omega^-_18(2)    | 3.J3 | 2^16:Omega^-_16(2) |\n";
    return os.str();
}

bool all_rows_pass(const std::vector<RowReport>& reports) {
    for (const RowReport& r : reports) {
        if (r.status == "verified") continue;
        if (r.status == "arithmetic-only" && r.row == 11) continue;
        return false;
    }
    return true;
}

}  // namespace omf
