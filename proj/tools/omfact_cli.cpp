// omfact: construct finite classical groups of minus type and certify the
// factorization rows of the accompanying group-factorization table through
// exact orbit, stabilizer-chain and big-integer computations.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "omf/factorcore.hpp"
#include "omf/forms.hpp"
#include "omf/gens.hpp"
#include "omf/orders.hpp"
#include "omf/verify.hpp"

namespace {

int write_out(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    os << doc;
    return 0;
}

int run_verify(const std::vector<omf::RowSpec>& specs, const omf::VerifyOptions& opt,
               const std::string& format, const std::string& out_path) {
    std::vector<omf::RowReport> reports;
    for (const omf::RowSpec& s : specs) {
        try {
            reports.push_back(omf::verify_row(s, opt));
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
    }
    std::string doc =
        format == "json" ? omf::emit_report_json(reports) : omf::emit_report_text(reports);
    int rc = write_out(doc, out_path);
    if (rc) return rc;
    return omf::all_rows_pass(reports) ? 0 : 1;
}

int run_identities(int row, int m, int q) {
    std::vector<omf::IdentityResult> results;
    if (row == 0) {
        results = omf::identity_suite();
    } else {
        // fall back to the standard desk parameters when none are given
        if (m == 0 || q == 0) {
            for (const omf::RowSpec& s : omf::mandatory_matrix())
                if (s.row == row) {
                    m = s.m;
                    q = s.q;
                    break;
                }
            for (const omf::RowSpec& s : omf::optional_matrix())
                if (s.row == row && (m == 0 || q == 0)) {
                    m = s.m;
                    q = s.q;
                }
        }
        try {
            results = omf::identity_row(row, m, q);
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
    }
    if (row == 11 || row == 0)
        std::cout << "150,698,880 / 1,152 = 130,815 = (2^9+1)(2^8-1)\n";
    bool all = true;
    for (const omf::IdentityResult& r : results) {
        std::cout << (r.pass ? "pass " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (!r.pass) all = false;
    }
    std::cout << (all ? "all identities hold\n" : "identity failures present\n");
    return all ? 0 : 1;
}

int run_enumerate(int m, int q, int value, const std::string& out_path) {
    if (m < 2 || q < 2) {
        std::cerr << "usage error: enumerate requires --m >= 2 and --q >= 2\n";
        return 2;
    }
    try {
        int p = q % 2 == 0 ? 2 : 3;
        int f = 0;
        for (int v = 1; v < q; v *= p) ++f;
        const omf::Field& F = omf::Field::get(p, f);
        omf::QuadraticSpace sp = omf::minus_standard_space(m, F);
        std::vector<omf::Vec> set = omf::enumerate_value_set(sp, omf::Fel(value));
        std::string doc = omf::space_to_text(sp) + "count " + std::to_string(set.size()) + "\n" +
                          omf::vector_set_to_text(set);
        return write_out(doc, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_selftest() {
    using namespace omf;
    int failures = 0;
    auto check = [&](bool ok, const char* what) {
        std::cout << (ok ? "pass " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };
    SmallGroup s4 = symmetric_group(4), s3 = closure(4, {pidentity(4)}), a4 = alternating_group(4);
    {
        Perm t = pidentity(4);
        std::swap(t[0], t[1]);
        Perm c3{1, 2, 0, 3};
        s3 = closure(4, {t, c3});
    }
    check(s4.size() == 24 && a4.size() == 12 && s3.size() == 6, "small group closures");
    check(is_factorization(s4, s3, a4), "S4 = S3 * A4");
    SmallGroup v4 = closure(4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}});
    check(quotient_reduction_check(s4, s3, a4, v4), "quotient reduction on S4");
    check(mixed_product_identity(s4, s3, a4, v4), "mixed product identity on S4");
    check(su_order(3, 2) == 216 && omega_minus_order(4, 2) == 197406720, "order formulas");
    {
        const Field& F4 = Field::get(2, 2);
        // the nontrivial cube roots of unity multiply to 1
        check(F4.mul(2, 3) == 1, "GF(4) omega * omega^2 = 1");
    }
    bool ids = true;
    for (const IdentityResult& r : identity_suite())
        if (!r.pass) ids = false;
    check(ids, "identity suite");
    std::cout << (failures ? "selftest failed\n" : "selftest ok\n");
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minus-type orthogonal group factorization verifier"};
    app.require_subcommand(1);

    int row = 0, m = 0, q = 0, value = 0;
    bool all_mandatory = false, include_optional = false;
    std::string format = "text", out_path, data_path;
    uint64_t cap = uint64_t(1) << 26;
    uint64_t seed = 0;

    CLI::App* verify = app.add_subcommand("verify", "verify factorization rows");
    verify->add_option("--row", row, "row number (1..11)");
    verify->add_option("--m", m, "dimension parameter m");
    verify->add_option("--q", q, "field size q");
    verify->add_flag("--all-mandatory", all_mandatory, "run the full mandatory matrix");
    verify->add_flag("--include-optional", include_optional, "also run long optional rows");
    verify->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--cap", cap, "orbit/enumeration cap");
    verify->add_option("--seed", seed, "seed (recorded only; all computations deterministic)");
    verify->add_option("--data", data_path, "sporadic generator data file");

    CLI::App* orders = app.add_subcommand("orders", "print the order formula table");

    CLI::App* identities = app.add_subcommand("identities", "run the exact order identities");
    identities->add_option("--row", row, "restrict to one row");
    identities->add_option("--m", m, "dimension parameter m");
    identities->add_option("--q", q, "field size q");

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate a quadric value set");
    enumerate->add_option("--m", m, "number of hyperbolic pairs + 1 (dimension 2m)");
    enumerate->add_option("--q", q, "field size q");
    enumerate->add_option("--value", value, "form value to enumerate (field index)");
    enumerate->add_option("--out", out_path, "write the listing to a file");

    CLI::App* selftest = app.add_subcommand("selftest", "run built-in consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        omf::VerifyOptions opt;
        opt.cap = cap;
        opt.heavy = include_optional;
        opt.m12_data_path = data_path;
        std::vector<omf::RowSpec> specs;
        if (all_mandatory) {
            specs = omf::mandatory_matrix();
            if (include_optional)
                for (const omf::RowSpec& s : omf::optional_matrix()) specs.push_back(s);
        } else if (row != 0) {
            std::string reason;
            if (!omf::row_params_ok(row, m, q, &reason)) {
                std::cerr << "usage error: " << reason << "\n";
                return 2;
            }
            if (row == 10) {
                specs.push_back({10, m, q, "A12", false});
                specs.push_back({10, m, q, "M12", false});
            } else {
                specs.push_back({row, m, q, "", false});
            }
        } else {
            std::cerr << "usage error: verify needs --row or --all-mandatory\n";
            return 2;
        }
        return run_verify(specs, opt, format, out_path);
    }
    if (orders->parsed()) {
        std::cout << omf::orders_table();
        return 0;
    }
    if (identities->parsed()) return run_identities(row, m, q);
    if (enumerate->parsed()) return run_enumerate(m, q, value, out_path);
    if (selftest->parsed()) return run_selftest();
    return 2;
}
