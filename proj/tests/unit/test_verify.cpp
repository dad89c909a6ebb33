#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "omf/verify.hpp"

using namespace omf;

TEST_CASE("row parameter validation") {
    std::string why;
    CHECK(row_params_ok(1, 5, 2));
    CHECK(row_params_ok(1, 5, 3));
    CHECK(row_params_ok(1, 3, 9));
    CHECK(!row_params_ok(1, 4, 2, &why));  // m must be odd
    CHECK(!why.empty());
    CHECK(!row_params_ok(3, 5, 4));   // row 3 needs q = 2
    CHECK(!row_params_ok(5, 5, 2));   // row 5 needs q = 4
    CHECK(!row_params_ok(6, 5, 2));   // even m
    CHECK(!row_params_ok(6, 4, 3));   // q in {2,4}
    CHECK(row_params_ok(8, 6, 2));
    CHECK(!row_params_ok(8, 8, 2));   // m = 2 mod 4
    CHECK(!row_params_ok(0, 5, 2));
    CHECK(!row_params_ok(12, 5, 2));
    CHECK(row_params_ok(11, 9, 2));
}

TEST_CASE("suite matrices") {
    auto mand = mandatory_matrix();
    CHECK(mand.size() == 11);
    for (const auto& s : mand) {
        CHECK(row_params_ok(s.row, s.m, s.q));
        CHECK(!s.optional);
    }
    auto opt = optional_matrix();
    CHECK(opt.size() == 2);
    for (const auto& s : opt) CHECK(s.optional);
}

TEST_CASE("row 11 is arithmetic-only") {
    RowReport rep = verify_row(11, 9, 2);
    CHECK(rep.status == "arithmetic-only");
    CHECK(rep.method == "arithmetic");
    CHECK(rep.intersection_order == 1152);
    CHECK(rep.expected_value == 1152);
    CHECK(rep.z_order == omega_minus_order(9, 2));
    CHECK(rep.x_order == triple_janko3_order());
    CHECK(all_rows_pass({rep}));
}

TEST_CASE("row 6 at (4,2) verifies geometrically") {
    RowReport rep = verify_row(6, 4, 2);
    INFO(emit_report_text({rep}));
    CHECK(rep.status == "verified");
    CHECK(rep.orbit_size == 136);
    CHECK(rep.intersection_order == 120);
    CHECK(rep.x_order == 16320);
    CHECK(rep.z_order == 2 * omega_minus_order(4, 2));
}

TEST_CASE("row 10 sporadic lifts") {
    RowSpec a{10, 5, 2, "A12", false};
    RowReport ra = verify_row(a);
    INFO(emit_report_text({ra}));
    CHECK(ra.status == "verified");
    CHECK(ra.orbit_size == 495);
    CHECK(ra.intersection_order == 483840);

    RowSpec m{10, 5, 2, "M12", false};
    RowReport rm = verify_row(m);
    INFO(emit_report_text({rm}));
    CHECK(rm.status == "verified");
    CHECK(rm.orbit_size == 495);
    CHECK(rm.intersection_order == 192);
}

TEST_CASE("JSON report shape and reproducibility") {
    std::string empty = emit_report_json({});
    auto je = nlohmann::json::parse(empty);
    CHECK(je["schema_version"] == 1);
    CHECK(je["rows"].is_array());
    CHECK(je["rows"].empty());

    RowReport rep = verify_row(11, 9, 2);
    std::string once = emit_report_json({rep});
    std::string twice = emit_report_json({verify_row(11, 9, 2)});
    CHECK(once == twice);  // byte-identical across reruns

    auto j = nlohmann::json::parse(once);
    auto& r = j["rows"][0];
    CHECK(r["row"] == 11);
    CHECK(r["m"] == 9);
    CHECK(r["q"] == 2);
    CHECK(r["method"] == "arithmetic");
    CHECK(r["status"] == "arithmetic-only");
    CHECK(r["expected"]["value"] == 1152);
    CHECK(r["intersection_order"] == 1152);
    CHECK(r["elapsed_ms"] == 0);
}

TEST_CASE("heavy rows downgrade without the heavy flag") {
    RowSpec s{5, 5, 4, "", true};
    RowReport rep = verify_row(s);  // default options: heavy = false
    CHECK(rep.method == "arithmetic");
    CHECK(rep.status == "arithmetic-only");
    bool noticed = false;
    for (const auto& n : rep.notes) noticed |= n.find("NOTICE") != std::string::npos;
    CHECK(noticed);
    CHECK(!all_rows_pass({rep}));  // arithmetic-only passes only for row 11
}

TEST_CASE("invalid parameters are rejected up front") {
    RowSpec bad{1, 4, 2, "", false};
    CHECK_THROWS_AS(verify_row(bad), std::invalid_argument);
    CHECK_THROWS_AS(verify_row(6, 4, 3), std::invalid_argument);
}
