#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omf/orders.hpp"
#include "omf/permgrp.hpp"

namespace omf {

// one factorization-row check instance; variant selects the sporadic lift
// for row 10 ("A12" or "M12")
struct RowSpec {
    int row = 0;
    int m = 0;
    int q = 0;
    std::string variant;
    bool optional = false;
};

// the desk-scale suite: row 1 at (5,2),(5,3); row 2 at (5,2); row 3 at
// (5,2); row 4 at (5,2); row 6 at (4,2); row 7 at (4,4); row 8 at (6,2);
// row 10 both sporadic lifts; row 11 arithmetic
std::vector<RowSpec> mandatory_matrix();
// long-running extras: row 5 at (5,4), row 9 at (6,4)
std::vector<RowSpec> optional_matrix();

// parameter/parity constraints of the row table; reason (if non-null)
// receives a human-readable explanation on failure
bool row_params_ok(int row, int m, int q, std::string* reason = nullptr);

struct RowReport {
    int row = 0, m = 0, q = 0;
    std::string variant;              // row 10 only
    std::string method;               // orbit | intersection | arithmetic
    cpp_int z_order, x_order, y_order;
    std::string datum;                // geometric datum, human-readable
    cpp_int orbit_size = 0;           // method (a): common orbit length
    cpp_int intersection_order = 0;   // measured |X ∩ Y|
    cpp_int expected_value = 0;       // expected |X ∩ Y|
    std::string expected_provenance;  // closed form behind expected_value
    std::string status;               // verified | failed | arithmetic-only
    std::vector<std::string> notes;
    long long elapsed_ms = 0;  // pinned to 0: reports are byte-reproducible
};

struct VerifyOptions {
    uint64_t cap = uint64_t(1) << 26;  // orbit/enumeration cap
    // permit constructions whose certification chains need minutes to
    // hours (the optional rows 5 and 9); without it those rows downgrade
    // to the arithmetic method with a notice
    bool heavy = false;
    std::string m12_data_path;  // empty: built-in default location
};

RowReport verify_row(const RowSpec& spec, const VerifyOptions& opt = {});
RowReport verify_row(int row, int m, int q, const VerifyOptions& opt = {});

// row 3 support check: the ordered orbit of (e1, f1) under the compact
// unitary factor omits the swapped pair (f1, e1)
bool swap_absence_check(int m, int q, uint64_t cap = uint64_t(1) << 26);

// canonical JSON document {schema_version, rows: [...]}; byte-identical
// across reruns
std::string emit_report_json(const std::vector<RowReport>& reports);
// human-readable table, including the static infinite-family
// cross-reference metadata
std::string emit_report_text(const std::vector<RowReport>& reports);

// true iff every report is "verified", or "arithmetic-only" where that is
// the row's designated method (row 11)
bool all_rows_pass(const std::vector<RowReport>& reports);

}  // namespace omf
