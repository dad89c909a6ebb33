#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace omf {

using boost::multiprecision::cpp_int;

cpp_int ipow(cpp_int b, unsigned e);

// |Omega^-_{2m}(q)| = q^{m(m-1)} (q^m+1) prod_{i<m} (q^{2i}-1) / gcd(2,q-1)
cpp_int omega_minus_order(int m, int q);
// |SO^-|, |O^-|, |GammaO^-| over GF(q), q = p^f
cpp_int o_minus_order(int m, int q);
cpp_int gamma_o_minus_order(int m, int q);
// |Omega_{2k+1}(q)|
cpp_int omega_odd_order(int k, int q);
// |SU_n(q)| = q^{n(n-1)/2} prod_{i=2..n} (q^i - (-1)^i)
cpp_int su_order(int n, int q);
cpp_int gu_order(int n, int q);
// |GL_n(q)|, |Sp_{2m}(q)|
cpp_int gl_order(int n, int q);
cpp_int sp_order(int m, int q);
// factorials and sporadic constants
cpp_int factorial(int n);
cpp_int mathieu12_order();   // 95040
cpp_int janko3_order();      // 50232960
cpp_int triple_janko3_order();  // 150698880

// arithmetic consistency checks backing each factorization row: for every
// row, |X| * |Y| == |Z| * |X ∩ Y| with the published intersection, plus
// auxiliary index identities.  Returns human-readable failures (empty =
// pass).
struct IdentityResult {
    std::string name;
    bool pass;
    std::string detail;
};
std::vector<IdentityResult> identity_suite();
// identities for a single row at (m, q); throws std::invalid_argument on
// parameter/parity constraints violated (rows 10 and 11 ignore m, q)
std::vector<IdentityResult> identity_row(int row, int m, int q);

// formatted table of the orders used by the row checks
std::string orders_table();

}  // namespace omf
