#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "omf/factorcore.hpp"

using namespace omf;

namespace {

SmallGroup s3_in_s4() {
    // S3 on {0,1,2} embedded in degree 4
    return closure(4, {{1, 0, 2, 3}, {1, 2, 0, 3}});
}

Perm random_element(const SmallGroup& g, std::mt19937& rng) {
    std::uniform_int_distribution<size_t> d(0, g.size() - 1);
    return g.elements[d(rng)];
}

}  // namespace

TEST_CASE("basic closures") {
    CHECK(symmetric_group(4).size() == 24);
    CHECK(alternating_group(4).size() == 12);
    CHECK(alternating_group(5).size() == 60);
    CHECK(cyclic_group(3, 4).size() == 3);
    SmallGroup s4 = symmetric_group(4);
    for (const Perm& a : s4.elements) {
        CHECK(contains(s4, pinverse(a)));
        CHECK(pcompose(a, pinverse(a)) == pidentity(4));
    }
}

TEST_CASE("S4 = S3 * A4, but A4 != C2 * C3") {
    SmallGroup s4 = symmetric_group(4);
    SmallGroup a4 = alternating_group(4);
    SmallGroup s3 = s3_in_s4();
    CHECK(is_factorization(s4, s3, a4));
    CHECK(is_factorization(s4, a4, s3));

    SmallGroup c2 = closure(4, {{1, 0, 3, 2}});
    SmallGroup c3 = closure(4, {{1, 2, 0, 3}});
    CHECK(!is_factorization(a4, c2, c3));  // 2 * 3 < 12
}

TEST_CASE("factorization iff counting") {
    // G = HK iff |H||K| / |H cap K| == |G|, verified over a subgroup corpus
    SmallGroup s4 = symmetric_group(4);
    std::vector<SmallGroup> subs = {
        symmetric_group(4), alternating_group(4), s3_in_s4(),
        closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}),          // V4
        closure(4, {{1, 2, 3, 0}}),                         // C4
        closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 2, 3}}),  // D8
        closure(4, {{1, 0, 2, 3}}),                         // C2
        closure(4, {pidentity(4)}),
    };
    for (const auto& h : subs)
        for (const auto& k : subs) {
            size_t inter = intersection(h, k).size();
            bool counting = h.size() * k.size() / inter == s4.size();
            CHECK(is_factorization(s4, h, k) == counting);
            CHECK(product_set(h, k).size() == h.size() * k.size() / inter);
        }
}

TEST_CASE("quotient reduction") {
    SmallGroup s4 = symmetric_group(4);
    SmallGroup a4 = alternating_group(4);
    SmallGroup s3 = s3_in_s4();
    SmallGroup v4 = closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    SmallGroup triv = closure(4, {pidentity(4)});
    CHECK(is_normal(v4, s4));
    CHECK(is_normal(a4, s4));
    // both sides of the reduction agree for every normal subgroup
    CHECK(quotient_reduction_check(s4, s3, a4, triv));
    CHECK(quotient_reduction_check(s4, s3, a4, v4));
    CHECK(quotient_reduction_check(s4, s3, a4, a4));
    CHECK(quotient_reduction_check(s4, s3, a4, s4));
    // also for a non-factorization pair
    SmallGroup c4 = closure(4, {{1, 2, 3, 0}});
    CHECK(quotient_reduction_check(s4, c4, v4, v4));
}

TEST_CASE("conjugate pairs remain factorizations") {
    SmallGroup s4 = symmetric_group(4);
    SmallGroup a4 = alternating_group(4);
    SmallGroup s3 = s3_in_s4();
    SmallGroup a5 = alternating_group(5);
    SmallGroup a4in5 = closure(5, {{1, 2, 0, 3, 4}, {0, 2, 3, 1, 4}});
    SmallGroup c5 = closure(5, {{1, 2, 3, 4, 0}});
    REQUIRE(is_factorization(a5, a4in5, c5));

    std::mt19937 rng(99);
    for (int i = 0; i < 20; ++i) {
        CHECK(conjugate_pair_checks(s4, s3, a4, random_element(s4, rng),
                                    random_element(s4, rng)));
        CHECK(conjugate_pair_checks(a5, a4in5, c5, random_element(a5, rng),
                                    random_element(a5, rng)));
    }
}

TEST_CASE("mixed product identity") {
    SmallGroup s4 = symmetric_group(4);
    SmallGroup a4 = alternating_group(4);
    SmallGroup s3 = s3_in_s4();
    SmallGroup v4 = closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    SmallGroup triv = closure(4, {pidentity(4)});
    CHECK(mixed_product_identity(s4, s3, a4, triv));
    CHECK(mixed_product_identity(s4, s3, a4, v4));
    CHECK(mixed_product_identity(s4, s3, a4, a4));
    CHECK(mixed_product_identity(s4, s3, a4, s4));
}
