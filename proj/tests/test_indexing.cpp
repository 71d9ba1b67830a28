#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thc/errors.hpp"
#include "thc/indexing.hpp"

using namespace thc::indexing;

namespace {

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::uint64_t fact(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("endpoint string families match the worked 2x3 example") {
    CHECK(enumerate_endpoint_strings(2, 1) ==
          std::vector<EndpointString>{{1}, {2}});
    CHECK(enumerate_endpoint_strings(3, 2) ==
          std::vector<EndpointString>{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
    CHECK(enumerate_endpoint_strings(2, 2) ==
          std::vector<EndpointString>{{1, 2}, {2, 1}});
    CHECK(enumerate_endpoint_strings(3, 1) ==
          std::vector<EndpointString>{{1}, {2}, {3}});
}

TEST_CASE("remainder mask families are descending with all-ones first") {
    CHECK(enumerate_remainder_masks(3, 1) ==
          std::vector<RemainderMask>{"11", "10", "01", "00"});
    CHECK(enumerate_remainder_masks(2, 2) == std::vector<RemainderMask>{""});
    CHECK(enumerate_remainder_masks(2, 1) == std::vector<RemainderMask>{"1", "0"});
}

TEST_CASE("family sizes") {
    for (int ws = 1; ws <= 6; ++ws)
        for (int k = 1; k <= ws; ++k) {
            CAPTURE(ws);
            CAPTURE(k);
            CHECK(enumerate_endpoint_strings(ws, k).size() == binomial(ws, k) * fact(k));
            CHECK(endpoint_count(ws, k) == binomial(ws, k) * fact(k));
            CHECK(enumerate_remainder_masks(ws, k).size() ==
                  (std::uint64_t{1} << (ws - k)));
        }
    CHECK_THROWS_AS(enumerate_endpoint_strings(3, 0), thc::InvalidK);
    CHECK_THROWS_AS(enumerate_endpoint_strings(3, 4), thc::InvalidK);
}

TEST_CASE("flip is an involution with the rank duality") {
    CHECK(flip("10") == "01");
    CHECK(flip("") == "");
    for (int len = 0; len <= 12; ++len) {
        const std::uint64_t n = std::uint64_t{1} << len;
        for (std::uint64_t r = 0; r < n; ++r) {
            auto m = unrank_mask(len, r);
            CHECK(flip(flip(m)) == m);
            CHECK(rank_mask(flip(m)) + rank_mask(m) == n - 1);
        }
        if (len >= 10) break;  // 2^10 cases is plenty
    }
}

TEST_CASE("shift is right rotation and composes additively") {
    CHECK(shift({1, 2}, 1) == EndpointString{2, 1});
    CHECK(shift({1, 2, 3}, 1) == EndpointString{3, 1, 2});
    CHECK(shift({1, 2, 3, 4}, 2) == EndpointString{3, 4, 1, 2});
    for (const auto& b : enumerate_endpoint_strings(5, 4))
        for (int z1 = 0; z1 < 4; ++z1)
            for (int z2 = 0; z2 < 4; ++z2)
                CHECK(shift(shift(b, z1), z2) == shift(b, (z1 + z2) % 4));
}

TEST_CASE("rank and unrank are inverse bijections matching enumeration order") {
    for (int ws = 1; ws <= 6; ++ws)
        for (int k = 1; k <= ws; ++k) {
            auto all = enumerate_endpoint_strings(ws, k);
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(rank_endpoint(ws, all[i]) == i);
                CHECK(unrank_endpoint(ws, k, i) == all[i]);
            }
            auto masks = enumerate_remainder_masks(ws, k);
            for (std::size_t i = 0; i < masks.size(); ++i) {
                CHECK(rank_mask(masks[i]) == i);
                CHECK(unrank_mask(ws - k, i) == masks[i]);
            }
        }
    CHECK(rank_endpoint(3, {1, 2}) == 0);
    CHECK(rank_mask("11") == 0);
    CHECK(unrank_mask(2, 3) == "00");
    CHECK_THROWS_AS(rank_endpoint(3, {1, 1}), thc::NotInFamily);
    CHECK_THROWS_AS(rank_endpoint(3, {4}), thc::NotInFamily);
    CHECK_THROWS_AS(unrank_mask(2, 4), thc::NotInFamily);
}
