#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "thc/counting.hpp"
#include "thc/errors.hpp"
#include "thc/path_enum.hpp"

using namespace thc;
using thc::testing::load_tile;
using thc::testing::uniform_spec;

namespace {

const MatrixProvider direct = [](const Tile& t, int k) { return build_transfer_matrix(t, k); };

}  // namespace

TEST_CASE("hand anchors: edge^3, xladder^3, ladder^3") {
    auto edge3 = uniform_spec("edge", 3);
    auto p1 = thc_paper(edge3, 1, direct);
    CHECK(p1.divisible);
    CHECK(p1.value == 1);
    CHECK(thc_cycle_complete(edge3, 1, direct) == 1);

    auto x3 = uniform_spec("xladder", 3);
    auto p2 = thc_paper(x3, 2, direct);
    CHECK(p2.divisible);
    CHECK(p2.value == 4);
    CHECK(thc_cycle_complete(x3, 2, direct) == 4);

    auto l3 = uniform_spec("ladder", 3);
    for (int k : {1, 2}) {
        CHECK(thc_paper(l3, k, direct).value == 0);
        CHECK(thc_cycle_complete(l3, k, direct) == 0);
    }
}

TEST_CASE("k outside 1..min_ws is rejected") {
    auto edge3 = uniform_spec("edge", 3);
    CHECK_THROWS_AS(thc_paper(edge3, 2, direct), InvalidK);
    CHECK_THROWS_AS(thc_cycle_complete(edge3, 0, direct), InvalidK);
}

TEST_CASE("single k-cycle permutations") {
    CHECK(single_cycle_permutations(1) == std::vector<std::vector<int>>{{0}});
    CHECK(single_cycle_permutations(2) == std::vector<std::vector<int>>{{1, 0}});
    CHECK(single_cycle_permutations(3).size() == 2);
    CHECK(single_cycle_permutations(4).size() == 6);
    // every permutation is a single cycle through all elements
    for (const auto& sigma : single_cycle_permutations(5)) {
        int at = 0, steps = 0;
        do {
            at = sigma[at];
            ++steps;
        } while (at != 0);
        CHECK(steps == 5);
    }
}

TEST_CASE("thc_cycle_complete equals thc_paper for k <= 3 on the corpus") {
    std::vector<TiledGraphSpec> specs = {uniform_spec("edge", 3),   uniform_spec("tri", 3),
                                         uniform_spec("ladder", 3), uniform_spec("xladder", 5),
                                         uniform_spec("triple", 3), thc::testing::load_graph("mixed4")};
    for (const auto& spec : specs) {
        for (int k = 1; k <= std::min(3, min_ws(spec)); ++k) {
            CAPTURE(spec.graph_id);
            CAPTURE(k);
            auto paper = thc_paper(spec, k, direct);
            CHECK(paper.divisible);
            CHECK(paper.value == thc_cycle_complete(spec, k, direct));
        }
    }
}

TEST_CASE("cycle-complete matches the oracle on every corpus graph and k") {
    std::vector<TiledGraphSpec> specs = {uniform_spec("edge", 3),   uniform_spec("tri", 4),
                                         uniform_spec("ladder", 4), uniform_spec("xladder", 4),
                                         uniform_spec("triple", 3), thc::testing::load_graph("mixed4")};
    for (const auto& spec : specs) {
        auto oc = oracle_count(spec);
        for (int k = 1; k <= min_ws(spec); ++k) {
            CAPTURE(spec.graph_id);
            CAPTURE(k);
            BigInt expect = oc.traversing.count(k) ? oc.traversing[k] : BigInt(0);
            CHECK(thc_cycle_complete(spec, k, direct) == expect);
        }
    }
}

TEST_CASE("counts are invariant under tile-sequence rotation") {
    TileSequence seq;
    seq.tiles = {load_tile("xladder"), load_tile("ladder"), load_tile("xladder"),
                 load_tile("xladder")};
    auto base = cyclize(seq, "base");
    for (int r = 1; r < 4; ++r) {
        TileSequence rot;
        for (int i = 0; i < 4; ++i) rot.tiles.push_back(seq.tiles[(i + r) % 4]);
        auto spec = cyclize(rot, "rot" + std::to_string(r));
        for (int k = 1; k <= min_ws(base); ++k) {
            CHECK(thc_cycle_complete(base, k, direct) == thc_cycle_complete(spec, k, direct));
            CHECK(thc_paper(base, k, direct).numerator == thc_paper(spec, k, direct).numerator);
        }
    }
}

TEST_CASE("wall-size-2 cyclization identities") {
    auto spec = uniform_spec("xladder", 4);
    auto product = transfer_product(spec.sequence, 2, ProductMode::Linear, direct);
    // _2THC = a_{12,21} = a_{21,12}; the symmetric entries agree
    CHECK(anti_diagonal_sum(product, {1, 2}, {2, 1}) ==
          anti_diagonal_sum(product, {2, 1}, {1, 2}));
    auto paper = thc_paper_from_product(product);
    CHECK(paper.divisible);
    CHECK(paper.value == anti_diagonal_sum(product, {1, 2}, {2, 1}));

    auto p1 = transfer_product(spec.sequence, 1, ProductMode::Linear, direct);
    BigInt four_terms = anti_diagonal_sum(p1, {1}, {1}) + anti_diagonal_sum(p1, {2}, {2});
    CHECK(thc_paper_from_product(p1).value == four_terms);
}

TEST_CASE("count_all assembles per-k records with agreement flags") {
    auto spec = uniform_spec("ladder", 3);
    CountOptions opts;
    opts.with_oracle = true;
    auto report = count_all(spec, opts, direct);
    CHECK(report.min_ws == 2);
    REQUIRE(report.records.size() == 2);
    CHECK(*report.oracle_total == 3);
    CHECK(*report.oracle_other == 3);
    for (const auto& rec : report.records) {
        CHECK(*rec.cycle_complete == 0);
        CHECK(*rec.oracle == 0);
        CHECK(rec.paper_agrees());
        CHECK(rec.oracle_agrees());
    }

    auto x3 = uniform_spec("xladder", 3);
    opts.only_k = 2;
    auto r2 = count_all(x3, opts, direct);
    REQUIRE(r2.records.size() == 1);
    CHECK(*r2.records[0].cycle_complete == 4);
    CHECK(*r2.records[0].oracle == 4);
    opts.only_k = 3;
    CHECK_THROWS_AS(count_all(x3, opts, direct), InvalidK);
}

TEST_CASE("traversing counts never exceed the oracle total") {
    for (const char* name : {"tri", "ladder", "xladder", "triple"}) {
        auto spec = uniform_spec(name, 3);
        auto oc = oracle_count(spec);
        BigInt sum = 0;
        for (int k = 1; k <= min_ws(spec); ++k) sum += thc_cycle_complete(spec, k, direct);
        CHECK(sum <= oc.total);
    }
}
