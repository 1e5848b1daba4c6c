#include "doctest.h"
#include "qpath/exchange.hpp"

using namespace qpath;

namespace {

Flow flow_by_hook(const SEGraph& g) {
    // the unique disjoint flow on the full 2x2 grid for I = J = {1,2}
    auto flows = enumerate_flows(g, {{1, 2}, {1, 2}});
    REQUIRE(flows.size() == 1);
    return flows[0];
}

}  // namespace

TEST_CASE("refinement keeps only the uncommon indices") {
    RefinedCortege rc = refine({1, 2, 3}, {1, 3, 4}, {2, 4}, {2, 3});
    CHECK(rc.Iw == std::vector<int>{1, 3});
    CHECK(rc.Ib == std::vector<int>{4});
    CHECK(rc.Jw == std::vector<int>{1, 4});
    CHECK(rc.Jb == std::vector<int>{2});
    CHECK(rc.k() == 3);
    CHECK(rc.is_white_row(1));
    CHECK(!rc.is_white_row(4));
    CHECK(rc.is_white_col(4));
    CHECK(!rc.is_white_col(2));
}

TEST_CASE("unbalanced index pairs are rejected") {
    CHECK_THROWS(refine({1, 2}, {1}, {1}, {1}));
}

TEST_CASE("identical flows leave nothing to decompose") {
    SEGraph g = full_grid(2, 2);
    Flow f = flow_by_hook(g);
    Decomposition dec = decompose({f, f}, g);
    CHECK(dec.paths.empty());
    CHECK(dec.cycles.empty());
    CHECK(dec.matching.couples.empty());
    CHECK(dec.cortege.k() == 0);
}

TEST_CASE("flow against the empty flow splits into its own paths") {
    SEGraph g = full_grid(2, 2);
    Flow f = flow_by_hook(g);
    Flow empty = enumerate_flows(g, {{}, {}}).at(0);
    Decomposition dec = decompose({f, empty}, g);
    CHECK(dec.paths.size() == 2);
    CHECK(dec.cycles.empty());
    REQUIRE(dec.matching.couples.size() == 2);
    for (const Couple& c : dec.matching.couples) {
        CHECK(c.kind == CoupleKind::RC);
        CHECK(classify_case(c, dec.cortege) == ExchangeCase::C4);
    }
    CHECK(feasible(dec.matching, dec.cortege));
}

TEST_CASE("chord crossing decides feasibility with columns reversed") {
    // cortege {r1, r2 | c1, c2}, everything white; the circle reads
    // r1 r2 c2 c1, so pairing by equal index nests and swapping crosses
    RefinedCortege rc;
    rc.Iw = {1, 2};
    rc.Jw = {1, 2};
    YElem r1{true, 1}, r2{true, 2}, c1{false, 1}, c2{false, 2};
    Matching nested{{{r1, c1, CoupleKind::RC}, {r2, c2, CoupleKind::RC}}};
    CHECK(feasible(nested, rc));
    Matching crossed{{{r1, c2, CoupleKind::RC}, {r2, c1, CoupleKind::RC}}};
    std::string why;
    CHECK(!feasible(crossed, rc, &why));
    CHECK(why == "chords cross");
}

TEST_CASE("color rules per couple kind") {
    RefinedCortege rc;
    rc.Iw = {1};
    rc.Ib = {2};
    rc.Jw = {1};
    rc.Jb = {2};
    YElem r1{true, 1}, r2{true, 2}, c1{false, 1}, c2{false, 2};
    CHECK(feasible({{{r1, r2, CoupleKind::R}, {c1, c2, CoupleKind::C}}}, rc));
    // same-color rows cannot form an R-couple
    RefinedCortege ww;
    ww.Iw = {1, 2};
    ww.Jw = {1, 2};
    std::string why;
    CHECK(!feasible({{{r1, r2, CoupleKind::R}, {c1, c2, CoupleKind::C}}}, ww, &why));
    // mislabeled kind
    CHECK(!feasible({{{r1, r2, CoupleKind::RC}, {c1, c2, CoupleKind::C}}}, rc));
    // mixed colors cannot form an RC-couple
    CHECK(!feasible({{{r1, c2, CoupleKind::RC}, {r2, c1, CoupleKind::RC}}}, rc));
    // leaving an element unmatched fails
    CHECK(!feasible({{{r1, r2, CoupleKind::R}}}, rc));
}

TEST_CASE("the smallest column couple") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    Flow f1 = enumerate_flows(g, {{1}, {1}}).at(0);
    auto f2s = enumerate_flows(g, {{1}, {2}});
    // r1 -> c2 has a single path, through w1_1 and w2_1
    REQUIRE(f2s.size() == 1);
    DoubleFlow df{f1, f2s[0]};
    Decomposition dec = decompose(df, g);
    REQUIRE(dec.paths.size() == 1);
    CHECK(dec.cycles.empty());
    REQUIRE(dec.matching.couples.size() == 1);
    Couple pi = dec.matching.couples[0];
    CHECK(pi.kind == CoupleKind::C);
    CHECK(classify_case(pi, dec.cortege) == ExchangeCase::C);
    CHECK(predicted_exchange_exponent(pi, dec.cortege) == +1);
    CHECK(exchange_ratio(df, pi, g, t) == +1);

    DoubleFlow swapped = exchange(df, pi, g);
    CHECK(swapped.first.J == std::vector<int>{2});
    CHECK(swapped.second.J == std::vector<int>{1});
    DoubleFlow back = exchange(swapped, pi, g);
    CHECK(back.first.J == df.first.J);
    CHECK(back.first.paths == df.first.paths);
    CHECK(back.second.paths == df.second.paths);

    SnakeLinkDecomposition dec2 = snakes_and_links(df, pi, g);
    CHECK(dec2.kase == ExchangeCase::C);
    CHECK(dec2.degenerate);  // the white snake drops vertically over the sink column
    REQUIRE(dec2.bends.size() == 1);
    CHECK(dec2.bends[0].vertex == g.index_of("w1_1"));
    CHECK(dec2.bends[0].kind == BendKind::peak);
    CHECK(gamma_Z(dec2, g) == 1);
    CHECK_THROWS(string_products(dec2, g, t));
}

TEST_CASE("black variants refuse the direct snake picture") {
    SEGraph g = full_grid(2, 2);
    Flow f1 = enumerate_flows(g, {{1}, {1}}).at(0);
    Flow f2 = enumerate_flows(g, {{1}, {2}}).at(0);
    // with the flows swapped the smaller column index is black: case C1
    DoubleFlow df{f2, f1};
    Decomposition dec = decompose(df, g);
    REQUIRE(dec.matching.couples.size() == 1);
    Couple pi = dec.matching.couples[0];
    CHECK(classify_case(pi, dec.cortege) == ExchangeCase::C1);
    CHECK(predicted_exchange_exponent(pi, dec.cortege) == -1);
    CHECK_THROWS(snakes_and_links(df, pi, g));
}

TEST_CASE("rectangle cycles carry gamma two with the sign of the turning") {
    PolyLine left_down = {{0, 2}, {0, 0}, {2, 0}};
    PolyLine top_right = {{0, 2}, {2, 2}, {2, 0}};
    ColoredCycle white_low{{left_down, top_right}};
    GammaCycleResult r1 = gamma_cycle(white_low);
    CHECK(r1.gamma == +2);
    CHECK(r1.orientation == Orientation::cw);

    ColoredCycle white_high{{top_right, left_down}};
    GammaCycleResult r2 = gamma_cycle(white_high);
    CHECK(r2.gamma == -2);
    CHECK(r2.orientation == Orientation::ccw);
}
