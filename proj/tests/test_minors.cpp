#include <algorithm>

#include "doctest.h"
#include "qpath/minors.hpp"
#include "qpath/rng.hpp"

using namespace qpath;

namespace {

QElement signed_weight(const QElement& w, int ell) {
    QElement s = scalar_q_pow(w, ell);
    return ell % 2 ? s.negated() : s;
}

// independent oracle: expand the minor along its first row
QElement laplace_minor(const PathMatrix& M, std::vector<int> I, std::vector<int> J,
                       const CommutationTable& t) {
    if (I.empty()) return QElement::one();
    QElement out;
    for (std::size_t c = 0; c < J.size(); ++c) {
        std::vector<int> I2(I.begin() + 1, I.end());
        std::vector<int> J2 = J;
        J2.erase(J2.begin() + c);
        QElement term = mul(M.at(I[0], J[c]), laplace_minor(M, I2, J2, t), t);
        out += signed_weight(term, static_cast<int>(c));
    }
    return out;
}

}  // namespace

TEST_CASE("path matrix of the unit grid") {
    SEGraph g = full_grid(1, 1);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    REQUIRE(M.m == 1);
    REQUIRE(M.n == 1);
    CHECK(M.at(1, 1) == QElement::generator(g.generator_of(g.index_of("w1_1"))));
}

TEST_CASE("unreachable sink gives a zero entry") {
    // top-left cell removed: the upper source can only exit through column 2
    SEGraph g = cauchon_graph({"#.", ".."});
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    CHECK(M.at(2, 1).is_zero());
    CHECK(!M.at(2, 2).is_zero());
    CHECK(!M.at(1, 1).is_zero());
}

TEST_CASE("empty minor is one") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    CHECK(q_minor(M, {{}, {}}, t) == QElement::one());
}

TEST_CASE("two by two minor expands as a11 a22 - q a12 a21") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    QElement expected =
        mul(M.at(1, 1), M.at(2, 2), t) - scalar_q_pow(mul(M.at(1, 2), M.at(2, 1), t), 1);
    CHECK(q_minor(M, {{1, 2}, {1, 2}}, t) == expected);
}

TEST_CASE("permutation sum matches the row expansion on random matrices") {
    Rng seed_rng(123);
    for (int trial = 0; trial < 8; ++trial) {
        CommutationTable tt(5);
        for (GeneratorId a = 0; a < 5; ++a)
            for (GeneratorId b = a + 1; b < 5; ++b)
                tt.set_lambda(a, b, static_cast<int>(seed_rng.below(3)) - 1);
        PathMatrix M;
        M.m = M.n = 3;
        for (int i = 0; i < 9; ++i) {
            Word w;
            int len = static_cast<int>(seed_rng.below(3));
            for (int l = 0; l < len; ++l)
                w.emplace_back(static_cast<GeneratorId>(seed_rng.below(5)),
                               seed_rng.chance(0.5) ? 1 : -1);
            M.entries.push_back(QElement::from_monomial(normalize_word(w, tt)));
        }
        MinorIndex idx{{1, 2, 3}, {1, 2, 3}};
        CHECK(q_minor(M, idx, tt) == laplace_minor(M, idx.I, idx.J, tt));
    }
}

TEST_CASE("flows of the full two by two grid") {
    SEGraph g = full_grid(2, 2);
    MinorIndex idx{{1, 2}, {1, 2}};
    auto flows = enumerate_flows(g, idx);
    REQUIRE(flows.size() == 1);
    // the only disjoint choice hooks r1 at w1_1 and routes r2 over the top
    CHECK(flows[0].paths[0].verts.size() == 3);
    CHECK(flows[0].paths[1].verts.size() == 5);

    auto empty_flows = enumerate_flows(g, {{}, {}});
    REQUIRE(empty_flows.size() == 1);
    CHECK(flow_weight(empty_flows[0], g, commutation_table(g)) == QElement::one());
}

TEST_CASE("minor equals the flow sum") {
    SEGraph g = full_grid(3, 3);
    CommutationTable t = commutation_table(g);
    for (MinorIndex idx : std::vector<MinorIndex>{{{1, 2}, {1, 2}},
                                                  {{1, 3}, {2, 3}},
                                                  {{2}, {1}},
                                                  {{1, 2, 3}, {1, 2, 3}}}) {
        LindstromReport rep = check_lindstrom(g, idx, t);
        CHECK(rep.equal);
        CHECK(rep.minor == rep.flow_sum);
    }
}

TEST_CASE("flipping the minor sign convention breaks the flow identity") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    QElement wrong =
        mul(M.at(1, 1), M.at(2, 2), t) + scalar_q_pow(mul(M.at(1, 2), M.at(2, 1), t), 1);
    LindstromReport rep = check_lindstrom(g, {{1, 2}, {1, 2}}, t);
    CHECK(rep.equal);
    CHECK(wrong != rep.flow_sum);
}

TEST_CASE("manin relations hold for grid path matrices") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        SEGraph g = full_grid(m, n);
        CommutationTable t = commutation_table(g);
        ManinReport rep = check_manin(path_matrix(g, t), t);
        INFO(rep.counterexample);
        CHECK(rep.ok);
    }
}

TEST_CASE("manin check notices a broken matrix") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    std::swap(M.entries[0], M.entries[1]);  // a11 and a12 exchanged
    ManinReport rep = check_manin(M, t);
    CHECK(!rep.ok);
    CHECK(!rep.counterexample.empty());
}

TEST_CASE("path systems split into flows and cancelling pairs") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    MinorIndex idx{{1, 2}, {1, 2}};
    auto systems = enumerate_path_systems(g, idx);
    REQUIRE(systems.size() == 3);
    int flows = 0;
    QElement nonflow_sum;
    for (const PathSystem& ps : systems) {
        if (is_flow(ps)) {
            ++flows;
            continue;
        }
        nonflow_sum += signed_weight(system_weight(ps, g, t), inversions(ps.sigma));
        PathSystem im = eta_involution(ps, g);
        CHECK(!is_flow(im));
        CHECK(std::abs(inversions(im.sigma) - inversions(ps.sigma)) == 1);
        PathSystem back = eta_involution(im, g);
        CHECK(back.sigma == ps.sigma);
        CHECK(back.paths == ps.paths);
    }
    CHECK(flows == 1);
    CHECK(nonflow_sum.is_zero());
}

TEST_CASE("the tail swap refuses a flow") {
    SEGraph g = full_grid(2, 2);
    auto flows = enumerate_flows(g, {{1, 2}, {1, 2}});
    REQUIRE(flows.size() == 1);
    PathSystem ps;
    ps.I = flows[0].I;
    ps.J = flows[0].J;
    ps.paths = flows[0].paths;
    ps.sigma = {0, 1};
    CHECK_THROWS(eta_involution(ps, g));
}

TEST_CASE("signed system sum reproduces the minor") {
    SEGraph g = full_grid(3, 2);
    CommutationTable t = commutation_table(g);
    PathMatrix M = path_matrix(g, t);
    MinorIndex idx{{1, 3}, {1, 2}};
    QElement total;
    for (const PathSystem& ps : enumerate_path_systems(g, idx))
        total += signed_weight(system_weight(ps, g, t), inversions(ps.sigma));
    CHECK(total == q_minor(M, idx, t));
}
