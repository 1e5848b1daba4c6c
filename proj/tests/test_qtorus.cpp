#include <algorithm>

#include "doctest.h"
#include "qpath/qtorus.hpp"
#include "qpath/rng.hpp"

using namespace qpath;

namespace {

CommutationTable sample_table() {
    // four generators on a 2x2 grid layout: 0=(1,2) 1=(1,1) 2=(2,2) 3=(2,1)
    // rows pair (0,2) and (1,3), columns pair (0,1) and (2,3)
    CommutationTable t(4);
    t.set_lambda(0, 2, +1);
    t.set_lambda(1, 3, +1);
    t.set_lambda(0, 1, -1);
    t.set_lambda(2, 3, -1);
    return t;
}

// independent oracle: bubble-sort the word with a random swap schedule,
// multiplying in lambda at every adjacent transposition
QMonomial sort_by_random_swaps(Word w, const CommutationTable& t, Rng& rng) {
    QMonomial out;
    for (;;) {
        std::vector<std::size_t> inverted;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i].first > w[i + 1].first) inverted.push_back(i);
        if (inverted.empty()) break;
        std::size_t i = inverted[rng.below(inverted.size())];
        out.qexp += static_cast<std::int64_t>(w[i].second) * w[i + 1].second *
                    t.lambda(w[i].first, w[i + 1].first);
        std::swap(w[i], w[i + 1]);
    }
    std::map<GeneratorId, std::int64_t> acc;
    for (auto [g, a] : w) acc[g] += a;
    for (auto [g, a] : acc)
        if (a != 0) out.exps.emplace_back(g, static_cast<std::int32_t>(a));
    return out;
}

}  // namespace

TEST_CASE("single letter needs no swaps") {
    CommutationTable t = sample_table();
    QMonomial m = normalize_word({{1, 1}}, t);
    CHECK(m.qexp == 0);
    CHECK(m.exps == ExponentVec{{1, 1}});
}

TEST_CASE("one transposition picks up one q power") {
    CommutationTable t = sample_table();
    // generators 2 then 0 with lambda(2,0) = -1: moving 2 past 0 gives q^-1
    QMonomial m = normalize_word({{2, 1}, {0, 1}}, t);
    CHECK(m.qexp == -1);
    CHECK(m.exps == ExponentVec{{0, 1}, {2, 1}});
}

TEST_CASE("inverse letters cancel") {
    CommutationTable t = sample_table();
    QMonomial m = normalize_word({{1, 1}, {1, -1}}, t);
    CHECK(m.qexp == 0);
    CHECK(m.exps.empty());
}

TEST_CASE("normalization is independent of the swap schedule") {
    CommutationTable t = sample_table();
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Word w;
        for (int i = 0; i < 6; ++i)
            w.emplace_back(static_cast<GeneratorId>(rng.below(4)), rng.range(-2, 2));
        QMonomial reference = normalize_word(w, t);
        for (int s = 0; s < 100; ++s) {
            QMonomial viaswaps = sort_by_random_swaps(w, t, rng);
            CHECK(viaswaps.qexp == reference.qexp);
            CHECK(viaswaps.exps == reference.exps);
        }
    }
}

TEST_CASE("foreign generator is rejected") {
    CommutationTable t = sample_table();
    CHECK_THROWS(normalize_word({{7, 1}}, t));
}

TEST_CASE("multiplication by the identity") {
    CommutationTable t = sample_table();
    QElement x = QElement::generator(0) + QElement::generator(3);
    CHECK(mul(QElement::one(), x, t) == x);
    CHECK(mul(x, QElement::one(), t) == x);
}

TEST_CASE("uv equals q vu for a horizontal pair") {
    CommutationTable t = sample_table();
    QElement u = QElement::generator(0), v = QElement::generator(2);
    CHECK(mul(u, v, t) == scalar_q_pow(mul(v, u, t), 1));
}

TEST_CASE("binomial product expands with the commutation twist") {
    CommutationTable t = sample_table();
    QElement u = QElement::generator(0), v = QElement::generator(2);
    QElement lhs = mul(u + v, u - v, t);
    // u^2 + (q^-1 - 1) uv - v^2 with uv in canonical order
    QElement expected = QElement::generator(0, 2) - QElement::generator(2, 2);
    QMonomial uv;
    uv.exps = {{0, 1}, {2, 1}};
    QElement cuv = QElement::from_monomial(uv);
    expected += cuv.q_shifted(-1) - cuv;
    CHECK(lhs == expected);
}

TEST_CASE("multiplication is associative") {
    CommutationTable t = sample_table();
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto rand_elem = [&] {
            QElement e;
            int terms = rng.range(1, 3);
            for (int i = 0; i < terms; ++i) {
                Word w;
                int len = rng.range(0, 3);
                for (int l = 0; l < len; ++l)
                    w.emplace_back(static_cast<GeneratorId>(rng.below(4)), rng.range(-1, 1));
                e += QElement::from_monomial(normalize_word(w, t));
            }
            return e;
        };
        QElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK(mul(mul(a, b, t), c, t) == mul(a, mul(b, c, t), t));
    }
}

TEST_CASE("q is central") {
    CommutationTable t = sample_table();
    QElement a = QElement::generator(1) + QElement::generator(2);
    QElement b = QElement::generator(0, -1);
    CHECK(mul(scalar_q_pow(a, 2), b, t) == scalar_q_pow(mul(a, b, t), 2));
    CHECK(mul(a, scalar_q_pow(b, 2), t) == scalar_q_pow(mul(a, b, t), 2));
}

TEST_CASE("generators invert") {
    CommutationTable t = sample_table();
    for (GeneratorId g = 0; g < 4; ++g)
        CHECK(mul(QElement::generator(g), QElement::generator(g, -1), t) == QElement::one());
}

TEST_CASE("q_ratio reads off shifts") {
    CommutationTable t = sample_table();
    QElement x = QElement::generator(0) + QElement::generator(1);
    CHECK(q_ratio(scalar_q_pow(x, 1), x) == 1);
    CHECK(q_ratio(x, x) == 0);
    CHECK(!q_ratio(x, QElement::generator(0)).has_value());
    CHECK(!q_ratio(x + QElement::generator(0), x).has_value());
    CHECK_THROWS(q_ratio(x, QElement::zero()));
}

TEST_CASE("canonical text form") {
    std::vector<std::string> names{"a", "b", "c", "d"};
    QElement e = QElement::generator(2).q_shifted(2) + QElement::generator(0, -1);
    CHECK(to_string(e, names) == "a^-1 + q^2*c^1");
    CHECK(to_string(QElement::zero(), names) == "0");
    CHECK(to_string(QElement::one(), names) == "1");
    CHECK(to_string(QElement::one().negated(), names) == "-1");
}
