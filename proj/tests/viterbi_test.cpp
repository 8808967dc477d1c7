#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "segtag/perceptron.hpp"
#include "segtag/util.hpp"

using namespace segtag;

namespace {

using oracles::brute_force_decode;
using oracles::random_model;

const std::vector<std::string> kTokenPool = {"a", "b", "c", "xy", "đi", "."};

}  // namespace

TEST_CASE("all-zero weights decode to the first inventory label") {
    WeightModel m;
    m.tags.add("X");
    m.tags.add("Y");
    m.templates = default_templates();
    std::vector<std::string> tokens = {"a", "b", "a"};
    CHECK(viterbi_decode(m, tokens) == std::vector<std::string>{"X", "X", "X"});
}

TEST_CASE("viterbi matches brute force on random models") {
    Rng rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int T = rng.range(2, 4);
        std::vector<std::string> labels;
        for (int t = 0; t < T; ++t) labels.push_back(std::string(1, static_cast<char>('A' + t)));
        int n = rng.range(1, 5);
        std::vector<std::string> tokens;
        for (int i = 0; i < n; ++i) tokens.push_back(rng.pick(kTokenPool));
        WeightModel m = random_model(rng, labels, tokens);
        CHECK(viterbi_decode(m, tokens) == brute_force_decode(m, tokens, nullptr));
    }
}

TEST_CASE("viterbi matches brute force under the combined-tag constraint") {
    Rng rng(8);
    std::vector<std::string> labels = {"B-N", "I-N", "B-V", "I-V"};
    for (int trial = 0; trial < 150; ++trial) {
        int n = rng.range(1, 5);
        std::vector<std::string> tokens;
        for (int i = 0; i < n; ++i) tokens.push_back(rng.pick(kTokenPool));
        WeightModel m = random_model(rng, labels, tokens);
        TransitionConstraint con = combined_tag_constraint(m.tags);
        auto got = viterbi_decode(m, tokens, &con);
        CHECK(got == brute_force_decode(m, tokens, &con));
        CHECK(got[0][0] == 'B');  // start label is forced to a B tag
    }
}

TEST_CASE("combined constraint yields well-formed sequences without repair") {
    Rng rng(9);
    std::vector<std::string> labels = {"B-N", "I-N", "B-V", "I-V", "B-CH"};
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.range(1, 7);
        std::vector<std::string> tokens;
        for (int i = 0; i < n; ++i) tokens.push_back(rng.pick(kTokenPool));
        WeightModel m = random_model(rng, labels, tokens);
        TransitionConstraint con = combined_tag_constraint(m.tags);
        auto got = viterbi_decode(m, tokens, &con);
        CHECK(got[0][0] == 'B');
        for (size_t i = 1; i < got.size(); ++i) {
            if (got[i][0] == 'I') CHECK(got[i].substr(2) == got[i - 1].substr(2));
        }
    }
}

TEST_CASE("over-constrained decode reports no feasible path") {
    WeightModel m;
    m.tags.add("X");
    m.tags.add("Y");
    m.templates = default_templates();
    TransitionConstraint con;
    con.n = 2;
    con.start = {1, 1};
    con.trans = {0, 0, 0, 0};  // no transition allowed at all
    std::vector<std::string> tokens = {"a", "b"};
    CHECK_THROWS_WITH(viterbi_decode(m, tokens, &con),
                      Catch::Matchers::ContainsSubstring("no feasible path"));
}

TEST_CASE("segmentation constraint forces B at the start") {
    WeightModel m;
    m.tags.add("B");
    m.tags.add("I");
    m.templates = default_templates();
    // Bias everything toward I; the constraint still pins position 0 to B.
    auto& row = m.averaged["sh=x"];
    row.assign(2, 0.0);
    row[1] = 5.0;
    TransitionConstraint con = seg_tag_constraint(m.tags);
    auto got = viterbi_decode(m, {"a", "b", "c"}, &con);
    CHECK(got[0] == "B");
    CHECK(got[1] == "I");
    CHECK(got[2] == "I");
}
