#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "segtag/rdr.hpp"
#include "segtag/util.hpp"

using namespace segtag;

namespace {

std::vector<LabeledSequence> repeat(std::initializer_list<std::pair<LabeledSequence, int>> spec) {
    std::vector<LabeledSequence> out;
    for (const auto& [seq, times] : spec)
        for (int k = 0; k < times; ++k) out.push_back(seq);
    return out;
}

double corpus_accuracy(const RdrTree& tree, const std::vector<LabeledSequence>& data) {
    size_t correct = 0, total = 0;
    for (const auto& seq : data) {
        auto pred = apply_rdr(tree, seq.tokens);
        for (size_t i = 0; i < pred.size(); ++i) {
            ++total;
            correct += pred[i] == seq.labels[i];
        }
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

double lexicon_accuracy(const Lexicon& lex, const std::vector<LabeledSequence>& data) {
    size_t correct = 0, total = 0;
    for (const auto& seq : data) {
        auto pred = lexicon_tag(lex, seq.tokens);
        for (size_t i = 0; i < pred.size(); ++i) {
            ++total;
            correct += pred[i] == seq.labels[i];
        }
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

// Noisy random corpora: mostly token-determined labels, a context-flipped
// slice, plus unfixable noise.
std::vector<LabeledSequence> random_noisy_corpus(Rng& rng, int n_sentences) {
    const std::vector<std::string> labels = {"A", "B", "C"};
    std::vector<LabeledSequence> out;
    for (int s = 0; s < n_sentences; ++s) {
        LabeledSequence seq;
        int len = rng.range(1, 8);
        for (int i = 0; i < len; ++i) {
            int tok = rng.range(0, 14);
            seq.tokens.push_back("tk" + std::to_string(tok));
            std::string label = labels[static_cast<size_t>(tok) % 3];
            if (i > 0 && seq.tokens[static_cast<size_t>(i) - 1] == "tk0") label = "C";
            if (rng.unit() < 0.08) label = labels[rng.below(3)];
            seq.labels.push_back(label);
        }
        out.push_back(std::move(seq));
    }
    return out;
}

}  // namespace

TEST_CASE("build_lexicon picks most frequent label with lexicographic ties") {
    auto train = repeat({
        {{{"thuế"}, {"N"}}, 3},
        {{{"thuế"}, {"V"}}, 1},
        {{{"t2"}, {"X"}}, 2},
        {{{"t2"}, {"A"}}, 2},
        {{{"t3"}, {"N"}}, 2},
    });
    Lexicon lex = build_lexicon(train);
    CHECK(lex.best.at("thuế") == "N");
    CHECK(lex.best.at("t2") == "A");  // 2-2 tie, lexicographically smaller
    CHECK(lex.default_label == "N");  // global majority: N=5, A=2, V=1, X=2
    CHECK(lex.lookup("unseen") == "N");
}

TEST_CASE("lexicon_tag is a position-independent lookup") {
    Lexicon lex = build_lexicon(repeat({{{{"a"}, {"N"}}, 2}, {{{"b"}, {"V"}}, 1}}));
    CHECK(lexicon_tag(lex, {"a", "b", "zz", "a"}) ==
          std::vector<std::string>{"N", "V", "N", "N"});
    CHECK_THROWS_AS(lexicon_tag(lex, {}), UserError);
}

TEST_CASE("perfect lexicon yields a default-only tree") {
    auto train = repeat({{{{"a", "b"}, {"N", "V"}}, 5}});
    Lexicon lex = build_lexicon(train);
    RdrTree tree = learn_rdr(train, lex, 2);
    CHECK(tree.rule_count() == 0);
    // Default-only tree behaves exactly like the lexicon.
    CHECK(apply_rdr(tree, {"a", "b", "q"}) == lexicon_tag(tree.lexicon, {"a", "b", "q"}));
}

TEST_CASE("one systematic error pattern becomes exactly one rule") {
    // "tiến" is mostly V but should be R after "không"; no counterexamples.
    auto train = repeat({
        {{{"anh", "tiến"}, {"N", "V"}}, 6},
        {{{"không", "tiến"}, {"R", "R"}}, 4},
    });
    Lexicon lex = build_lexicon(train);
    CHECK(lex.best.at("tiến") == "V");
    RdrTree tree = learn_rdr(train, lex, 2, LabelMode::WordPos);
    CHECK(tree.rule_count() == 1);
    CHECK(corpus_accuracy(tree, train) == 1.0);
    // Held-out instance of the same pattern is corrected.
    CHECK(apply_rdr(tree, {"không", "tiến"}) == std::vector<std::string>{"R", "R"});
    // And the plain context is untouched.
    CHECK(apply_rdr(tree, {"anh", "tiến"}) == std::vector<std::string>{"N", "V"});
}

TEST_CASE("min_gain above the total error count leaves the default rule only") {
    auto train = repeat({
        {{{"anh", "tiến"}, {"N", "V"}}, 6},
        {{{"không", "tiến"}, {"R", "R"}}, 4},
    });
    Lexicon lex = build_lexicon(train);
    RdrTree tree = learn_rdr(train, lex, 5);  // only 4 errors exist
    CHECK(tree.rule_count() == 0);
}

TEST_CASE("exceptions to exceptions nest as except-children") {
    // x is N by default; after "a" it is V, unless followed by "z".
    auto train = repeat({
        {{{"x"}, {"N"}}, 10},
        {{{"a", "x"}, {"A", "V"}}, 6},
        {{{"a", "x", "z"}, {"A", "N", "CH"}}, 3},
    });
    Lexicon lex = build_lexicon(train);
    RdrTree tree = learn_rdr(train, lex, 2);
    CHECK(corpus_accuracy(tree, train) == 1.0);
    CHECK(tree.rule_count() == 2);
    REQUIRE(tree.root->except_child != nullptr);
    // The second rule refines the first, so it hangs off its except chain.
    CHECK(tree.root->except_child->except_child != nullptr);
    CHECK(tree.root->except_child->if_not_child == nullptr);
}

TEST_CASE("training replay never drops below the lexicon baseline") {
    Rng rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        auto train = random_noisy_corpus(rng, 60);
        Lexicon lex = build_lexicon(train);
        double base = lexicon_accuracy(lex, train);
        RdrTree tree = learn_rdr(train, lex, 2);
        CHECK(corpus_accuracy(tree, train) >= base);
    }
}

TEST_CASE("rule count is bounded by initial errors over min_gain") {
    Rng rng(22);
    for (int min_gain : {1, 2, 3}) {
        auto train = random_noisy_corpus(rng, 80);
        Lexicon lex = build_lexicon(train);
        size_t errors = 0;
        for (const auto& seq : train) {
            auto pred = lexicon_tag(lex, seq.tokens);
            for (size_t i = 0; i < pred.size(); ++i) errors += pred[i] != seq.labels[i];
        }
        RdrTree tree = learn_rdr(train, lex, min_gain);
        CHECK(tree.rule_count() <= errors / static_cast<size_t>(min_gain));
    }
}

TEST_CASE("learning is deterministic") {
    Rng rng(23);
    auto train = random_noisy_corpus(rng, 70);
    Lexicon lex = build_lexicon(train);
    std::string a = save_tree_bytes(learn_rdr(train, lex, 2));
    std::string b = save_tree_bytes(learn_rdr(train, lex, 2));
    CHECK(a == b);
}

TEST_CASE("tree file round trip preserves behaviour") {
    Rng rng(24);
    auto train = random_noisy_corpus(rng, 80);
    Lexicon lex = build_lexicon(train);
    RdrTree tree = learn_rdr(train, lex, 2, LabelMode::WordPos);
    tree.meta = {{"note", "round trip with spaces"}};

    auto tmp = std::filesystem::temp_directory_path() / "segtag_tree_rt.txt";
    save_tree(tree, tmp.string());
    RdrTree loaded = load_tree(tmp.string());
    CHECK(loaded.mode == tree.mode);
    CHECK(loaded.meta == tree.meta);
    CHECK(loaded.rule_count() == tree.rule_count());
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> tokens;
        int len = rng.range(1, 8);
        for (int i = 0; i < len; ++i) tokens.push_back("tk" + std::to_string(rng.range(0, 16)));
        CHECK(apply_rdr(loaded, tokens) == apply_rdr(tree, tokens));
    }
    // Idempotent serialization.
    CHECK(save_tree_bytes(loaded) == save_tree_bytes(tree));
    std::filesystem::remove(tmp);
}

TEST_CASE("tree loader rejects damaged input") {
    auto train = repeat({{{{"a", "x"}, {"A", "V"}}, 3}, {{{"x"}, {"N"}}, 4}});
    RdrTree tree = learn_rdr(train, build_lexicon(train), 2);
    std::string bytes = save_tree_bytes(tree);

    SECTION("bad header") {
        CHECK_THROWS_WITH(load_tree_bytes("HELLO\n" + bytes),
                          Catch::Matchers::ContainsSubstring("corrupt tree file"));
    }
    SECTION("version mismatch") {
        std::string v2 = bytes;
        v2.replace(v2.find("v1"), 2, "v2");
        CHECK_THROWS_WITH(load_tree_bytes(v2),
                          Catch::Matchers::ContainsSubstring("not supported"));
    }
    SECTION("truncated lexicon") {
        std::string cut = bytes.substr(0, bytes.find("\nrules") - 8);
        CHECK_THROWS_AS(load_tree_bytes(cut), ModelError);
    }
    SECTION("bad rule line") {
        std::string bad = bytes + "if nonsense then X\n";
        CHECK_THROWS_AS(load_tree_bytes(bad), ModelError);
    }
}

TEST_CASE("lexicon file round trip") {
    auto train = repeat({{{{"a", "b"}, {"N", "V"}}, 3}, {{{"b"}, {"N"}}, 2}});
    Lexicon lex = build_lexicon(train);
    std::string bytes = save_lexicon_bytes(lex, LabelMode::WordPos, {{"k", "v"}});
    LexiconFile loaded = load_lexicon_bytes(bytes);
    CHECK(loaded.mode == LabelMode::WordPos);
    CHECK(loaded.meta == std::vector<std::pair<std::string, std::string>>{{"k", "v"}});
    CHECK(loaded.lexicon.best == lex.best);
    CHECK(loaded.lexicon.freq == lex.freq);
    CHECK(loaded.lexicon.default_label == lex.default_label);
    CHECK_THROWS_AS(load_lexicon_bytes("SEGTAG LEXICON v9\n"), ModelError);
}
