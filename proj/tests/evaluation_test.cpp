#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "segtag/evaluation.hpp"
#include "segtag/util.hpp"

using namespace segtag;

namespace {

using oracles::build_from_boundaries;
using oracles::random_boundaries;

struct SentencePair {
    WordSentence gold;
    WordSentence pred;
};

SentencePair random_pair(Rng& rng) {
    static const std::vector<std::string> tags = {"N", "V", "A"};
    size_t n = static_cast<size_t>(rng.range(1, 12));
    std::vector<std::string> syllables;
    for (size_t i = 0; i < n; ++i) syllables.push_back("s" + std::to_string(i));
    return SentencePair{
        build_from_boundaries(syllables, random_boundaries(rng, n), rng, tags),
        build_from_boundaries(syllables, random_boundaries(rng, n), rng, tags)};
}

long long oracle_matches(const WordSentence& gold, const WordSentence& pred, bool with_tag) {
    return oracles::span_set_matches(gold, pred, with_tag);
}

}  // namespace

TEST_CASE("word_spans computes cumulative syllable offsets") {
    Corpus c = parse_corpus("thuế_thu_nhập/N cá_nhân/N");
    auto spans = word_spans(c.sentences[0]);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == TaggedSpan{0, 3, "N"});
    CHECK(spans[1] == TaggedSpan{3, 5, "N"});

    auto one = word_spans(parse_corpus("a/X").sentences[0]);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == TaggedSpan{0, 1, "X"});
}

TEST_CASE("spans partition the syllable range") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        SentencePair pair = random_pair(rng);
        auto spans = word_spans(pair.gold);
        size_t total = 0;
        for (size_t k = 0; k < spans.size(); ++k) {
            total += spans[k].end - spans[k].start;
            if (k) CHECK(spans[k].start == spans[k - 1].end);
        }
        CHECK(total == pair.gold.syllable_count());
    }
}

TEST_CASE("identical prediction scores perfect for both modes") {
    Corpus gold = parse_corpus("thuế_thu_nhập/N cá_nhân/N\nkhông/R tiến_triển/V ./CH\n");
    for (F1Mode mode : {F1Mode::WSeg, F1Mode::PTag}) {
        PRF prf = f1_joint(gold, gold, mode);
        CHECK(prf.precision == 1.0);
        CHECK(prf.recall == 1.0);
        CHECK(prf.f1 == 1.0);
    }
}

TEST_CASE("fully crossing segmentation scores zero") {
    Corpus gold = parse_corpus("a_b/N c/V");
    Corpus pred = parse_corpus("a/N b_c/V");
    CHECK(f1_joint(gold, pred, F1Mode::WSeg).f1 == 0.0);
    CHECK(f1_joint(gold, pred, F1Mode::PTag).f1 == 0.0);
}

TEST_CASE("correct boundaries with one wrong tag") {
    Corpus gold = parse_corpus("a_b/N c/V");
    Corpus pred = parse_corpus("a_b/V c/V");
    CHECK(f1_joint(gold, pred, F1Mode::WSeg).f1 == 1.0);
    PRF ptag = f1_joint(gold, pred, F1Mode::PTag);
    CHECK(ptag.correct == 1);
    CHECK(ptag.precision == 0.5);
    CHECK(ptag.recall == 0.5);
    CHECK(ptag.f1 == 0.5);
}

TEST_CASE("f1_joint validates its inputs") {
    Corpus gold = parse_corpus("a/N b/V\nc/N\n");
    Corpus short_pred = parse_corpus("a/N b/V\n");
    CHECK_THROWS_WITH(f1_joint(gold, short_pred, F1Mode::WSeg),
                      Catch::Matchers::ContainsSubstring("size mismatch"));
    Corpus wrong_syll = parse_corpus("a/N x/V\nc/N\n");
    CHECK_THROWS_WITH(f1_joint(gold, wrong_syll, F1Mode::WSeg),
                      Catch::Matchers::ContainsSubstring("sentence 1"));
    Corpus wrong_second = parse_corpus("a/N b/V\nz/N\n");
    CHECK_THROWS_WITH(f1_joint(gold, wrong_second, F1Mode::WSeg),
                      Catch::Matchers::ContainsSubstring("sentence 2"));
}

TEST_CASE("f1 counts match the span-set oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        SentencePair pair = random_pair(rng);
        Corpus gold{{pair.gold}};
        Corpus pred{{pair.pred}};
        PRF wseg = f1_joint(gold, pred, F1Mode::WSeg);
        PRF ptag = f1_joint(gold, pred, F1Mode::PTag);
        CHECK(wseg.correct == oracle_matches(pair.gold, pair.pred, false));
        CHECK(ptag.correct == oracle_matches(pair.gold, pair.pred, true));
        CHECK(wseg.gold == static_cast<long long>(pair.gold.items.size()));
        CHECK(wseg.predicted == static_cast<long long>(pair.pred.items.size()));
        // PTag can never beat WSeg.
        CHECK(ptag.f1 <= wseg.f1 + 1e-15);
    }
}

TEST_CASE("tagging accuracy equals ptag f1 under identical segmentation") {
    Rng rng(43);
    static const std::vector<std::string> tags = {"N", "V", "A", "R"};
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = static_cast<size_t>(rng.range(1, 10));
        std::vector<std::string> syllables;
        for (size_t i = 0; i < n; ++i) syllables.push_back("s" + std::to_string(i));
        auto starts = random_boundaries(rng, n);
        WordSentence gold = build_from_boundaries(syllables, starts, rng, tags);
        WordSentence pred = build_from_boundaries(syllables, starts, rng, tags);
        Corpus g{{gold}}, p{{pred}};
        double acc = tagging_accuracy(g, p);
        double f1 = f1_joint(g, p, F1Mode::PTag).f1;
        CHECK(std::abs(acc - f1) <= 1e-12);
    }
}

TEST_CASE("tagging accuracy requires identical segmentation") {
    Corpus gold = parse_corpus("a_b/N c/V");
    Corpus pred = parse_corpus("a/N b_c/V");
    CHECK_THROWS_WITH(tagging_accuracy(gold, pred),
                      Catch::Matchers::ContainsSubstring("segmentation mismatch"));
}

TEST_CASE("half wrong tags give half accuracy") {
    Corpus gold = parse_corpus("a_b/N c/V");
    Corpus pred = parse_corpus("a_b/N c/N");
    CHECK(tagging_accuracy(gold, pred) == 0.5);
    CHECK(f1_joint(gold, pred, F1Mode::PTag).f1 == 0.5);
}

TEST_CASE("evaluate fills the report and detects gold segmentation") {
    Corpus gold = parse_corpus("a_b/N c/V");
    Corpus same_seg = parse_corpus("a_b/V c/V");
    EvalReport r = evaluate(gold, same_seg);
    CHECK(r.wseg.f1 == 1.0);
    CHECK(r.ptag.f1 == 0.5);
    REQUIRE(r.accuracy_gold_seg.has_value());
    CHECK(*r.accuracy_gold_seg == 0.5);
    CHECK(r.sentences == 1);
    CHECK(r.gold_words == 2);

    Corpus diff_seg = parse_corpus("a/N b_c/V");
    EvalReport r2 = evaluate(gold, diff_seg);
    CHECK_FALSE(r2.accuracy_gold_seg.has_value());
}

TEST_CASE("bench_speed reports median-run throughput") {
    Corpus out = parse_corpus("a/N b/V c_d/A");
    // Scripted clock: rep durations 10ms, 12ms, 11ms -> median 11ms.
    std::vector<double> script = {0.0, 0.010, 0.020, 0.032, 0.040, 0.051};
    size_t cursor = 0;
    auto clock = [&]() { return script[cursor++]; };
    BenchReport report = bench_speed([&] { return out; }, 3, 1, clock);
    CHECK(report.words == 3);
    CHECK(report.repetitions == 3);
    CHECK(report.seconds == Catch::Approx(0.011));
    CHECK(report.words_per_second == Catch::Approx(3.0 / 0.011));
}

TEST_CASE("bench_speed arithmetic sanity") {
    // 1000 words in 10ms -> 100k words/s.
    Corpus big;
    std::vector<TaggedWord> items;
    for (int i = 0; i < 1000; ++i)
        items.push_back(TaggedWord{Word({Syllable("w" + std::to_string(i))}), PosTag("N")});
    big.sentences.emplace_back(std::move(items));
    std::vector<double> script = {0.0, 0.010};
    size_t cursor = 0;
    BenchReport report = bench_speed([&] { return big; }, 1, 1, [&] { return script[cursor++]; });
    CHECK(report.words_per_second == Catch::Approx(100000.0));
}

TEST_CASE("bench_speed rejects a zero-resolution timer") {
    Corpus out = parse_corpus("a/N");
    CHECK_THROWS_WITH(bench_speed([&] { return out; }, 2, 1, [] { return 1.0; }),
                      Catch::Matchers::ContainsSubstring("timer resolution insufficient"));
}

TEST_CASE("bench_speed throughput is strictly positive on real clocks") {
    Corpus out = parse_corpus("a/N b/V");
    BenchReport report = bench_speed([&] { return out; }, 3);
    CHECK(report.words_per_second > 0.0);
}

TEST_CASE("compare_report with an oracle system scores 100 everywhere") {
    Corpus test = parse_corpus("thuế_thu_nhập/N cá_nhân/N\nkhông/R ./CH\n");
    Lexicon joint_lex;
    joint_lex.default_label = "B-X";
    for (const auto& s : test.sentences) {
        SyllableSentence syl = to_syllable_repr(s);
        for (const auto& item : syl.items) {
            joint_lex.best[item.syllable.text] = item.tag.render();
            joint_lex.freq[item.syllable.text][item.tag.render()] = 1;
        }
    }
    Backend joint = Backend::lexicon(std::move(joint_lex), LabelMode::SyllableCombined);
    SystemSpec spec;
    spec.name = "oracle";
    spec.strategy = StrategyKind::Joint;
    spec.tagger = &joint;
    ComparisonTable table = compare_report({spec}, test);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].wseg.f1 == 1.0);
    CHECK(table.rows[0].ptag.f1 == 1.0);
    CHECK_FALSE(table.rows[0].accuracy_gold_seg.has_value());
    CHECK_FALSE(table.rows[0].words_per_second.has_value());

    std::string kv = table.render_kv();
    CHECK(kv.find("system=oracle") != std::string::npos);
    CHECK(kv.find("wseg_f1=1.000000") != std::string::npos);
    CHECK(kv.find("acc_gold_seg=-") != std::string::npos);
    // Deterministic re-rendering.
    CHECK(compare_report({spec}, test).render_kv() == kv);
}

TEST_CASE("comparison table groups pipeline rows before joint rows") {
    Corpus test = parse_corpus("a_b/N c/V");
    Lexicon seg_lex;
    seg_lex.default_label = "B";
    seg_lex.best["b"] = "I";
    seg_lex.freq["b"]["I"] = 1;
    Backend seg = Backend::lexicon(std::move(seg_lex), LabelMode::SyllableSeg);
    Lexicon word_lex;
    word_lex.default_label = "N";
    word_lex.best["c"] = "V";
    word_lex.freq["c"]["V"] = 1;
    Backend word = Backend::lexicon(std::move(word_lex), LabelMode::WordPos);
    Lexicon joint_lex;
    joint_lex.default_label = "B-N";
    Backend joint = Backend::lexicon(std::move(joint_lex), LabelMode::SyllableCombined);

    SystemSpec jrow{"lexicon", StrategyKind::Joint, nullptr, &joint, nullptr};
    SystemSpec prow{"lexicon", StrategyKind::Pipeline, &seg, &word, &word};
    ComparisonTable table = compare_report({jrow, prow}, test, 2);
    std::string text = table.render_text();
    size_t pipeline_pos = text.find("pipeline");
    size_t joint_pos = text.find("joint");
    REQUIRE(pipeline_pos != std::string::npos);
    REQUIRE(joint_pos != std::string::npos);
    CHECK(pipeline_pos < joint_pos);
    // Pipeline row carries the gold-segmentation accuracy; speed is measured.
    for (const auto& row : table.rows) {
        CHECK(row.words_per_second.has_value());
        if (row.strategy == StrategyKind::Pipeline) {
            REQUIRE(row.accuracy_gold_seg.has_value());
            CHECK(*row.accuracy_gold_seg == 1.0);
        }
    }
}
