// Acceptance suite: one line per criterion. Criteria 10-14 need the licensed
// treebank and are skipped unless SEGTAG_VLSP_TRAIN / SEGTAG_VLSP_TEST point
// at the word-level corpus files.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "segtag/bundle.hpp"
#include "segtag/cli.hpp"
#include "segtag/evaluation.hpp"
#include "segtag/perceptron.hpp"
#include "segtag/rdr.hpp"
#include "segtag/synthetic.hpp"

#include "oracles.hpp"

using namespace segtag;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

void skip(int id, const std::string& name, const std::string& why) {
    std::cout << "[SKIP] criterion " << id << ": " << name << " — " << why << "\n";
}

double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Random well-formed WordSentence, independent of the synthetic grammar.
WordSentence random_sentence(Rng& rng) {
    static const std::vector<std::string> syllables = {
        "a",  "b",  "an", "em",  "thuế", "thu",  "nhập", "cá", "nhân", "cuộc", "điều",
        "tra", "xe", "máy", "người", "đi", "về",  "nhà",  ".",  ",",    "123",  "ơn"};
    static const std::vector<std::string> tags = {"N",  "V", "A", "P", "R", "M",
                                                  "E",  "C", "Nc", "Np", "X", "CH"};
    int n_words = rng.range(1, 8);
    std::vector<TaggedWord> items;
    for (int w = 0; w < n_words; ++w) {
        int len = rng.range(1, 4);
        std::vector<Syllable> syls;
        for (int k = 0; k < len; ++k) syls.emplace_back(rng.pick(syllables));
        items.push_back(TaggedWord{Word(std::move(syls)), PosTag(rng.pick(tags))});
    }
    return WordSentence(std::move(items));
}

std::vector<LabeledSequence> word_sequences(const Corpus& c) {
    std::vector<LabeledSequence> out;
    for (const auto& s : c.sentences) {
        LabeledSequence seq;
        for (const auto& tw : s.items) {
            seq.tokens.push_back(tw.word.joined());
            seq.labels.push_back(tw.tag.label);
        }
        out.push_back(std::move(seq));
    }
    return out;
}

double token_accuracy(const std::function<std::vector<std::string>(
                          const std::vector<std::string>&)>& tagger,
                      const std::vector<LabeledSequence>& data) {
    size_t correct = 0, total = 0;
    for (const auto& seq : data) {
        auto pred = tagger(seq.tokens);
        for (size_t i = 0; i < pred.size(); ++i) {
            ++total;
            correct += pred[i] == seq.labels[i];
        }
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

// ---------------------------------------------------------------------------

void criterion_1_round_trip() {
    Rng rng(101);
    size_t failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        WordSentence s = random_sentence(rng);
        if (from_syllable_repr(to_syllable_repr(s)) != s) ++failures;
    }
    report(1, "syllable round-trip identity on 10000 random sentences", failures == 0,
           failures ? std::to_string(failures) + " failures" : "0 failures");
}

void criterion_2_decoder_oracle() {
    Rng rng(102);
    static const std::vector<std::string> pool = {"a", "b", "c", "xy", "đi", "."};
    size_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int T = rng.range(2, 4);
        std::vector<std::string> labels;
        for (int t = 0; t < T; ++t) labels.push_back(std::string(1, static_cast<char>('A' + t)));
        int n = rng.range(1, 5);
        std::vector<std::string> tokens;
        for (int i = 0; i < n; ++i) tokens.push_back(rng.pick(pool));
        WeightModel m = oracles::random_model(rng, labels, tokens);
        if (viterbi_decode(m, tokens) != oracles::brute_force_decode(m, tokens, nullptr))
            ++mismatches;
    }
    report(2, "Viterbi equals brute-force argmax on 1000 random models", mismatches == 0,
           std::to_string(mismatches) + " mismatches");
}

void criterion_3_metric_oracle(bool& ptag_le_wseg_everywhere) {
    Rng rng(103);
    static const std::vector<std::string> tags = {"N", "V", "A"};
    size_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = static_cast<size_t>(rng.range(1, 12));
        std::vector<std::string> syllables;
        for (size_t i = 0; i < n; ++i) syllables.push_back("s" + std::to_string(i));
        WordSentence gold =
            oracles::build_from_boundaries(syllables, oracles::random_boundaries(rng, n), rng, tags);
        WordSentence pred =
            oracles::build_from_boundaries(syllables, oracles::random_boundaries(rng, n), rng, tags);
        Corpus g{{gold}}, p{{pred}};
        PRF wseg = f1_joint(g, p, F1Mode::WSeg);
        PRF ptag = f1_joint(g, p, F1Mode::PTag);
        if (wseg.correct != oracles::span_set_matches(gold, pred, false)) ++mismatches;
        if (ptag.correct != oracles::span_set_matches(gold, pred, true)) ++mismatches;
        if (wseg.gold != static_cast<long long>(gold.items.size()) ||
            wseg.predicted != static_cast<long long>(pred.items.size()))
            ++mismatches;
        if (ptag.f1 > wseg.f1 + 1e-15) ptag_le_wseg_everywhere = false;
    }
    report(3, "joint F1 matches the span-set oracle on 1000 random pairs", mismatches == 0,
           std::to_string(mismatches) + " count mismatches");
}

void criterion_4_accuracy_identity() {
    Rng rng(104);
    static const std::vector<std::string> tags = {"N", "V", "A", "R"};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = static_cast<size_t>(rng.range(1, 10));
        std::vector<std::string> syllables;
        for (size_t i = 0; i < n; ++i) syllables.push_back("s" + std::to_string(i));
        auto starts = oracles::random_boundaries(rng, n);
        WordSentence gold = oracles::build_from_boundaries(syllables, starts, rng, tags);
        WordSentence pred = oracles::build_from_boundaries(syllables, starts, rng, tags);
        Corpus g{{gold}}, p{{pred}};
        worst = std::max(worst,
                         std::abs(tagging_accuracy(g, p) - f1_joint(g, p, F1Mode::PTag).f1));
    }
    std::ostringstream detail;
    detail << "max |accuracy - PTag F1| = " << worst;
    report(4, "tagging accuracy equals PTag F1 under gold segmentation", worst <= 1e-12,
           detail.str());
}

void criterion_6_joint_validity() {
    Rng rng(106);
    static const std::vector<std::string> poses = {"N", "V", "A", "CH", "R"};
    size_t failures = 0, sentences = 0;
    for (int stub = 0; stub < 100; ++stub) {
        Lexicon lex;
        lex.default_label = (rng.unit() < 0.5 ? "B-" : "I-") + rng.pick(poses);
        for (int t = 0; t < 40; ++t) {
            std::string token = "s" + std::to_string(t);
            std::string label = (rng.unit() < 0.5 ? "B-" : "I-") + rng.pick(poses);
            lex.best[token] = label;
            lex.freq[token][label] = 1;
        }
        Backend backend = Backend::lexicon(std::move(lex), LabelMode::SyllableCombined);
        for (int s = 0; s < 100; ++s) {
            ++sentences;
            std::vector<Syllable> input;
            int len = rng.range(1, 14);
            for (int i = 0; i < len; ++i)
                input.emplace_back("s" + std::to_string(rng.range(0, 45)));
            try {
                StrategyOutput out = joint_tag(input, backend);
                if (strip_segmentation(out.sentence) != input) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    report(6, "joint output well-formed for random backend output", failures == 0,
           std::to_string(sentences) + " sentences, " + std::to_string(failures) +
               " repair failures");
}

void criterion_7_learning_sanity() {
    double t0 = now_s();
    Corpus corpus = generate_synthetic_corpus(1, 1000);
    auto train = word_sequences(corpus);

    TrainConfig cfg;
    cfg.max_epochs = 100;
    cfg.seed = 1;
    TrainResult r = train_averaged_perceptron(train, cfg);
    double feature_acc = token_accuracy(
        [&](const std::vector<std::string>& tokens) {
            return viterbi_decode(r.model, tokens);
        },
        train);

    Lexicon lex = build_lexicon(train);
    double lexicon_acc = token_accuracy(
        [&](const std::vector<std::string>& tokens) { return lexicon_tag(lex, tokens); }, train);
    RdrTree tree = learn_rdr(train, lex, 2, LabelMode::WordPos);
    double rdr_acc = token_accuracy(
        [&](const std::vector<std::string>& tokens) { return apply_rdr(tree, tokens); }, train);

    double elapsed = now_s() - t0;
    std::ostringstream detail;
    detail.precision(4);
    detail << "feature=" << feature_acc * 100 << "% rdr=" << rdr_acc * 100
           << "% lexicon=" << lexicon_acc * 100 << "% time=" << elapsed << "s";
    report(7, "feature backend >= 99% and rdr >= lexicon on synthetic training data",
           feature_acc >= 0.99 && rdr_acc >= lexicon_acc && elapsed < 120.0, detail.str());
}

void criterion_8_compare_determinism() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "segtag_acceptance_cmp";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string corpus_path = (dir / "corpus.txt").string();
    {
        std::ofstream out(corpus_path, std::ios::binary);
        out << render_corpus(generate_synthetic_corpus(1, 600));
    }
    auto run_once = [&](const std::string& prefix) {
        std::ostringstream out, err;
        std::vector<std::string> args = {"segtag",  "compare", "--input",  corpus_path,
                                         "--output", (dir / prefix).string(), "--n-train", "500",
                                         "--n-dev", "100",     "--seed",   "42",
                                         "--epochs", "30",     "--repetitions", "1"};
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    };
    int code_a = run_once("a");
    int code_b = run_once("b");
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    };
    std::string kv_a = slurp(dir / "a.kv");
    std::string kv_b = slurp(dir / "b.kv");

    size_t populated = 0;
    std::istringstream lines(kv_a);
    std::string line;
    std::vector<std::string> expected = {
        "system=feature strategy=pipeline", "system=rdr strategy=pipeline",
        "system=lexicon strategy=pipeline", "system=feature strategy=joint",
        "system=rdr strategy=joint",        "system=lexicon strategy=joint"};
    size_t seen = 0;
    while (std::getline(lines, line)) {
        if (seen < expected.size() && line.rfind(expected[seen], 0) == 0) ++seen;
        if (line.find("wseg_f1=") != std::string::npos &&
            line.find("ptag_f1=") != std::string::npos && line.find("f1=-") == std::string::npos)
            ++populated;
    }
    bool ok = code_a == 0 && code_b == 0 && !kv_a.empty() && kv_a == kv_b && populated == 6 &&
              seen == 6;
    report(8, "cmd_compare emits the full 6-system table, byte-identical across runs", ok,
           "exit=" + std::to_string(code_a) + "/" + std::to_string(code_b) + " rows=" +
               std::to_string(populated) + (kv_a == kv_b ? " identical" : " DIFFERENT"));
    fs::remove_all(dir);
}

void criterion_9_early_stopping() {
    std::vector<LabeledSequence> train = {{{"a"}, {"X"}}, {{"b"}, {"Y"}}};
    // Dev gold labels never occur in training: the score is pinned at zero,
    // epoch 1 improves from -infinity, then patience runs out.
    std::vector<LabeledSequence> dev = {{{"a"}, {"Q"}}};
    TrainConfig cfg;
    cfg.max_epochs = 100;
    cfg.patience = 5;
    cfg.dev = &dev;
    TrainResult r = train_averaged_perceptron(train, cfg);
    bool ok = r.log.epochs_run == 6 && r.log.best_epoch == 1 && r.log.dev_scores.size() == 6;
    report(9, "flat dev trace halts after exactly 5 contiguous non-improving epochs", ok,
           "epochs_run=" + std::to_string(r.log.epochs_run) +
               " best_epoch=" + std::to_string(r.log.best_epoch));
}

// ---------------------------------------------------------------------------
// Conditional treebank criteria
// ---------------------------------------------------------------------------

struct VlspData {
    Corpus train_file;  // 27,870 sentences: 27k train + 870 dev
    Corpus test_file;   // 2,120 sentences
};

void run_vlsp_criteria(const VlspData& data) {
    bool split_ok = data.train_file.sentences.size() == 27870;
    DatasetSplit split;
    std::string detail = std::to_string(data.train_file.sentences.size()) + " sentences";
    if (split_ok) {
        split = split_dataset(data.train_file, 27000, 870);
        split_ok = split.train.sentences.size() == 27000 && split.dev.sentences.size() == 870;
        detail = "train=" + std::to_string(split.train.sentences.size()) +
                 " dev=" + std::to_string(split.dev.sentences.size()) +
                 " test=" + std::to_string(data.test_file.sentences.size());
    }
    report(10, "treebank split sizes 27000/870 reproduced exactly", split_ok, detail);
    if (!split_ok) {
        for (int id = 11; id <= 14; ++id)
            skip(id, "treebank criterion", "split failed, see criterion 10");
        return;
    }

    auto word_train = word_sequences(split.train);
    auto word_dev = word_sequences(split.dev);
    auto word_test = word_sequences(data.test_file);

    // 11: feature backend under gold segmentation.
    double t0 = now_s();
    TrainConfig cfg;
    cfg.max_epochs = 100;
    cfg.patience = 5;
    cfg.seed = 1;
    cfg.dev = &word_dev;
    TrainResult feature = train_averaged_perceptron(word_train, cfg);
    double train_time = now_s() - t0;
    double feature_acc = token_accuracy(
        [&](const std::vector<std::string>& tokens) {
            return viterbi_decode(feature.model, tokens);
        },
        word_test);
    {
        std::ostringstream d;
        d.precision(4);
        d << "accuracy=" << feature_acc * 100 << "% train_time=" << train_time << "s";
        report(11, "feature backend >= 94.0% test accuracy w.r.t. gold segmentation",
               feature_acc >= 0.94 && train_time < 3600.0, d.str());
    }

    // 12: lexicon baseline.
    Lexicon lex = build_lexicon(word_train);
    double lex_acc = token_accuracy(
        [&](const std::vector<std::string>& tokens) { return lexicon_tag(lex, tokens); },
        word_test);
    {
        std::ostringstream d;
        d.precision(4);
        d << "accuracy=" << lex_acc * 100 << "%";
        report(12, "lexicon baseline within 91% +/- 2 on the test set",
               lex_acc >= 0.89 && lex_acc <= 0.93, d.str());
    }

    // 13: strategy ordering for the feature backend.
    auto to_mode = [&](const Corpus& c, LabelMode mode) {
        return cli_detail::sequences_for_mode(c, mode);
    };
    TrainConfig seg_cfg = cfg;
    seg_cfg.mode = LabelMode::SyllableSeg;
    auto seg_dev = to_mode(split.dev, LabelMode::SyllableSeg);
    seg_cfg.dev = &seg_dev;
    TrainResult seg = train_averaged_perceptron(to_mode(split.train, LabelMode::SyllableSeg), seg_cfg);

    TrainConfig joint_cfg = cfg;
    joint_cfg.mode = LabelMode::SyllableCombined;
    auto joint_dev = to_mode(split.dev, LabelMode::SyllableCombined);
    joint_cfg.dev = &joint_dev;
    TrainResult joint =
        train_averaged_perceptron(to_mode(split.train, LabelMode::SyllableCombined), joint_cfg);

    Backend seg_b = Backend::feature(std::move(seg.model));
    Backend word_b = Backend::feature(std::move(feature.model));
    Backend joint_b = Backend::feature(std::move(joint.model));

    std::vector<std::vector<Syllable>> test_inputs;
    for (const auto& s : data.test_file.sentences) test_inputs.push_back(strip_segmentation(s));
    Corpus pipeline_pred =
        run_strategy(test_inputs, StrategyKind::Pipeline, &seg_b, word_b, 1);
    Corpus joint_pred = run_strategy(test_inputs, StrategyKind::Joint, nullptr, joint_b, 1);
    double pipeline_ptag = f1_joint(data.test_file, pipeline_pred, F1Mode::PTag).f1;
    double joint_ptag = f1_joint(data.test_file, joint_pred, F1Mode::PTag).f1;
    double drop = (feature_acc - pipeline_ptag) * 100.0;
    {
        std::ostringstream d;
        d.precision(4);
        d << "pipeline=" << pipeline_ptag * 100 << " joint=" << joint_ptag * 100
          << " drop=" << drop;
        report(13, "pipeline PTag beats joint PTag; drop from gold seg within [1,4] points",
               pipeline_ptag > joint_ptag && drop >= 1.0 && drop <= 4.0, d.str());
    }

    // 14: RDR faster than feature on the same corpus (gold segmentation).
    RdrTree tree = learn_rdr(word_train, lex, 2, LabelMode::WordPos);
    BenchReport feature_bench = bench_speed(
        [&] {
            Corpus out;
            for (const auto& seq : word_test) {
                auto labels = word_b.tag(seq.tokens);
                std::vector<TaggedWord> items;
                for (size_t i = 0; i < labels.size(); ++i)
                    items.push_back(TaggedWord{Word({Syllable(seq.tokens[i])}), PosTag(labels[i])});
                out.sentences.emplace_back(std::move(items));
            }
            return out;
        },
        3);
    BenchReport rdr_bench = bench_speed(
        [&] {
            Corpus out;
            for (const auto& seq : word_test) {
                auto labels = apply_rdr(tree, seq.tokens);
                std::vector<TaggedWord> items;
                for (size_t i = 0; i < labels.size(); ++i)
                    items.push_back(TaggedWord{Word({Syllable(seq.tokens[i])}), PosTag(labels[i])});
                out.sentences.emplace_back(std::move(items));
            }
            return out;
        },
        3);
    {
        std::ostringstream d;
        d.precision(4);
        d << "rdr=" << rdr_bench.words_per_second << " w/s, feature="
          << feature_bench.words_per_second << " w/s";
        report(14, "RDR backend tags faster than the feature backend",
               rdr_bench.words_per_second > feature_bench.words_per_second, d.str());
    }
}

}  // namespace

int main() {
    bool ptag_le_wseg = true;
    criterion_1_round_trip();
    criterion_2_decoder_oracle();
    criterion_3_metric_oracle(ptag_le_wseg);
    criterion_4_accuracy_identity();
    report(5, "PTag <= WSeg across all harness runs", ptag_le_wseg);
    criterion_6_joint_validity();
    criterion_7_learning_sanity();
    criterion_8_compare_determinism();
    criterion_9_early_stopping();

    const char* train_env = std::getenv("SEGTAG_VLSP_TRAIN");
    const char* test_env = std::getenv("SEGTAG_VLSP_TEST");
    if (train_env && test_env) {
        try {
            VlspData data;
            data.train_file = parse_corpus(read_file_bytes(train_env, "treebank"));
            data.test_file = parse_corpus(read_file_bytes(test_env, "treebank"));
            run_vlsp_criteria(data);
        } catch (const std::exception& e) {
            report(10, "treebank criteria", false, std::string("failed to load: ") + e.what());
        }
    } else {
        for (int id = 10; id <= 14; ++id)
            skip(id, "treebank criterion",
                 "set SEGTAG_VLSP_TRAIN and SEGTAG_VLSP_TEST to word-level corpus files");
    }

    std::cout << (g_failures == 0 ? "acceptance: all runnable criteria passed\n"
                                  : "acceptance: " + std::to_string(g_failures) + " criteria failed\n");
    return g_failures == 0 ? 0 : 1;
}
