#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "segtag/corpus.hpp"
#include "segtag/error.hpp"
#include "segtag/strategies.hpp"

namespace segtag {

// Word span in syllable offsets: [start, end), tag attached.
struct TaggedSpan {
    size_t start;
    size_t end;
    std::string tag;
    bool operator==(const TaggedSpan&) const = default;
};

struct PRF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    long long correct = 0;
    long long predicted = 0;
    long long gold = 0;
};

enum class F1Mode : uint8_t { WSeg, PTag };

inline std::vector<TaggedSpan> word_spans(const WordSentence& s) {
    std::vector<TaggedSpan> out;
    out.reserve(s.items.size());
    size_t offset = 0;
    for (const auto& tw : s.items) {
        size_t next = offset + tw.word.syllables.size();
        out.push_back(TaggedSpan{offset, next, tw.tag.label});
        offset = next;
    }
    return out;
}

namespace eval_detail {

// 0/0 conventions: both sides empty scores 1.0 across the board; if exactly
// one side is empty F1 is 0.
inline PRF make_prf(long long correct, long long predicted, long long gold) {
    PRF out;
    out.correct = correct;
    out.predicted = predicted;
    out.gold = gold;
    if (predicted == 0 && gold == 0) {
        out.precision = out.recall = out.f1 = 1.0;
        return out;
    }
    out.precision = predicted > 0 ? static_cast<double>(correct) / static_cast<double>(predicted)
                                  : (gold == 0 ? 1.0 : 0.0);
    out.recall = gold > 0 ? static_cast<double>(correct) / static_cast<double>(gold)
                          : (predicted == 0 ? 1.0 : 0.0);
    out.f1 = (out.precision + out.recall) > 0.0
                 ? 2.0 * out.precision * out.recall / (out.precision + out.recall)
                 : 0.0;
    return out;
}

inline void require_same_syllables(const Corpus& gold, const Corpus& pred) {
    if (gold.sentences.size() != pred.sentences.size())
        throw UserError("corpus size mismatch: gold has " +
                        std::to_string(gold.sentences.size()) + " sentences, predictions have " +
                        std::to_string(pred.sentences.size()));
    for (size_t s = 0; s < gold.sentences.size(); ++s) {
        std::vector<Syllable> g = strip_segmentation(gold.sentences[s]);
        std::vector<Syllable> p = strip_segmentation(pred.sentences[s]);
        if (g != p)
            throw UserError("syllable mismatch at sentence " + std::to_string(s + 1) +
                            ": predictions must conserve the input syllables");
    }
}

// Matching spans of two partitions of [0, n): walk both by span end.
inline long long count_matches(const std::vector<TaggedSpan>& gold,
                               const std::vector<TaggedSpan>& pred, F1Mode mode) {
    long long correct = 0;
    size_t i = 0, j = 0;
    while (i < gold.size() && j < pred.size()) {
        if (gold[i].start == pred[j].start && gold[i].end == pred[j].end) {
            if (mode == F1Mode::WSeg || gold[i].tag == pred[j].tag) ++correct;
            ++i;
            ++j;
        } else if (gold[i].end <= pred[j].end) {
            ++i;
        } else {
            ++j;
        }
    }
    return correct;
}

}  // namespace eval_detail

// Micro-averaged span F1 over the corpus; spans match by boundaries (WSeg)
// or boundaries plus tag (PTag). Predictions must conserve syllables.
inline PRF f1_joint(const Corpus& gold, const Corpus& pred, F1Mode mode) {
    eval_detail::require_same_syllables(gold, pred);
    long long correct = 0, n_pred = 0, n_gold = 0;
    for (size_t s = 0; s < gold.sentences.size(); ++s) {
        std::vector<TaggedSpan> g = word_spans(gold.sentences[s]);
        std::vector<TaggedSpan> p = word_spans(pred.sentences[s]);
        n_gold += static_cast<long long>(g.size());
        n_pred += static_cast<long long>(p.size());
        correct += eval_detail::count_matches(g, p, mode);
    }
    return eval_detail::make_prf(correct, n_pred, n_gold);
}

// Share of correctly tagged words; requires identical segmentation, under
// which it equals the PTag F1.
inline double tagging_accuracy(const Corpus& gold, const Corpus& pred) {
    eval_detail::require_same_syllables(gold, pred);
    long long correct = 0, total = 0;
    for (size_t s = 0; s < gold.sentences.size(); ++s) {
        std::vector<TaggedSpan> g = word_spans(gold.sentences[s]);
        std::vector<TaggedSpan> p = word_spans(pred.sentences[s]);
        if (g.size() != p.size())
            throw UserError("segmentation mismatch at sentence " + std::to_string(s + 1) +
                            ": tagging accuracy needs identical word boundaries");
        for (size_t k = 0; k < g.size(); ++k) {
            if (g[k].start != p[k].start || g[k].end != p[k].end)
                throw UserError("segmentation mismatch at sentence " + std::to_string(s + 1) +
                                ": tagging accuracy needs identical word boundaries");
            ++total;
            correct += g[k].tag == p[k].tag;
        }
    }
    return total ? static_cast<double>(correct) / static_cast<double>(total) : 1.0;
}

struct EvalReport {
    PRF wseg;
    PRF ptag;
    std::optional<double> accuracy_gold_seg;
    size_t sentences = 0;
    size_t gold_words = 0;
};

inline EvalReport evaluate(const Corpus& gold, const Corpus& pred) {
    EvalReport report;
    report.wseg = f1_joint(gold, pred, F1Mode::WSeg);
    report.ptag = f1_joint(gold, pred, F1Mode::PTag);
    report.sentences = gold.sentences.size();
    report.gold_words = static_cast<size_t>(report.ptag.gold);
    // Under identical segmentation the PTag F1 is the tagging accuracy.
    if (report.wseg.correct == report.wseg.gold && report.wseg.correct == report.wseg.predicted)
        report.accuracy_gold_seg = tagging_accuracy(gold, pred);
    return report;
}

struct BenchReport {
    size_t words = 0;             // words tagged per repetition
    double seconds = 0.0;         // median wall time of one repetition
    double words_per_second = 0.0;
    int repetitions = 0;
    int threads = 1;
    // Model loading happens before the timed region by contract.
};

// Times repeated full-corpus tagging with a monotonic clock and reports the
// median repetition. The callable must have its models already loaded. The
// clock can be injected for tests.
inline BenchReport bench_speed(const std::function<Corpus()>& run_corpus, int repetitions,
                               int threads = 1,
                               const std::function<double()>& now_seconds = {}) {
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    std::function<double()> now = now_seconds;
    if (!now)
        now = [] {
            return std::chrono::duration<double>(
                       std::chrono::steady_clock::now().time_since_epoch())
                .count();
        };
    BenchReport report;
    report.repetitions = repetitions;
    report.threads = threads;
    std::vector<double> durations;
    durations.reserve(static_cast<size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
        double t0 = now();
        Corpus out = run_corpus();
        double t1 = now();
        durations.push_back(t1 - t0);
        if (rep == 0) {
            size_t words = 0;
            for (const auto& s : out.sentences) words += s.items.size();
            report.words = words;
        }
    }
    std::sort(durations.begin(), durations.end());
    size_t mid = durations.size() / 2;
    report.seconds = durations.size() % 2 == 1
                         ? durations[mid]
                         : 0.5 * (durations[mid - 1] + durations[mid]);
    if (report.seconds <= 0.0)
        throw UserError("timer resolution insufficient: enlarge the corpus or repetitions");
    report.words_per_second = static_cast<double>(report.words) / report.seconds;
    return report;
}

// ---------------------------------------------------------------------------
// Comparison report (pipeline vs joint rows, per backend)
// ---------------------------------------------------------------------------

struct SystemSpec {
    std::string name;
    StrategyKind strategy = StrategyKind::Joint;
    const Backend* segmenter = nullptr;    // pipeline systems
    const Backend* tagger = nullptr;       // word-pos (pipeline) or combined (joint)
    const Backend* gold_tagger = nullptr;  // optional word-pos model for the
                                           // gold-segmentation accuracy column
};

struct SystemRow {
    std::string name;
    StrategyKind strategy = StrategyKind::Joint;
    PRF wseg;
    PRF ptag;
    std::optional<double> accuracy_gold_seg;
    std::optional<double> words_per_second;
};

struct ComparisonTable {
    std::vector<SystemRow> rows;

    // Deterministic line-oriented key=value rendering; excludes timing.
    std::string render_kv() const {
        std::string out;
        char buf[64];
        auto num = [&](double v) {
            std::snprintf(buf, sizeof(buf), "%.6f", v);
            return std::string(buf);
        };
        for (const auto& row : rows) {
            out += "system=" + row.name;
            out += " strategy=" + to_string(row.strategy);
            out += " wseg_p=" + num(row.wseg.precision) + " wseg_r=" + num(row.wseg.recall) +
                   " wseg_f1=" + num(row.wseg.f1);
            out += " ptag_p=" + num(row.ptag.precision) + " ptag_r=" + num(row.ptag.recall) +
                   " ptag_f1=" + num(row.ptag.f1);
            out += " gold_words=" + std::to_string(row.ptag.gold) +
                   " pred_words=" + std::to_string(row.ptag.predicted);
            out += " acc_gold_seg=" +
                   (row.accuracy_gold_seg ? num(*row.accuracy_gold_seg) : std::string("-"));
            out += "\n";
        }
        return out;
    }

    // Aligned text table, grouped by strategy, with the measured speed.
    std::string render_text() const {
        std::string out;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-9s %-10s %8s %8s %14s %12s\n", "strategy", "backend",
                      "WSeg-F1", "PTag-F1", "acc(gold-seg)", "words/sec");
        out += buf;
        out += std::string(66, '-') + "\n";
        for (StrategyKind strategy : {StrategyKind::Pipeline, StrategyKind::Joint}) {
            for (const auto& row : rows) {
                if (row.strategy != strategy) continue;
                std::string acc = row.accuracy_gold_seg
                                      ? (std::snprintf(buf, sizeof(buf), "%.2f",
                                                       *row.accuracy_gold_seg * 100.0),
                                         std::string(buf))
                                      : std::string("-");
                std::string speed =
                    row.words_per_second
                        ? (std::snprintf(buf, sizeof(buf), "%.0f", *row.words_per_second),
                           std::string(buf))
                        : std::string("-");
                std::snprintf(buf, sizeof(buf), "%-9s %-10s %8.2f %8.2f %14s %12s\n",
                              to_string(row.strategy).c_str(), row.name.c_str(),
                              row.wseg.f1 * 100.0, row.ptag.f1 * 100.0, acc.c_str(),
                              speed.c_str());
                out += buf;
            }
        }
        return out;
    }
};

// Evaluates every system on the test corpus from raw (unsegmented) input.
// bench_repetitions = 0 skips timing so the result is fully deterministic.
inline ComparisonTable compare_report(const std::vector<SystemSpec>& systems, const Corpus& test,
                                      int bench_repetitions = 0, int threads = 1) {
    if (systems.empty()) throw ConfigError("compare needs at least one system");
    if (test.sentences.empty()) throw UserError("empty corpus");
    std::vector<std::vector<Syllable>> inputs;
    inputs.reserve(test.sentences.size());
    for (const auto& s : test.sentences) inputs.push_back(strip_segmentation(s));

    Corpus gold_seg_tokens;  // gold segmentation, for the accuracy column
    ComparisonTable table;
    for (const auto& spec : systems) {
        if (!spec.tagger) throw ConfigError("system '" + spec.name + "' has no tagger");
        SystemRow row;
        row.name = spec.name;
        row.strategy = spec.strategy;
        Corpus pred = run_strategy(inputs, spec.strategy, spec.segmenter, *spec.tagger, threads);
        row.wseg = f1_joint(test, pred, F1Mode::WSeg);
        row.ptag = f1_joint(test, pred, F1Mode::PTag);
        if (spec.gold_tagger) {
            Corpus gold_pred;
            gold_pred.sentences.reserve(test.sentences.size());
            for (const auto& s : test.sentences) {
                std::vector<std::string> tokens;
                tokens.reserve(s.items.size());
                for (const auto& tw : s.items) tokens.push_back(tw.word.joined());
                std::vector<std::string> labels = spec.gold_tagger->tag(tokens);
                std::vector<TaggedWord> items;
                items.reserve(tokens.size());
                for (size_t k = 0; k < tokens.size(); ++k)
                    items.push_back(TaggedWord{s.items[k].word, PosTag(labels[k])});
                gold_pred.sentences.emplace_back(std::move(items));
            }
            row.accuracy_gold_seg = tagging_accuracy(test, gold_pred);
        }
        if (bench_repetitions > 0) {
            row.words_per_second =
                bench_speed(
                    [&] {
                        return run_strategy(inputs, spec.strategy, spec.segmenter, *spec.tagger,
                                            threads);
                    },
                    bench_repetitions, threads)
                    .words_per_second;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace segtag
