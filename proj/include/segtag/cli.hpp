#pragma once

// Command-line wiring: train, tag, eval, bench, compare. Every run that
// writes an output also writes a <output>.manifest.json with the command,
// configuration, seed, and input digests needed to reproduce it.

#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segtag/bundle.hpp"
#include "segtag/corpus.hpp"
#include "segtag/evaluation.hpp"
#include "segtag/log.hpp"
#include "segtag/sha256.hpp"
#include "segtag/synthetic.hpp"

namespace segtag {

namespace cli_detail {

using nlohmann::json;

struct CommonOpts {
    std::string input;
    std::string gold;
    std::string pred;
    std::string output;
    std::string model;
    std::string strategy;
    std::string backend;
    int epochs = 100;
    int patience = 5;
    int min_gain = 2;
    uint64_t seed = 1;
    long long n_train = 0;
    long long n_dev = 0;
    int repetitions = 3;
    int threads = 1;
};

inline std::string slurp(const std::string& path, const char* what) {
    if (!std::filesystem::exists(path))
        throw IoError(std::string(what) + " file '" + path + "' does not exist");
    return read_file_bytes(path, what);
}

inline void check_output_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path() && !std::filesystem::exists(p.parent_path()))
        throw IoError("output directory '" + p.parent_path().string() + "' does not exist");
}

inline void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

inline StrategyKind parse_strategy(const std::string& s) {
    if (s == "pipeline") return StrategyKind::Pipeline;
    if (s == "joint") return StrategyKind::Joint;
    throw ConfigError("unknown strategy '" + s + "' (expected pipeline or joint)");
}

inline BackendKind parse_backend(const std::string& s) {
    if (s == "feature") return BackendKind::Feature;
    if (s == "rdr") return BackendKind::Rdr;
    if (s == "lexicon") return BackendKind::LexiconOnly;
    throw ConfigError("unknown backend '" + s + "' (expected feature, rdr, or lexicon)");
}

inline json input_digest(const std::string& path, const std::string& bytes) {
    return json{{"path", path}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}};
}

inline void write_manifest(const std::string& output_path, json manifest) {
    write_file(output_path + ".manifest.json", manifest.dump(2) + "\n");
}

// ---- sequence extraction per label mode

inline std::vector<LabeledSequence> sequences_for_mode(const Corpus& corpus, LabelMode mode) {
    std::vector<LabeledSequence> out;
    out.reserve(corpus.sentences.size());
    for (const auto& s : corpus.sentences) {
        LabeledSequence seq;
        if (mode == LabelMode::WordPos) {
            for (const auto& tw : s.items) {
                seq.tokens.push_back(tw.word.joined());
                seq.labels.push_back(tw.tag.label);
            }
        } else {
            SyllableSentence syl = to_syllable_repr(s);
            for (const auto& item : syl.items) {
                seq.tokens.push_back(item.syllable.text);
                seq.labels.push_back(mode == LabelMode::SyllableCombined
                                         ? item.tag.render()
                                         : std::string(item.tag.seg == SegTag::B ? "B" : "I"));
            }
        }
        out.push_back(std::move(seq));
    }
    return out;
}

inline double score_sequences(const Backend& backend, const std::vector<LabeledSequence>& dev,
                              LabelMode mode) {
    if (dev.empty()) return 0.0;
    std::vector<std::vector<std::string>> pred;
    pred.reserve(dev.size());
    size_t correct = 0, total = 0;
    for (const auto& seq : dev) {
        auto labels = backend.tag(seq.tokens);
        for (size_t i = 0; i < labels.size(); ++i) {
            ++total;
            correct += labels[i] == seq.labels[i];
        }
        pred.push_back(std::move(labels));
    }
    if (mode == LabelMode::WordPos)
        return total ? static_cast<double>(correct) / static_cast<double>(total) : 1.0;
    return percep_detail::dev_span_f1(dev, pred, mode == LabelMode::SyllableCombined);
}

// ---- backend training

struct TrainedBackend {
    Backend backend;
    json log;  // per-backend training record for the manifest
};

inline TrainedBackend train_backend(BackendKind kind, LabelMode mode,
                                    const std::vector<LabeledSequence>& train,
                                    const std::vector<LabeledSequence>* dev,
                                    const CommonOpts& opts) {
    TrainedBackend out;
    out.log["mode"] = to_string(mode);
    out.log["backend"] = to_string(kind);
    switch (kind) {
        case BackendKind::Feature: {
            TrainConfig cfg;
            cfg.max_epochs = opts.epochs;
            cfg.patience = opts.patience;
            cfg.seed = opts.seed;
            cfg.mode = mode;
            cfg.dev = dev && !dev->empty() ? dev : nullptr;
            TrainResult r = train_averaged_perceptron(train, cfg);
            r.model.meta = {{"mode", to_string(mode)},
                            {"epochs", std::to_string(opts.epochs)},
                            {"patience", std::to_string(opts.patience)},
                            {"seed", std::to_string(opts.seed)}};
            out.log["dev_trace"] = r.log.dev_scores;
            out.log["epoch_mistakes"] = r.log.epoch_mistakes;
            out.log["best_epoch"] = r.log.best_epoch;
            out.log["epochs_run"] = r.log.epochs_run;
            out.backend = Backend::feature(std::move(r.model));
            break;
        }
        case BackendKind::Rdr: {
            Lexicon lex = build_lexicon(train);
            RdrTree tree = learn_rdr(train, std::move(lex), opts.min_gain, mode);
            tree.meta = {{"mode", to_string(mode)},
                         {"min-gain", std::to_string(opts.min_gain)}};
            out.log["rules"] = tree.rule_count();
            out.backend = Backend::rdr(std::move(tree));
            break;
        }
        case BackendKind::LexiconOnly: {
            out.backend = Backend::lexicon(build_lexicon(train), mode);
            out.log["entries"] = std::get<Lexicon>(out.backend.impl).best.size();
            break;
        }
    }
    if (dev && !dev->empty()) {
        double score = score_sequences(out.backend, *dev, mode);
        out.log["dev_score"] = score;
        if (!out.log.contains("dev_trace")) out.log["dev_trace"] = json::array({score});
    }
    return out;
}

// ---- subcommands

inline int cmd_train(const CommonOpts& opts, std::ostream& out) {
    check_output_path(opts.output);
    std::string bytes = slurp(opts.input, "corpus");
    Corpus corpus = parse_corpus(bytes);

    Corpus train_c, dev_c;
    if (opts.n_train > 0 || opts.n_dev > 0) {
        DatasetSplit split = split_dataset(corpus, static_cast<size_t>(opts.n_train),
                                           static_cast<size_t>(opts.n_dev));
        train_c = std::move(split.train);
        dev_c = std::move(split.dev);
    } else {
        train_c = std::move(corpus);
    }

    StrategyKind strategy = parse_strategy(opts.strategy);
    BackendKind backend_kind = parse_backend(opts.backend);
    LabelMode tagger_mode =
        strategy == StrategyKind::Joint ? LabelMode::SyllableCombined : LabelMode::WordPos;

    auto train_seqs = sequences_for_mode(train_c, tagger_mode);
    std::vector<LabeledSequence> dev_seqs;
    if (!dev_c.sentences.empty()) dev_seqs = sequences_for_mode(dev_c, tagger_mode);

    json manifest;
    manifest["command"] = "train";
    manifest["config"] = {{"strategy", opts.strategy}, {"backend", opts.backend},
                          {"epochs", opts.epochs},     {"patience", opts.patience},
                          {"min_gain", opts.min_gain}, {"seed", opts.seed},
                          {"n_train", opts.n_train},   {"n_dev", opts.n_dev},
                          {"threads", opts.threads}};
    manifest["inputs"] = json::array({input_digest(opts.input, bytes)});
    manifest["output"] = opts.output;

    ModelBundle bundle;
    bundle.strategy = strategy;
    TrainedBackend tagger =
        train_backend(backend_kind, tagger_mode, train_seqs,
                      dev_seqs.empty() ? nullptr : &dev_seqs, opts);
    manifest["tagger"] = tagger.log;
    bundle.tagger = std::move(tagger.backend);

    if (strategy == StrategyKind::Pipeline) {
        auto seg_train = sequences_for_mode(train_c, LabelMode::SyllableSeg);
        auto seg_dev = dev_c.sentences.empty()
                           ? std::vector<LabeledSequence>{}
                           : sequences_for_mode(dev_c, LabelMode::SyllableSeg);
        TrainedBackend seg = train_backend(BackendKind::Feature, LabelMode::SyllableSeg, seg_train,
                                           seg_dev.empty() ? nullptr : &seg_dev, opts);
        manifest["segmenter"] = seg.log;
        bundle.segmenter = std::move(seg.backend);
    }

    save_bundle(bundle, opts.output);
    write_manifest(opts.output, manifest);
    out << "wrote " << opts.output << "\n";
    log_info("training finished: " + opts.output);
    return 0;
}

inline int cmd_tag(const CommonOpts& opts, std::ostream& out) {
    check_output_path(opts.output);
    ModelBundle bundle = load_bundle(opts.model);
    if (!opts.strategy.empty() && parse_strategy(opts.strategy) != bundle.strategy)
        throw ConfigError("model '" + opts.model + "' was trained for the " +
                          to_string(bundle.strategy) + " strategy, not " + opts.strategy);

    std::string bytes = slurp(opts.input, "input");
    std::vector<std::vector<Syllable>> lines = parse_raw_lines(bytes);
    std::string rendered;
    if (!lines.empty()) {
        Corpus tagged = run_strategy(lines, bundle.strategy,
                                     bundle.segmenter ? &*bundle.segmenter : nullptr,
                                     bundle.tagger, opts.threads);
        rendered = render_corpus(tagged);
    }
    write_file(opts.output, rendered);

    json manifest;
    manifest["command"] = "tag";
    manifest["config"] = {{"strategy", to_string(bundle.strategy)},
                          {"backend", to_string(bundle.backend_kind())},
                          {"threads", opts.threads}};
    manifest["inputs"] = json::array({input_digest(opts.input, bytes),
                                      input_digest(opts.model, read_file_bytes(opts.model, "bundle"))});
    manifest["output"] = opts.output;
    manifest["sentences"] = lines.size();
    write_manifest(opts.output, manifest);
    out << "wrote " << opts.output << " (" << lines.size() << " sentences)\n";
    return 0;
}

inline std::string eval_report_kv(const EvalReport& r) {
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    std::string out;
    out += "sentences=" + std::to_string(r.sentences) +
           " gold_words=" + std::to_string(r.gold_words) + "\n";
    out += "wseg_p=" + num(r.wseg.precision) + " wseg_r=" + num(r.wseg.recall) +
           " wseg_f1=" + num(r.wseg.f1) + " wseg_correct=" + std::to_string(r.wseg.correct) +
           " wseg_predicted=" + std::to_string(r.wseg.predicted) + "\n";
    out += "ptag_p=" + num(r.ptag.precision) + " ptag_r=" + num(r.ptag.recall) +
           " ptag_f1=" + num(r.ptag.f1) + " ptag_correct=" + std::to_string(r.ptag.correct) +
           " ptag_predicted=" + std::to_string(r.ptag.predicted) + "\n";
    out += "acc_gold_seg=" + (r.accuracy_gold_seg ? num(*r.accuracy_gold_seg) : std::string("-")) +
           "\n";
    return out;
}

inline std::string eval_report_text(const EvalReport& r) {
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof(buf), "WSeg  P=%6.2f R=%6.2f F1=%6.2f  (%lld/%lld pred, %lld gold)\n",
                  r.wseg.precision * 100, r.wseg.recall * 100, r.wseg.f1 * 100, r.wseg.correct,
                  r.wseg.predicted, r.wseg.gold);
    out += buf;
    std::snprintf(buf, sizeof(buf), "PTag  P=%6.2f R=%6.2f F1=%6.2f\n", r.ptag.precision * 100,
                  r.ptag.recall * 100, r.ptag.f1 * 100);
    out += buf;
    if (r.accuracy_gold_seg) {
        std::snprintf(buf, sizeof(buf), "accuracy w.r.t. gold segmentation: %.2f\n",
                      *r.accuracy_gold_seg * 100);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "sentences=%zu words=%zu\n", r.sentences, r.gold_words);
    out += buf;
    return out;
}

inline int cmd_eval(const CommonOpts& opts, std::ostream& out) {
    std::string gold_bytes = slurp(opts.gold, "gold");
    std::string pred_bytes = slurp(opts.pred, "predictions");
    EvalReport report = evaluate(parse_corpus(gold_bytes), parse_corpus(pred_bytes));
    out << eval_report_text(report);
    if (!opts.output.empty()) {
        check_output_path(opts.output);
        write_file(opts.output, eval_report_kv(report));
        json manifest;
        manifest["command"] = "eval";
        manifest["inputs"] = json::array({input_digest(opts.gold, gold_bytes),
                                          input_digest(opts.pred, pred_bytes)});
        manifest["output"] = opts.output;
        write_manifest(opts.output, manifest);
    }
    return 0;
}

inline int cmd_bench(const CommonOpts& opts, std::ostream& out) {
    // Load everything before the timed region; loading is not benchmarked.
    ModelBundle bundle = load_bundle(opts.model);
    std::string bytes = slurp(opts.input, "corpus");
    Corpus corpus = parse_corpus(bytes);
    std::vector<std::vector<Syllable>> inputs;
    inputs.reserve(corpus.sentences.size());
    for (const auto& s : corpus.sentences) inputs.push_back(strip_segmentation(s));

    BenchReport report = bench_speed(
        [&] {
            return run_strategy(inputs, bundle.strategy,
                                bundle.segmenter ? &*bundle.segmenter : nullptr, bundle.tagger,
                                opts.threads);
        },
        opts.repetitions, opts.threads);

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "words=%zu median_seconds=%.6f words_per_second=%.1f repetitions=%d threads=%d\n",
                  report.words, report.seconds, report.words_per_second, report.repetitions,
                  report.threads);
    out << buf;
    if (!opts.output.empty()) {
        check_output_path(opts.output);
        write_file(opts.output, buf);
        json manifest;
        manifest["command"] = "bench";
        manifest["config"] = {{"repetitions", opts.repetitions}, {"threads", opts.threads}};
        manifest["inputs"] = json::array({input_digest(opts.input, bytes),
                                          input_digest(opts.model, read_file_bytes(opts.model, "bundle"))});
        manifest["output"] = opts.output;
        write_manifest(opts.output, manifest);
    }
    return 0;
}

inline int cmd_compare(const CommonOpts& opts, std::ostream& out) {
    check_output_path(opts.output);
    std::string bytes = slurp(opts.input, "corpus");
    Corpus corpus = parse_corpus(bytes);
    DatasetSplit split = split_dataset(corpus, static_cast<size_t>(opts.n_train),
                                       static_cast<size_t>(opts.n_dev));

    auto seg_train = sequences_for_mode(split.train, LabelMode::SyllableSeg);
    auto seg_dev = sequences_for_mode(split.dev, LabelMode::SyllableSeg);
    auto word_train = sequences_for_mode(split.train, LabelMode::WordPos);
    auto word_dev = sequences_for_mode(split.dev, LabelMode::WordPos);
    auto joint_train = sequences_for_mode(split.train, LabelMode::SyllableCombined);
    auto joint_dev = sequences_for_mode(split.dev, LabelMode::SyllableCombined);

    json manifest;
    manifest["command"] = "compare";
    manifest["config"] = {{"epochs", opts.epochs},   {"patience", opts.patience},
                          {"min_gain", opts.min_gain}, {"seed", opts.seed},
                          {"n_train", opts.n_train}, {"n_dev", opts.n_dev},
                          {"repetitions", opts.repetitions}, {"threads", opts.threads}};
    manifest["inputs"] = json::array({input_digest(opts.input, bytes)});

    std::deque<Backend> backends;
    log_info("training shared feature segmenter");
    TrainedBackend seg =
        train_backend(BackendKind::Feature, LabelMode::SyllableSeg, seg_train, &seg_dev, opts);
    manifest["segmenter"] = seg.log;
    backends.push_back(std::move(seg.backend));
    const Backend* segmenter = &backends.back();

    std::vector<SystemSpec> specs;
    json system_logs = json::array();
    std::vector<std::pair<const Backend*, const Backend*>> per_kind;  // (word, joint)
    for (BackendKind kind : {BackendKind::Feature, BackendKind::Rdr, BackendKind::LexiconOnly}) {
        log_info("training " + to_string(kind) + " word-level tagger");
        TrainedBackend word =
            train_backend(kind, LabelMode::WordPos, word_train, &word_dev, opts);
        system_logs.push_back(word.log);
        backends.push_back(std::move(word.backend));
        const Backend* word_ptr = &backends.back();

        log_info("training " + to_string(kind) + " joint tagger");
        TrainedBackend joint =
            train_backend(kind, LabelMode::SyllableCombined, joint_train, &joint_dev, opts);
        system_logs.push_back(joint.log);
        backends.push_back(std::move(joint.backend));
        per_kind.emplace_back(word_ptr, &backends.back());
    }
    manifest["systems"] = system_logs;

    const char* names[] = {"feature", "rdr", "lexicon"};
    for (size_t k = 0; k < per_kind.size(); ++k) {
        SystemSpec spec;
        spec.name = names[k];
        spec.strategy = StrategyKind::Pipeline;
        spec.segmenter = segmenter;
        spec.tagger = per_kind[k].first;
        spec.gold_tagger = per_kind[k].first;
        specs.push_back(spec);
    }
    for (size_t k = 0; k < per_kind.size(); ++k) {
        SystemSpec spec;
        spec.name = names[k];
        spec.strategy = StrategyKind::Joint;
        spec.tagger = per_kind[k].second;
        specs.push_back(spec);
    }

    log_info("evaluating " + std::to_string(specs.size()) + " systems on " +
             std::to_string(split.dev.sentences.size()) + " held-out sentences");
    ComparisonTable table = compare_report(specs, split.dev, opts.repetitions, opts.threads);

    std::string text = table.render_text();
    out << text;
    write_file(opts.output + ".txt", text);
    write_file(opts.output + ".kv", table.render_kv());
    write_manifest(opts.output, manifest);
    return 0;
}

}  // namespace cli_detail

// Returns the process exit code: 0 success, 1 internal failure, 2 bad usage
// or bad input.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    using namespace cli_detail;
    CLI::App app{"Vietnamese word segmentation and POS tagging toolkit"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opts.threads, "sentence-parallel worker count")
            ->check(CLI::Range(1, 256));
    };

    CLI::App* train = app.add_subcommand("train", "train a model bundle from a word/TAG corpus");
    train->add_option("--input", opts.input, "word-level training corpus")->required();
    train->add_option("--output", opts.output, "bundle file to write")->required();
    train->add_option("--strategy", opts.strategy, "pipeline | joint")->required();
    train->add_option("--backend", opts.backend, "feature | rdr | lexicon")->required();
    train->add_option("--epochs", opts.epochs, "max training epochs")->check(CLI::Range(1, 100000));
    train->add_option("--patience", opts.patience, "early-stopping patience")
        ->check(CLI::Range(1, 100000));
    train->add_option("--min-gain", opts.min_gain, "minimum net fixes per rule")
        ->check(CLI::Range(1, 1000000));
    train->add_option("--seed", opts.seed, "training shuffle seed");
    train->add_option("--n-train", opts.n_train, "first N sentences for training");
    train->add_option("--n-dev", opts.n_dev, "last N sentences for development");
    add_threads(train);

    CLI::App* tag = app.add_subcommand("tag", "tag raw (unsegmented) text with a trained bundle");
    tag->add_option("model", opts.model, "trained bundle file")->required();
    tag->add_option("--input", opts.input, "raw input, one sentence per line")->required();
    tag->add_option("--output", opts.output, "word/TAG output file")->required();
    tag->add_option("--strategy", opts.strategy, "assert the bundle strategy");
    add_threads(tag);

    CLI::App* eval = app.add_subcommand("eval", "score predictions against gold");
    eval->add_option("--gold", opts.gold, "gold word-level corpus")->required();
    eval->add_option("--pred", opts.pred, "predicted word-level corpus")->required();
    eval->add_option("--output", opts.output, "also write a key=value report here");

    CLI::App* bench = app.add_subcommand("bench", "measure end-to-end tagging speed");
    bench->add_option("model", opts.model, "trained bundle file")->required();
    bench->add_option("--input", opts.input, "word-level corpus to strip and tag")->required();
    bench->add_option("--repetitions", opts.repetitions, "timing repetitions (median wins)")
        ->check(CLI::Range(1, 1000));
    bench->add_option("--output", opts.output, "also write the report here");
    add_threads(bench);

    CLI::App* compare =
        app.add_subcommand("compare", "train all backends x strategies and tabulate scores");
    compare->add_option("--input", opts.input, "word-level corpus")->required();
    compare->add_option("--output", opts.output, "report prefix (.txt/.kv/.manifest.json)")
        ->required();
    compare->add_option("--n-train", opts.n_train, "first N sentences for training")->required();
    compare->add_option("--n-dev", opts.n_dev, "last N sentences held out")->required();
    compare->add_option("--epochs", opts.epochs, "max training epochs");
    compare->add_option("--patience", opts.patience, "early-stopping patience");
    compare->add_option("--min-gain", opts.min_gain, "minimum net fixes per rule");
    compare->add_option("--seed", opts.seed, "training shuffle seed");
    compare->add_option("--repetitions", opts.repetitions, "timing repetitions");
    add_threads(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        // CLI11 maps --help to 0; anything else is bad usage.
        return code == 0 ? 0 : 2;
    }

    try {
        if (train->parsed()) return cmd_train(opts, out);
        if (tag->parsed()) return cmd_tag(opts, out);
        if (eval->parsed()) return cmd_eval(opts, out);
        if (bench->parsed()) return cmd_bench(opts, out);
        if (compare->parsed()) return cmd_compare(opts, out);
        return 2;
    } catch (const UserError& e) {
        err << "segtag: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "segtag: internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace segtag
