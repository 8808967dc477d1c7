#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "segtag/corpus.hpp"
#include "segtag/error.hpp"
#include "segtag/label_mode.hpp"
#include "segtag/perceptron.hpp"
#include "segtag/rdr.hpp"

namespace segtag {

enum class BackendKind : uint8_t { Feature, Rdr, LexiconOnly };
enum class StrategyKind : uint8_t { Pipeline, Joint };

inline std::string to_string(BackendKind k) {
    switch (k) {
        case BackendKind::Feature: return "feature";
        case BackendKind::Rdr: return "rdr";
        case BackendKind::LexiconOnly: return "lexicon";
    }
    return "?";
}

inline std::string to_string(StrategyKind s) {
    return s == StrategyKind::Pipeline ? "pipeline" : "joint";
}

// A trained tagging component plus the label mode it was trained in. The
// feature backend decodes under the mode's hard transition constraint; the
// rule backends emit whatever their conclusions say and rely on repair.
struct Backend {
    LabelMode mode = LabelMode::WordPos;
    std::variant<WeightModel, RdrTree, Lexicon> impl;

    static Backend feature(WeightModel m) {
        Backend b;
        b.mode = m.mode;
        b.impl = std::move(m);
        return b;
    }
    static Backend rdr(RdrTree t) {
        Backend b;
        b.mode = t.mode;
        b.impl = std::move(t);
        return b;
    }
    static Backend lexicon(Lexicon lex, LabelMode mode) {
        Backend b;
        b.mode = mode;
        b.impl = std::move(lex);
        return b;
    }

    BackendKind kind() const {
        if (std::holds_alternative<WeightModel>(impl)) return BackendKind::Feature;
        if (std::holds_alternative<RdrTree>(impl)) return BackendKind::Rdr;
        return BackendKind::LexiconOnly;
    }

    std::vector<std::string> tag(const std::vector<std::string>& tokens) const {
        if (const auto* m = std::get_if<WeightModel>(&impl)) {
            TransitionConstraint con = mode_constraint(*m);
            return viterbi_decode(*m, tokens, &con);
        }
        if (const auto* t = std::get_if<RdrTree>(&impl)) return apply_rdr(*t, tokens);
        return lexicon_tag(std::get<Lexicon>(impl), tokens);
    }
};

inline void require_mode(const Backend& b, LabelMode expected, const char* role) {
    if (b.mode != expected)
        throw ConfigError(std::string(role) + " backend is in mode '" + to_string(b.mode) +
                          "', expected '" + to_string(expected) + "'");
}

struct StrategyOutput {
    WordSentence sentence;
    std::vector<std::pair<std::string, double>> stage_seconds;
};

// Rewrites an ill-formed combined-tag sequence into a well-formed one:
// a leading I becomes B, and an I whose POS differs from its predecessor
// becomes B (the word break is kept rather than merging). Valid input is
// returned unchanged; the result always satisfies the SyllableSentence
// invariants.
inline std::vector<CombinedTag> repair_tag_sequence(std::vector<CombinedTag> tags) {
    if (tags.empty()) throw UserError("cannot repair an empty tag sequence");
    if (tags[0].seg == SegTag::I) tags[0].seg = SegTag::B;
    for (size_t i = 1; i < tags.size(); ++i) {
        if (tags[i].seg == SegTag::I && tags[i].pos != tags[i - 1].pos) tags[i].seg = SegTag::B;
    }
    return tags;
}

// B/I decoding of a syllable sequence into words. The first tag is forced to
// B (the feature backend's constraint already guarantees it; rule backends
// are repaired here).
inline std::vector<Word> segment(const std::vector<Syllable>& syllables, const Backend& backend) {
    require_mode(backend, LabelMode::SyllableSeg, "segmenter");
    if (syllables.empty()) throw UserError("cannot segment an empty sentence");
    std::vector<std::string> tokens;
    tokens.reserve(syllables.size());
    for (const auto& s : syllables) tokens.push_back(s.text);
    std::vector<std::string> labels = backend.tag(tokens);

    std::vector<Word> words;
    std::vector<Syllable> current;
    for (size_t i = 0; i < syllables.size(); ++i) {
        bool begin = i == 0 || labels[i] != "I";
        if (begin && !current.empty()) {
            words.emplace_back(std::move(current));
            current.clear();
        }
        current.push_back(syllables[i]);
    }
    words.emplace_back(std::move(current));
    return words;
}

namespace strat_detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace strat_detail

// Segment, then tag the underscore-rendered words.
inline StrategyOutput pipeline_tag(const std::vector<Syllable>& syllables,
                                   const Backend& segmenter, const Backend& tagger) {
    require_mode(segmenter, LabelMode::SyllableSeg, "segmenter");
    require_mode(tagger, LabelMode::WordPos, "pipeline tagger");

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Word> words = segment(syllables, segmenter);
    double seg_s = strat_detail::seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    std::vector<std::string> tokens;
    tokens.reserve(words.size());
    for (const auto& w : words) tokens.push_back(w.joined());
    std::vector<std::string> labels = tagger.tag(tokens);
    std::vector<TaggedWord> items;
    items.reserve(words.size());
    for (size_t i = 0; i < words.size(); ++i)
        items.push_back(TaggedWord{std::move(words[i]), PosTag(labels[i])});
    double tag_s = strat_detail::seconds_since(t1);

    return StrategyOutput{WordSentence(std::move(items)),
                          {{"segment", seg_s}, {"tag", tag_s}}};
}

// One combined-tag decoding pass, then conversion to words. The feature
// backend is hard-constrained to well-formed output; anything else goes
// through repair_tag_sequence, so conversion cannot fail.
inline StrategyOutput joint_tag(const std::vector<Syllable>& syllables, const Backend& backend) {
    require_mode(backend, LabelMode::SyllableCombined, "joint tagger");
    if (syllables.empty()) throw UserError("cannot tag an empty sentence");

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> tokens;
    tokens.reserve(syllables.size());
    for (const auto& s : syllables) tokens.push_back(s.text);
    std::vector<std::string> labels = backend.tag(tokens);
    double decode_s = strat_detail::seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    std::vector<CombinedTag> tags;
    tags.reserve(labels.size());
    for (const auto& l : labels) tags.push_back(CombinedTag::parse(l));
    if (backend.kind() != BackendKind::Feature) tags = repair_tag_sequence(std::move(tags));
    std::vector<TaggedSyllable> items;
    items.reserve(syllables.size());
    for (size_t i = 0; i < syllables.size(); ++i)
        items.push_back(TaggedSyllable{syllables[i], std::move(tags[i])});
    WordSentence sentence = from_syllable_repr(SyllableSentence(std::move(items)));
    double convert_s = strat_detail::seconds_since(t1);

    return StrategyOutput{std::move(sentence), {{"decode", decode_s}, {"convert", convert_s}}};
}

// Runs a full strategy over raw sentences; with threads > 1 the sentences are
// processed in parallel, which must not (and does not) change the output.
inline Corpus run_strategy(const std::vector<std::vector<Syllable>>& inputs, StrategyKind strategy,
                           const Backend* segmenter, const Backend& tagger, int threads = 1) {
    auto tag_one = [&](const std::vector<Syllable>& syllables) {
        if (strategy == StrategyKind::Pipeline) {
            if (!segmenter) throw ConfigError("pipeline strategy needs a segmenter backend");
            return pipeline_tag(syllables, *segmenter, tagger).sentence;
        }
        return joint_tag(syllables, tagger).sentence;
    };

    std::vector<std::optional<WordSentence>> results(inputs.size());
    if (threads <= 1 || inputs.size() < 2) {
        for (size_t i = 0; i < inputs.size(); ++i) results[i] = tag_one(inputs[i]);
    } else {
        size_t n_workers = std::min<size_t>(static_cast<size_t>(threads), inputs.size());
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(n_workers);
        for (size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (size_t i = w; i < inputs.size(); i += n_workers)
                        results[i] = tag_one(inputs[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    Corpus out;
    out.sentences.reserve(inputs.size());
    for (auto& r : results) out.sentences.push_back(std::move(*r));
    return out;
}

}  // namespace segtag
