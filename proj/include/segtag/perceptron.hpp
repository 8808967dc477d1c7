#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "segtag/corpus.hpp"
#include "segtag/error.hpp"
#include "segtag/features.hpp"
#include "segtag/label_mode.hpp"
#include "segtag/util.hpp"

namespace segtag {

// Label set with a fixed order; the order is the Viterbi tie-break order.
struct TagInventory {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;

    int add(const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    }
    int find(const std::string& label) const {
        auto it = index.find(label);
        return it == index.end() ? -1 : it->second;
    }
    size_t size() const { return labels.size(); }
    bool operator==(const TagInventory& other) const { return labels == other.labels; }
};

// Hard transition filter: disallowed moves score -infinity in the decoder.
struct TransitionConstraint {
    size_t n = 0;
    std::vector<uint8_t> start;  // start[y]
    std::vector<uint8_t> trans;  // trans[p * n + y]

    bool start_ok(size_t y) const { return start[y] != 0; }
    bool trans_ok(size_t p, size_t y) const { return trans[p * n + y] != 0; }
};

// Combined-tag well-formedness: first label must be B-*, and I-x may only
// follow B-x or I-x.
inline TransitionConstraint combined_tag_constraint(const TagInventory& tags) {
    TransitionConstraint c;
    c.n = tags.size();
    c.start.assign(c.n, 0);
    c.trans.assign(c.n * c.n, 0);
    std::vector<CombinedTag> parsed;
    parsed.reserve(c.n);
    for (const auto& label : tags.labels) parsed.push_back(CombinedTag::parse(label));
    for (size_t y = 0; y < c.n; ++y) {
        c.start[y] = parsed[y].seg == SegTag::B;
        for (size_t p = 0; p < c.n; ++p)
            c.trans[p * c.n + y] =
                parsed[y].seg == SegTag::B || parsed[y].pos == parsed[p].pos;
    }
    return c;
}

// Segmentation mode: only the start is constrained (first tag = B).
inline TransitionConstraint seg_tag_constraint(const TagInventory& tags) {
    TransitionConstraint c;
    c.n = tags.size();
    c.start.assign(c.n, 0);
    c.trans.assign(c.n * c.n, 1);
    for (size_t y = 0; y < c.n; ++y) c.start[y] = tags.labels[y] == "B";
    return c;
}

struct WeightModel {
    LabelMode mode = LabelMode::WordPos;
    TagInventory tags;
    std::vector<FeatureTemplate> templates;
    // (feature string, tag index) -> weight; rows are dense per feature.
    std::unordered_map<std::string, std::vector<double>> weights;   // training-time
    std::unordered_map<std::string, std::vector<double>> averaged;  // used at inference
    std::vector<std::pair<std::string, std::string>> meta;          // config echo
};

inline TransitionConstraint mode_constraint(const WeightModel& m) {
    switch (m.mode) {
        case LabelMode::SyllableCombined: return combined_tag_constraint(m.tags);
        case LabelMode::SyllableSeg: return seg_tag_constraint(m.tags);
        case LabelMode::WordPos: break;
    }
    TransitionConstraint none;
    none.n = m.tags.size();
    none.start.assign(none.n, 1);
    none.trans.assign(none.n * none.n, 1);
    return none;
}

namespace percep_detail {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// First-order Viterbi over a generic weight-row lookup. Ties break toward the
// lower tag index at every backpointer decision and at the final cell.
template <typename RowFn>
std::vector<int> viterbi_indices(RowFn&& row, const TagInventory& tags,
                                 const std::vector<FeatureTemplate>& templates,
                                 const std::vector<std::string>& tokens,
                                 const TransitionConstraint* constraint) {
    const size_t n = tokens.size();
    const size_t T = tags.size();
    if (n == 0) throw UserError("cannot decode an empty token sequence");
    if (T == 0) throw UserError("cannot decode with an empty tag inventory");

    std::vector<const FeatureTemplate*> static_templates;
    const FeatureTemplate* prev_tag_tpl = nullptr;
    const FeatureTemplate* prev_tag_tok_tpl = nullptr;
    for (const auto& t : templates) {
        if (t.kind == TemplateKind::PrevTag)
            prev_tag_tpl = &t;
        else if (t.kind == TemplateKind::PrevTagToken)
            prev_tag_tok_tpl = &t;
        else
            static_templates.push_back(&t);
    }

    auto add_row = [&](std::vector<double>& scores, const std::string& feat) {
        if (const std::vector<double>* r = row(feat)) {
            for (size_t y = 0; y < T; ++y) scores[y] += (*r)[y];
        }
    };
    auto static_scores = [&](size_t i) {
        std::vector<double> s(T, 0.0);
        for (const FeatureTemplate* t : static_templates) {
            auto v = feat_detail::template_value(*t, tokens, i, nullptr);
            if (v) add_row(s, t->id + "=" + *v);
        }
        return s;
    };

    std::vector<std::vector<double>> score(n, std::vector<double>(T, kNegInf));
    std::vector<std::vector<int>> back(n, std::vector<int>(T, -1));

    {
        std::vector<double> base = static_scores(0);
        if (prev_tag_tpl) add_row(base, prev_tag_tpl->id + "=" + kBosToken);
        if (prev_tag_tok_tpl)
            add_row(base, prev_tag_tok_tpl->id + "=" + std::string(kBosToken) + "|" + tokens[0]);
        for (size_t y = 0; y < T; ++y) {
            if (constraint && !constraint->start_ok(y)) continue;
            score[0][y] = base[y];
        }
    }
    for (size_t i = 1; i < n; ++i) {
        std::vector<double> base = static_scores(i);
        for (size_t p = 0; p < T; ++p) {
            if (score[i - 1][p] == kNegInf) continue;
            std::vector<double> with_trans = base;
            if (prev_tag_tpl) add_row(with_trans, prev_tag_tpl->id + "=" + tags.labels[p]);
            if (prev_tag_tok_tpl)
                add_row(with_trans, prev_tag_tok_tpl->id + "=" + tags.labels[p] + "|" + tokens[i]);
            for (size_t y = 0; y < T; ++y) {
                if (constraint && !constraint->trans_ok(p, y)) continue;
                double cand = score[i - 1][p] + with_trans[y];
                if (cand > score[i][y]) {
                    score[i][y] = cand;
                    back[i][y] = static_cast<int>(p);
                }
            }
        }
        bool feasible = false;
        for (size_t y = 0; y < T; ++y) feasible |= score[i][y] != kNegInf;
        if (!feasible) throw std::runtime_error("no feasible path under transition constraint");
    }

    int best = -1;
    for (size_t y = 0; y < T; ++y) {
        if (score[n - 1][y] == kNegInf) continue;
        if (best < 0 || score[n - 1][y] > score[n - 1][static_cast<size_t>(best)])
            best = static_cast<int>(y);
    }
    if (best < 0) throw std::runtime_error("no feasible path under transition constraint");

    std::vector<int> out(n);
    out[n - 1] = best;
    for (size_t i = n - 1; i > 0; --i) out[i - 1] = back[i][out[i]];
    return out;
}

}  // namespace percep_detail

// Decodes with the averaged (inference) weights.
inline std::vector<std::string> viterbi_decode(const WeightModel& model,
                                               const std::vector<std::string>& tokens,
                                               const TransitionConstraint* constraint = nullptr) {
    auto row = [&](const std::string& feat) -> const std::vector<double>* {
        auto it = model.averaged.find(feat);
        return it == model.averaged.end() ? nullptr : &it->second;
    };
    std::vector<int> idx =
        percep_detail::viterbi_indices(row, model.tags, model.templates, tokens, constraint);
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int y : idx) out.push_back(model.tags.labels[static_cast<size_t>(y)]);
    return out;
}

struct LabeledSequence {
    std::vector<std::string> tokens;
    std::vector<std::string> labels;
};

struct TrainConfig {
    int max_epochs = 100;
    int patience = 5;
    uint64_t seed = 0;
    bool shuffle_each_epoch = true;
    LabelMode mode = LabelMode::WordPos;
    const std::vector<LabeledSequence>* dev = nullptr;
    std::vector<FeatureTemplate> templates = default_templates();
    // When set, training labels must come from this list (order preserved).
    std::optional<std::vector<std::string>> inventory;
};

struct TrainLog {
    std::vector<double> dev_scores;    // one entry per epoch run
    std::vector<size_t> epoch_mistakes;
    int best_epoch = 0;  // 1-based epoch whose snapshot was returned (0 = final)
    int epochs_run = 0;
};

struct TrainResult {
    WeightModel model;
    TrainLog log;
};

namespace percep_detail {

// Span reader for dev scoring, tolerant of ill-formed runs the way
// repair_tag_sequence is: a broken I starts a new span.
inline std::vector<std::tuple<size_t, size_t, std::string>> label_spans(
    const std::vector<std::string>& labels, bool combined) {
    std::vector<std::tuple<size_t, size_t, std::string>> spans;
    auto seg_of = [&](const std::string& l) { return combined ? l.substr(0, 1) : l; };
    auto pos_of = [&](const std::string& l) { return combined && l.size() > 2 ? l.substr(2) : std::string(); };
    size_t start = 0;
    for (size_t i = 1; i <= labels.size(); ++i) {
        bool boundary = i == labels.size() || seg_of(labels[i]) != "I" ||
                        (combined && pos_of(labels[i]) != pos_of(labels[i - 1]));
        if (boundary) {
            spans.emplace_back(start, i, pos_of(labels[start]));
            start = i;
        }
    }
    return spans;
}

inline double dev_span_f1(const std::vector<LabeledSequence>& dev,
                          const std::vector<std::vector<std::string>>& pred, bool combined) {
    size_t correct = 0, n_gold = 0, n_pred = 0;
    for (size_t s = 0; s < dev.size(); ++s) {
        auto g = label_spans(dev[s].labels, combined);
        auto p = label_spans(pred[s], combined);
        n_gold += g.size();
        n_pred += p.size();
        size_t gi = 0, pi = 0;
        while (gi < g.size() && pi < p.size()) {
            if (g[gi] == p[pi]) {
                ++correct;
                ++gi;
                ++pi;
            } else if (std::get<0>(g[gi]) < std::get<0>(p[pi]) ||
                       (std::get<0>(g[gi]) == std::get<0>(p[pi]) &&
                        std::get<1>(g[gi]) < std::get<1>(p[pi]))) {
                ++gi;
            } else if (std::get<0>(g[gi]) == std::get<0>(p[pi]) &&
                       std::get<1>(g[gi]) == std::get<1>(p[pi])) {
                ++gi;  // same span, different tag
                ++pi;
            } else {
                ++pi;
            }
        }
    }
    if (n_gold == 0 && n_pred == 0) return 1.0;
    if (correct == 0) return 0.0;
    double pr = static_cast<double>(correct) / static_cast<double>(n_pred);
    double rc = static_cast<double>(correct) / static_cast<double>(n_gold);
    return 2.0 * pr * rc / (pr + rc);
}

}  // namespace percep_detail

// Averaged structured perceptron with early stopping on a development set.
// Deterministic given (data, config): the per-epoch shuffle is driven only by
// config.seed.
inline TrainResult train_averaged_perceptron(const std::vector<LabeledSequence>& train,
                                             const TrainConfig& config) {
    if (train.empty()) throw UserError("empty training set");
    if (config.max_epochs < 1 || config.patience < 1)
        throw ConfigError("max_epochs and patience must be at least 1");

    WeightModel model;
    model.mode = config.mode;
    model.templates = config.templates;
    if (config.inventory) {
        for (const auto& label : *config.inventory) model.tags.add(label);
    }
    for (const auto& seq : train) {
        if (seq.tokens.size() != seq.labels.size() || seq.tokens.empty())
            throw UserError("training sequence with mismatched or empty tokens/labels");
        for (const auto& label : seq.labels) {
            if (config.inventory) {
                if (model.tags.find(label) < 0)
                    throw UserError("label '" + label + "' outside inventory");
            } else {
                model.tags.add(label);
            }
        }
    }
    const size_t T = model.tags.size();
    TransitionConstraint constraint = mode_constraint(model);

    const FeatureTemplate* prev_tag_tpl = nullptr;
    const FeatureTemplate* prev_tag_tok_tpl = nullptr;
    std::vector<const FeatureTemplate*> static_templates;
    for (const auto& t : model.templates) {
        if (t.kind == TemplateKind::PrevTag)
            prev_tag_tpl = &t;
        else if (t.kind == TemplateKind::PrevTagToken)
            prev_tag_tok_tpl = &t;
        else
            static_templates.push_back(&t);
    }

    std::unordered_map<std::string, std::vector<double>> accum;  // c-weighted updates
    uint64_t c = 1;  // counts processed sentences across all epochs

    auto bump = [&](const std::string& feat, int y, double delta) {
        auto& w = model.weights[feat];
        auto& u = accum[feat];
        if (w.empty()) w.assign(T, 0.0);
        if (u.empty()) u.assign(T, 0.0);
        w[static_cast<size_t>(y)] += delta;
        u[static_cast<size_t>(y)] += static_cast<double>(c) * delta;
    };
    auto raw_row = [&](const std::string& feat) -> const std::vector<double>* {
        auto it = model.weights.find(feat);
        return it == model.weights.end() ? nullptr : &it->second;
    };
    auto make_averaged = [&]() {
        std::unordered_map<std::string, std::vector<double>> avg;
        avg.reserve(model.weights.size());
        for (const auto& [feat, w] : model.weights) {
            const auto& u = accum.at(feat);
            std::vector<double> row(T);
            bool nonzero = false;
            for (size_t y = 0; y < T; ++y) {
                row[y] = w[y] - u[y] / static_cast<double>(c);
                nonzero |= row[y] != 0.0;
            }
            if (nonzero) avg.emplace(feat, std::move(row));
        }
        return avg;
    };

    std::vector<size_t> order(train.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(config.seed);

    TrainLog log;
    double best_score = -std::numeric_limits<double>::infinity();
    int stale = 0;
    std::unordered_map<std::string, std::vector<double>> best_averaged;

    for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
        if (config.shuffle_each_epoch) rng.shuffle(order);
        size_t mistakes = 0;
        for (size_t si : order) {
            const LabeledSequence& seq = train[si];
            std::vector<int> pred = percep_detail::viterbi_indices(
                raw_row, model.tags, model.templates, seq.tokens, &constraint);
            std::vector<int> gold(seq.tokens.size());
            for (size_t i = 0; i < seq.labels.size(); ++i) gold[i] = model.tags.find(seq.labels[i]);

            for (size_t i = 0; i < seq.tokens.size(); ++i) {
                if (gold[i] != pred[i]) {
                    ++mistakes;
                    for (const FeatureTemplate* t : static_templates) {
                        auto v = feat_detail::template_value(*t, seq.tokens, i, nullptr);
                        if (!v) continue;
                        std::string feat = t->id + "=" + *v;
                        bump(feat, gold[i], +1.0);
                        bump(feat, pred[i], -1.0);
                    }
                }
                // Transition features differ when either endpoint differs.
                if (gold[i] != pred[i] || (i > 0 && gold[i - 1] != pred[i - 1])) {
                    const std::string& gprev =
                        i == 0 ? std::string(kBosToken) : model.tags.labels[gold[i - 1]];
                    const std::string& pprev =
                        i == 0 ? std::string(kBosToken) : model.tags.labels[pred[i - 1]];
                    if (prev_tag_tpl) {
                        bump(prev_tag_tpl->id + "=" + gprev, gold[i], +1.0);
                        bump(prev_tag_tpl->id + "=" + pprev, pred[i], -1.0);
                    }
                    if (prev_tag_tok_tpl) {
                        bump(prev_tag_tok_tpl->id + "=" + gprev + "|" + seq.tokens[i], gold[i], +1.0);
                        bump(prev_tag_tok_tpl->id + "=" + pprev + "|" + seq.tokens[i], pred[i], -1.0);
                    }
                }
            }
            ++c;
        }
        log.epoch_mistakes.push_back(mistakes);
        log.epochs_run = epoch;

        if (config.dev) {
            // Score the dev set with the averaged weights as they stand now,
            // materializing only the rows the dev set touches.
            std::unordered_map<std::string, std::optional<std::vector<double>>> memo;
            auto avg_row = [&](const std::string& feat) -> const std::vector<double>* {
                auto it = memo.find(feat);
                if (it == memo.end()) {
                    std::optional<std::vector<double>> row;
                    auto wit = model.weights.find(feat);
                    if (wit != model.weights.end()) {
                        row.emplace(T);
                        const auto& u = accum.at(feat);
                        for (size_t y = 0; y < T; ++y)
                            (*row)[y] = wit->second[y] - u[y] / static_cast<double>(c);
                    }
                    it = memo.emplace(feat, std::move(row)).first;
                }
                return it->second ? &*it->second : nullptr;
            };
            std::vector<std::vector<std::string>> dev_pred;
            dev_pred.reserve(config.dev->size());
            size_t dev_correct = 0, dev_total = 0;
            for (const auto& seq : *config.dev) {
                std::vector<int> idx = percep_detail::viterbi_indices(
                    avg_row, model.tags, model.templates, seq.tokens, &constraint);
                std::vector<std::string> labels(idx.size());
                for (size_t i = 0; i < idx.size(); ++i)
                    labels[i] = model.tags.labels[static_cast<size_t>(idx[i])];
                for (size_t i = 0; i < idx.size(); ++i) {
                    dev_total += 1;
                    dev_correct += labels[i] == seq.labels[i];
                }
                dev_pred.push_back(std::move(labels));
            }
            double score = 0.0;
            if (config.mode == LabelMode::WordPos) {
                score = dev_total ? static_cast<double>(dev_correct) / dev_total : 1.0;
            } else {
                score = percep_detail::dev_span_f1(*config.dev, dev_pred,
                                                   config.mode == LabelMode::SyllableCombined);
            }
            log.dev_scores.push_back(score);
            if (score > best_score) {
                best_score = score;
                log.best_epoch = epoch;
                stale = 0;
                best_averaged = make_averaged();
            } else {
                ++stale;
                if (stale >= config.patience) break;
            }
        } else if (mistakes == 0) {
            break;  // converged
        }
    }

    model.averaged = config.dev ? std::move(best_averaged) : make_averaged();
    return TrainResult{std::move(model), std::move(log)};
}

// ---------------------------------------------------------------------------
// Model file format (version 1, little-endian, see docs/formats.md):
//   magic "SGTGWMDL", u32 version, u8 mode,
//   meta pairs, inventory, template ids,
//   u64 weight count, then (feature string, u32 tag index, f64 weight)
//   sorted by (feature, tag). Only averaged weights are stored.
// ---------------------------------------------------------------------------

namespace percep_detail {

inline void put_u32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline void put_u64(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline void put_str(std::string& out, std::string_view s) {
    put_u32(out, static_cast<uint32_t>(s.size()));
    out.append(s.data(), s.size());
}

struct ByteReader {
    std::string_view data;
    size_t pos = 0;
    const char* what;

    explicit ByteReader(std::string_view d, const char* context) : data(d), what(context) {}

    void need(size_t n) const {
        if (pos + n > data.size()) throw ModelError(std::string("corrupt ") + what + " file");
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<unsigned char>(data[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<unsigned char>(data[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    uint8_t u8() {
        need(1);
        return static_cast<uint8_t>(data[pos++]);
    }
    std::string str() {
        uint32_t n = u32();
        need(n);
        std::string s(data.substr(pos, n));
        pos += n;
        return s;
    }
};

}  // namespace percep_detail

inline constexpr std::string_view kWeightModelMagic = "SGTGWMDL";
inline constexpr uint32_t kWeightModelVersion = 1;

inline std::string save_model_bytes(const WeightModel& m) {
    using namespace percep_detail;
    std::string out;
    out.append(kWeightModelMagic);
    put_u32(out, kWeightModelVersion);
    out.push_back(static_cast<char>(m.mode));
    put_u32(out, static_cast<uint32_t>(m.meta.size()));
    for (const auto& [k, v] : m.meta) {
        put_str(out, k);
        put_str(out, v);
    }
    put_u32(out, static_cast<uint32_t>(m.tags.size()));
    for (const auto& label : m.tags.labels) put_str(out, label);
    put_u32(out, static_cast<uint32_t>(m.templates.size()));
    for (const auto& t : m.templates) put_str(out, t.id);

    size_t total = 0;
    std::vector<const std::string*> feats;
    feats.reserve(m.averaged.size());
    for (const auto& [feat, row] : m.averaged) feats.push_back(&feat);
    std::sort(feats.begin(), feats.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* f : feats)
        for (double w : m.averaged.at(*f)) total += w != 0.0;
    put_u64(out, total);
    for (const std::string* f : feats) {
        const auto& row = m.averaged.at(*f);
        for (size_t y = 0; y < row.size(); ++y) {
            if (row[y] == 0.0) continue;
            put_str(out, *f);
            put_u32(out, static_cast<uint32_t>(y));
            put_u64(out, std::bit_cast<uint64_t>(row[y]));
        }
    }
    return out;
}

inline WeightModel load_model_bytes(std::string_view bytes) {
    using namespace percep_detail;
    ByteReader r(bytes, "model");
    r.need(kWeightModelMagic.size());
    if (bytes.substr(0, kWeightModelMagic.size()) != kWeightModelMagic)
        throw ModelError("corrupt model file: bad magic");
    r.pos = kWeightModelMagic.size();
    uint32_t version = r.u32();
    if (version != kWeightModelVersion)
        throw ModelError("model file version " + std::to_string(version) +
                         " not supported (expected " + std::to_string(kWeightModelVersion) + ")");
    WeightModel m;
    uint8_t mode = r.u8();
    if (mode > 2) throw ModelError("corrupt model file: bad label mode");
    m.mode = static_cast<LabelMode>(mode);
    uint32_t n_meta = r.u32();
    for (uint32_t i = 0; i < n_meta; ++i) {
        std::string k = r.str();
        std::string v = r.str();
        m.meta.emplace_back(std::move(k), std::move(v));
    }
    uint32_t n_labels = r.u32();
    for (uint32_t i = 0; i < n_labels; ++i) m.tags.add(r.str());
    if (m.tags.size() != n_labels) throw ModelError("corrupt model file: duplicate labels");
    uint32_t n_templates = r.u32();
    for (uint32_t i = 0; i < n_templates; ++i) {
        m.templates.push_back(template_from_id(r.str()));
        for (uint32_t j = 0; j < i; ++j)
            if (m.templates[j].id == m.templates[i].id)
                throw ModelError("corrupt model file: duplicate template id '" +
                                 m.templates[i].id + "'");
    }
    uint64_t n_weights = r.u64();
    for (uint64_t i = 0; i < n_weights; ++i) {
        std::string feat = r.str();
        uint32_t y = r.u32();
        if (y >= n_labels) throw ModelError("corrupt model file: tag index out of range");
        double w = std::bit_cast<double>(r.u64());
        auto& row = m.averaged[feat];
        if (row.empty()) row.assign(n_labels, 0.0);
        row[y] = w;
    }
    if (r.pos != bytes.size()) throw ModelError("corrupt model file: trailing bytes");
    return m;
}

inline void save_model(const WeightModel& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write model file '" + path + "'");
    std::string bytes = save_model_bytes(m);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing model file '" + path + "'");
}

inline std::string read_file_bytes(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + " file '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

inline WeightModel load_model(const std::string& path) {
    return load_model_bytes(read_file_bytes(path, "model"));
}

}  // namespace segtag
