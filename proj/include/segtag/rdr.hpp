#pragma once

// Ripple-down-rules tagger: a most-frequent-label lexicon refined by an
// exception rule tree. Rules are learned greedily from training errors; a
// candidate is kept only if replaying it on the training set nets at least
// min_gain fixes, so training accuracy never drops below the lexicon
// baseline and the rule count is bounded by errors/min_gain.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "segtag/error.hpp"
#include "segtag/features.hpp"
#include "segtag/label_mode.hpp"
#include "segtag/perceptron.hpp"  // LabeledSequence, read_file_bytes
#include "segtag/unicode.hpp"

namespace segtag {

struct Lexicon {
    // token -> label -> count
    std::unordered_map<std::string, std::map<std::string, int>> freq;
    // token -> most frequent label (ties go to the lexicographically smallest)
    std::unordered_map<std::string, std::string> best;
    std::string default_label;

    const std::string& lookup(const std::string& token) const {
        auto it = best.find(token);
        return it == best.end() ? default_label : it->second;
    }
};

inline Lexicon build_lexicon(const std::vector<LabeledSequence>& train) {
    if (train.empty()) throw UserError("empty training set");
    Lexicon lex;
    std::map<std::string, long long> global;
    for (const auto& seq : train) {
        if (seq.tokens.size() != seq.labels.size() || seq.tokens.empty())
            throw UserError("training sequence with mismatched or empty tokens/labels");
        for (size_t i = 0; i < seq.tokens.size(); ++i) {
            lex.freq[seq.tokens[i]][seq.labels[i]] += 1;
            global[seq.labels[i]] += 1;
        }
    }
    for (const auto& [token, counts] : lex.freq) {
        const std::string* arg = nullptr;
        int best_count = 0;
        for (const auto& [label, count] : counts) {  // std::map: label ascending
            if (count > best_count) {
                best_count = count;
                arg = &label;
            }
        }
        lex.best[token] = *arg;
    }
    long long best_count = 0;
    for (const auto& [label, count] : global) {
        if (count > best_count) {
            best_count = count;
            lex.default_label = label;
        }
    }
    return lex;
}

inline std::vector<std::string> lexicon_tag(const Lexicon& lex,
                                            const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UserError("cannot tag an empty token sequence");
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(lex.lookup(t));
    return out;
}

// ---------------------------------------------------------------------------

enum class AtomKind : uint8_t {
    TokenAt,   // token at window offset == value
    CurLabel,  // current predicted label == value
    LabelAt,   // predicted label at window offset == value
    Suffix,    // last k code points of token 0 == value
};

struct RuleAtom {
    AtomKind kind;
    int offset = 0;  // in [-2, +2]
    int k = 0;       // 1..3 for Suffix
    std::string value;
};

struct RuleCondition {
    std::vector<RuleAtom> atoms;  // conjunction, canonical order; empty only at the root
};

struct RdrNode {
    RuleCondition cond;
    std::string conclusion;  // empty at the root: the lexicon supplies it
    std::unique_ptr<RdrNode> except_child;
    std::unique_ptr<RdrNode> if_not_child;
    int id = 0;  // creation order; 0 is the root
};

struct RdrTree {
    LabelMode mode = LabelMode::WordPos;
    Lexicon lexicon;
    std::unique_ptr<RdrNode> root = std::make_unique<RdrNode>();
    std::vector<std::pair<std::string, std::string>> meta;

    size_t rule_count() const {
        size_t n = 0;
        count_below(root->except_child.get(), n);
        return n;
    }

private:
    static void count_below(const RdrNode* node, size_t& n) {
        while (node) {
            ++n;
            count_below(node->except_child.get(), n);
            node = node->if_not_child.get();
        }
    }
};

namespace rdr_detail {

// Context at one position during the left-to-right pass: positions before i
// carry their final labels, i and later still carry the initial (lexicon)
// labels.
struct Context {
    const std::vector<std::string>* tokens;
    const std::vector<std::string>* final_labels;
    const std::vector<std::string>* initial_labels;
    size_t i;

    const std::string& token_at(int off) const {
        static const std::string bos = kBosToken;
        static const std::string eos = kEosToken;
        long long j = static_cast<long long>(i) + off;
        if (j < 0) return bos;
        if (j >= static_cast<long long>(tokens->size())) return eos;
        return (*tokens)[static_cast<size_t>(j)];
    }
    const std::string& label_at(int off) const {
        static const std::string bos = kBosToken;
        static const std::string eos = kEosToken;
        long long j = static_cast<long long>(i) + off;
        if (j < 0) return bos;
        if (j >= static_cast<long long>(tokens->size())) return eos;
        return j < static_cast<long long>(i) ? (*final_labels)[static_cast<size_t>(j)]
                                             : (*initial_labels)[static_cast<size_t>(j)];
    }
};

inline bool atom_matches(const RuleAtom& atom, const Context& ctx) {
    switch (atom.kind) {
        case AtomKind::TokenAt:
            return ctx.token_at(atom.offset) == atom.value;
        case AtomKind::CurLabel:
            return ctx.label_at(0) == atom.value;
        case AtomKind::LabelAt:
            return ctx.label_at(atom.offset) == atom.value;
        case AtomKind::Suffix: {
            const std::string& tok = ctx.token_at(0);
            if (code_point_count(tok) < static_cast<size_t>(atom.k)) return false;
            return cp_suffix(tok, static_cast<size_t>(atom.k)) == atom.value;
        }
    }
    return false;
}

inline bool cond_matches(const RuleCondition& cond, const Context& ctx) {
    for (const auto& atom : cond.atoms)
        if (!atom_matches(atom, ctx)) return false;
    return true;
}

// Exception-first walk; the last matched conclusion wins. Returns the node
// whose conclusion decided the label (the root when no rule matched).
inline std::pair<const std::string*, const RdrNode*> walk(const RdrTree& tree,
                                                          const Context& ctx) {
    const std::string* label = &(*ctx.initial_labels)[ctx.i];
    const RdrNode* decided = tree.root.get();
    const RdrNode* node = tree.root->except_child.get();
    while (node) {
        if (cond_matches(node->cond, ctx)) {
            label = &node->conclusion;
            decided = node;
            node = node->except_child.get();
        } else {
            node = node->if_not_child.get();
        }
    }
    return {label, decided};
}

}  // namespace rdr_detail

// One deterministic left-to-right pass: every position is initialized from
// the lexicon, then rewritten by the deepest matching rule; corrected labels
// are visible as left context to later positions.
inline std::vector<std::string> apply_rdr(const RdrTree& tree,
                                          const std::vector<std::string>& tokens) {
    std::vector<std::string> initial = lexicon_tag(tree.lexicon, tokens);
    std::vector<std::string> final_labels = initial;
    for (size_t i = 0; i < tokens.size(); ++i) {
        rdr_detail::Context ctx{&tokens, &final_labels, &initial, i};
        final_labels[i] = *rdr_detail::walk(tree, ctx).first;
    }
    return final_labels;
}

// ---------------------------------------------------------------------------
// Learner
// ---------------------------------------------------------------------------

namespace rdr_detail {

// Candidate condition shapes, instantiated from error contexts. Every shape
// includes the current label.
struct CandTemplate {
    std::vector<RuleAtom> atoms;  // values empty; offsets/k set
};

inline const std::vector<CandTemplate>& candidate_templates() {
    auto tok = [](int off) { return RuleAtom{AtomKind::TokenAt, off, 0, ""}; };
    auto lbl = [](int off) { return RuleAtom{AtomKind::LabelAt, off, 0, ""}; };
    auto cur = []() { return RuleAtom{AtomKind::CurLabel, 0, 0, ""}; };
    auto suf = [](int k) { return RuleAtom{AtomKind::Suffix, 0, k, ""}; };
    static const std::vector<CandTemplate> tpls = {
        {{cur()}},
        {{cur(), tok(0)}},
        {{cur(), tok(-1)}},
        {{cur(), tok(1)}},
        {{cur(), tok(-2)}},
        {{cur(), tok(2)}},
        {{cur(), lbl(-1)}},
        {{cur(), lbl(1)}},
        {{cur(), lbl(-2)}},
        {{cur(), lbl(2)}},
        {{cur(), tok(-1), tok(0)}},
        {{cur(), tok(0), tok(1)}},
        {{cur(), lbl(-1), tok(0)}},
        {{cur(), tok(0), lbl(1)}},
        {{cur(), suf(1)}},
        {{cur(), suf(2)}},
        {{cur(), suf(3)}},
    };
    return tpls;
}

inline constexpr size_t kNumCandTemplates = 17;

struct Fnv64 {
    uint64_t h = 1469598103934665603ull;
    void byte(uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    }
    void str(std::string_view s) {
        for (char c : s) byte(static_cast<uint8_t>(c));
        byte(0x1F);
    }
    void num(uint64_t v) {
        for (int i = 0; i < 8; ++i) byte(static_cast<uint8_t>(v >> (8 * i)));
    }
};

// Bucket key for (attachment node, template, context values); 0 = template
// not applicable here.
inline uint64_t candidate_key(int node_id, size_t tpl_idx, const Context& ctx) {
    const CandTemplate& tpl = candidate_templates()[tpl_idx];
    Fnv64 f;
    f.num(static_cast<uint64_t>(node_id));
    f.num(tpl_idx);
    for (const RuleAtom& atom : tpl.atoms) {
        switch (atom.kind) {
            case AtomKind::TokenAt:
                f.str(ctx.token_at(atom.offset));
                break;
            case AtomKind::CurLabel:
                f.str(ctx.label_at(0));
                break;
            case AtomKind::LabelAt:
                f.str(ctx.label_at(atom.offset));
                break;
            case AtomKind::Suffix: {
                const std::string& tok = ctx.token_at(0);
                if (code_point_count(tok) < static_cast<size_t>(atom.k)) return 0;
                f.str(cp_suffix(tok, static_cast<size_t>(atom.k)));
                break;
            }
        }
    }
    return f.h == 0 ? 1 : f.h;
}

inline RuleCondition instantiate(size_t tpl_idx, const Context& ctx) {
    RuleCondition cond;
    for (RuleAtom atom : candidate_templates()[tpl_idx].atoms) {
        switch (atom.kind) {
            case AtomKind::TokenAt:
                atom.value = ctx.token_at(atom.offset);
                break;
            case AtomKind::CurLabel:
                atom.value = ctx.label_at(0);
                break;
            case AtomKind::LabelAt:
                atom.value = ctx.label_at(atom.offset);
                break;
            case AtomKind::Suffix:
                atom.value = std::string(cp_suffix(ctx.token_at(0), static_cast<size_t>(atom.k)));
                break;
        }
        cond.atoms.push_back(std::move(atom));
    }
    return cond;
}

inline std::string atom_to_string(const RuleAtom& atom) {
    switch (atom.kind) {
        case AtomKind::TokenAt:
            return "w" + std::to_string(atom.offset) + "=" + atom.value;
        case AtomKind::CurLabel:
            return "cur=" + atom.value;
        case AtomKind::LabelAt:
            return "t" + std::to_string(atom.offset) + "=" + atom.value;
        case AtomKind::Suffix:
            return "suf" + std::to_string(atom.k) + "=" + atom.value;
    }
    return "?";
}

inline std::string rule_to_string(const RuleCondition& cond, const std::string& conclusion) {
    std::string out = "if";
    for (const auto& atom : cond.atoms) {
        out += ' ';
        out += atom_to_string(atom);
    }
    out += " then " + conclusion;
    return out;
}

struct BucketStats {
    int correct_total = 0;
    std::vector<std::pair<std::string, int>> wrong_by_gold;
    std::vector<std::pair<std::string, int>> correct_by_gold;

    static void inc(std::vector<std::pair<std::string, int>>& v, const std::string& g, int d) {
        for (auto& [label, count] : v) {
            if (label == g) {
                count += d;
                return;
            }
        }
        v.emplace_back(g, d);
    }
    static int get(const std::vector<std::pair<std::string, int>>& v, const std::string& g) {
        for (const auto& [label, count] : v)
            if (label == g) return count;
        return 0;
    }
};

}  // namespace rdr_detail


// Greedy error-driven construction. Candidates are harvested from the
// current training errors, scored by (errors fixed - errors introduced)
// against the frozen predictions, and tried best-first; a rule is kept only
// when replaying it nets at least min_gain real fixes, otherwise it is
// rolled back and blacklisted. Ties: fixed count descending, then rule
// string ascending.
inline RdrTree learn_rdr(const std::vector<LabeledSequence>& train, Lexicon lex, int min_gain,
                         LabelMode mode = LabelMode::WordPos) {
    using namespace rdr_detail;
    if (train.empty()) throw UserError("empty training set");
    if (min_gain < 1) throw ConfigError("min_gain must be at least 1");

    RdrTree tree;
    tree.mode = mode;
    tree.lexicon = std::move(lex);

    const size_t S = train.size();
    std::vector<std::vector<std::string>> initial(S), final_lbl(S);
    std::vector<std::vector<const RdrNode*>> final_node(S);
    std::vector<std::vector<std::array<uint64_t, kNumCandTemplates>>> keys(S);

    std::vector<RdrNode*> nodes = {tree.root.get()};
    // node id -> packed (sentence << 20 | index) positions it currently decides
    std::vector<std::unordered_set<uint64_t>> node_positions;
    node_positions.emplace_back();
    std::unordered_map<uint64_t, BucketStats> stats;
    std::unordered_set<uint64_t> blacklist;
    long long errors = 0;

    auto pack = [](size_t s, size_t i) { return (static_cast<uint64_t>(s) << 20) | i; };

    // Adds (or removes, delta = -1) one position's contribution to the
    // candidate statistics, using the stored bucket keys on removal.
    auto add_position = [&](size_t s, size_t i, int delta) {
        const RdrNode* node = final_node[s][i];
        bool correct = final_lbl[s][i] == train[s].labels[i];
        Context ctx{&train[s].tokens, &final_lbl[s], &initial[s], i};
        auto& row = keys[s][i];
        for (size_t t = 0; t < kNumCandTemplates; ++t) {
            if (delta > 0) row[t] = candidate_key(node->id, t, ctx);
            uint64_t key = row[t];
            if (!key) continue;
            BucketStats& st = stats[key];
            if (correct) {
                st.correct_total += delta;
                BucketStats::inc(st.correct_by_gold, train[s].labels[i], delta);
            } else {
                BucketStats::inc(st.wrong_by_gold, train[s].labels[i], delta);
            }
        }
        if (delta > 0)
            node_positions[static_cast<size_t>(node->id)].insert(pack(s, i));
        else
            node_positions[static_cast<size_t>(node->id)].erase(pack(s, i));
        errors += (correct ? 0 : 1) * delta;
    };

    auto replay_sentence = [&](size_t s) {
        const auto& tokens = train[s].tokens;
        final_lbl[s] = initial[s];
        for (size_t i = 0; i < tokens.size(); ++i) {
            Context ctx{&tokens, &final_lbl[s], &initial[s], i};
            auto [label, node] = walk(tree, ctx);
            final_lbl[s][i] = *label;
            final_node[s][i] = node;
        }
    };

    for (size_t s = 0; s < S; ++s) {
        if (train[s].tokens.size() != train[s].labels.size() || train[s].tokens.empty())
            throw UserError("training sequence with mismatched or empty tokens/labels");
        if (train[s].tokens.size() >= (1u << 20)) throw UserError("training sentence too long");
        initial[s] = lexicon_tag(tree.lexicon, train[s].tokens);
        final_node[s].assign(train[s].tokens.size(), nullptr);
        keys[s].resize(train[s].tokens.size());
        replay_sentence(s);
        for (size_t i = 0; i < train[s].tokens.size(); ++i) add_position(s, i, +1);
    }

    struct Candidate {
        long long gain;
        int fixed;
        size_t sent;
        size_t idx;
        size_t tpl;
        std::string target;
        int node_id;
    };

    auto blacklist_candidate = [&](const Candidate& cand) {
        Fnv64 f;
        f.num(keys[cand.sent][cand.idx][cand.tpl]);
        f.str(cand.target);
        blacklist.insert(f.h);
    };

    // Attaches the candidate's rule, replays the sentences it can touch, and
    // keeps it iff it nets >= min_gain fixes; otherwise restores everything
    // and blacklists the candidate.
    auto try_candidate = [&](const Candidate& cand) {
        Context cctx{&train[cand.sent].tokens, &final_lbl[cand.sent], &initial[cand.sent],
                     cand.idx};
        RuleCondition cond = instantiate(cand.tpl, cctx);

        std::set<size_t> affected;
        for (uint64_t packed : node_positions[static_cast<size_t>(cand.node_id)]) {
            size_t s = packed >> 20;
            size_t i = packed & ((1u << 20) - 1);
            Context ctx{&train[s].tokens, &final_lbl[s], &initial[s], i};
            if (cond_matches(cond, ctx)) affected.insert(s);
        }

        RdrNode* parent = nodes[static_cast<size_t>(cand.node_id)];
        auto fresh = std::make_unique<RdrNode>();
        fresh->cond = std::move(cond);
        fresh->conclusion = cand.target;
        fresh->id = static_cast<int>(nodes.size());
        std::unique_ptr<RdrNode>* slot = &parent->except_child;
        while (*slot) slot = &(*slot)->if_not_child;
        nodes.push_back(fresh.get());
        node_positions.emplace_back();
        *slot = std::move(fresh);

        long long errors_before = errors;
        std::map<size_t, std::vector<std::string>> saved_final;
        std::map<size_t, std::vector<const RdrNode*>> saved_node;
        std::map<size_t, std::vector<std::array<uint64_t, kNumCandTemplates>>> saved_keys;
        for (size_t s : affected) {
            saved_final[s] = final_lbl[s];
            saved_node[s] = final_node[s];
            saved_keys[s] = keys[s];
            for (size_t i = 0; i < train[s].tokens.size(); ++i) add_position(s, i, -1);
            replay_sentence(s);
            for (size_t i = 0; i < train[s].tokens.size(); ++i) add_position(s, i, +1);
        }
        if (errors_before - errors >= min_gain) return true;

        for (size_t s : affected) {
            for (size_t i = 0; i < train[s].tokens.size(); ++i) add_position(s, i, -1);
            final_lbl[s] = std::move(saved_final[s]);
            final_node[s] = std::move(saved_node[s]);
            keys[s] = std::move(saved_keys[s]);
            for (size_t i = 0; i < train[s].tokens.size(); ++i) add_position(s, i, +1);
        }
        *slot = nullptr;
        nodes.pop_back();
        node_positions.pop_back();
        blacklist_candidate(cand);
        return false;
    };

    while (errors > 0) {
        std::vector<Candidate> cands;
        std::unordered_set<uint64_t> seen;
        for (size_t s = 0; s < S; ++s) {
            for (size_t i = 0; i < train[s].tokens.size(); ++i) {
                if (final_lbl[s][i] == train[s].labels[i]) continue;
                const std::string& target = train[s].labels[i];
                for (size_t t = 0; t < kNumCandTemplates; ++t) {
                    uint64_t key = keys[s][i][t];
                    if (!key) continue;
                    Fnv64 f;
                    f.num(key);
                    f.str(target);
                    if (blacklist.count(f.h) || !seen.insert(f.h).second) continue;
                    const BucketStats& st = stats.at(key);
                    int fixed = BucketStats::get(st.wrong_by_gold, target);
                    int broken = st.correct_total - BucketStats::get(st.correct_by_gold, target);
                    long long gain = fixed - broken;
                    if (gain < min_gain) continue;
                    cands.push_back(Candidate{gain, fixed, s, i, t, target, final_node[s][i]->id});
                }
            }
        }

        // Try candidates tier by tier: best (gain, fixed) first; within a
        // tier, rule-string order then node id. Rule strings are built only
        // for the tier under consideration.
        bool accepted = false;
        while (!cands.empty() && !accepted) {
            long long best_gain = cands[0].gain;
            int best_fixed = cands[0].fixed;
            for (const Candidate& cand : cands) {
                if (cand.gain > best_gain || (cand.gain == best_gain && cand.fixed > best_fixed)) {
                    best_gain = cand.gain;
                    best_fixed = cand.fixed;
                }
            }
            std::vector<size_t> tier;
            for (size_t k = 0; k < cands.size(); ++k)
                if (cands[k].gain == best_gain && cands[k].fixed == best_fixed) tier.push_back(k);
            std::vector<std::pair<std::string, size_t>> ordered;
            ordered.reserve(tier.size());
            for (size_t k : tier) {
                const Candidate& cand = cands[k];
                Context ctx{&train[cand.sent].tokens, &final_lbl[cand.sent], &initial[cand.sent],
                            cand.idx};
                ordered.emplace_back(rule_to_string(instantiate(cand.tpl, ctx), cand.target), k);
            }
            std::sort(ordered.begin(), ordered.end(),
                      [&](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first < b.first;
                          return cands[a.second].node_id < cands[b.second].node_id;
                      });
            for (const auto& [rule_str, k] : ordered) {
                if (try_candidate(cands[k])) {
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                std::unordered_set<size_t> in_tier(tier.begin(), tier.end());
                std::vector<Candidate> rest;
                rest.reserve(cands.size() - tier.size());
                for (size_t k = 0; k < cands.size(); ++k)
                    if (!in_tier.count(k)) rest.push_back(std::move(cands[k]));
                cands = std::move(rest);
            }
        }
        if (!accepted) break;
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Tree and lexicon files: versioned, human-readable (see docs/formats.md).
// Rules are listed one per line, exception children indented two spaces
// deeper than their parent; same-depth neighbours chain as alternatives.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kRdrTreeHeader = "SEGTAG RDR TREE v1";
inline constexpr std::string_view kLexiconHeader = "SEGTAG LEXICON v1";

namespace rdr_detail {

inline void write_meta_and_lexicon(std::string& out, LabelMode mode,
                                   const std::vector<std::pair<std::string, std::string>>& meta,
                                   const Lexicon& lex) {
    out += "mode " + to_string(mode) + "\n";
    for (const auto& [k, v] : meta) out += "meta " + k + " " + v + "\n";
    out += "default " + lex.default_label + "\n";
    std::vector<const std::string*> tokens;
    tokens.reserve(lex.freq.size());
    for (const auto& [token, counts] : lex.freq) tokens.push_back(&token);
    std::sort(tokens.begin(), tokens.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    out += "lexicon " + std::to_string(tokens.size()) + "\n";
    for (const std::string* token : tokens) {
        out += *token;
        for (const auto& [label, count] : lex.freq.at(*token))
            out += " " + label + ":" + std::to_string(count);
        out += "\n";
    }
}

inline void write_rules(std::string& out, const RdrNode* node, int depth) {
    while (node) {
        out.append(static_cast<size_t>(depth) * 2, ' ');
        out += rule_to_string(node->cond, node->conclusion);
        out += "\n";
        write_rules(out, node->except_child.get(), depth + 1);
        node = node->if_not_child.get();
    }
}

inline size_t count_rules(const RdrNode* node) {
    size_t n = 0;
    while (node) {
        n += 1 + count_rules(node->except_child.get());
        node = node->if_not_child.get();
    }
    return n;
}

struct LineCursor {
    std::vector<std::string> lines;
    size_t next = 0;
    const char* what;

    LineCursor(std::string_view text, const char* context) : what(context) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view raw =
                nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            lines.emplace_back(raw);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        while (!lines.empty() && lines.back().empty()) lines.pop_back();
    }
    bool done() const { return next >= lines.size(); }
    const std::string& line() {
        if (done()) throw ModelError(std::string("corrupt ") + what + " file: unexpected end");
        return lines[next++];
    }
};

inline RuleAtom parse_atom(std::string_view tok, const char* what) {
    size_t eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ModelError(std::string("corrupt ") + what + " file: bad atom '" + std::string(tok) +
                         "'");
    std::string_view key = tok.substr(0, eq);
    std::string value(tok.substr(eq + 1));
    auto parse_int = [&](std::string_view s, int lo, int hi) {
        try {
            size_t used = 0;
            int v = std::stoi(std::string(s), &used);
            if (used != s.size() || v < lo || v > hi) throw std::invalid_argument("range");
            return v;
        } catch (const std::logic_error&) {
            throw ModelError(std::string("corrupt ") + what + " file: bad atom key '" +
                             std::string(key) + "'");
        }
    };
    if (key == "cur") return RuleAtom{AtomKind::CurLabel, 0, 0, std::move(value)};
    if (key[0] == 'w') return RuleAtom{AtomKind::TokenAt, parse_int(key.substr(1), -2, 2), 0,
                                       std::move(value)};
    if (key[0] == 't') return RuleAtom{AtomKind::LabelAt, parse_int(key.substr(1), -2, 2), 0,
                                       std::move(value)};
    if (key.size() == 4 && key.substr(0, 3) == "suf")
        return RuleAtom{AtomKind::Suffix, 0, parse_int(key.substr(3), 1, 3), std::move(value)};
    throw ModelError(std::string("corrupt ") + what + " file: bad atom key '" + std::string(key) +
                     "'");
}

inline void parse_meta_and_lexicon(LineCursor& in, LabelMode& mode,
                                   std::vector<std::pair<std::string, std::string>>& meta,
                                   Lexicon& lex) {
    const char* what = in.what;
    auto corrupt = [&](const std::string& why) {
        return ModelError(std::string("corrupt ") + what + " file: " + why);
    };
    {
        const std::string& line = in.line();
        if (line.rfind("mode ", 0) != 0) throw corrupt("expected mode line");
        mode = label_mode_from_string(std::string_view(line).substr(5));
    }
    while (!in.done() && in.lines[in.next].rfind("meta ", 0) == 0) {
        std::string_view rest = std::string_view(in.line()).substr(5);
        size_t sp = rest.find(' ');
        if (sp == std::string_view::npos) throw corrupt("bad meta line");
        meta.emplace_back(std::string(rest.substr(0, sp)), std::string(rest.substr(sp + 1)));
    }
    {
        const std::string& line = in.line();
        if (line.rfind("default ", 0) != 0) throw corrupt("expected default line");
        lex.default_label = line.substr(8);
        if (lex.default_label.empty()) throw corrupt("empty default label");
    }
    size_t n_entries = 0;
    {
        const std::string& line = in.line();
        if (line.rfind("lexicon ", 0) != 0) throw corrupt("expected lexicon line");
        try {
            n_entries = std::stoul(line.substr(8));
        } catch (const std::logic_error&) {
            throw corrupt("bad lexicon count");
        }
    }
    for (size_t e = 0; e < n_entries; ++e) {
        auto parts = split_ws(in.line());
        if (parts.size() < 2) throw corrupt("bad lexicon entry");
        std::string token(parts[0]);
        auto& counts = lex.freq[token];
        for (size_t k = 1; k < parts.size(); ++k) {
            size_t colon = parts[k].rfind(':');
            if (colon == std::string_view::npos || colon == 0)
                throw corrupt("bad lexicon count '" + std::string(parts[k]) + "'");
            std::string label(parts[k].substr(0, colon));
            int count = 0;
            try {
                count = std::stoi(std::string(parts[k].substr(colon + 1)));
            } catch (const std::logic_error&) {
                throw corrupt("bad lexicon count '" + std::string(parts[k]) + "'");
            }
            if (count <= 0 || counts.count(label)) throw corrupt("bad lexicon entry");
            counts[label] = count;
        }
        // Recompute the most-frequent choice with the lexicographic tie-break.
        const std::string* arg = nullptr;
        int best_count = 0;
        for (const auto& [label, count] : counts) {
            if (count > best_count) {
                best_count = count;
                arg = &label;
            }
        }
        lex.best[token] = *arg;
    }
}

inline void check_header(LineCursor& in, std::string_view expected) {
    const std::string& line = in.line();
    if (line == expected) return;
    std::string_view prefix = expected.substr(0, expected.size() - 1);  // drop version digit
    if (std::string_view(line).rfind(prefix, 0) == 0)
        throw ModelError(std::string(in.what) + " file version '" + line.substr(prefix.size()) +
                         "' not supported (expected 1)");
    throw ModelError(std::string("corrupt ") + in.what + " file: bad header");
}

}  // namespace rdr_detail

inline std::string save_tree_bytes(const RdrTree& tree) {
    std::string out;
    out += std::string(kRdrTreeHeader) + "\n";
    rdr_detail::write_meta_and_lexicon(out, tree.mode, tree.meta, tree.lexicon);
    out += "rules " + std::to_string(tree.rule_count()) + "\n";
    rdr_detail::write_rules(out, tree.root->except_child.get(), 0);
    return out;
}

inline RdrTree load_tree_bytes(std::string_view bytes) {
    using namespace rdr_detail;
    LineCursor in(bytes, "tree");
    check_header(in, kRdrTreeHeader);
    RdrTree tree;
    parse_meta_and_lexicon(in, tree.mode, tree.meta, tree.lexicon);

    size_t n_rules = 0;
    {
        const std::string& line = in.line();
        if (line.rfind("rules ", 0) != 0)
            throw ModelError("corrupt tree file: expected rules line");
        try {
            n_rules = std::stoul(line.substr(6));
        } catch (const std::logic_error&) {
            throw ModelError("corrupt tree file: bad rules count");
        }
    }
    std::vector<RdrNode*> last_at_depth;  // most recent node per depth
    int next_id = 1;
    for (size_t r = 0; r < n_rules; ++r) {
        const std::string& line = in.line();
        size_t spaces = 0;
        while (spaces < line.size() && line[spaces] == ' ') ++spaces;
        if (spaces % 2 != 0) throw ModelError("corrupt tree file: odd indentation");
        size_t depth = spaces / 2;
        if (depth > last_at_depth.size())
            throw ModelError("corrupt tree file: indentation skips a level");

        auto parts = split_ws(std::string_view(line).substr(spaces));
        if (parts.size() < 4 || parts.front() != "if" || parts[parts.size() - 2] != "then")
            throw ModelError("corrupt tree file: bad rule line '" + line + "'");
        auto node = std::make_unique<RdrNode>();
        node->id = next_id++;
        node->conclusion = std::string(parts.back());
        for (size_t k = 1; k + 2 < parts.size(); ++k)
            node->cond.atoms.push_back(parse_atom(parts[k], "tree"));
        if (node->cond.atoms.empty()) throw ModelError("corrupt tree file: rule with no atoms");

        RdrNode* raw = node.get();
        if (depth == last_at_depth.size()) {
            RdrNode* parent = depth == 0 ? tree.root.get() : last_at_depth[depth - 1];
            parent->except_child = std::move(node);
        } else {
            last_at_depth[depth]->if_not_child = std::move(node);
        }
        last_at_depth.resize(depth);
        last_at_depth.push_back(raw);
    }
    if (!in.done()) throw ModelError("corrupt tree file: trailing content");
    return tree;
}

inline void save_tree(const RdrTree& tree, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write tree file '" + path + "'");
    std::string bytes = save_tree_bytes(tree);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing tree file '" + path + "'");
}

inline RdrTree load_tree(const std::string& path) {
    return load_tree_bytes(read_file_bytes(path, "tree"));
}

// Standalone lexicon file, shared section format with the tree file.
inline std::string save_lexicon_bytes(const Lexicon& lex, LabelMode mode,
                                      const std::vector<std::pair<std::string, std::string>>& meta = {}) {
    std::string out;
    out += std::string(kLexiconHeader) + "\n";
    rdr_detail::write_meta_and_lexicon(out, mode, meta, lex);
    return out;
}

struct LexiconFile {
    Lexicon lexicon;
    LabelMode mode = LabelMode::WordPos;
    std::vector<std::pair<std::string, std::string>> meta;
};

inline LexiconFile load_lexicon_bytes(std::string_view bytes) {
    using namespace rdr_detail;
    LineCursor in(bytes, "lexicon");
    check_header(in, kLexiconHeader);
    LexiconFile out;
    parse_meta_and_lexicon(in, out.mode, out.meta, out.lexicon);
    if (!in.done()) throw ModelError("corrupt lexicon file: trailing content");
    return out;
}

inline void save_lexicon(const Lexicon& lex, LabelMode mode, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write lexicon file '" + path + "'");
    std::string bytes = save_lexicon_bytes(lex, mode);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing lexicon file '" + path + "'");
}

inline LexiconFile load_lexicon(const std::string& path) {
    return load_lexicon_bytes(read_file_bytes(path, "lexicon"));
}

}  // namespace segtag
