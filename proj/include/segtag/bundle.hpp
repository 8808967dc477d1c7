#pragma once

// Single-file container for everything one trained system needs: a joint
// bundle holds one combined-tag backend, a pipeline bundle holds the B/I
// feature segmenter plus a word-level tagger. Payloads are the standalone
// model/tree/lexicon formats, embedded as length-prefixed blobs.

#include <optional>
#include <string>

#include "segtag/error.hpp"
#include "segtag/strategies.hpp"

namespace segtag {

struct ModelBundle {
    StrategyKind strategy = StrategyKind::Joint;
    std::optional<Backend> segmenter;  // pipeline only
    Backend tagger;

    BackendKind backend_kind() const { return tagger.kind(); }
};

inline constexpr std::string_view kBundleMagic = "SGTGBNDL";
inline constexpr uint32_t kBundleVersion = 1;

namespace bundle_detail {

inline std::string backend_payload(const Backend& b) {
    if (const auto* m = std::get_if<WeightModel>(&b.impl)) return save_model_bytes(*m);
    if (const auto* t = std::get_if<RdrTree>(&b.impl)) return save_tree_bytes(*t);
    return save_lexicon_bytes(std::get<Lexicon>(b.impl), b.mode);
}

inline Backend backend_from_payload(uint8_t payload_kind, std::string_view bytes) {
    switch (payload_kind) {
        case 0: return Backend::feature(load_model_bytes(bytes));
        case 1: return Backend::rdr(load_tree_bytes(bytes));
        case 2: {
            LexiconFile f = load_lexicon_bytes(bytes);
            return Backend::lexicon(std::move(f.lexicon), f.mode);
        }
        default: throw ModelError("corrupt bundle file: unknown payload kind");
    }
}

inline uint8_t payload_kind(const Backend& b) { return static_cast<uint8_t>(b.kind()); }

}  // namespace bundle_detail

inline std::string save_bundle_bytes(const ModelBundle& bundle) {
    using namespace percep_detail;
    if ((bundle.strategy == StrategyKind::Pipeline) != bundle.segmenter.has_value())
        throw ConfigError("pipeline bundles need a segmenter, joint bundles must not have one");
    std::string out;
    out.append(kBundleMagic);
    put_u32(out, kBundleVersion);
    out.push_back(static_cast<char>(bundle.strategy));
    out.push_back(static_cast<char>(bundle.backend_kind()));
    uint8_t n_sections = bundle.segmenter ? 2 : 1;
    out.push_back(static_cast<char>(n_sections));
    auto put_section = [&](uint8_t role, const Backend& b) {
        out.push_back(static_cast<char>(role));
        out.push_back(static_cast<char>(bundle_detail::payload_kind(b)));
        std::string payload = bundle_detail::backend_payload(b);
        put_u64(out, payload.size());
        out += payload;
    };
    if (bundle.segmenter) put_section(0, *bundle.segmenter);
    put_section(1, bundle.tagger);
    return out;
}

inline ModelBundle load_bundle_bytes(std::string_view bytes) {
    using namespace percep_detail;
    ByteReader r(bytes, "bundle");
    r.need(kBundleMagic.size());
    if (bytes.substr(0, kBundleMagic.size()) != kBundleMagic)
        throw ModelError("corrupt bundle file: bad magic");
    r.pos = kBundleMagic.size();
    uint32_t version = r.u32();
    if (version != kBundleVersion)
        throw ModelError("bundle file version " + std::to_string(version) +
                         " not supported (expected " + std::to_string(kBundleVersion) + ")");
    uint8_t strategy = r.u8();
    if (strategy > 1) throw ModelError("corrupt bundle file: bad strategy");
    uint8_t kind = r.u8();
    uint8_t n_sections = r.u8();

    std::optional<Backend> segmenter;
    std::optional<Backend> tagger;
    for (uint8_t s = 0; s < n_sections; ++s) {
        uint8_t role = r.u8();
        uint8_t payload_kind = r.u8();
        uint64_t len = r.u64();
        r.need(len);
        std::string_view payload = r.data.substr(r.pos, len);
        r.pos += len;
        Backend b = bundle_detail::backend_from_payload(payload_kind, payload);
        if (role == 0) {
            if (segmenter) throw ModelError("corrupt bundle file: duplicate segmenter");
            segmenter = std::move(b);
        } else if (role == 1) {
            if (tagger) throw ModelError("corrupt bundle file: duplicate tagger");
            tagger = std::move(b);
        } else {
            throw ModelError("corrupt bundle file: unknown section role");
        }
    }
    if (r.pos != bytes.size()) throw ModelError("corrupt bundle file: trailing bytes");
    if (!tagger) throw ModelError("corrupt bundle file: missing tagger");

    ModelBundle bundle{static_cast<StrategyKind>(strategy), std::move(segmenter),
                       std::move(*tagger)};
    if (bundle.strategy == StrategyKind::Pipeline) {
        if (!bundle.segmenter) throw ModelError("corrupt bundle file: pipeline without segmenter");
        require_mode(*bundle.segmenter, LabelMode::SyllableSeg, "bundled segmenter");
        require_mode(bundle.tagger, LabelMode::WordPos, "bundled pipeline tagger");
    } else {
        if (bundle.segmenter) throw ModelError("corrupt bundle file: joint bundle with segmenter");
        require_mode(bundle.tagger, LabelMode::SyllableCombined, "bundled joint tagger");
    }
    if (static_cast<uint8_t>(bundle.backend_kind()) != kind)
        throw ModelError("corrupt bundle file: backend kind mismatch");
    return bundle;
}

inline void save_bundle(const ModelBundle& bundle, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write bundle file '" + path + "'");
    std::string bytes = save_bundle_bytes(bundle);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing bundle file '" + path + "'");
}

inline ModelBundle load_bundle(const std::string& path) {
    return load_bundle_bytes(read_file_bytes(path, "bundle"));
}

}  // namespace segtag
