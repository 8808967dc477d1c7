#include <catch2/catch_amalgamated.hpp>

#include "segtag/features.hpp"

using namespace segtag;

static std::vector<FeatureTemplate> only(const char* id) {
    return {template_from_id(id)};
}

TEST_CASE("token template at offset 0") {
    std::vector<std::string> tokens = {"a"};
    CHECK(extract_features(tokens, 0, nullptr, only("w0")) == std::vector<std::string>{"w0=a"});
}

TEST_CASE("token templates with window") {
    std::vector<std::string> tokens = {"a", "b"};
    std::vector<FeatureTemplate> tpl = {template_from_id("w-1"), template_from_id("w0")};
    CHECK(extract_features(tokens, 1, nullptr, tpl) ==
          std::vector<std::string>{"w-1=a", "w0=b"});
}

TEST_CASE("out of range offsets produce boundary placeholders") {
    std::vector<std::string> tokens = {"a"};
    CHECK(extract_features(tokens, 0, nullptr, only("w-1")) ==
          std::vector<std::string>{"w-1=<BOS>"});
    CHECK(extract_features(tokens, 0, nullptr, only("w2")) ==
          std::vector<std::string>{"w2=<EOS>"});
    CHECK(extract_features(tokens, 0, nullptr, only("w-1w0")) ==
          std::vector<std::string>{"w-1w0=<BOS>|a"});
}

TEST_CASE("prefix and suffix features count code points") {
    std::vector<std::string> tokens = {"tiến"};
    CHECK(extract_features(tokens, 0, nullptr, only("p2")) == std::vector<std::string>{"p2=ti"});
    CHECK(extract_features(tokens, 0, nullptr, only("s2")) == std::vector<std::string>{"s2=ến"});
    // Shorter than k: the feature is simply absent.
    std::vector<std::string> one = {"a"};
    CHECK(extract_features(one, 0, nullptr, only("p2")).empty());
    CHECK(extract_features(one, 0, nullptr, only("s3")).empty());
}

TEST_CASE("shape feature classifies and compresses runs") {
    std::vector<std::string> tokens = {"Cuộc", "ĐỒNG", "x25", "...", "Hà_Nội"};
    CHECK(extract_features(tokens, 0, nullptr, only("sh")) == std::vector<std::string>{"sh=Xx"});
    CHECK(extract_features(tokens, 1, nullptr, only("sh")) == std::vector<std::string>{"sh=X"});
    CHECK(extract_features(tokens, 2, nullptr, only("sh")) == std::vector<std::string>{"sh=x9"});
    CHECK(extract_features(tokens, 3, nullptr, only("sh")) == std::vector<std::string>{"sh=o"});
    CHECK(extract_features(tokens, 4, nullptr, only("sh")) ==
          std::vector<std::string>{"sh=XxoXx"});
}

TEST_CASE("previous tag features") {
    std::vector<std::string> tokens = {"a", "b"};
    std::string prev = "N";
    CHECK(extract_features(tokens, 1, &prev, only("pt")) == std::vector<std::string>{"pt=N"});
    CHECK(extract_features(tokens, 1, &prev, only("ptw0")) ==
          std::vector<std::string>{"ptw0=N|b"});
    CHECK(extract_features(tokens, 0, nullptr, only("pt")) ==
          std::vector<std::string>{"pt=<BOS>"});
    CHECK(extract_features(tokens, 0, nullptr, only("ptw0")) ==
          std::vector<std::string>{"ptw0=<BOS>|a"});
}

TEST_CASE("default template set is stable and unique") {
    auto tpls = default_templates();
    CHECK(tpls.size() == 16);
    for (size_t i = 0; i < tpls.size(); ++i) {
        // Every id round-trips through the id parser.
        FeatureTemplate parsed = template_from_id(tpls[i].id);
        CHECK(parsed.id == tpls[i].id);
        CHECK(parsed.kind == tpls[i].kind);
        CHECK(parsed.offsets == tpls[i].offsets);
        CHECK(parsed.k == tpls[i].k);
        for (size_t j = 0; j < i; ++j) CHECK(tpls[j].id != tpls[i].id);
    }
}

TEST_CASE("template id parser rejects junk") {
    CHECK_THROWS_AS(template_from_id("w9"), ModelError);
    CHECK_THROWS_AS(template_from_id("w0w2"), ModelError);
    CHECK_THROWS_AS(template_from_id("p4"), ModelError);
    CHECK_THROWS_AS(template_from_id("zz"), ModelError);
    CHECK_THROWS_AS(template_from_id(""), ModelError);
}

TEST_CASE("full default extraction on a small sentence") {
    std::vector<std::string> tokens = {"Cuộc", "điều", "tra"};
    auto feats = extract_features(tokens, 1, nullptr, default_templates());
    std::vector<std::string> expected = {
        "w-2=<BOS>", "w-1=Cuộc",     "w0=điều",      "w1=tra",  "w2=<EOS>",
        "w-1w0=Cuộc|điều", "w0w1=điều|tra", "p1=đ",    "p2=đi",   "p3=điề",
        "s1=u",      "s2=ều",        "s3=iều",       "sh=x",    "pt=<BOS>",
        "ptw0=<BOS>|điều"};
    CHECK(feats == expected);
}
