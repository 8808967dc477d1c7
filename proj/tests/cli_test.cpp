#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "segtag/cli.hpp"

using namespace segtag;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"segtag"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliResult{code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("segtag_cli_" + std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(path / name, std::ios::binary);
        out << content;
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    }
};

const char* kCorpus =
    "Cuộc/Nc điều_tra/V dường_như/X không/R tiến_triển/V ./CH\n"
    "thuế_thu_nhập/N cá_nhân/N tăng/V ./CH\n"
    "người/N dân/N đóng/V thuế_thu_nhập/N ./CH\n"
    "Cuộc/Nc họp/V kết_thúc/V ./CH\n"
    "không/R ai/P đóng/V thuế_thu_nhập/N ./CH\n"
    "dường_như/X người/N dân/N không/R tăng/V ./CH\n"
    "Cuộc/Nc điều_tra/V kết_thúc/V ./CH\n"
    "ai/P tăng/V thuế_thu_nhập/N ./CH\n";

}  // namespace

TEST_CASE("missing input path exits 2 and names the path") {
    TempDir tmp;
    CliResult r = run({"train", "--input", tmp.file("nope.txt"), "--output", tmp.file("m.bundle"),
                       "--strategy", "joint", "--backend", "lexicon"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nope.txt") != std::string::npos);
}

TEST_CASE("bad usage exits 2") {
    CliResult r = run({"train"});  // missing required options
    CHECK(r.code == 2);
    CliResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
}

TEST_CASE("train lexicon backend writes bundle and manifest with a single epoch") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    CliResult r = run({"train", "--input", tmp.file("corpus.txt"), "--output",
                       tmp.file("lex.bundle"), "--strategy", "joint", "--backend", "lexicon",
                       "--n-train", "6", "--n-dev", "2"});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(tmp.file("lex.bundle")));
    REQUIRE(fs::exists(tmp.file("lex.bundle.manifest.json")));
    auto manifest = nlohmann::json::parse(tmp.read("lex.bundle.manifest.json"));
    CHECK(manifest["command"] == "train");
    CHECK(manifest["tagger"]["dev_trace"].size() == 1);  // single "epoch"
    CHECK(manifest["inputs"][0]["sha256"].get<std::string>().size() == 64);

    ModelBundle bundle = load_bundle(tmp.file("lex.bundle"));
    CHECK(bundle.strategy == StrategyKind::Joint);
    CHECK(bundle.backend_kind() == BackendKind::LexiconOnly);
}

TEST_CASE("tag writes parseable output and respects strategy checks") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    REQUIRE(run({"train", "--input", tmp.file("corpus.txt"), "--output", tmp.file("j.bundle"),
                 "--strategy", "joint", "--backend", "feature", "--seed", "3"})
                .code == 0);
    tmp.write("raw.txt", "thuế thu nhập cá nhân tăng .\nCuộc điều tra kết thúc .\n");
    CliResult r = run({"tag", tmp.file("j.bundle"), "--input", tmp.file("raw.txt"), "--output",
                       tmp.file("tagged.txt")});
    REQUIRE(r.code == 0);
    Corpus tagged = parse_corpus(tmp.read("tagged.txt"));
    CHECK(tagged.sentences.size() == 2);
    CHECK(render_sentence(tagged.sentences[0]) == "thuế_thu_nhập/N cá_nhân/N tăng/V ./CH");

    // Declared strategy must match the bundle.
    CliResult mismatch = run({"tag", tmp.file("j.bundle"), "--input", tmp.file("raw.txt"),
                              "--output", tmp.file("x.txt"), "--strategy", "pipeline"});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("joint") != std::string::npos);
}

TEST_CASE("tag on an empty input file writes an empty output and exits 0") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    REQUIRE(run({"train", "--input", tmp.file("corpus.txt"), "--output", tmp.file("m.bundle"),
                 "--strategy", "joint", "--backend", "lexicon"})
                .code == 0);
    tmp.write("empty.txt", "");
    CliResult r = run({"tag", tmp.file("m.bundle"), "--input", tmp.file("empty.txt"), "--output",
                       tmp.file("out.txt")});
    CHECK(r.code == 0);
    CHECK(tmp.read("out.txt").empty());
}

TEST_CASE("threads flag does not change tagging output") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    REQUIRE(run({"train", "--input", tmp.file("corpus.txt"), "--output", tmp.file("p.bundle"),
                 "--strategy", "pipeline", "--backend", "feature", "--seed", "5"})
                .code == 0);
    std::string raw;
    for (int i = 0; i < 8; ++i) raw += "người dân không đóng thuế thu nhập .\n";
    tmp.write("raw.txt", raw);
    REQUIRE(run({"tag", tmp.file("p.bundle"), "--input", tmp.file("raw.txt"), "--output",
                 tmp.file("one.txt"), "--threads", "1"})
                .code == 0);
    REQUIRE(run({"tag", tmp.file("p.bundle"), "--input", tmp.file("raw.txt"), "--output",
                 tmp.file("four.txt"), "--threads", "4"})
                .code == 0);
    CHECK(tmp.read("one.txt") == tmp.read("four.txt"));
}

TEST_CASE("eval scores identical files at 100 and writes kv reports") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    CliResult r = run({"eval", "--gold", tmp.file("corpus.txt"), "--pred", tmp.file("corpus.txt"),
                       "--output", tmp.file("report.kv")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("F1=100.00") != std::string::npos);
    std::string kv = tmp.read("report.kv");
    CHECK(kv.find("wseg_f1=1.000000") != std::string::npos);
    CHECK(kv.find("acc_gold_seg=1.000000") != std::string::npos);
    CHECK(fs::exists(tmp.file("report.kv.manifest.json")));
}

TEST_CASE("eval rejects syllable mismatches naming the sentence") {
    TempDir tmp;
    tmp.write("gold.txt", "a/N b/V\nc_d/N\n");
    tmp.write("pred.txt", "a/N b/V\nc_x/N\n");
    CliResult r = run({"eval", "--gold", tmp.file("gold.txt"), "--pred", tmp.file("pred.txt")});
    CHECK(r.code == 2);
    CHECK(r.err.find("sentence 2") != std::string::npos);
}

TEST_CASE("the crossing-bracket example scores zero") {
    TempDir tmp;
    tmp.write("gold.txt", "a_b/N c/V\n");
    tmp.write("pred.txt", "a/N b_c/V\n");
    CliResult r = run({"eval", "--gold", tmp.file("gold.txt"), "--pred", tmp.file("pred.txt")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("WSeg  P=  0.00 R=  0.00 F1=  0.00") != std::string::npos);
}

TEST_CASE("bench reports positive throughput") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    REQUIRE(run({"train", "--input", tmp.file("corpus.txt"), "--output", tmp.file("m.bundle"),
                 "--strategy", "joint", "--backend", "rdr"})
                .code == 0);
    CliResult r = run({"bench", tmp.file("m.bundle"), "--input", tmp.file("corpus.txt"),
                       "--repetitions", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("words=38") != std::string::npos);
    CHECK(r.out.find("words_per_second=") != std::string::npos);
}

TEST_CASE("compare produces a full deterministic table") {
    TempDir tmp;
    tmp.write("corpus.txt", kCorpus);
    auto args = [&](const std::string& prefix) {
        return std::vector<std::string>{
            "compare", "--input", tmp.file("corpus.txt"), "--output", tmp.file(prefix),
            "--n-train", "6",      "--n-dev", "2",        "--seed",   "11",
            "--epochs", "10",      "--repetitions", "1"};
    };
    REQUIRE(run(args("a")).code == 0);
    REQUIRE(run(args("b")).code == 0);
    std::string kv = tmp.read("a.kv");
    CHECK(kv == tmp.read("b.kv"));
    // 3 backends x 2 strategies, all rows present.
    CHECK(std::count(kv.begin(), kv.end(), '\n') == 6);
    for (const char* needle :
         {"system=feature strategy=pipeline", "system=rdr strategy=pipeline",
          "system=lexicon strategy=pipeline", "system=feature strategy=joint",
          "system=rdr strategy=joint", "system=lexicon strategy=joint"}) {
        CHECK(kv.find(needle) != std::string::npos);
    }
    CHECK(fs::exists(tmp.file("a.txt")));
    CHECK(fs::exists(tmp.file("a.manifest.json")));
}
