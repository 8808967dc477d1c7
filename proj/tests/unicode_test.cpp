#include <catch2/catch_amalgamated.hpp>

#include "segtag/unicode.hpp"

using namespace segtag;

namespace {
#include "nfc_fixtures.inc"
}

TEST_CASE("utf8 round trip") {
    std::string s = "thuế_thu_nhập cá nhân Đồng 123 .?!";
    CHECK(encode_utf8(decode_utf8(s)) == s);
}

TEST_CASE("utf8 rejects malformed input") {
    CHECK_THROWS_AS(decode_utf8("\x80"), ParseError);          // lone continuation
    CHECK_THROWS_AS(decode_utf8("\xC3"), ParseError);          // truncated
    CHECK_THROWS_AS(decode_utf8("\xC0\xAF"), ParseError);      // overlong
    CHECK_THROWS_AS(decode_utf8("\xED\xA0\x80"), ParseError);  // surrogate
    CHECK_THROWS_AS(decode_utf8("\xF5\x80\x80\x80"), ParseError);
}

TEST_CASE("nfc matches reference fixtures") {
    for (const auto& fixture : kNfcFixtures) {
        CAPTURE(fixture[0]);
        CHECK(nfc(fixture[0]) == fixture[1]);
    }
}

TEST_CASE("nfc is idempotent on fixtures") {
    for (const auto& fixture : kNfcFixtures) CHECK(nfc(fixture[1]) == fixture[1]);
}

TEST_CASE("nfc leaves ascii untouched") {
    CHECK(nfc("hello world_x/y") == "hello world_x/y");
    CHECK(nfc("") == "");
}

TEST_CASE("code point helpers") {
    std::string s = "tiến";  // 4 code points
    CHECK(code_point_count(s) == 4);
    CHECK(cp_prefix(s, 2) == "ti");
    CHECK(cp_prefix(s, 99) == s);
    CHECK(cp_suffix(s, 1) == "n");
    CHECK(cp_suffix(s, 3) == "iến");
    CHECK(cp_suffix(s, 99) == s);
}
