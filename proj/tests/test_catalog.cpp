#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "ltsig/catalog.hpp"

using namespace ltsig;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string(std::tmpnam(nullptr)) + ".json";
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin catalog") {
    const auto& cat = builtin_catalog();
    REQUIRE(cat.size() == 6);
    CHECK(cat[0].name == "unknot");
    CHECK(cat[0].matrix.size() == 0);
    CHECK(find_knot(cat, "T(2,5)").matrix.size() == 4);
    CHECK(find_knot(cat, "T(3,5)").matrix.size() == 8);
    // alias resolution
    CHECK(find_knot(cat, "trefoil").name == "T(2,3)");
    try {
        find_knot(cat, "nosuch");
        FAIL("expected UnknownKnot");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::unknown_knot);
        CHECK(e.exit_code() == 2);
    }
}

TEST_CASE("parse catalog files") {
    auto one = parse_catalog_json(
        R"([{"name":"trefoil2","seifert_matrix":[[-1,1],[0,-1]]}])", "test");
    REQUIRE(one.size() == 1);
    CHECK(one[0].name == "trefoil2");
    CHECK(merge_with_builtins(one).size() == 7);

    CHECK(parse_catalog_json("[]", "test").empty());
    CHECK(merge_with_builtins({}).size() == 6);
}

TEST_CASE("catalog validation failures") {
    try {
        parse_catalog_json(R"([{"name":"odd","seifert_matrix":[[1]]}])", "test");
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::validation_error);
        CHECK(std::string(e.what()).find("odd") != std::string::npos);
        CHECK(std::string(e.what()).find("OddSize") != std::string::npos);
    }
    try {
        parse_catalog_json(R"([{"name":"bad","seifert_matrix":[[0,2],[0,0]]}])", "test");
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::validation_error);
        CHECK(std::string(e.what()).find("NotUnimodular") != std::string::npos);
    }
    try {
        parse_catalog_json("[{\"name\":\"x\"", "test");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::parse_error);
    }
    try {
        parse_catalog_json(R"([{"name":"x","seifert_matrix":[[0.5,1],[0,0]]}])", "test");
        FAIL("expected ParseError for non-integer entries");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::parse_error);
    }
}

TEST_CASE("duplicate names are rejected") {
    try {
        parse_catalog_json(
            R"([{"name":"a","seifert_matrix":[]},{"name":"a","seifert_matrix":[]}])", "test");
        FAIL("expected DuplicateName");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::duplicate_name);
    }
    // collision with a builtin name or alias
    for (const char* name : {"T(2,5)", "trefoil"}) {
        auto entries = parse_catalog_json(
            std::string(R"([{"name":")") + name + R"(","seifert_matrix":[]}])", "test");
        try {
            merge_with_builtins(entries);
            FAIL("expected DuplicateName for " << name);
        } catch (const Error& e) {
            CHECK(e.kind() == errc::duplicate_name);
        }
    }
}

TEST_CASE("emit and reload round-trips the builtin catalog") {
    std::string text = emit_catalog_json(builtin_catalog());
    auto reloaded = parse_catalog_json(text, "roundtrip");
    REQUIRE(reloaded.size() == builtin_catalog().size());
    for (std::size_t i = 0; i < reloaded.size(); ++i) {
        CHECK(reloaded[i].name == builtin_catalog()[i].name);
        CHECK(reloaded[i].matrix == builtin_catalog()[i].matrix);
    }
    // emission is deterministic
    CHECK(text == emit_catalog_json(builtin_catalog()));
}

TEST_CASE("load_catalog merges a file with the builtins") {
    TempFile f(R"([{"name":"figure-eightish","seifert_matrix":[[1,1],[0,-1]]}])");
    auto cat = load_catalog(f.path);
    CHECK(cat.size() == 7);
    CHECK(find_knot(cat, "figure-eightish").source == f.path);
    try {
        load_catalog("/nonexistent/path/catalog.json");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::io_error);
    }
}
