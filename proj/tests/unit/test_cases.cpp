#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "enriques/cases.hpp"
#include "enriques/classify.hpp"

using namespace enriques;
using nlohmann::json;

namespace {

json first_bundled_json() {
    return case_to_json(bundled_cases().front());
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("enriques_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string write_json(const TempDir& dir, const std::string& name, const json& j) {
    const auto p = (dir.path / name).string();
    std::ofstream out(p);
    out << j.dump(2);
    return p;
}

} // namespace

TEST_CASE("the bundled library holds the 13 cases in classification order") {
    const auto& cases = bundled_cases();
    REQUIRE(cases.size() == 13);
    CHECK(cases.front().id == "6-2-ell");
    const auto& table = case_table();
    REQUIRE(table.size() == 13);
    for (std::size_t i = 0; i < 13; ++i) CHECK(cases[i].id == table[i].id);
}

TEST_CASE("every bundled case passes self-validation with zero failures") {
    for (const auto& rec : bundled_cases()) {
        const auto report = validate_case(rec);
        for (const auto& f : report.failures) FAIL_CHECK(f);
        CHECK(report.ok());
    }
}

TEST_CASE("serialization round trip") {
    for (const auto& rec : bundled_cases()) {
        const json once = case_to_json(rec);
        const CaseRecord back = parse_case(once, rec.id);
        CHECK(case_to_json(back).dump() == once.dump());
    }
}

TEST_CASE("loader rejects malformed files") {
    TempDir dir;
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_case((dir.path / "nope.json").string()), Error);
    }
    SUBCASE("broken json") {
        const auto p = (dir.path / "bad.json").string();
        std::ofstream(p) << "{ not json";
        CHECK_THROWS_AS(load_case(p), Error);
    }
    SUBCASE("duplicate vertex id names the id") {
        json j = first_bundled_json();
        j["vertices"].push_back(j["vertices"][1]);
        try {
            parse_case(j, "dup");
            FAIL("expected Error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find(
                      j["vertices"][1]["id"].get<std::string>()) != std::string::npos);
        }
    }
    SUBCASE("edge to unknown vertex") {
        json j = first_bundled_json();
        j["edges"].push_back(json::array({"c", "ghost"}));
        CHECK_THROWS_AS(parse_case(j, "ghost"), Error);
    }
    SUBCASE("unknown top-level field") {
        json j = first_bundled_json();
        j["surprise"] = 1;
        CHECK_THROWS_AS(parse_case(j, "extra"), Error);
    }
    SUBCASE("unknown vertex field") {
        json j = first_bundled_json();
        j["vertices"][0]["color"] = "red";
        CHECK_THROWS_AS(parse_case(j, "extra"), Error);
    }
    SUBCASE("wrong schema version") {
        json j = first_bundled_json();
        j["schema"] = 2;
        CHECK_THROWS_AS(parse_case(j, "schema"), Error);
    }
}

TEST_CASE("list_cases") {
    SUBCASE("bundled data directory") {
        const auto ids = list_cases(ENRIQUES_DATA_DIR);
        REQUIRE(ids.size() == 13);
        CHECK(ids.front() == "6-2-ell");
        CHECK(ids.back() == "56-0");
    }
    SUBCASE("empty directory") {
        TempDir dir;
        CHECK(list_cases(dir.path.string()).empty());
    }
    SUBCASE("single file") {
        TempDir dir;
        write_json(dir, "only.json", first_bundled_json());
        const auto ids = list_cases(dir.path.string());
        REQUIRE(ids.size() == 1);
        CHECK(ids.front() == "6-2-ell");
    }
    SUBCASE("not a directory") {
        CHECK_THROWS_AS(list_cases("/nonexistent-dir-zzz"), Error);
    }
}

TEST_CASE("case lookup by id or stem") {
    CHECK(find_bundled_case("6-2-ell") != nullptr);
    CHECK(find_bundled_case("6-2")->id == "6-2-ell");
    CHECK(find_bundled_case("56")->id == "56-0");
    CHECK(find_bundled_case("56-0")->id == "56-0");
    CHECK(find_bundled_case("zzz") == nullptr);
}

TEST_CASE("self-validation pinpoints transcription slips") {
    SUBCASE("mistyped weight breaks the solution") {
        CaseRecord rec = *find_bundled_case("6-2");
        rec.figure.vertex_mut(rec.figure.require("a3")).weight = -2;  // was -3
        const auto report = validate_case(rec);
        CHECK_FALSE(report.ok());
    }
    SUBCASE("wrong pool tag is caught by the structural cross-check") {
        CaseRecord rec = *find_bundled_case("6-2");
        rec.figure.vertex_mut(rec.figure.require("k4")).pool = PoolTag::T1;
        const auto report = validate_case(rec);
        CHECK_FALSE(report.ok());
    }
    SUBCASE("wrong expected value is caught") {
        CaseRecord rec = *find_bundled_case("6-2");
        rec.expected.a = Rational(5, 7);
        const auto report = validate_case(rec);
        CHECK_FALSE(report.ok());
    }
    SUBCASE("missing edge makes the system inconsistent or wrong") {
        json j = first_bundled_json();
        json kept = json::array();
        for (const auto& e : j["edges"])
            if (!(e[0] == "n1" && e[1] == "n2") && !(e[0] == "n2" && e[1] == "n1"))
                kept.push_back(e);
        j["edges"] = kept;
        const CaseRecord rec = parse_case(j, "cut");
        const auto report = validate_case(rec);
        CHECK_FALSE(report.ok());
    }
}

TEST_CASE("graph files load bare or as full cases") {
    TempDir dir;
    const auto full = write_json(dir, "full.json", first_bundled_json());
    CHECK(load_graph_file(full).curve_c().has_value());

    json bare;
    bare["vertices"] = json::array();
    bare["vertices"].push_back({{"id", "e"}, {"kind", "exceptional"}, {"weight", -3}});
    bare["edges"] = json::array();
    const auto barep = write_json(dir, "bare.json", bare);
    const auto g = load_graph_file(barep);
    CHECK(g.size() == 1);
    CHECK(g.vertex(0).weight == -3);
}
