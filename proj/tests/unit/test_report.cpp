#include <doctest.h>

#include <nlohmann/json.hpp>

#include "enriques/report.hpp"

using namespace enriques;

TEST_CASE("report payloads are byte-deterministic") {
    const auto& rec = *find_bundled_case("56");
    const auto v1 = verify_case(rec);
    const auto v2 = verify_case(rec);
    CHECK(build_report({v1}).dump() == build_report({v2}).dump());
}

TEST_CASE("report round trip keeps the verdict data") {
    const auto v = verify_case(*find_bundled_case("56"));
    const auto j = verdict_to_json(v);
    CHECK(j.at("case_id") == "56-0");
    CHECK(j.at("computed").at("a") == "6/7");
    CHECK(j.at("computed").at("index") == 7);
    CHECK(j.at("admissible").size() == 4);
    CHECK(j.at("agreement").at("sets") == true);
    const auto reparsed = nlohmann::json::parse(j.dump());
    CHECK(reparsed == j);
}

TEST_CASE("timing stays outside the payload") {
    const auto v = verify_case(*find_bundled_case("56"));
    const auto payload = build_report({v});
    const auto wrapped = wrap_report(payload, 42);
    CHECK(wrapped.at("payload") == payload);
    CHECK(wrapped.at("timing").at("total_ms") == 42);
    CHECK_FALSE(payload.dump().find("total_ms") != std::string::npos);
}

TEST_CASE("dot rendering") {
    const auto& rec = *find_bundled_case("6-2");
    const auto dot = render_dot(rec.figure, rec.id);
    CHECK(dot.find("graph \"6-2-ell\"") != std::string::npos);
    // exactly one box (the C curve)
    std::size_t boxes = 0, pos = 0;
    while ((pos = dot.find("shape=box", pos)) != std::string::npos) {
        ++boxes;
        pos += 9;
    }
    CHECK(boxes == 1);
    CHECK(dot.find("shape=doublecircle") != std::string::npos);
    CHECK(dot.back() == '\n');
}

TEST_CASE("ascii rendering lists the candidates") {
    const auto& rec = *find_bundled_case("56");
    const auto text = render_ascii(rec.figure);
    std::size_t candidates = 0, pos = 0;
    while ((pos = text.find("candidate #", pos)) != std::string::npos) {
        ++candidates;
        pos += 11;
    }
    CHECK(candidates == 3);
}
