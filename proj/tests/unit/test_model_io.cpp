#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "mixspec/errors.hpp"
#include "mixspec/model_io.hpp"

using namespace fixtures;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* fig2_text = R"({
  "kind": "mixed-system",
  "version": 1,
  "body": {
    "variables": [{"name": "x", "domain": ["0", "1"], "observable": true}],
    "atoms": [
      {"id": "w1", "weight": "0.7", "row": [{"x": "0"}]},
      {"id": "w2", "weight": "3/10", "row": [{"x": "0"}, {"x": "1"}]}
    ]
  }
})";

} // namespace

TEST_CASE("parsing a mixed system") {
    ModelDocument doc = parse_model(fig2_text);
    CHECK(doc.kind == ModelKind::mixed_system);
    CHECK(std::get<MixedSystem>(doc.body) == s_fig2());
}

TEST_CASE("error classes") {
    std::string bad_weight = fig2_text;
    bad_weight.replace(bad_weight.find("0.7"), 3, "0.6");
    CHECK_THROWS_AS(parse_model(bad_weight), validation_error);

    try {
        parse_model("{\n  \"kind\": ");
        FAIL("expected a syntax error");
    } catch (const syntax_error& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse_model(R"({"kind": "teapot", "version": 1, "body": {}})"), schema_error);
    CHECK_THROWS_AS(parse_model(R"({"kind": "mixed-system", "version": 1, "body": {"atoms": []}})"), schema_error);

    std::string floaty = fig2_text;
    floaty.replace(floaty.find("\"0.7\""), 5, "0.7");
    CHECK_THROWS_AS(parse_model(floaty), schema_error);

    const char* twice = R"({"kind": "mmdp", "version": 1, "body": {
        "actions": ["a"], "variables": [{"name": "x", "domain": ["0"]}], "initial": {"x": "0"},
        "transitions": [
          {"source": {"x": "0"}, "action": "a", "target": {"atoms": [{"id": "w", "weight": "1", "row": [{"x": "0"}]}]}},
          {"source": {"x": "0"}, "action": "a", "target": {"atoms": [{"id": "w", "weight": "1", "row": [{"x": "0"}]}]}}
        ]}})";
    CHECK_THROWS_AS(parse_model(twice), validation_error);
}

TEST_CASE("round trips") {
    for (const auto& [name, doc] : golden_documents()) {
        CAPTURE(name);
        std::string text = serialize_model(doc);
        ModelDocument back = parse_model(text);
        CHECK(back.kind == doc.kind);
        CHECK(back.body == doc.body);
        CHECK(serialize_model(back) == text);
    }
}

TEST_CASE("golden files") {
    const std::string dir = MIXSPEC_FIXTURE_DIR;
    const bool regenerate = std::getenv("MIXSPEC_REGENERATE_FIXTURES") != nullptr;
    for (const auto& [name, doc] : golden_documents()) {
        CAPTURE(name);
        std::string path = dir + "/" + name;
        if (regenerate)
            save_model(doc, path);
        CHECK(read_file(path) == serialize_model(doc));
    }
}

TEST_CASE("traces and scripts") {
    RunTrace t = mmdp_run(m_fig(), 2, 0, Resolver::min(), Scheduler::first());
    std::string lines = serialize_trace(t);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
    CHECK(parse_state_script(R"([{"x": "1"}, {"x": "0"}])") == std::vector<State>{q1(), q0()});
    CHECK(parse_action_script(R"(["a", "b"])") == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(parse_action_script("[{}]"), schema_error);
    CHECK(parse_action_script("[1]") == std::vector<std::string>{"1"});
}
