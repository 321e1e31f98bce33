#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "chromkit/io.hpp"
#include "chromkit/rrg.hpp"

using namespace chromkit;

TEST_CASE("empty graph serializes to the minimal document") {
    CHECK(serialize_graph(LabeledMultigraph()) == R"({"num_vertices":0,"edges":[]})");
}

TEST_CASE("sampled graphs round-trip byte for byte") {
    const auto g = sample_labeled_union({50, 3, 2, 99});
    const auto text = serialize_graph(g);
    const auto back = graph_from_json(parse_json(text));
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
}

TEST_CASE("parallel edges and labels survive the round trip") {
    LabeledMultigraph g(3, {{0, 1, 4}, {1, 0, 4}, {1, 2, 0}});
    const auto back = graph_from_json(graph_to_json(g));
    CHECK(back.num_edges() == 3);
    CHECK(back == g);
}

TEST_CASE("malformed input is rejected with a location") {
    try {
        (void)parse_json("{\n  \"num_vertices\": 3,\n  \"edges\": [[0, 1, 0],,]\n}", "g.json");
        FAIL("no exception");
    } catch (const FormatError& e) {
        const std::string what = e.what();
        CHECK(what.find("g.json:3:") != std::string::npos);
    }
}

TEST_CASE("self-loops and bad fields are rejected") {
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"num_vertices":2,"edges":[[1,1,0]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"num_vertices":2,"edges":[[0,2,0]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"num_vertices":2,"edges":[[0,1]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"num_vertices":-1,"edges":[]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"edges":[]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"([1,2])")), FormatError);
}

TEST_CASE("unknown keys are ignored") {
    const auto g = graph_from_json(parse_json(R"({"num_vertices":2,"edges":[[0,1,0]],"extra":{"x":1}})"));
    CHECK(g.num_edges() == 1);
}

TEST_CASE("files are written with a trailing newline and read back") {
    const auto dir = std::filesystem::temp_directory_path() / "chromkit_io_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "nested" / "g.json";
    const auto g = cycle_graph(5);
    write_graph(path, g);
    CHECK(read_graph(path) == g);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == serialize_graph(g) + "\n");
    CHECK_THROWS_AS(read_graph(dir / "missing.json"), FormatError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("integer arrays") {
    CHECK(uint_array_from_json(parse_json("[0, 2, 1]"), "c") == std::vector<std::uint32_t>{0, 2, 1});
    CHECK_THROWS_AS(uint_array_from_json(parse_json("[0, -1]"), "c"), FormatError);
    CHECK_THROWS_AS(uint_array_from_json(parse_json("{}"), "c"), FormatError);
}
