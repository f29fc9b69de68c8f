#include <doctest.h>

#include <random>

#include "fuglab/builtin_data.hpp"
#include "fuglab/setfile.hpp"

using namespace fuglab;

TEST_CASE("json round trip") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        GroupPtr g = trial % 2 ? Group::make({24}) : Group::make({4, 3, 2});
        std::vector<Idx> pts;
        std::size_t size = 1 + rng() % 6;
        for (std::size_t i = 0; i < size; ++i) pts.push_back(static_cast<Idx>(rng() % g->order()));
        PointSet s(g, pts);
        PointSet back = parse_point_set(point_set_to_json_text(s), "<memory>");
        CHECK(back == s);
    }
}

TEST_CASE("matrix text format uses columns as elements") {
    std::string text =
        "0 2 4 1 5 6\n"
        "0 6 3 4 2 7\n"
        "0 6 7 2 4 3\n";
    PointSet parsed = parse_point_set(text, "<memory>", std::vector<Coord>{24, 24, 24});
    CHECK(parsed == builtin::tile_t1());

    // Comments and blank lines are tolerated.
    std::string with_comments = "# tile\n0 3\n\n";
    PointSet row = parse_point_set(with_comments, "<memory>", std::vector<Coord>{6});
    CHECK(row.indices() == std::vector<Idx>{0, 3});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_point_set("", "f.json"), SetFileError);

    try {
        parse_point_set("{\"moduli\": [6], \"points\": [[0],\n  [oops]]}", "f.json");
        FAIL("expected parse error");
    } catch (const SetFileError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("f.json:2:") == 0);
    }

    try {
        parse_point_set("0 3\n1 x\n", "m.txt", std::vector<Coord>{6, 6});
        FAIL("expected parse error");
    } catch (const SetFileError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 3);
    }

    // Matrix format without moduli is a usage error that says so.
    try {
        parse_point_set("0 3\n", "m.txt");
        FAIL("expected parse error");
    } catch (const SetFileError& e) {
        CHECK(std::string(e.what()).find("moduli") != std::string::npos);
    }

    // Row length mismatch.
    CHECK_THROWS_AS(parse_point_set("0 1 2\n0 1\n", "m.txt", std::vector<Coord>{6, 6}),
                    SetFileError);
    // Dimension mismatch against the moduli.
    CHECK_THROWS_AS(parse_point_set("0 1 2\n", "m.txt", std::vector<Coord>{6, 6}), SetFileError);
}

TEST_CASE("file io") {
    GroupPtr g = Group::make({6});
    PointSet s(g, {0, 2, 4});
    std::string path = "test_setfile_roundtrip.json";
    write_point_set(path, s);
    CHECK(read_point_set(path) == s);
    CHECK_THROWS_AS(read_point_set("does_not_exist.json"), SetFileError);
    std::remove(path.c_str());
}
