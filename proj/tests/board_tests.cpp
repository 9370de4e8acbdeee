#include <string>

#include "doctest.h"
#include "ltr/board.hpp"
#include "support.hpp"

using namespace ltr;

TEST_CASE("board text round-trips byte for byte") {
    const std::string text =
        "#####\n"
        ">q..e\n"
        "..M.G\n"
        "..c..\n"
        "#####\n";
    Board b = parse_board(text);
    CHECK(b.width() == 5);
    CHECK(b.height() == 5);
    CHECK(serialize_board(b) == text);
    CHECK(b.tank() == Coord{1, 0});
    CHECK(b.at({1, 0}).facing == Direction::East);
    CHECK(b.at({1, 1}) == Cell::mirror(MirrorCorner::NW));
    CHECK(b.at({1, 4}) == Cell::mirror(MirrorCorner::NE));
    CHECK(b.at({3, 2}) == Cell::mirror(MirrorCorner::SE));
    CHECK(b.at({2, 2}) == Cell::movable());
    CHECK(b.at({2, 4}) == Cell::goal());
}

TEST_CASE("comments and blank lines are skipped") {
    Board plain = parse_board(">.G\n");
    Board noisy = parse_board("; a comment\n\n>.G\n\n; trailing\n");
    CHECK(plain == noisy);
}

TEST_CASE("serialization ends every row with a newline") {
    Board b = parse_board(">.\n..\n");
    std::string s = serialize_board(b);
    REQUIRE(!s.empty());
    CHECK(s.back() == '\n');
    int newlines = 0;
    for (char c : s)
        if (c == '\n') ++newlines;
    CHECK(newlines == b.height());
}

TEST_CASE("tank glyphs carry facing") {
    CHECK(parse_board("^.\n").at({0, 0}).facing == Direction::North);
    CHECK(parse_board(">.\n").at({0, 0}).facing == Direction::East);
    CHECK(parse_board("v.\n").at({0, 0}).facing == Direction::South);
    CHECK(parse_board("<.\n").at({0, 0}).facing == Direction::West);
}

TEST_CASE("cell characters round-trip") {
    const std::string alphabet = "#.MGqecz^>v<";
    for (char ch : alphabet) {
        auto cell = cell_from_char(ch);
        REQUIRE(cell.has_value());
        CHECK(cell_char(*cell) == ch);
    }
    CHECK(!cell_from_char('x').has_value());
    CHECK(!cell_from_char(' ').has_value());
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("ragged rows") {
        try {
            parse_board(">..\n..\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("unknown character") {
        try {
            parse_board(">..\n.x.\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.col == 2);
        }
    }
    SUBCASE("two tanks") { CHECK_THROWS_AS(parse_board(">.>\n"), ParseError); }
    SUBCASE("no tank") { CHECK_THROWS_AS(parse_board("...\n"), ParseError); }
    SUBCASE("empty input") { CHECK_THROWS_AS(parse_board("; only a comment\n"), ParseError); }
}

TEST_CASE("census counts every piece kind") {
    Board b = parse_board(ltr_test::slurp(ltr_test::data_path("example1.board")));
    Census c = census(b);
    CHECK(c.solids == 10);
    CHECK(c.movables == 1);
    CHECK(c.mirrors == 3);
    CHECK(c.goals == 1);
    CHECK(c.tanks == 1);
    CHECK(c.tiles() == 16);
}

TEST_CASE("the mid-size data board parses") {
    Board b = parse_board(ltr_test::slurp(ltr_test::data_path("blockade.board")));
    CHECK(b.width() == 11);
    CHECK(b.height() == 13);
    CHECK(b.tank() == Coord{1, 0});
    CHECK(census(b).movables == 2);
    CHECK(census(b).goals == 1);
}

TEST_CASE("move scripts parse with whitespace and comments") {
    MoveScript s = parse_moves("F D F D F ; the tutorial script\n");
    REQUIRE(s.size() == 5);
    CHECK(s[0] == Move::Fire);
    CHECK(s[1] == Move::Down);
    CHECK(serialize_moves(s) == "FDFDF");

    MoveScript all = parse_moves("UDLRF");
    CHECK(serialize_moves(all) == "UDLRF");

    CHECK(parse_moves("; nothing\n").empty());
}

TEST_CASE("move script parse errors carry positions") {
    try {
        parse_moves("FD\nFX\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 2);
    }
}

TEST_CASE("move characters round-trip") {
    for (char ch : std::string("UDLRF")) {
        auto m = move_from_char(ch);
        REQUIRE(m.has_value());
        CHECK(move_char(*m) == ch);
    }
    CHECK(!move_from_char('Q').has_value());
}
