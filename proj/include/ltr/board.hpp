#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltr {

// Cardinal travel directions. North is row-1, East is col+1.
enum class Direction : std::uint8_t { North, East, South, West };

Direction opposite(Direction d);
char direction_char(Direction d);  // tank glyph: ^ > v <

// A mirror is a right isosceles triangle filling half a cell; it is named by
// the corner holding the right angle.
enum class MirrorCorner : std::uint8_t { NW, NE, SE, SW };

enum class PieceKind : std::uint8_t { Empty, Solid, Movable, Mirror, Goal, Tank };

struct Cell {
    PieceKind kind = PieceKind::Empty;
    MirrorCorner corner = MirrorCorner::NW;  // valid iff kind == Mirror
    Direction facing = Direction::East;      // valid iff kind == Tank

    static Cell empty() { return {}; }
    static Cell solid() { return {PieceKind::Solid, MirrorCorner::NW, Direction::East}; }
    static Cell movable() { return {PieceKind::Movable, MirrorCorner::NW, Direction::East}; }
    static Cell mirror(MirrorCorner c) { return {PieceKind::Mirror, c, Direction::East}; }
    static Cell goal() { return {PieceKind::Goal, MirrorCorner::NW, Direction::East}; }
    static Cell tank(Direction f) { return {PieceKind::Tank, MirrorCorner::NW, f}; }

    bool operator==(const Cell& o) const {
        if (kind != o.kind) return false;
        if (kind == PieceKind::Mirror) return corner == o.corner;
        if (kind == PieceKind::Tank) return facing == o.facing;
        return true;
    }
    bool operator!=(const Cell& o) const { return !(*this == o); }
};

struct Coord {
    int row = 0;
    int col = 0;
    bool operator==(const Coord& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Coord& o) const { return !(*this == o); }
};

Coord step(Coord c, Direction d);

// Map a cell to its serialization character and back.
char cell_char(const Cell& c);
std::optional<Cell> cell_from_char(char ch);

struct ParseError : std::runtime_error {
    int line;  // 1-based
    int col;   // 1-based, 0 when the error is not tied to a column
    ParseError(std::string msg, int line_, int col_ = 0)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

class Board {
  public:
    Board() = default;
    Board(int width, int height);  // all cells Empty

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
    }
    const Cell& at(Coord c) const { return cells_[index(c)]; }
    Cell& at(Coord c) { return cells_[index(c)]; }

    // Position of the unique tank. Boards from parse_board always have one.
    Coord tank() const;

    bool operator==(const Board& o) const {
        return width_ == o.width_ && height_ == o.height_ && cells_ == o.cells_;
    }
    bool operator!=(const Board& o) const { return !(*this == o); }

  private:
    std::size_t index(Coord c) const {
        if (!in_bounds(c)) throw std::out_of_range("cell out of bounds");
        return static_cast<std::size_t>(c.row) * width_ + c.col;
    }
    int width_ = 0;
    int height_ = 0;
    std::vector<Cell> cells_;
};

struct Census {
    int solids = 0;
    int movables = 0;
    int mirrors = 0;
    int goals = 0;
    int tanks = 0;
    int tiles() const { return solids + movables + mirrors + goals + tanks; }
};

Census census(const Board& b);

// Text format: one line per row, one character per cell; lines starting with
// ';' are comments. All rows must be equally wide and exactly one tank must be
// present. Serialization ends every row, including the last, with '\n'.
Board parse_board(std::string_view text);
std::string serialize_board(const Board& b);

enum class Move : std::uint8_t { Up, Down, Left, Right, Fire };

char move_char(Move m);
std::optional<Move> move_from_char(char ch);

using MoveScript = std::vector<Move>;

// Move text: the characters UDLRF; whitespace is skipped, ';' comments run to
// end of line. Serialization is the bare characters with no separators.
MoveScript parse_moves(std::string_view text);
std::string serialize_moves(const MoveScript& s);

}  // namespace ltr
