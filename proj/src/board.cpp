#include "ltr/board.hpp"

namespace ltr {

Direction opposite(Direction d) {
    switch (d) {
        case Direction::North: return Direction::South;
        case Direction::East: return Direction::West;
        case Direction::South: return Direction::North;
        case Direction::West: return Direction::East;
    }
    throw std::logic_error("bad direction");
}

char direction_char(Direction d) {
    switch (d) {
        case Direction::North: return '^';
        case Direction::East: return '>';
        case Direction::South: return 'v';
        case Direction::West: return '<';
    }
    throw std::logic_error("bad direction");
}

Coord step(Coord c, Direction d) {
    switch (d) {
        case Direction::North: return {c.row - 1, c.col};
        case Direction::East: return {c.row, c.col + 1};
        case Direction::South: return {c.row + 1, c.col};
        case Direction::West: return {c.row, c.col - 1};
    }
    throw std::logic_error("bad direction");
}

char cell_char(const Cell& c) {
    switch (c.kind) {
        case PieceKind::Empty: return '.';
        case PieceKind::Solid: return '#';
        case PieceKind::Movable: return 'M';
        case PieceKind::Goal: return 'G';
        case PieceKind::Tank: return direction_char(c.facing);
        case PieceKind::Mirror:
            switch (c.corner) {
                case MirrorCorner::NW: return 'q';
                case MirrorCorner::NE: return 'e';
                case MirrorCorner::SE: return 'c';
                case MirrorCorner::SW: return 'z';
            }
    }
    throw std::logic_error("bad cell");
}

std::optional<Cell> cell_from_char(char ch) {
    switch (ch) {
        case '.': return Cell::empty();
        case '#': return Cell::solid();
        case 'M': return Cell::movable();
        case 'G': return Cell::goal();
        case 'q': return Cell::mirror(MirrorCorner::NW);
        case 'e': return Cell::mirror(MirrorCorner::NE);
        case 'c': return Cell::mirror(MirrorCorner::SE);
        case 'z': return Cell::mirror(MirrorCorner::SW);
        case '^': return Cell::tank(Direction::North);
        case '>': return Cell::tank(Direction::East);
        case 'v': return Cell::tank(Direction::South);
        case '<': return Cell::tank(Direction::West);
        default: return std::nullopt;
    }
}

Board::Board(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("board dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(width) * height, Cell::empty());
}

Coord Board::tank() const {
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (at({r, c}).kind == PieceKind::Tank) return {r, c};
    throw std::logic_error("board has no tank");
}

Census census(const Board& b) {
    Census n;
    for (int r = 0; r < b.height(); ++r)
        for (int c = 0; c < b.width(); ++c) switch (b.at({r, c}).kind) {
                case PieceKind::Empty: break;
                case PieceKind::Solid: ++n.solids; break;
                case PieceKind::Movable: ++n.movables; break;
                case PieceKind::Mirror: ++n.mirrors; break;
                case PieceKind::Goal: ++n.goals; break;
                case PieceKind::Tank: ++n.tanks; break;
            }
    return n;
}

Board parse_board(std::string_view text) {
    std::vector<std::string> rows;
    std::vector<int> row_lines;  // source line of each kept row, for errors
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        // Comment and blank lines carry no cells.
        if (!line.empty() && line.front() != ';') {
            rows.emplace_back(line);
            row_lines.push_back(line_no);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (rows.empty()) throw ParseError("board has no rows", line_no == 0 ? 1 : line_no);

    const std::size_t width = rows[0].size();
    Board b(static_cast<int>(width), static_cast<int>(rows.size()));
    int tanks = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width)
            throw ParseError("row width " + std::to_string(rows[r].size()) + " differs from " +
                                 std::to_string(width),
                             row_lines[r]);
        for (std::size_t c = 0; c < width; ++c) {
            auto cell = cell_from_char(rows[r][c]);
            if (!cell)
                throw ParseError(std::string("invalid board character '") + rows[r][c] + "'",
                                 row_lines[r], static_cast<int>(c) + 1);
            if (cell->kind == PieceKind::Tank) ++tanks;
            b.at({static_cast<int>(r), static_cast<int>(c)}) = *cell;
        }
    }
    if (tanks != 1)
        throw ParseError("board must contain exactly one tank, found " + std::to_string(tanks),
                         row_lines.back());
    return b;
}

std::string serialize_board(const Board& b) {
    std::string out;
    out.reserve(static_cast<std::size_t>(b.height()) * (b.width() + 1));
    for (int r = 0; r < b.height(); ++r) {
        for (int c = 0; c < b.width(); ++c) out += cell_char(b.at({r, c}));
        out += '\n';
    }
    return out;
}

char move_char(Move m) {
    switch (m) {
        case Move::Up: return 'U';
        case Move::Down: return 'D';
        case Move::Left: return 'L';
        case Move::Right: return 'R';
        case Move::Fire: return 'F';
    }
    throw std::logic_error("bad move");
}

std::optional<Move> move_from_char(char ch) {
    switch (ch) {
        case 'U': return Move::Up;
        case 'D': return Move::Down;
        case 'L': return Move::Left;
        case 'R': return Move::Right;
        case 'F': return Move::Fire;
        default: return std::nullopt;
    }
}

MoveScript parse_moves(std::string_view text) {
    MoveScript script;
    int line = 1, col = 0;
    bool in_comment = false;
    for (char ch : text) {
        ++col;
        if (ch == '\n') {
            ++line;
            col = 0;
            in_comment = false;
            continue;
        }
        if (in_comment) continue;
        if (ch == ';') {
            in_comment = true;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        auto m = move_from_char(ch);
        if (!m) throw ParseError(std::string("invalid move character '") + ch + "'", line, col);
        script.push_back(*m);
    }
    return script;
}

std::string serialize_moves(const MoveScript& s) {
    std::string out;
    out.reserve(s.size());
    for (Move m : s) out += move_char(m);
    return out;
}

}  // namespace ltr
