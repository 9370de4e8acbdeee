#include "ltr/reduce.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ltr {

namespace {

GadgetTemplate from_rows(std::vector<std::string> rows,
                         std::map<std::string, Coord> ports) {
    GadgetTemplate t;
    t.rows = std::move(rows);
    t.ports = std::move(ports);
    return t;
}

// Write a template onto a board; refuses to overwrite conflicting content so
// layout collisions surface immediately instead of corrupting a gadget.
void stamp(Board& b, Coord top_left, const std::vector<std::string>& rows) {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
            auto cell = cell_from_char(rows[r][c]);
            if (!cell) throw std::logic_error("bad template character");
            Coord at{top_left.row + r, top_left.col + c};
            Cell& dst = b.at(at);
            if (dst.kind != PieceKind::Empty && dst != *cell)
                throw std::logic_error("template collision at row " + std::to_string(at.row) +
                                       " col " + std::to_string(at.col));
            dst = *cell;
        }
}

void put(Board& b, Coord at, Cell cell) {
    Cell& dst = b.at(at);
    if (dst.kind != PieceKind::Empty && dst != cell)
        throw std::logic_error("cell collision at row " + std::to_string(at.row) + " col " +
                               std::to_string(at.col));
    dst = cell;
}

}  // namespace

GadgetTemplate build_literal_gadget() {
    return from_rows(
        {
            "######",
            ".e####",
            "#.#q..",
            ".M.c##",
            "#.####",
            "#z....",
            "######",
        },
        {
            {"xin", {1, 0}},
            {"nxin", {3, 0}},
            {"home", {3, 1}},
            {"east", {3, 2}},
            {"south", {4, 1}},
        });
}

GadgetTemplate build_or_gadget() {
    return from_rows(
        {
            "#.#.#.#",
            "#q#q#q#",
            "#......",
            ".....c#",
            "...c..#",
            ".c#####",
        },
        {
            {"in_a", {0, 1}},
            {"in_b", {0, 3}},
            {"in_c", {0, 5}},
            {"out", {2, 6}},
            {"check_a", {5, 0}},
            {"check_b", {4, 0}},
            {"check_c", {3, 0}},
        });
}

GadgetTemplate build_switch() {
    return from_rows(
        {
            "..",
            "#e",
            "..",
            "qc",
            "..",
        },
        {
            {"activate", {0, 1}},
            {"in", {2, 0}},
            {"out_east", {2, 1}},
            {"out_down", {4, 0}},
        });
}

GadgetTemplate build_and_gadget(int fan_in) {
    if (fan_in < 2) throw std::invalid_argument("collector needs at least two inputs");
    std::vector<std::string> rows;
    rows.push_back("####");
    rows.push_back("#q..");
    for (int i = 0; i < fan_in; ++i) {
        rows.push_back("#.##");
        rows.push_back(".M.#");
    }
    rows.push_back("#.##");
    rows.push_back(".c##");
    rows.push_back("####");
    std::map<std::string, Coord> ports;
    ports["out"] = {1, 3};
    ports["check"] = {2 * fan_in + 3, 0};
    // Input i enters on the i-th block row counted from the bottom.
    for (int i = 0; i < fan_in; ++i)
        ports["in_" + std::to_string(i)] = {2 * fan_in + 1 - 2 * i, 0};
    return from_rows(std::move(rows), std::move(ports));
}

Board gadget_fixture(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::And:
            return parse_board(
                "#####\n"
                ">#q..\n"
                ".#.##\n"
                "..M.#\n"
                ".#.##\n"
                "..M.#\n"
                ".#.##\n"
                "..c##\n"
                "#####\n");
        case GadgetKind::Or:
            return parse_board(
                "########\n"
                ">.....e#\n"
                "....e#..\n"
                "..e#....\n"
                ".#.#.#.#\n"
                ".#q#q#q#\n"
                ".#......\n"
                "......c#\n"
                "....c..#\n"
                "..c#####\n"
                "########\n");
        case GadgetKind::Literal:
            return parse_board(
                "#######\n"
                ">.e####\n"
                ".#.#q..\n"
                "..M.c##\n"
                ".#.####\n"
                ".#z....\n"
                "#######\n");
        case GadgetKind::Switch:
            return parse_board(
                "#####\n"
                ">..e#\n"
                ".....\n"
                "..#e.\n"
                ".....\n"
                "..qc.\n"
                ".....\n"
                "##.##\n");
    }
    throw std::logic_error("bad gadget kind");
}

Reduction compile(const CnfFormula& f) {
    if (f.clauses.empty()) throw std::invalid_argument("formula has no clauses");
    if (auto problems = validate_3sat(f); !problems.empty()) {
        std::string msg = "formula is not in strict three-literal form:";
        for (const std::string& p : problems) msg += " " + p + ";";
        throw std::invalid_argument(msg);
    }
    const int V = f.num_vars;
    const int C = static_cast<int>(f.clauses.size());
    const int W = 7 * C + 9;
    const int H = 6 * V + 6 * C + 8;
    const int ch = 7 * C + 7;            // collector column
    const int OB = 3 * C + 6 * V + 3;    // clause band top row
    const int TR = OB + 3 * C + 3;       // final check row
    auto s = [&](int j) { return 7 + 7 * j; };
    auto R = [&](int v) { return 3 * C + 1 + 6 * (v - 1); };  // stamp top row, v is 1-based

    Board b(W, H);
    for (int c = 0; c < W; ++c) {
        b.at({0, c}) = Cell::solid();
        b.at({H - 1, c}) = Cell::solid();
    }
    b.at({1, 0}) = Cell::tank(Direction::East);

    Reduction red;
    red.map.tank_col = 0;
    red.map.mode = MovementMode::Restricted;

    const GadgetTemplate lit = build_literal_gadget();
    for (int v = 1; v <= V; ++v) {
        stamp(b, {R(v), 1}, lit.rows);
        VarSites sites;
        sites.home = {R(v) + 3, 2};
        sites.east = {R(v) + 3, 3};
        sites.south = {R(v) + 4, 2};
        sites.xin_row = R(v) + 1;
        sites.nxin_row = R(v) + 3;
        red.map.vars.push_back(sites);
    }

    const GadgetTemplate or_gadget = build_or_gadget();
    const GadgetTemplate sw = build_switch();
    for (int j = 0; j < C; ++j) {
        const Clause& cl = f.clauses[j];
        stamp(b, {OB + 3 * j, s(j)}, or_gadget.rows);

        // Positions sorted by lane row: the topmost lane takes the westmost
        // drop column so every armed crossing lands on its own clause input.
        std::array<int, 3> pass{};
        for (int p = 0; p < 3; ++p)
            pass[p] = cl[p].negated ? R(cl[p].var) + 2 : R(cl[p].var) + 5;
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](int a, int b2) { return pass[a] < pass[b2]; });

        ClauseSites sites;
        sites.or_anchor = {OB + 3 * j, s(j)};
        for (int slot = 0; slot < 3; ++slot) {
            const int p = order[slot];
            const int sc = s(j) + 2 * slot + 1;
            stamp(b, {pass[p] - 2, sc}, sw.rows);
            const int turner = 3 * C - 3 * j - slot;
            put(b, {turner, sc + 1}, Cell::mirror(MirrorCorner::NE));
            put(b, {turner, sc + 2}, Cell::solid());
            sites.switch_rows[p] = turner;
            sites.tank_rows[p] = OB + 3 * j + 5 - slot;
        }
        red.map.clauses.push_back(sites);
    }

    put(b, {OB - 1, ch}, Cell::solid());
    put(b, {OB - 1, ch + 1}, Cell::solid());
    put(b, {OB, ch}, Cell::mirror(MirrorCorner::NW));
    put(b, {OB, ch + 1}, Cell::goal());
    for (int r = OB + 1; r < TR; ++r) {
        if ((r - OB - 2) % 3 == 0 && (r - OB - 2) / 3 < C)
            put(b, {r, ch}, Cell::movable());
        else
            put(b, {r, ch + 1}, Cell::solid());
    }
    put(b, {TR, ch}, Cell::mirror(MirrorCorner::SE));
    put(b, {TR, ch + 1}, Cell::solid());

    red.map.and_anchor = {OB, ch};
    red.map.and_tank_row = TR;
    red.map.goal = {OB, ch + 1};

    red.stats.vars = V;
    red.stats.clauses = C;
    red.stats.width = W;
    red.stats.height = H;
    red.stats.tiles = census(b).tiles();
    red.stats.size_bound = (7L * V + 9L * C + 4) * (7L * C + 9);
    red.board = std::move(b);
    self_check(red.board, red.map);
    return red;
}

std::string serialize_map(const ReductionMap& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
        const VarSites& v = m.vars[i];
        out << "var " << i + 1 << " home " << v.home.row << ' ' << v.home.col << " east "
            << v.east.row << ' ' << v.east.col << " south " << v.south.row << ' ' << v.south.col
            << " xin " << v.xin_row << " nxin " << v.nxin_row << '\n';
    }
    for (std::size_t j = 0; j < m.clauses.size(); ++j) {
        const ClauseSites& c = m.clauses[j];
        out << "clause " << j + 1 << " or " << c.or_anchor.row << ' ' << c.or_anchor.col
            << " tankrows " << c.tank_rows[0] << ' ' << c.tank_rows[1] << ' ' << c.tank_rows[2]
            << " switchrows " << c.switch_rows[0] << ' ' << c.switch_rows[1] << ' '
            << c.switch_rows[2] << '\n';
    }
    out << "and " << m.and_anchor.row << ' ' << m.and_anchor.col << " tankrow " << m.and_tank_row
        << '\n';
    out << "goal " << m.goal.row << ' ' << m.goal.col << '\n';
    out << "tankcol " << m.tank_col << '\n';
    out << "mode " << (m.mode == MovementMode::Restricted ? "restricted" : "full") << '\n';
    return out.str();
}

namespace {

struct MapLine {
    std::vector<std::string> words;
    int line;
};

int expect_int(const MapLine& l, std::size_t i) {
    if (i >= l.words.size()) throw ParseError("record ends early", l.line);
    int value = 0;
    const std::string& w = l.words[i];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size())
        throw ParseError("expected integer, got '" + w + "'", l.line);
    return value;
}

void expect_word(const MapLine& l, std::size_t i, const char* word) {
    if (i >= l.words.size() || l.words[i] != word)
        throw ParseError(std::string("expected '") + word + "'", l.line);
}

}  // namespace

ReductionMap parse_map(std::string_view text) {
    std::vector<MapLine> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (auto sc = raw.find(';'); sc != std::string_view::npos) raw = raw.substr(0, sc);
        MapLine l{{}, line_no};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) l.words.emplace_back(raw.substr(start, i - start));
        }
        if (!l.words.empty()) lines.push_back(std::move(l));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    ReductionMap m;
    std::vector<std::pair<int, VarSites>> vars;
    std::vector<std::pair<int, ClauseSites>> clauses;
    bool have_and = false, have_goal = false, have_tankcol = false, have_mode = false;
    for (const MapLine& l : lines) {
        const std::string& kind = l.words[0];
        if (kind == "var") {
            VarSites v;
            int idx = expect_int(l, 1);
            expect_word(l, 2, "home");
            v.home = {expect_int(l, 3), expect_int(l, 4)};
            expect_word(l, 5, "east");
            v.east = {expect_int(l, 6), expect_int(l, 7)};
            expect_word(l, 8, "south");
            v.south = {expect_int(l, 9), expect_int(l, 10)};
            expect_word(l, 11, "xin");
            v.xin_row = expect_int(l, 12);
            expect_word(l, 13, "nxin");
            v.nxin_row = expect_int(l, 14);
            if (l.words.size() != 15) throw ParseError("trailing words on var record", l.line);
            vars.emplace_back(idx, v);
        } else if (kind == "clause") {
            ClauseSites c;
            int idx = expect_int(l, 1);
            expect_word(l, 2, "or");
            c.or_anchor = {expect_int(l, 3), expect_int(l, 4)};
            expect_word(l, 5, "tankrows");
            for (int p = 0; p < 3; ++p) c.tank_rows[p] = expect_int(l, 6 + p);
            expect_word(l, 9, "switchrows");
            for (int p = 0; p < 3; ++p) c.switch_rows[p] = expect_int(l, 10 + p);
            if (l.words.size() != 13) throw ParseError("trailing words on clause record", l.line);
            clauses.emplace_back(idx, c);
        } else if (kind == "and") {
            if (have_and) throw ParseError("duplicate and record", l.line);
            m.and_anchor = {expect_int(l, 1), expect_int(l, 2)};
            expect_word(l, 3, "tankrow");
            m.and_tank_row = expect_int(l, 4);
            if (l.words.size() != 5) throw ParseError("trailing words on and record", l.line);
            have_and = true;
        } else if (kind == "goal") {
            if (have_goal) throw ParseError("duplicate goal record", l.line);
            m.goal = {expect_int(l, 1), expect_int(l, 2)};
            if (l.words.size() != 3) throw ParseError("trailing words on goal record", l.line);
            have_goal = true;
        } else if (kind == "tankcol") {
            if (have_tankcol) throw ParseError("duplicate tankcol record", l.line);
            m.tank_col = expect_int(l, 1);
            if (l.words.size() != 2) throw ParseError("trailing words on tankcol record", l.line);
            have_tankcol = true;
        } else if (kind == "mode") {
            if (have_mode) throw ParseError("duplicate mode record", l.line);
            if (l.words.size() != 2) throw ParseError("mode needs one word", l.line);
            if (l.words[1] == "restricted")
                m.mode = MovementMode::Restricted;
            else if (l.words[1] == "full")
                m.mode = MovementMode::Full;
            else
                throw ParseError("unknown mode '" + l.words[1] + "'", l.line);
            have_mode = true;
        } else {
            throw ParseError("unknown record '" + kind + "'", l.line);
        }
    }
    if (!have_and || !have_goal || !have_tankcol || !have_mode)
        throw ParseError("map is missing a required record", line_no == 0 ? 1 : line_no);

    auto densify = [&](auto& pairs, auto& out, const char* what) {
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].first != static_cast<int>(i) + 1)
                throw ParseError(std::string(what) + " indices must be 1..n without gaps", 1);
            out.push_back(pairs[i].second);
        }
    };
    densify(vars, m.vars, "var");
    densify(clauses, m.clauses, "clause");
    return m;
}

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("map does not match board: " + what);
}

bool is_mirror(const Board& b, Coord c, MirrorCorner k) {
    return b.in_bounds(c) && b.at(c) == Cell::mirror(k);
}

}  // namespace

void self_check(const Board& b, const ReductionMap& m) {
    check(!m.vars.empty(), "no variables");
    check(!m.clauses.empty(), "no clauses");
    check(m.mode == MovementMode::Restricted, "mode must be restricted");
    check(b.in_bounds({1, m.tank_col}) && b.at({1, m.tank_col}) == Cell::tank(Direction::East),
          "tank must start on row 1 of the tank column facing east");
    for (int c = 0; c < b.width(); ++c) {
        check(b.at({0, c}).kind == PieceKind::Solid, "top border");
        check(b.at({b.height() - 1, c}).kind == PieceKind::Solid, "bottom border");
    }
    for (int r = 1; r < b.height() - 1; ++r) {
        PieceKind k = b.at({r, m.tank_col}).kind;
        check(k == PieceKind::Empty || k == PieceKind::Tank, "tank column must be open");
    }
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
        const VarSites& v = m.vars[i];
        const std::string tag = "variable " + std::to_string(i + 1);
        check(v.east == step(v.home, Direction::East), tag + " east site adjacency");
        check(v.south == step(v.home, Direction::South), tag + " south site adjacency");
        check(v.nxin_row == v.home.row && v.xin_row == v.home.row - 2, tag + " firing rows");
        check(b.in_bounds(v.home) && b.in_bounds(v.east) && b.in_bounds(v.south),
              tag + " sites in bounds");
        check(b.at(v.home).kind == PieceKind::Movable, tag + " commitment block at home");
        check(b.at(v.east).kind == PieceKind::Empty, tag + " east site empty");
        check(b.at(v.south).kind == PieceKind::Empty, tag + " south site empty");
        check(is_mirror(b, {v.xin_row, v.home.col}, MirrorCorner::NE), tag + " drop reflector");
        check(is_mirror(b, {v.home.row, v.home.col + 2}, MirrorCorner::SE),
              tag + " false-lane turn");
        check(is_mirror(b, {v.home.row - 1, v.home.col + 2}, MirrorCorner::NW),
              tag + " false-lane exit turn");
        check(is_mirror(b, {v.home.row + 2, v.home.col}, MirrorCorner::SW),
              tag + " true-lane turn");
    }
    const int C = static_cast<int>(m.clauses.size());
    for (int j = 0; j < C; ++j) {
        const ClauseSites& c = m.clauses[j];
        const std::string tag = "clause " + std::to_string(j + 1);
        const Coord a = c.or_anchor;
        check(b.in_bounds(a) && b.in_bounds({a.row + 5, a.col + 7}) &&
                  b.in_bounds({a.row + 2, m.and_anchor.col}),
              tag + " in bounds");
        for (int slot = 0; slot < 3; ++slot)
            check(is_mirror(b, {a.row + 1, a.col + 1 + 2 * slot}, MirrorCorner::NW),
                  tag + " input mirrors");
        check(is_mirror(b, {a.row + 3, a.col + 5}, MirrorCorner::SE), tag + " lane turn");
        check(is_mirror(b, {a.row + 4, a.col + 3}, MirrorCorner::SE), tag + " lane turn");
        check(is_mirror(b, {a.row + 5, a.col + 1}, MirrorCorner::SE), tag + " lane turn");
        check(b.at({a.row + 2, m.and_anchor.col}).kind == PieceKind::Movable,
              tag + " collector block");
        bool used[3] = {false, false, false};
        for (int p = 0; p < 3; ++p) {
            const int slot = a.row + 5 - c.tank_rows[p];
            check(slot >= 0 && slot < 3, tag + " check rows");
            check(!used[slot], tag + " check rows distinct");
            used[slot] = true;
            const int sc = a.col + 2 * slot + 1;
            check(is_mirror(b, {c.switch_rows[p], sc + 1}, MirrorCorner::NE),
                  tag + " arming reflector");
            check(b.at({c.switch_rows[p], sc + 2}).kind == PieceKind::Solid,
                  tag + " arming reflector cap");
            // The switch sits somewhere below its arming reflector: first
            // non-empty cell down the column is its droppable mirror.
            int r = c.switch_rows[p] + 1;
            while (r < b.height() && b.at({r, sc + 1}).kind == PieceKind::Empty) ++r;
            check(is_mirror(b, {r, sc + 1}, MirrorCorner::NE), tag + " switch mirror");
            check(b.at({r, sc}).kind == PieceKind::Solid, tag + " switch wall");
            check(is_mirror(b, {r + 2, sc}, MirrorCorner::NW), tag + " switch drop turn");
            check(is_mirror(b, {r + 2, sc + 1}, MirrorCorner::SE), tag + " switch drop turn");
        }
    }
    check(is_mirror(b, m.and_anchor, MirrorCorner::NW), "collector reflector");
    check(m.goal == step(m.and_anchor, Direction::East), "goal beside collector reflector");
    check(b.in_bounds(m.goal) && b.at(m.goal).kind == PieceKind::Goal, "goal cell");
    check(is_mirror(b, {m.and_tank_row, m.and_anchor.col}, MirrorCorner::SE),
          "final check reflector");
    Census n = census(b);
    check(n.goals == 1, "exactly one goal");
    check(n.tanks == 1, "exactly one tank");
    check(n.movables == static_cast<int>(m.vars.size()) + C, "movable block count");
}

Board replace_movables(const Board& b, const ReductionMap& m) {
    self_check(b, m);
    Board out = b;
    for (const VarSites& v : m.vars) out.at(v.home) = Cell::mirror(MirrorCorner::NW);
    for (const ClauseSites& c : m.clauses)
        out.at({c.or_anchor.row + 2, m.and_anchor.col}) = Cell::mirror(MirrorCorner::NW);
    return out;
}

Board harden(const Board& b, const ReductionMap& m) {
    self_check(b, m);
    const int H = b.height(), W = b.width();
    Board out(W + 2, 2 * H - 1);
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            const Cell& cell = b.at({r, c});
            if (cell.kind != PieceKind::Empty) out.at({2 * r, c == 0 ? 0 : c + 2}) = cell;
        }
    for (int c = 0; c < W + 2; ++c) {
        out.at({0, c}) = Cell::solid();
        out.at({2 * H - 2, c}) = Cell::solid();
    }
    // Two-column fence: eastward shots on even rows loop through it and come
    // back out on their row; everything else bounces or jams harmlessly.
    for (int y = 1; y <= 2 * H - 3; ++y) {
        if (y % 2 == 0) {
            out.at({y, 1}) = Cell::mirror(MirrorCorner::NE);
            out.at({y, 2}) = Cell::mirror(MirrorCorner::NW);
        } else {
            out.at({y, 1}) = Cell::mirror(MirrorCorner::SW);
            out.at({y, 2}) = Cell::mirror(MirrorCorner::SE);
        }
    }
    return out;
}

MoveScript harden_script(const Board& hardened, const MoveScript& restricted) {
    MoveScript lifted;
    for (Move m : restricted) {
        switch (m) {
            case Move::Up:
            case Move::Down:
                lifted.push_back(m);
                lifted.push_back(m);
                break;
            case Move::Fire:
                lifted.push_back(Move::Right);  // bump the fence to face east
                lifted.push_back(Move::Fire);
                lifted.push_back(Move::Fire);
                break;
            default:
                throw std::invalid_argument("script is not a restricted-mode script");
        }
    }
    GameState s = GameState::initial(hardened);
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        StepResult r = apply_move(s, lifted[i], MovementMode::Full);
        if (!r.ok() || s.failed)
            throw std::invalid_argument("lifted script fails on the hardened board at move " +
                                        std::to_string(i));
        if (s.solved) {
            lifted.resize(i + 1);
            return lifted;
        }
    }
    throw std::invalid_argument("lifted script does not solve the hardened board");
}

}  // namespace ltr
