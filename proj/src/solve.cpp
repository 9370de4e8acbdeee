#include "ltr/solve.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace ltr {

namespace {

// Per-cell code used in state keys: 0 empty, 1 solid, 2 movable, 3 goal,
// 4..7 mirror by corner. The tank is carried in the key header instead.
std::uint8_t code_of(const Cell& c) {
    switch (c.kind) {
        case PieceKind::Empty: return 0;
        case PieceKind::Solid: return 1;
        case PieceKind::Movable: return 2;
        case PieceKind::Goal: return 3;
        case PieceKind::Mirror: return static_cast<std::uint8_t>(4 + static_cast<int>(c.corner));
        case PieceKind::Tank: break;
    }
    throw std::logic_error("tank cell cannot be coded");
}

Cell cell_of(std::uint8_t code) {
    switch (code) {
        case 0: return Cell::empty();
        case 1: return Cell::solid();
        case 2: return Cell::movable();
        case 3: return Cell::goal();
        default:
            if (code <= 7) return Cell::mirror(static_cast<MirrorCorner>(code - 4));
    }
    throw std::logic_error("bad cell code");
}

using Diff = std::pair<std::uint16_t, std::uint8_t>;  // cell index, new code

// Key bytes: tank index (2), facing (1), then sorted (index lo, hi, code).
std::string make_key(std::uint16_t tank, Direction facing, const std::vector<Diff>& diffs) {
    std::string k;
    k.reserve(3 + 3 * diffs.size());
    k.push_back(static_cast<char>(tank & 0xff));
    k.push_back(static_cast<char>(tank >> 8));
    k.push_back(static_cast<char>(facing));
    for (const Diff& d : diffs) {
        k.push_back(static_cast<char>(d.first & 0xff));
        k.push_back(static_cast<char>(d.first >> 8));
        k.push_back(static_cast<char>(d.second));
    }
    return k;
}

struct DecodedKey {
    std::uint16_t tank = 0;
    Direction facing = Direction::East;
    std::vector<Diff> diffs;
};

DecodedKey decode_key(const std::string& k) {
    DecodedKey d;
    d.tank = static_cast<std::uint16_t>(static_cast<unsigned char>(k[0]) |
                                        (static_cast<unsigned char>(k[1]) << 8));
    d.facing = static_cast<Direction>(k[2]);
    for (std::size_t i = 3; i + 3 <= k.size(); i += 3)
        d.diffs.emplace_back(static_cast<std::uint16_t>(static_cast<unsigned char>(k[i]) |
                                                        (static_cast<unsigned char>(k[i + 1]) << 8)),
                             static_cast<std::uint8_t>(k[i + 2]));
    return d;
}

// Shared, read-only description of the search space.
struct Space {
    Board base;  // initial board with the tank cell blanked
    std::vector<std::uint8_t> base_code;
    int width = 0, height = 0;
    Coord start_tank;
    Direction start_facing = Direction::East;
    MovementMode mode = MovementMode::Restricted;

    Coord coord_of(std::uint16_t idx) const { return {idx / width, idx % width}; }
    std::uint16_t index_of(Coord c) const {
        return static_cast<std::uint16_t>(c.row * width + c.col);
    }
};

Space make_space(const Board& b, MovementMode mode) {
    if (static_cast<long>(b.width()) * b.height() > 0xffff)
        throw std::invalid_argument("board too large to search");
    Space sp;
    sp.base = b;
    sp.width = b.width();
    sp.height = b.height();
    sp.start_tank = b.tank();
    sp.start_facing = b.at(sp.start_tank).facing;
    sp.mode = mode;
    sp.base.at(sp.start_tank) = Cell::empty();
    sp.base_code.resize(static_cast<std::size_t>(sp.width) * sp.height);
    for (int r = 0; r < sp.height; ++r)
        for (int c = 0; c < sp.width; ++c)
            sp.base_code[sp.index_of({r, c})] = code_of(sp.base.at({r, c}));
    return sp;
}

// New diff list after one cell changes; entries equal to the base drop out.
void set_diff(std::vector<Diff>& diffs, std::uint16_t idx, std::uint8_t code,
              const std::vector<std::uint8_t>& base_code) {
    auto it = std::lower_bound(diffs.begin(), diffs.end(), idx,
                               [](const Diff& d, std::uint16_t i) { return d.first < i; });
    if (code == base_code[idx]) {
        if (it != diffs.end() && it->first == idx) diffs.erase(it);
    } else if (it != diffs.end() && it->first == idx) {
        it->second = code;
    } else {
        diffs.insert(it, {idx, code});
    }
}

// Scratch board kept at the base configuration between nodes.
struct Scratch {
    Board board;
    explicit Scratch(const Space& sp) : board(sp.base) {}

    void apply(const Space& sp, const DecodedKey& k) {
        for (const Diff& d : k.diffs) board.at(sp.coord_of(d.first)) = cell_of(d.second);
        board.at(sp.coord_of(k.tank)) = Cell::tank(k.facing);
    }
    void revert(const Space& sp, const DecodedKey& k) {
        board.at(sp.coord_of(k.tank)) = sp.base.at(sp.coord_of(k.tank));
        for (const Diff& d : k.diffs) board.at(sp.coord_of(d.first)) = sp.base.at(sp.coord_of(d.first));
    }
};

struct Rec {
    std::uint32_t parent;
    std::uint8_t move;  // Move enum value
    bool solved;
    std::string key;  // empty when solved
};

constexpr Move kMoveOrder[5] = {Move::Up, Move::Down, Move::Left, Move::Right, Move::Fire};

Direction move_direction(Move m) {
    switch (m) {
        case Move::Up: return Direction::North;
        case Move::Down: return Direction::South;
        case Move::Left: return Direction::West;
        case Move::Right: return Direction::East;
        default: throw std::logic_error("not a movement");
    }
}

// All successor records of one node, in move order.
void expand(const Space& sp, Scratch& scratch, std::uint32_t id, const std::string& key,
            std::vector<Rec>& out) {
    DecodedKey k = decode_key(key);
    scratch.apply(sp, k);
    const Coord tank = sp.coord_of(k.tank);
    for (Move m : kMoveOrder) {
        if (m != Move::Fire) {
            if (sp.mode == MovementMode::Restricted && (m == Move::Left || m == Move::Right))
                continue;
            const Direction dir = move_direction(m);
            const Coord dest = step(tank, dir);
            const bool open =
                scratch.board.in_bounds(dest) && scratch.board.at(dest).kind == PieceKind::Empty;
            Coord new_tank = tank;
            Direction new_facing = k.facing;
            if (open) {
                new_tank = dest;
                if (sp.mode == MovementMode::Full) new_facing = dir;
            } else if (sp.mode == MovementMode::Full) {
                new_facing = dir;  // bump turns in place
            } else {
                continue;
            }
            if (new_tank == tank && new_facing == k.facing) continue;
            out.push_back({id, static_cast<std::uint8_t>(m), false,
                           make_key(sp.index_of(new_tank), new_facing, k.diffs)});
        } else {
            LaserTrace t = trace_beam(scratch.board, step(tank, k.facing), k.facing);
            if (t.terminal == TraceTerminal::HitTank) continue;
            if (t.terminal == TraceTerminal::HitGoal) {
                out.push_back({id, static_cast<std::uint8_t>(m), true, {}});
                continue;
            }
            if (!t.push_from) continue;  // nothing changed
            std::vector<Diff> diffs = k.diffs;
            const std::uint16_t from = sp.index_of(*t.push_from);
            const std::uint16_t to = sp.index_of(*t.push_to);
            const std::uint8_t piece = code_of(scratch.board.at(*t.push_from));
            set_diff(diffs, from, 0, sp.base_code);
            set_diff(diffs, to, piece, sp.base_code);
            out.push_back({id, static_cast<std::uint8_t>(m), false,
                           make_key(k.tank, k.facing, diffs)});
        }
    }
    scratch.revert(sp, k);
}

struct Node {
    const std::string* key;
    std::uint32_t parent;
    std::uint32_t depth;
    std::uint8_t move;
};

struct BfsResult {
    SolveResult::Kind kind = SolveResult::Kind::Exhausted;
    MoveScript script;
    std::vector<std::uint32_t> admitted;  // node ids, BFS order (explore use)
    std::size_t states = 0;
};

MoveScript path_to(const std::vector<Node>& nodes, std::uint32_t id, Move last) {
    MoveScript s;
    for (std::uint32_t n = id; n != 0; n = nodes[n].parent)
        s.push_back(static_cast<Move>(nodes[n].move));
    std::reverse(s.begin(), s.end());
    s.push_back(last);
    return s;
}

// `seen` owns the key strings the nodes point into; callers keep it alive for
// as long as they dereference Node::key.
BfsResult bfs_core(const Space& sp, const SearchConfig& cfg, bool stop_at_goal,
                   std::vector<Node>& nodes,
                   std::unordered_map<std::string, std::uint32_t>& seen) {
    BfsResult res;
    seen.reserve(std::min<std::size_t>(cfg.max_states, 1u << 20));

    std::string start = make_key(sp.index_of(sp.start_tank), sp.start_facing, {});
    auto it = seen.emplace(std::move(start), 0).first;
    nodes.push_back({&it->first, 0, 0, 0});
    res.admitted.push_back(0);
    if (cfg.max_states == 0) {
        res.kind = SolveResult::Kind::Exhausted;
        res.states = seen.size();
        return res;
    }

    std::vector<std::uint32_t> frontier{0};
    bool suppressed = false;
    const int jobs = std::max(1, cfg.jobs);

    while (!frontier.empty()) {
        // Depth-limited nodes keep their place in `seen` but are not expanded.
        std::vector<std::uint32_t> expandable;
        expandable.reserve(frontier.size());
        for (std::uint32_t id : frontier) {
            if (cfg.max_depth && static_cast<int>(nodes[id].depth) >= *cfg.max_depth)
                suppressed = true;
            else
                expandable.push_back(id);
        }

        std::vector<std::vector<Rec>> chunk_out;
        const std::size_t n = expandable.size();
        const int workers = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(jobs), n == 0 ? 1 : n));
        chunk_out.resize(static_cast<std::size_t>(workers));
        if (workers <= 1) {
            Scratch scratch(sp);
            for (std::uint32_t id : expandable)
                expand(sp, scratch, id, *nodes[id].key, chunk_out[0]);
        } else {
            const std::size_t per = (n + workers - 1) / workers;
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) {
                const std::size_t lo = per * static_cast<std::size_t>(w);
                const std::size_t hi = std::min(n, lo + per);
                threads.emplace_back([&, w, lo, hi] {
                    Scratch scratch(sp);
                    for (std::size_t i = lo; i < hi; ++i)
                        expand(sp, scratch, expandable[i], *nodes[expandable[i]].key,
                               chunk_out[static_cast<std::size_t>(w)]);
                });
            }
            for (auto& t : threads) t.join();
        }

        std::vector<std::uint32_t> next;
        for (auto& chunk : chunk_out) {
            for (Rec& r : chunk) {
                if (r.solved) {
                    if (stop_at_goal) {
                        res.kind = SolveResult::Kind::Solved;
                        res.script = path_to(nodes, r.parent, static_cast<Move>(r.move));
                        res.states = seen.size();
                        return res;
                    }
                    continue;
                }
                if (seen.size() >= cfg.max_states) {
                    if (seen.find(r.key) != seen.end()) continue;  // duplicate, no budget needed
                    if (stop_at_goal) {
                        res.kind = SolveResult::Kind::Exhausted;
                        res.states = seen.size();
                        return res;
                    }
                    suppressed = true;
                    continue;
                }
                auto [pos, fresh] = seen.emplace(std::move(r.key), 0);
                if (!fresh) continue;
                const auto id = static_cast<std::uint32_t>(nodes.size());
                pos->second = id;
                nodes.push_back({&pos->first, r.parent, nodes[r.parent].depth + 1,
                                 static_cast<std::uint8_t>(r.move)});
                next.push_back(id);
                res.admitted.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    res.kind = suppressed ? SolveResult::Kind::Exhausted : SolveResult::Kind::Unsolvable;
    res.states = seen.size();
    return res;
}

}  // namespace

SolveResult bfs_solve(const Board& b, const SearchConfig& cfg) {
    Space sp = make_space(b, cfg.mode);
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::uint32_t> seen;
    BfsResult core = bfs_core(sp, cfg, true, nodes, seen);
    SolveResult out;
    out.kind = core.kind;
    out.script = std::move(core.script);
    out.states_explored = core.states;
    return out;
}

Exploration explore(const Board& b, const SearchConfig& cfg) {
    Space sp = make_space(b, cfg.mode);
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::uint32_t> seen;
    BfsResult core = bfs_core(sp, cfg, false, nodes, seen);
    Exploration out;
    out.complete = core.kind == SolveResult::Kind::Unsolvable;
    out.states.reserve(core.admitted.size());
    Scratch scratch(sp);
    for (std::uint32_t id : core.admitted) {
        DecodedKey k = decode_key(*nodes[id].key);
        scratch.apply(sp, k);
        GameState s;
        s.board = scratch.board;
        s.tank = sp.coord_of(k.tank);
        s.facing = k.facing;
        out.states.push_back(std::move(s));
        scratch.revert(sp, k);
    }
    return out;
}

MoveScript synthesize(const CnfFormula& f, const Assignment& a, const ReductionMap& map) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw std::invalid_argument("assignment size does not match variable count");
    if (map.vars.size() != static_cast<std::size_t>(f.num_vars) ||
        map.clauses.size() != f.clauses.size())
        throw std::invalid_argument("map does not match formula shape");
    if (!eval(f, a)) throw std::invalid_argument("assignment does not satisfy the formula");

    MoveScript s;
    int row = 1;  // compile() parks the tank on row 1
    auto fire_at = [&](int target) {
        for (; row < target; ++row) s.push_back(Move::Down);
        for (; row > target; --row) s.push_back(Move::Up);
        s.push_back(Move::Fire);
    };

    // Variables no clause mentions never need a commitment shot.
    std::vector<bool> used(static_cast<std::size_t>(f.num_vars), false);
    for (const Clause& cl : f.clauses)
        for (const Literal& lit : cl) used[static_cast<std::size_t>(lit.var) - 1] = true;
    for (int v = 1; v <= f.num_vars; ++v)
        if (used[static_cast<std::size_t>(v) - 1])
            fire_at(a[v - 1] ? map.vars[v - 1].nxin_row : map.vars[v - 1].xin_row);

    // Serve clauses right to left: each lane shot must stop at the clause
    // currently being served, and armed drops sit east of everything unserved.
    for (int j = static_cast<int>(f.clauses.size()) - 1; j >= 0; --j) {
        const Clause& cl = f.clauses[j];
        int p = 0;
        while (p < 3 && a[cl[p].var - 1] == cl[p].negated) ++p;
        if (p == 3) throw std::logic_error("satisfied clause has no true literal");
        const VarSites& vs = map.vars[cl[p].var - 1];
        fire_at(map.clauses[j].switch_rows[p]);
        fire_at(cl[p].negated ? vs.nxin_row : vs.xin_row);
        fire_at(map.clauses[j].tank_rows[p]);
    }
    fire_at(map.and_tank_row);
    return s;
}

}  // namespace ltr
