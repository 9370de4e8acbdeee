#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ltr/extract.hpp"
#include "ltr/reduce.hpp"
#include "ltr/solve.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

ltr::MovementMode parse_mode(const std::string& s) {
    if (s == "restricted") return ltr::MovementMode::Restricted;
    if (s == "full") return ltr::MovementMode::Full;
    throw CLI::ValidationError("--mode must be 'restricted' or 'full'");
}

std::size_t default_max_states() {
    if (const char* env = std::getenv("LTR_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "ignoring malformed LTR_MAX_STATES\n";
    }
    return 1'000'000;
}

int cmd_reduce(const std::string& cnf_path, const std::string& board_path,
               const std::string& map_path) {
    ltr::CnfFormula f = ltr::parse_dimacs(read_file(cnf_path));
    if (f.clauses.empty()) {
        std::cout << "trivially satisfiable; no board emitted\n";
        return 0;
    }
    ltr::Reduction red = ltr::compile(f);
    write_file(board_path, ltr::serialize_board(red.board));
    write_file(map_path, ltr::serialize_map(red.map));
    std::cout << "vars=" << red.stats.vars << " clauses=" << red.stats.clauses
              << " width=" << red.stats.width << " height=" << red.stats.height
              << " tiles=" << red.stats.tiles << " bound=" << red.stats.size_bound << "\n";
    return 0;
}

int cmd_verify(const std::string& board_path, const std::string& moves_path,
               ltr::MovementMode mode) {
    ltr::Board b = ltr::parse_board(read_file(board_path));
    ltr::MoveScript script = ltr::parse_moves(read_file(moves_path));
    ltr::VerifyReport rep = ltr::simulate(b, script, mode);
    long fires = 0;
    for (ltr::Move m : script)
        if (m == ltr::Move::Fire) ++fires;
    const long n = static_cast<long>(b.width()) * b.height();
    std::cout << "states=" << rep.states_visited << " cell_steps=" << rep.cell_steps
              << " ceiling=" << 4 * fires * n << "\n";
    if (rep.accepted) {
        std::cout << "accepted\n";
        return 0;
    }
    if (rep.failure)
        std::cout << "rejected at move " << rep.failure->move_index << ": "
                  << rep.failure->reason << "\n";
    else
        std::cout << "rejected: script ends without solving\n";
    return 1;
}

int cmd_solve(const std::string& board_path, std::size_t max_states, ltr::MovementMode mode,
              int jobs) {
    ltr::Board b = ltr::parse_board(read_file(board_path));
    ltr::SearchConfig cfg;
    cfg.max_states = max_states;
    cfg.mode = mode;
    cfg.jobs = jobs;
    ltr::SolveResult res = ltr::bfs_solve(b, cfg);
    switch (res.kind) {
        case ltr::SolveResult::Kind::Solved:
            std::cerr << "solved in " << res.script.size() << " moves; states explored "
                      << res.states_explored << "\n";
            std::cout << ltr::serialize_moves(res.script) << "\n";
            return 0;
        case ltr::SolveResult::Kind::Unsolvable:
            std::cerr << "unsolvable; swept " << res.states_explored << " states\n";
            return 1;
        case ltr::SolveResult::Kind::Exhausted:
            std::cerr << "search budget exhausted after " << res.states_explored << " states\n";
            return 3;
    }
    return 2;
}

int cmd_synth(const std::string& cnf_path, const std::string& map_path,
              const std::string& assignment_bits, bool search, const std::string& out_path) {
    ltr::CnfFormula f = ltr::parse_dimacs(read_file(cnf_path));
    ltr::ReductionMap map = ltr::parse_map(read_file(map_path));
    ltr::Assignment a;
    if (search) {
        ltr::SatResult sat = ltr::enumerate_sat(f, 1u << 20);
        if (sat.outcome == ltr::SatOutcome::Unsatisfiable) {
            std::cerr << "unsatisfiable\n";
            return 1;
        }
        if (sat.outcome == ltr::SatOutcome::Exhausted) {
            std::cerr << "assignment search budget exhausted\n";
            return 3;
        }
        a = *sat.assignment;
    } else {
        for (char ch : assignment_bits) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("--assignment must be a string of 0s and 1s");
            a.push_back(ch == '1');
        }
    }
    ltr::MoveScript script = ltr::synthesize(f, a, map);
    std::string text = ltr::serialize_moves(script) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    std::cerr << "synthesized " << script.size() << " moves\n";
    return 0;
}

int cmd_extract(const std::string& board_path, const std::string& map_path,
                const std::string& moves_path) {
    ltr::Board b = ltr::parse_board(read_file(board_path));
    ltr::ReductionMap map = ltr::parse_map(read_file(map_path));
    ltr::MoveScript script = ltr::parse_moves(read_file(moves_path));
    ltr::VerifyReport rep = ltr::simulate(b, script, ltr::MovementMode::Restricted);
    if (!rep.accepted) {
        if (rep.failure)
            std::cerr << "script rejected at move " << rep.failure->move_index << ": "
                      << rep.failure->reason << "\n";
        else
            std::cerr << "script rejected: it does not solve the board\n";
        return 1;
    }
    ltr::ExtractionReport report = ltr::extract(b, map, script);
    for (std::size_t v = 0; v < report.assignment.size(); ++v)
        std::cout << (v ? " " : "") << "v" << v + 1 << "=" << (report.assignment[v] ? 1 : 0);
    std::cout << " ;";
    bool any = false;
    for (std::size_t v = 0; v < report.decided.size(); ++v)
        if (report.decided[v]) {
            if (!any) std::cout << " decided";
            any = true;
            std::cout << " v" << v + 1;
        }
    if (!any) std::cout << " nothing decided";
    std::cout << "\n";
    return 0;
}

int cmd_render(const std::string& board_path, const std::string& moves_path,
               ltr::MovementMode mode) {
    ltr::Board b = ltr::parse_board(read_file(board_path));
    ltr::GameState s = ltr::GameState::initial(b);
    if (!moves_path.empty()) {
        ltr::MoveScript script = ltr::parse_moves(read_file(moves_path));
        ltr::VerifyReport rep = ltr::simulate(b, script, mode);
        if (rep.failure)
            std::cerr << "note: script rejected at move " << rep.failure->move_index << ": "
                      << rep.failure->reason << "\n";
        s = rep.final_state;
    }
    ltr::LaserTrace t = ltr::trace_beam(s.board, ltr::step(s.tank, s.facing), s.facing);
    std::string text = ltr::serialize_board(s.board);
    const int w = s.board.width();
    for (const ltr::LaserEvent& e : t.events) {
        const std::size_t pos = static_cast<std::size_t>(e.cell.row) * (w + 1) + e.cell.col;
        if (text[pos] == '.') text[pos] = '*';
    }
    std::cout << text;
    return 0;
}

int cmd_harden(const std::string& board_path, const std::string& map_path,
               const std::string& out_path) {
    ltr::Board b = ltr::parse_board(read_file(board_path));
    ltr::ReductionMap map = ltr::parse_map(read_file(map_path));
    ltr::Board h = ltr::harden(b, map);
    write_file(out_path, ltr::serialize_board(h));
    std::cout << "width=" << h.width() << " height=" << h.height() << "\n";
    return 0;
}

int cmd_gadget(const std::string& kind) {
    ltr::GadgetKind k;
    if (kind == "and")
        k = ltr::GadgetKind::And;
    else if (kind == "or")
        k = ltr::GadgetKind::Or;
    else if (kind == "literal")
        k = ltr::GadgetKind::Literal;
    else if (kind == "switch")
        k = ltr::GadgetKind::Switch;
    else
        throw std::invalid_argument("gadget kind must be and|or|literal|switch");
    std::cout << ltr::serialize_board(ltr::gadget_fixture(k));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laser-tank reduction toolkit"};
    app.require_subcommand(1);

    std::string cnf_path, board_path, map_path, moves_path, out_path;
    std::string mode_str = "restricted";
    std::string assignment_bits, gadget_kind;
    std::size_t max_states = default_max_states();
    int jobs = 1;
    bool search = false;

    auto* reduce = app.add_subcommand("reduce", "compile a formula into a board and map");
    reduce->add_option("cnf", cnf_path, "formula file")->required();
    reduce->add_option("board", board_path, "board output path")->required();
    reduce->add_option("map", map_path, "map output path")->required();

    auto* verify = app.add_subcommand("verify", "replay a move script against a board");
    verify->add_option("board", board_path)->required();
    verify->add_option("moves", moves_path)->required();
    verify->add_option("--mode", mode_str, "restricted|full");

    auto* solve = app.add_subcommand("solve", "search for a shortest solution");
    solve->add_option("board", board_path)->required();
    solve->add_option("--max-states", max_states, "visited-state budget");
    solve->add_option("--mode", mode_str, "restricted|full");
    solve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* synth = app.add_subcommand("synth", "build a solving script from an assignment");
    synth->add_option("cnf", cnf_path)->required();
    synth->add_option("map", map_path)->required();
    auto* bits = synth->add_option("--assignment", assignment_bits, "bit string, v1 first");
    synth->add_flag("--search", search, "enumerate assignments instead");
    synth->add_option("-o,--out", out_path, "write the script here instead of stdout");
    bits->excludes("--search");

    auto* extract = app.add_subcommand("extract", "read the assignment off a solving script");
    extract->add_option("board", board_path)->required();
    extract->add_option("map", map_path)->required();
    extract->add_option("moves", moves_path)->required();

    auto* render = app.add_subcommand("render", "print a board, optionally after a script");
    render->add_option("board", board_path)->required();
    render->add_option("moves", moves_path);
    render->add_option("--mode", mode_str, "restricted|full");

    auto* harden = app.add_subcommand("harden", "rebuild a compiled board for full movement");
    harden->add_option("board", board_path)->required();
    harden->add_option("map", map_path)->required();
    harden->add_option("out", out_path, "hardened board output path")->required();

    auto* gadget = app.add_subcommand("gadget", "print a gadget certification board");
    gadget->add_option("kind", gadget_kind, "and|or|literal|switch")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed()) return cmd_reduce(cnf_path, board_path, map_path);
        if (verify->parsed()) return cmd_verify(board_path, moves_path, parse_mode(mode_str));
        if (solve->parsed())
            return cmd_solve(board_path, max_states, parse_mode(mode_str), jobs);
        if (synth->parsed()) {
            if (!search && assignment_bits.empty())
                throw std::invalid_argument("synth needs --assignment or --search");
            return cmd_synth(cnf_path, map_path, assignment_bits, search, out_path);
        }
        if (extract->parsed()) return cmd_extract(board_path, map_path, moves_path);
        if (render->parsed()) return cmd_render(board_path, moves_path, parse_mode(mode_str));
        if (harden->parsed()) return cmd_harden(board_path, map_path, out_path);
        if (gadget->parsed()) return cmd_gadget(gadget_kind);
    } catch (const ltr::ParseError& e) {
        std::cerr << "parse error at line " << e.line;
        if (e.col > 0) std::cerr << ", col " << e.col;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
