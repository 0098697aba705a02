#include "hyperpath/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperpath/connectivity.hpp"
#include "hyperpath/enumerate.hpp"
#include "hyperpath/generators.hpp"
#include "hyperpath/io.hpp"
#include "hyperpath/oracles.hpp"
#include "hyperpath/reductions.hpp"

namespace hyperpath {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::vector<std::string> split_commas(const std::string& joined) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream stream(joined);
    while (std::getline(stream, piece, ','))
        if (!piece.empty()) out.push_back(piece);
    return out;
}

std::vector<ArcId> parse_arc_list(const std::string& joined) {
    std::vector<ArcId> out;
    for (const std::string& piece : split_commas(joined)) {
        try {
            std::size_t used = 0;
            int id = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(id);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--arcs", "'" + piece + "' is not an arc id");
        }
    }
    return out;
}

template <class T>
void print_sets(std::ostream& out, const std::vector<std::vector<T>>& family) {
    for (const auto& set : family) {
        bool first = true;
        for (const auto& x : set) {
            if (!first) out << ' ';
            out << x;
            first = false;
        }
        out << '\n';
    }
}

void require_real_path(const std::string& path, const char* what) {
    if (path == "-") throw CLI::ValidationError(what, "needs a real file path, not '-'");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write file: " + path);
    file << content;
    if (!file) throw Error("write failed: " + path);
}

std::string verdict_line(const PathCheck& pc) {
    switch (pc.verdict) {
        case PathVerdict::Valid:
            return "valid";
        case PathVerdict::NotLayerable: {
            std::string line = "invalid: no firing order; unplaced arcs:";
            for (ArcId id : pc.unplaced) line += ' ' + std::to_string(id);
            return line;
        }
        case PathVerdict::HeadCountViolation:
            return "invalid: vertex '" + *pc.vertex + "' heads the wrong number of arcs";
        case PathVerdict::UncoveredVertex:
            return "invalid: vertex '" + *pc.vertex + "' feeds no arc";
        case PathVerdict::TargetNotCovered:
            return "invalid: target '" + *pc.vertex + "' is never produced";
    }
    return "invalid";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"directed hypergraph toolkit"};
    app.name("hyperpath");
    app.require_subcommand(1);

    // enumerate
    std::string en_sources, en_targets, en_file;
    std::uint64_t en_limit = 0;
    bool en_stats = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream every S-T hyperpath");
    enumerate->add_option("--source", en_sources, "source vertices, comma separated")->required();
    enumerate->add_option("--target", en_targets, "target vertices, comma separated")->required();
    enumerate->add_option("--limit", en_limit, "stop after this many solutions (0: no limit)");
    enumerate->add_flag("--stats", en_stats, "run statistics on standard error");
    enumerate->add_option("file", en_file, "hypergraph file, or - for standard input")->required();
    enumerate->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(en_file, in));
        std::uint64_t printed = 0;
        HyperpathSink sink = [&](const std::vector<ArcId>& ids) {
            bool first = true;
            for (ArcId id : ids) {
                if (!first) out << ' ';
                out << id;
                first = false;
            }
            out << '\n';
            ++printed;
            return en_limit == 0 || printed < en_limit;
        };
        EnumerationStats stats =
            enum_hyperpaths(d, split_commas(en_sources), split_commas(en_targets), sink);
        if (en_stats) {
            err << "solutions_emitted=" << stats.solutions_emitted << '\n'
                << "recursion_nodes=" << stats.recursion_nodes << '\n'
                << "max_depth=" << stats.max_depth << '\n'
                << "connectivity_checks=" << stats.connectivity_checks << '\n'
                << "max_checks_between_outputs=" << stats.max_checks_between_outputs << '\n';
        }
    });

    // connect
    std::string co_sources, co_file;
    CLI::App* connect = app.add_subcommand("connect", "print the B-connected set");
    connect->add_option("--source", co_sources, "source vertices, comma separated")->required();
    connect->add_option("file", co_file, "hypergraph file, or - for standard input")->required();
    connect->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(co_file, in));
        std::vector<VertexId> reached = b_connected_set(d, split_commas(co_sources));
        std::sort(reached.begin(), reached.end());
        for (const VertexId& v : reached) out << v << '\n';
    });

    // check
    std::string ch_sources, ch_targets, ch_arcs, ch_file;
    CLI::App* check = app.add_subcommand("check", "verify an arc set as an S-T hyperpath");
    check->add_option("--source", ch_sources, "source vertices, comma separated")->required();
    check->add_option("--target", ch_targets, "target vertices, comma separated")->required();
    check->add_option("--arcs", ch_arcs, "arc ids, comma separated");
    check->add_option("file", ch_file, "hypergraph file, or - for standard input")->required();
    check->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(ch_file, in));
        PathCheck pc = check_hyperpath(d, split_commas(ch_sources), split_commas(ch_targets),
                                       parse_arc_list(ch_arcs));
        out << verdict_line(pc) << '\n';
    });

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->require_subcommand(1);

    std::string oh_sources, oh_targets, oh_file;
    int oh_cap = 20;
    CLI::App* oracle_paths = oracle->add_subcommand("hyperpaths", "every S-T hyperpath");
    oracle_paths->add_option("--source", oh_sources, "source vertices, comma separated")->required();
    oracle_paths->add_option("--target", oh_targets, "target vertices, comma separated")->required();
    oracle_paths->add_option("--cap", oh_cap, "subset scan cap");
    oracle_paths->add_option("file", oh_file, "hypergraph file, or - for standard input")->required();
    oracle_paths->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(oh_file, in));
        print_sets(out, oracle_hyperpaths(d, split_commas(oh_sources), split_commas(oh_targets),
                                          oh_cap));
    });

    std::string oi_source, oi_target, oi_file;
    int oi_cap = 20;
    CLI::App* oracle_induced = oracle->add_subcommand("induced", "every minimal induced s-t hyperpath");
    oracle_induced->add_option("--source", oi_source, "source vertex")->required();
    oracle_induced->add_option("--target", oi_target, "target vertex")->required();
    oracle_induced->add_option("--cap", oi_cap, "subset scan cap");
    oracle_induced->add_option("file", oi_file, "hypergraph file, or - for standard input")->required();
    oracle_induced->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(oi_file, in));
        print_sets(out, oracle_induced_hyperpaths(d, oi_source, oi_target, oi_cap));
    });

    std::string os_source, os_target, os_file;
    int os_cap = 20;
    CLI::App* oracle_seps = oracle->add_subcommand("separators", "every minimal s-t separator");
    oracle_seps->add_option("--source", os_source, "source vertex")->required();
    oracle_seps->add_option("--target", os_target, "target vertex")->required();
    oracle_seps->add_option("--cap", os_cap, "subset scan cap");
    oracle_seps->add_option("file", os_file, "hypergraph file, or - for standard input")->required();
    oracle_seps->callback([&] {
        DirectedHypergraph d = parse_dhg(slurp(os_file, in));
        print_sets(out, oracle_minimal_separators(d, os_source, os_target, os_cap));
    });

    std::string ot_file;
    int ot_cap = 20;
    CLI::App* oracle_trans = oracle->add_subcommand("transversals", "every minimal transversal");
    oracle_trans->add_option("--cap", ot_cap, "subset scan cap");
    oracle_trans->add_option("file", ot_file, "hypergraph file, or - for standard input")->required();
    oracle_trans->callback([&] {
        UndirectedHypergraph h = parse_hg(slurp(ot_file, in));
        print_sets(out, oracle_minimal_transversals(h, ot_cap));
    });

    // reduce
    CLI::App* reduce = app.add_subcommand("reduce", "emit reduction instances");
    reduce->require_subcommand(1);

    std::string ri_in, ri_out;
    bool ri_bounded = false;
    CLI::App* reduce_induced = reduce->add_subcommand("sat-induced", "3-CNF to induced-path instance");
    reduce_induced->add_flag("--bounded-tail", ri_bounded, "keep every tail at size two or less");
    reduce_induced->add_option("input", ri_in, "CNF file, or - for standard input")->required();
    reduce_induced->add_option("output", ri_out, "instance file to write")->required();
    reduce_induced->callback([&] {
        require_real_path(ri_out, "output");
        SatInducedInstance inst = reduce_sat_induced(parse_cnf(slurp(ri_in, in)), ri_bounded);
        write_file(ri_out, serialize_dhg(inst.graph));
        write_file(ri_out + ".meta", metadata_text(inst));
    });

    std::string rs_in, rs_out;
    bool rs_bounded = false;
    CLI::App* reduce_sep = reduce->add_subcommand("sat-separator", "3-CNF to separator instance");
    reduce_sep->add_flag("--bounded-tail", rs_bounded, "keep every tail at size two or less");
    reduce_sep->add_option("input", rs_in, "CNF file, or - for standard input")->required();
    reduce_sep->add_option("output", rs_out, "instance file to write")->required();
    reduce_sep->callback([&] {
        require_real_path(rs_out, "output");
        SatSeparatorInstance inst = reduce_sat_separator(parse_cnf(slurp(rs_in, in)), rs_bounded);
        write_file(rs_out, serialize_dhg(inst.graph));
        write_file(rs_out + ".meta", metadata_text(inst));
    });

    std::string rt_in, rt_out;
    CLI::App* reduce_trans = reduce->add_subcommand("transversal", "hypergraph to hyperpath instance");
    reduce_trans->add_option("input", rt_in, "hypergraph file, or - for standard input")->required();
    reduce_trans->add_option("output", rt_out, "instance file to write")->required();
    reduce_trans->callback([&] {
        require_real_path(rt_out, "output");
        TransversalMapping map = reduce_transversal(parse_hg(slurp(rt_in, in)));
        write_file(rt_out, serialize_dhg(map.graph));
        write_file(rt_out + ".meta", metadata_text(map));
    });

    // transversals
    std::string tr_file;
    int tr_cap = 20;
    CLI::App* transversals = app.add_subcommand(
        "transversals", "minimal transversals through the hyperpath reduction");
    transversals->add_option("--cap", tr_cap, "subset scan cap");
    transversals->add_option("file", tr_file, "hypergraph file, or - for standard input")->required();
    transversals->callback([&] {
        TransversalMapping map = reduce_transversal(parse_hg(slurp(tr_file, in)));
        std::vector<std::vector<ArcId>> paths =
            oracle_hyperpaths(map.graph, {map.source}, {map.target}, tr_cap);
        std::vector<std::vector<VertexId>> family;
        family.reserve(paths.size());
        for (const auto& p : paths) family.push_back(transversal_from_hyperpath(map, p));
        std::sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        print_sets(out, family);
    });

    // bench
    std::string be_family;
    int be_size = 0;
    std::uint32_t be_seed = 0;
    std::uint64_t be_limit = 0;
    CLI::App* bench = app.add_subcommand("bench", "instrumented enumeration over instance families");
    bench->add_option("--family", be_family, "diamond, layered, or random")
        ->required()
        ->check(CLI::IsMember({"diamond", "layered", "random"}));
    bench->add_option("--size", be_size, "instance size")->required()->check(CLI::PositiveNumber);
    bench->add_option("--seed", be_seed, "seed for the random family");
    bench->add_option("--limit", be_limit, "stop after this many solutions (0: no limit)");
    bench->callback([&] {
        TwoTerminalInstance inst = be_family == "diamond"  ? make_diamond_chain(be_size)
                                   : be_family == "layered" ? make_layered_chain(be_size)
                                                             : make_random_two_terminal(be_size, be_seed);
        out << "solution_index,checks_since_last,depth\n";
        std::uint64_t printed = 0;
        InstrumentedSink sink = [&](const std::vector<ArcId>&, const EmissionInfo& info) {
            out << info.index << ',' << info.checks_since_last << ',' << info.depth << '\n';
            ++printed;
            return be_limit == 0 || printed < be_limit;
        };
        enum_hyperpaths(inst.graph, {inst.source}, {inst.target}, sink);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace hyperpath
