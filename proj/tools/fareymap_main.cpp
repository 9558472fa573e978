// fareymap: command-line interface to the level-n Farey map library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fareymap/fareymap.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource_cap = 3;

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fareymap::format_error("cannot open output file '" + path + "'");
    out << payload;
}

std::pair<std::string, std::string> split_pair(const std::string& text, char sep,
                                               const std::string& what) {
    const auto pos = text.find(sep);
    if (pos == std::string::npos)
        throw fareymap::format_error("expected " + what + ", got '" + text + "'");
    return {text.substr(0, pos), text.substr(pos + 1)};
}

} // namespace

int main(int argc, char** argv) {
    using namespace fareymap;

    CLI::App app{"level-n Farey maps: statistics, stars, distances, Petrie polygons, exports"};
    app.require_subcommand(1);

    std::int64_t n_arg = 0;
    std::string fraction_arg, second_fraction_arg, start_arg, format_arg = "dot", output_arg;
    std::int64_t range_hi = -1;
    render_spec spec;
    std::string viewport_arg = "0:1";

    auto* stats_cmd = app.add_subcommand("stats", "dart/edge/face/vertex counts and genus");
    stats_cmd->add_option("n", n_arg, "level")->required();

    auto* vertices_cmd = app.add_subcommand("vertices", "list the canonical vertices");
    vertices_cmd->add_option("n", n_arg, "level")->required();

    auto* star_cmd = app.add_subcommand("star", "cyclic neighbour list of a vertex");
    star_cmd->add_option("n", n_arg, "level")->required();
    star_cmd->add_option("vertex", fraction_arg, "vertex as a/c")->required();

    auto* distance_cmd = app.add_subcommand("distance", "BFS distance between two vertices");
    distance_cmd->add_option("n", n_arg, "level")->required();
    distance_cmd->add_option("u", fraction_arg, "first vertex as a/c")->required();
    distance_cmd->add_option("v", second_fraction_arg, "second vertex as b/d")->required();

    auto* diameter_cmd = app.add_subcommand("diameter", "maximum pairwise distance");
    diameter_cmd->add_option("n", n_arg, "level")->required();

    auto* petrie_cmd = app.add_subcommand("petrie", "Petrie polygon through a dart");
    petrie_cmd->add_option("n", n_arg, "level")->required();
    petrie_cmd->add_option("--start", start_arg, "start dart as a/c,b/d (default 1/0,0/1)");

    auto* poles_cmd = app.add_subcommand("poles", "list the poles a/0");
    poles_cmd->add_option("n", n_arg, "level")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "disjoint star decomposition (odd prime)");
    decompose_cmd->add_option("p", n_arg, "odd prime level")->required();

    auto* export_cmd = app.add_subcommand("export", "serialize the underlying graph");
    export_cmd->add_option("n", n_arg, "level")->required();
    export_cmd->add_option("--format", format_arg, "dot|graphml|json|csv")->required();
    export_cmd->add_option("-o,--output", output_arg, "output file (default stdout)");

    auto* render_cmd = app.add_subcommand("render", "SVG of the universal Farey tessellation");
    render_cmd->add_option("--max-den", spec.max_denominator, "largest denominator drawn")->required();
    render_cmd->add_option("--viewport", viewport_arg, "real interval X0:X1 (default 0:1)");
    render_cmd->add_option("--width", spec.width, "image width in pixels");
    render_cmd->add_option("--height", spec.height, "image height in pixels");
    render_cmd->add_option("-o,--output", output_arg, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run all checks for a range of levels");
    verify_cmd->add_option("n", n_arg, "first level")->required();
    verify_cmd->add_option("m", range_hi, "last level (default: first)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (stats_cmd->parsed()) {
            const auto st = statistics(level(n_arg));
            std::cout << "level    " << n_arg << "\n"
                      << "darts    " << st.darts << "\n"
                      << "edges    " << st.edges << "\n"
                      << "faces    " << st.faces << "\n"
                      << "vertices " << st.vertices << "\n"
                      << "valency  " << st.valency << "\n"
                      << "genus    " << st.genus << "\n";
        } else if (vertices_cmd->parsed()) {
            for (const auto& v : enumerate_vertices(level(n_arg))) std::cout << v.str() << "\n";
        } else if (star_cmd->parsed()) {
            const level n(n_arg);
            const auto v = farey_fraction::parse(fraction_arg, n);
            std::string sep;
            for (const auto& w : star(v)) {
                std::cout << sep << w.str();
                sep = " ";
            }
            std::cout << "\n";
        } else if (distance_cmd->parsed()) {
            const level n(n_arg);
            const auto u = farey_fraction::parse(fraction_arg, n);
            const auto v = farey_fraction::parse(second_fraction_arg, n);
            std::cout << bfs_distance(n, u, v) << "\n";
        } else if (diameter_cmd->parsed()) {
            std::cout << diameter(level(n_arg)) << "\n";
        } else if (petrie_cmd->parsed()) {
            const level n(n_arg);
            const auto m = build_map(n);
            combinatorial_map::dart_id start = m.base_dart();
            if (!start_arg.empty()) {
                const auto [u_text, v_text] = split_pair(start_arg, ',', "a dart as a/c,b/d");
                start = m.find_dart(farey_fraction::parse(u_text, n),
                                    farey_fraction::parse(v_text, n));
            }
            const auto path = petrie_path_from(m, start);
            std::cout << "length " << path.length << "\n";
            std::string sep;
            for (const auto& v : path.vertices) {
                std::cout << sep << v.str();
                sep = " ";
            }
            std::cout << "\n";
        } else if (poles_cmd->parsed()) {
            for (const auto& p : poles(level(n_arg)).poles) std::cout << p.str() << "\n";
        } else if (decompose_cmd->parsed()) {
            for (const auto& [pole, neighbors] : star_decomposition(level(n_arg))) {
                std::cout << pole.str() << ":";
                for (const auto& w : neighbors) std::cout << " " << w.str();
                std::cout << "\n";
            }
        } else if (export_cmd->parsed()) {
            write_output(export_graph(level(n_arg), parse_export_format(format_arg)), output_arg);
        } else if (render_cmd->parsed()) {
            const auto [lo_text, hi_text] = split_pair(viewport_arg, ':', "a viewport as X0:X1");
            spec.x_min = std::stod(lo_text);
            spec.x_max = std::stod(hi_text);
            write_output(render_universal_farey(spec), output_arg);
        } else if (verify_cmd->parsed()) {
            const std::int64_t hi = range_hi < 0 ? n_arg : range_hi;
            const auto report = run_verification(n_arg, hi);
            print_report(report, std::cout);
            return report.all_passed() ? exit_ok : exit_verification_failed;
        }
    } catch (const too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource_cap;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
