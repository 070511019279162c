#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "efc/discharge.hpp"
#include "efc/io_gen.hpp"
#include "efc/solver.hpp"

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw efc::Error(efc::Errc::syntax_error, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"plane-graph edge-face 9-colouring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, colouring_path, out_path, family, kind = "tree";
    int k = 9, n = 0, max_vertices = 5;
    long long budget = 10'000'000;
    std::uint64_t seed = 0;
    bool stats = false;

    auto *colour_cmd = app.add_subcommand("colour", "edge-face 9-colouring of a graph");
    colour_cmd->add_option("graph", graph_path)->required();
    colour_cmd->add_option("--out", out_path);
    colour_cmd->add_flag("--stats", stats, "print solver statistics to stderr");

    auto *verify_cmd = app.add_subcommand("verify", "check a colouring document");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("colouring", colouring_path)->required();

    auto *audit_cmd = app.add_subcommand("audit", "discharging report");
    audit_cmd->add_option("graph", graph_path)->required();

    auto *detect_cmd = app.add_subcommand("detect", "reducible configurations");
    detect_cmd->add_option("graph", graph_path)->required();
    detect_cmd->add_option("--family", family, "A, B, C, D, E, LN or LNN");

    auto *oracle_cmd = app.add_subcommand("oracle", "exact k-colouring search");
    oracle_cmd->add_option("graph", graph_path)->required();
    oracle_cmd->add_option("--k", k)->required();
    oracle_cmd->add_option("--budget", budget, "search-node limit");

    auto *gen_cmd = app.add_subcommand("gen", "generate a graph document");
    gen_cmd->add_option("--kind", kind,
                        "tree, star, cycle, platonic, triangulation or subgraph")
        ->required();
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--seed", seed);

    auto *enum_cmd = app.add_subcommand("enum", "enumerate small plane graphs");
    enum_cmd->add_option("--max-vertices", max_vertices)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (colour_cmd->parsed()) {
            efc::PlaneGraph g = efc::parse_graph(slurp(graph_path));
            efc::SolveStats st;
            efc::EdgeFaceColouring c = efc::colour(g, &st);
            std::string doc = efc::serialise_colouring(g, c);
            if (out_path.empty()) {
                std::cout << doc;
            } else {
                std::ofstream out(out_path);
                out << doc;
            }
            if (stats) std::cerr << st.summary();
        } else if (verify_cmd->parsed()) {
            efc::PlaneGraph g = efc::parse_graph(slurp(graph_path));
            efc::EdgeFaceColouring c = efc::parse_colouring(g, slurp(colouring_path));
            efc::Verdict v = efc::validate(g, c, true);
            if (v.valid()) {
                std::cout << "valid\n";
            } else {
                for (const auto &viol : v.violations)
                    std::cout << viol.describe(g) << "\n";
                return 1;
            }
        } else if (audit_cmd->parsed()) {
            efc::PlaneGraph g = efc::parse_graph(slurp(graph_path));
            efc::AuditReport rep = efc::audit(g);
            std::cout << efc::serialise_report(g, rep.ledger);
        } else if (detect_cmd->parsed()) {
            efc::PlaneGraph g = efc::parse_graph(slurp(graph_path));
            for (const efc::ConfigMatch &m : efc::detect_all(g)) {
                if (!family.empty()) {
                    efc::ConfigFamily want;
                    if (family == "A") want = efc::ConfigFamily::A;
                    else if (family == "B") want = efc::ConfigFamily::B;
                    else if (family == "C") want = efc::ConfigFamily::C;
                    else if (family == "D") want = efc::ConfigFamily::D;
                    else if (family == "E") want = efc::ConfigFamily::E;
                    else if (family == "LN") want = efc::ConfigFamily::LN;
                    else if (family == "LNN") want = efc::ConfigFamily::LNN;
                    else throw efc::Error(efc::Errc::infeasible_parameters,
                                          "unknown family " + family);
                    if (efc::config_family(m.id) != want) continue;
                }
                std::cout << m.describe() << "\n";
            }
        } else if (oracle_cmd->parsed()) {
            efc::PlaneGraph g = efc::parse_graph(slurp(graph_path));
            efc::OracleResult r = efc::oracle_colour(g, k, budget);
            switch (r.status) {
            case efc::OracleStatus::Feasible:
                std::cout << "feasible\n" << efc::serialise_colouring(g, r.colouring);
                break;
            case efc::OracleStatus::Infeasible: std::cout << "infeasible\n"; break;
            case efc::OracleStatus::BudgetExhausted: std::cout << "budget\n"; break;
            }
        } else if (gen_cmd->parsed()) {
            efc::PlaneGraph g =
                efc::generate(efc::gen_kind_from_name(kind), n, 8, seed);
            std::ostringstream hdr;
            hdr << "kind " << kind << " n " << n << " seed " << seed;
            std::cout << efc::serialise_graph(g, hdr.str());
        } else if (enum_cmd->parsed()) {
            bool first = true;
            for (const efc::PlaneGraph &g : efc::enumerate_small(max_vertices)) {
                if (!first) std::cout << "\n";
                first = false;
                std::cout << efc::serialise_graph(g);
            }
        }
    } catch (const efc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
