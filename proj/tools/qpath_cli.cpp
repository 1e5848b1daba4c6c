#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpath/exchange.hpp"
#include "qpath/minors.hpp"
#include "qpath/pathkit.hpp"
#include "qpath/segraph.hpp"
#include "qpath/verify.hpp"

namespace {

using namespace qpath;

std::uint64_t default_seed() {
    const char* env = std::getenv("QPATH_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << text;
}

std::vector<int> parse_indices(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    std::sort(out.begin(), out.end());
    return out;
}

std::string matrix_text(const PathMatrix& M, const std::vector<std::string>& names, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["m"] = M.m;
        j["n"] = M.n;
        j["entries"] = nlohmann::ordered_json::array();
        for (int i = 1; i <= M.m; ++i)
            for (int k = 1; k <= M.n; ++k)
                j["entries"].push_back(
                    {{"i", i}, {"j", k}, {"value", to_string(M.at(i, k), names)}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (int i = 1; i <= M.m; ++i)
        for (int k = 1; k <= M.n; ++k)
            os << "(" << i << "," << k << ") = " << to_string(M.at(i, k), names) << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SE-graph quantum minor toolkit"};
    app.require_subcommand(1);

    std::string input, out, format = "text", only;
    std::uint64_t seed = default_seed();
    int m = 3, n = 3, max_k = 3, seeds = 10, fi = 0, fi2 = 0;
    double density = 0.8;
    std::string Icsv, Jcsv, I2csv, J2csv;
    bool check = false;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "graph JSON file")->required();
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check the SE-graph conditions");
    add_io(c_validate, true);

    CLI::App* c_gen = app.add_subcommand("gen", "generate a random grid subgraph");
    add_io(c_gen, false);
    c_gen->add_option("--m", m, "rows");
    c_gen->add_option("--n", n, "columns");
    c_gen->add_option("--seed", seed, "seed (default from QPATH_SEED)");
    c_gen->add_option("--density", density, "edge keep probability");

    CLI::App* c_cauchon = app.add_subcommand("cauchon", "build a graph from a ./# diagram file");
    add_io(c_cauchon, true);

    CLI::App* c_matrix = app.add_subcommand("path-matrix", "print the path matrix");
    add_io(c_matrix, true);

    CLI::App* c_minor = app.add_subcommand("minor", "print a quantum minor");
    add_io(c_minor, true);
    c_minor->add_option("--I", Icsv, "row indices, e.g. 1,2")->required();
    c_minor->add_option("--J", Jcsv, "column indices")->required();
    c_minor->add_flag("--check", check, "also compare against the flow-weight sum");

    CLI::App* c_flows = app.add_subcommand("flows", "enumerate disjoint path systems");
    add_io(c_flows, true);
    c_flows->add_option("--I", Icsv, "row indices")->required();
    c_flows->add_option("--J", Jcsv, "column indices")->required();

    CLI::App* c_exchange = app.add_subcommand("exchange", "decompose a double flow");
    add_io(c_exchange, true);
    c_exchange->add_option("--I", Icsv, "first flow rows")->required();
    c_exchange->add_option("--J", Jcsv, "first flow columns")->required();
    c_exchange->add_option("--I2", I2csv, "second flow rows")->required();
    c_exchange->add_option("--J2", J2csv, "second flow columns")->required();
    c_exchange->add_option("--flow", fi, "index of the first flow in enumeration order");
    c_exchange->add_option("--flow2", fi2, "index of the second flow");

    CLI::App* c_verify = app.add_subcommand("verify", "run the verification suites");
    add_io(c_verify, false);
    int vm = 4, vn = 4;
    c_verify->add_option("--seeds", seeds, "number of seeds (0..seeds-1)");
    c_verify->add_option("--seed", seed, "seed offset (default from QPATH_SEED)");
    c_verify->add_option("--m", vm, "max rows");
    c_verify->add_option("--n", vn, "max columns");
    c_verify->add_option("--max-k", max_k, "max minor size");
    c_verify->add_option("--only", only, "run a single suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) {
            std::ifstream in(input);
            if (!in) throw std::runtime_error("cannot open " + input);
            std::stringstream buf;
            buf << in.rdbuf();
            SEGraph g = graph_from_json_text(buf.str());
            ValidationReport rep = validate(g);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["ok"] = rep.ok();
                j["violations"] = rep.violations;
                emit(out, j.dump(2) + "\n");
            } else {
                emit(out, rep.str() + (rep.ok() ? "\n" : ""));
            }
            return rep.ok() ? 0 : 1;
        }
        if (c_gen->parsed()) {
            SEGraph g = generate_grid_subgraph(m, n, seed, density);
            emit(out, graph_to_json_text(g));
            return 0;
        }
        if (c_cauchon->parsed()) {
            std::ifstream in(input);
            if (!in) throw std::runtime_error("cannot open " + input);
            std::vector<std::string> rows;
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) rows.push_back(line);
            SEGraph g = cauchon_graph(rows);
            emit(out, graph_to_json_text(g));
            return 0;
        }
        SEGraph g;  // remaining commands all read a graph
        if (c_matrix->parsed() || c_minor->parsed() || c_flows->parsed() || c_exchange->parsed())
            g = load_graph(input);
        if (c_matrix->parsed()) {
            CommutationTable table = commutation_table(g);
            emit(out, matrix_text(path_matrix(g, table), g.generator_names(), format == "json"));
            return 0;
        }
        if (c_minor->parsed()) {
            CommutationTable table = commutation_table(g);
            PathMatrix M = path_matrix(g, table);
            MinorIndex idx{parse_indices(Icsv), parse_indices(Jcsv)};
            QElement minor = q_minor(M, idx, table);
            std::ostringstream os;
            os << "[I|J] = " << to_string(minor, g.generator_names()) << "\n";
            bool equal = true;
            if (check) {
                LindstromReport rep = check_lindstrom(g, idx, table);
                equal = rep.equal;
                os << "flow sum = " << to_string(rep.flow_sum, g.generator_names()) << "\n";
                os << "equal: " << (equal ? "true" : "false") << "\n";
            }
            emit(out, os.str());
            return equal ? 0 : 1;
        }
        if (c_flows->parsed()) {
            MinorIndex idx{parse_indices(Icsv), parse_indices(Jcsv)};
            auto flows = enumerate_flows(g, idx);
            std::ostringstream os;
            for (std::size_t f = 0; f < flows.size(); ++f) {
                os << "flow " << f << ":\n";
                for (const DPath& p : flows[f].paths) {
                    os << " ";
                    for (int v : p.verts) os << " " << g.vertices()[v].id;
                    os << "\n";
                }
            }
            os << flows.size() << " flow(s)\n";
            emit(out, os.str());
            return 0;
        }
        if (c_exchange->parsed()) {
            CommutationTable table = commutation_table(g);
            MinorIndex a{parse_indices(Icsv), parse_indices(Jcsv)};
            MinorIndex b{parse_indices(I2csv), parse_indices(J2csv)};
            auto fa = enumerate_flows(g, a);
            auto fb = enumerate_flows(g, b);
            if (fi < 0 || fi >= static_cast<int>(fa.size()) || fi2 < 0 ||
                fi2 >= static_cast<int>(fb.size()))
                throw std::runtime_error("flow index out of range (" + std::to_string(fa.size()) +
                                         " and " + std::to_string(fb.size()) + " flows available)");
            DoubleFlow df{fa[fi], fb[fi2]};
            Decomposition dec = decompose(df, g);
            nlohmann::ordered_json j;
            j["exchange_paths"] = dec.paths.size();
            j["cycles"] = dec.cycles.size();
            j["couples"] = nlohmann::ordered_json::array();
            bool all_ok = true;
            for (const Couple& pi : dec.matching.couples) {
                int predicted = predicted_exchange_exponent(pi, dec.cortege);
                std::int64_t measured = exchange_ratio(df, pi, g, table);
                bool ok = predicted == measured;
                all_ok &= ok;
                const char* kind =
                    pi.kind == CoupleKind::R ? "R" : pi.kind == CoupleKind::C ? "C" : "RC";
                j["couples"].push_back({{"kind", kind},
                                        {"f", (pi.a.is_row ? "r" : "c") + std::to_string(pi.a.index)},
                                        {"g", (pi.b.is_row ? "r" : "c") + std::to_string(pi.b.index)},
                                        {"predicted_exponent", predicted},
                                        {"measured_exponent", measured},
                                        {"ok", ok}});
            }
            emit(out, j.dump(2) + "\n");
            return all_ok ? 0 : 1;
        }
        if (c_verify->parsed()) {
            VerifyConfig cfg;
            cfg.seeds.clear();
            for (int s = 0; s < seeds; ++s) cfg.seeds.push_back(seed + s);
            cfg.max_m = vm;
            cfg.max_n = vn;
            cfg.max_k = max_k;
            cfg.only = only;
            VerifySummary sum = run_verify(cfg);
            emit(out, format == "json" ? sum.to_json() : sum.to_text());
            return sum.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
