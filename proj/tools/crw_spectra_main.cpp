// crw-spectra: build arc-level matrices of finite graphs (Grover matrix,
// correlated-random-walk transition matrices, weighted zeta matrices),
// evaluate their determinant identities, and emit closed-form spectra checked
// against the dense eigenvalue oracle.
//
// Exit codes: 0 = all requested checks passed, 1 = an identity or oracle
// check failed, 2 = input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crws/crws.hpp"

namespace {

using crws::Complex;
using crws::Graph;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

Complex parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return Complex(std::stod(s), 0.0);

    s.pop_back();
    // split "a+bi" at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (split == std::string::npos) return Complex(0.0, imag_of(s));
    return Complex(std::stod(s.substr(0, split)), imag_of(s.substr(split)));
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw std::invalid_argument("expected at least one sample point");
    return out;
}

crws::CoinParams parse_coin(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
    if (parts.size() != 4) throw std::invalid_argument("--coin expects four values a,b,c,d");
    return crws::CoinParams(parts[0], parts[1], parts[2], parts[3]);
}

struct GraphSource {
    std::string file;
    std::string family;
    int n = 0;
    int p = 0;
    int q = 0;
    int extra = 0;
};

Graph build_graph(const GraphSource& src, std::uint64_t seed) {
    if (!src.file.empty() && !src.family.empty())
        throw std::invalid_argument("give either --file or --family, not both");
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in) throw std::invalid_argument("cannot open file: " + src.file);
        std::stringstream buf;
        buf << in.rdbuf();
        return crws::parse_edge_list(buf.str(), src.file);
    }
    if (src.family == "cycle") return crws::cycle_graph(src.n);
    if (src.family == "complete") return crws::complete_graph(src.n);
    if (src.family == "complete_bipartite") return crws::complete_bipartite_graph(src.p, src.q);
    if (src.family == "petersen") return crws::petersen_graph();
    if (src.family == "random_connected")
        return crws::random_connected_graph(src.n, src.extra, seed);
    throw std::invalid_argument(
        "unknown family '" + src.family +
        "' (expected cycle, complete, complete_bipartite, petersen, random_connected)");
}

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--file", src.file, "edge-list file ('n m' header, then 'u v' lines, 1-based)");
    cmd->add_option("--family", src.family,
                    "generated family: cycle, complete, complete_bipartite, petersen, "
                    "random_connected");
    cmd->add_option("--n", src.n, "vertex count for cycle/complete/random_connected");
    cmd->add_option("--p", src.p, "first part size for complete_bipartite");
    cmd->add_option("--q", src.q, "second part size for complete_bipartite");
    cmd->add_option("--extra", src.extra, "extra non-tree edges for random_connected");
}

void write_output(const nlohmann::json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << out_path << "\n";
}

std::uint64_t env_default_seed() {
    const char* env = std::getenv("CRW_SPECTRA_SEED");
    if (!env) return 42;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("invalid CRW_SPECTRA_SEED value: ") + env);
    }
}

int run_spectrum(const GraphSource& src, const std::string& method, const std::string& coin_text,
                 bool check_oracle, double tol, std::uint64_t seed, const std::string& out_path,
                 const std::string& csv_path) {
    const Graph g = build_graph(src, seed);

    crws::Spectrum spectrum;
    std::optional<crws::Spectrum> oracle;

    if (method == "oracle") {
        spectrum = crws::oracle_spectrum(crws::crw_matrix(g), "crw oracle, " + g.label());
    } else if (method == "grover") {
        spectrum = crws::grover_spectrum_closed(g);
        if (check_oracle)
            oracle = crws::oracle_spectrum(crws::grover_matrix(g), "oracle, " + g.label());
    } else if (method == "crw-regular") {
        spectrum = crws::crw_spectrum_regular(g);
        if (check_oracle)
            oracle = crws::oracle_spectrum(crws::crw_matrix(g), "oracle, " + g.label());
    } else if (method == "crw-bipartite") {
        const crws::BipartiteProfile profile = crws::bipartite_profile(g);
        spectrum = crws::crw_spectrum_semiregular(profile);
        if (check_oracle)
            oracle = crws::oracle_spectrum(crws::crw_matrix(g), "oracle, " + g.label());
    } else if (method == "crw2-cycle") {
        if (g.regular_degree() != 2)
            throw std::invalid_argument("crw2-cycle requires a cycle graph (connected, 2-regular)");
        if (coin_text.empty()) throw std::invalid_argument("crw2-cycle requires --coin a,b,c,d");
        const crws::CoinParams coin = parse_coin(coin_text);
        spectrum = crws::cycle_crw_spectrum(g.vertex_count(), coin);
        if (check_oracle)
            oracle = crws::oracle_spectrum(crws::cycle_crw_matrix(g.vertex_count(), coin),
                                           "oracle, C" + std::to_string(g.vertex_count()));
    } else if (method == "crw2-uniform") {
        spectrum = crws::uniform_crw_spectrum(g);
        if (check_oracle)
            oracle = crws::oracle_spectrum(crws::uniform_crw_matrix(g), "oracle, " + g.label());
    } else {
        throw std::invalid_argument(
            "unknown method '" + method +
            "' (expected oracle, grover, crw-regular, crw-bipartite, crw2-cycle, crw2-uniform)");
    }

    nlohmann::json doc = {{"graph", g.label()}, {"method", method},
                          {"spectrum", crws::to_json(spectrum)}, {"oracle_check", nullptr}};
    bool pass = true;
    if (oracle) {
        const crws::MatchReport match = crws::multiset_match(spectrum, *oracle, tol);
        doc["oracle_check"] = crws::to_json(match);
        pass = match.pass;
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::invalid_argument("cannot write file: " + csv_path);
        csv << crws::spectrum_to_csv(spectrum, g.label());
    }
    write_output(doc, out_path);
    return pass ? kExitPass : kExitCheckFailed;
}

int run_verify(const std::string& suite_name, double tol, std::uint64_t seed,
               const std::string& out_path) {
    crws::Suite suite;
    if (suite_name == "all") suite = crws::Suite::all;
    else if (suite_name == "zeta") suite = crws::Suite::zeta;
    else if (suite_name == "grover") suite = crws::Suite::grover;
    else if (suite_name == "crw") suite = crws::Suite::crw;
    else if (suite_name == "crw2") suite = crws::Suite::crw2;
    else
        throw std::invalid_argument("unknown suite '" + suite_name +
                                    "' (expected all, zeta, grover, crw, crw2)");

    const crws::SuiteResult result = crws::run_suite(suite, tol, seed);
    for (const crws::VerificationReport& r : result.reports) {
        std::printf("[%s] %-28s %-28s max_dev=%.3e%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.identity.c_str(), r.graph.c_str(), r.max_rel_dev,
                    r.note.empty() ? "" : "  ", r.note.c_str());
    }
    std::printf("%zu reports, %s\n", result.reports.size(),
                result.all_pass ? "all passed" : "FAILURES present");

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << crws::to_json(result).dump(2) << "\n";
    }
    if (!result.all_pass) {
        for (const crws::VerificationReport& r : result.reports) {
            if (!r.pass) {
                std::cout << "first failing report:\n" << crws::to_json(r).dump(2) << "\n";
                break;
            }
        }
        return kExitCheckFailed;
    }
    return kExitPass;
}

int run_zeta(const GraphSource& src, const std::string& weighting, const std::string& u_text,
             double tol, std::uint64_t seed, const std::string& out_path) {
    const Graph g = build_graph(src, seed);
    const std::vector<Complex> points = parse_complex_list(u_text);

    std::optional<crws::ArcWeighting> w;
    std::string weighting_label = weighting;
    if (weighting == "ihara") {
        // direct = edge form, reduced = vertex (Bass) form
    } else if (weighting == "random") {
        w = crws::ArcWeighting::random(g, seed);
        weighting_label = "random(seed=" + std::to_string(seed) + ")";
    } else if (weighting == "crw-induced") {
        w = crws::ArcWeighting::crw_induced(g);
    } else {
        throw std::invalid_argument("unknown weighting '" + weighting +
                                    "' (expected ihara, random, crw-induced)");
    }

    nlohmann::json entries = nlohmann::json::array();
    double max_dev = 0.0;
    bool pass = true;
    for (const Complex& u : points) {
        nlohmann::json entry = {{"u", crws::to_json(u)}};
        const Complex direct = w ? crws::zeta_recip_direct(g, *w, u) : crws::ihara_recip_edge(g, u);
        entry["direct"] = crws::to_json(direct);
        try {
            const Complex reduced =
                w ? crws::zeta_recip_reduced(g, *w, u) : crws::ihara_recip_bass(g, u);
            const double dev = crws::relative_deviation(direct, reduced);
            entry["reduced"] = crws::to_json(reduced);
            entry["rel_dev"] = dev;
            max_dev = std::max(max_dev, dev);
            pass = pass && dev <= tol;
        } catch (const crws::pole_error& err) {
            entry["error"] = err.what();
        }
        entries.push_back(std::move(entry));
    }

    const nlohmann::json doc = {{"graph", g.label()}, {"weighting", weighting_label},
                                {"points", std::move(entries)}, {"max_rel_dev", max_dev},
                                {"pass", pass}};
    write_output(doc, out_path);
    return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arc-level graph spectra: Grover walk, correlated random walks, weighted zetas"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    try {
        seed = env_default_seed();
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }

    GraphSource spectrum_src;
    std::string method = "oracle";
    std::string coin_text;
    bool check_oracle = false;
    double spectrum_tol = crws::kSpectrumTol;
    std::string spectrum_out, csv_path;
    std::uint64_t spectrum_seed = seed;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "closed-form and oracle spectra of walk matrices");
    add_graph_options(spectrum_cmd, spectrum_src);
    spectrum_cmd->add_option("--method", method,
                             "oracle, grover, crw-regular, crw-bipartite, crw2-cycle, crw2-uniform");
    spectrum_cmd->add_option("--coin", coin_text, "coin a,b,c,d for crw2-cycle (a+c=1, b+d=1)");
    spectrum_cmd->add_flag("--check-oracle", check_oracle,
                           "compare the closed form against the dense eigenvalue oracle");
    spectrum_cmd->add_option("--tol", spectrum_tol, "multiset match tolerance (default 1e-8)");
    spectrum_cmd->add_option("--seed", spectrum_seed, "seed for random_connected");
    spectrum_cmd->add_option("--out", spectrum_out, "write the JSON report here (default stdout)");
    spectrum_cmd->add_option("--csv", csv_path, "also write eigenvalues as CSV");

    std::string suite_name = "all";
    double verify_tol = crws::kIdentityTol;
    std::uint64_t verify_seed = seed;
    std::string verify_out;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the identity/oracle verification suites");
    verify_cmd->add_option("--suite", suite_name, "all, zeta, grover, crw, crw2");
    verify_cmd->add_option("--tol", verify_tol, "identity tolerance (default 1e-9)");
    verify_cmd->add_option("--seed", verify_seed,
                           "suite seed (default 42; env CRW_SPECTRA_SEED overrides)");
    verify_cmd->add_option("--out", verify_out, "write the full JSON report here");

    GraphSource zeta_src;
    std::string weighting = "ihara";
    std::string u_text = "0.5";
    double zeta_tol = crws::kIdentityTol;
    std::uint64_t zeta_seed = seed;
    std::string zeta_out;
    CLI::App* zeta_cmd =
        app.add_subcommand("zeta", "evaluate weighted zeta reciprocals (direct vs reduced)");
    add_graph_options(zeta_cmd, zeta_src);
    zeta_cmd->add_option("--weighting", weighting, "ihara, random, crw-induced");
    zeta_cmd->add_option("--u", u_text, "comma-separated sample points, e.g. 0.5,0.3i,0.2+0.1i");
    zeta_cmd->add_option("--tol", zeta_tol, "relative deviation tolerance (default 1e-9)");
    zeta_cmd->add_option("--seed", zeta_seed, "seed for the random weighting");
    zeta_cmd->add_option("--out", zeta_out, "write the JSON report here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (spectrum_cmd->parsed())
            return run_spectrum(spectrum_src, method, coin_text, check_oracle, spectrum_tol,
                                spectrum_seed, spectrum_out, csv_path);
        if (verify_cmd->parsed()) return run_verify(suite_name, verify_tol, verify_seed, verify_out);
        if (zeta_cmd->parsed())
            return run_zeta(zeta_src, weighting, u_text, zeta_tol, zeta_seed, zeta_out);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
