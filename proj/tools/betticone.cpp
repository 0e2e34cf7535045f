#include <CLI11.hpp>

#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "betticone/decompose.hpp"
#include "betticone/io.hpp"
#include "betticone/linalg.hpp"

namespace {

using namespace betticone;

struct Config {
    std::string format = "table";
    std::optional<long> toprow;
    std::string embedding = "reduced";
    std::string d_prime = "escalate";
    std::string prune = "on";
    std::optional<std::uint64_t> max_solutions;
    std::optional<long> variables;
};

nlohmann::json json_int(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

// Arguments starting with '(' are inline determining vectors; anything else
// is a path to a diagram file.
BettiDiagram load_operand(const std::string& arg) {
    std::size_t b = arg.find_first_not_of(" \t");
    if (b != std::string::npos && arg[b] == '(')
        return ci_diagram(parse_vector_literal(arg));
    return load_diagram_file(arg);
}

void print_diagram(const BettiDiagram& d, const Config& cfg) {
    if (cfg.format == "json")
        std::cout << format_diagram_json(d, cfg.toprow) << "\n";
    else
        std::cout << format_diagram_text(d, cfg.toprow);
}

DecomposeOptions search_options(const Config& cfg) {
    DecomposeOptions opts;
    opts.embedding = cfg.embedding == "full" ? Embedding::full : Embedding::reduced;
    if (cfg.d_prime == "exact") {
        opts.bound = DecomposeOptions::Bound::exact;
    } else if (cfg.d_prime.rfind("override=", 0) == 0) {
        opts.d_prime_override = Int(cfg.d_prime.substr(9));
    } else if (cfg.d_prime != "escalate") {
        throw std::invalid_argument("--d-prime must be escalate, exact, or override=K");
    }
    opts.prune = cfg.prune != "off";
    opts.max_solutions = cfg.max_solutions;
    opts.variables = cfg.variables;
    opts.progress = &std::cerr;
    return opts;
}

std::string term_sum(const Decomposition& dec) {
    std::string out;
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        if (i > 0) out += " + ";
        out += dec.terms[i].coeff.get_str();
        out += "·β";
        out += format_vector_literal(dec.terms[i].vector);
    }
    return out;
}

int cmd_table(const std::string& vec, const Config& cfg) {
    print_diagram(ci_diagram(parse_vector_literal(vec)), cfg);
    return 0;
}

int cmd_product(const std::string& lhs, const std::string& rhs, const Config& cfg) {
    print_diagram(odot(load_operand(lhs), load_operand(rhs)), cfg);
    return 0;
}

int cmd_decompose(const std::string& input, const Config& cfg) {
    const BettiDiagram gamma = load_operand(input);
    const DecomposeResult res = decompose(gamma, search_options(cfg));

    std::cerr << "d = " << res.d.get_str() << ", d' = " << res.d_prime.get_str()
              << ", D = " << res.D.get_str() << ", m = " << res.m.get_str()
              << ", tuples examined = " << res.tuples_examined
              << (res.complete ? "" : " (list may be incomplete at the certified bound)")
              << "\n";
    if (res.applied_twist != 0)
        std::cerr << "input normalized by twist " << res.applied_twist << "\n";

    if (cfg.format == "json") {
        if (!res.member) {
            std::cout << "null\n";
            return 1;
        }
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const Decomposition& dec : res.decompositions) {
            nlohmann::ordered_json rec;
            rec["D"] = json_int(dec.D);
            rec["m"] = json_int(dec.m);
            rec["terms"] = nlohmann::json::array();
            for (const DecompositionTerm& term : dec.terms) {
                nlohmann::ordered_json t;
                t["vector"] = term.vector.entries();
                t["coeff"] = json_int(term.coeff);
                rec["terms"].push_back(t);
            }
            rec["complete"] = res.complete;
            rec["tuples_examined"] = res.tuples_examined;
            out.push_back(rec);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (!res.member) {
        std::cout << "NULL\n";
        return 1;
    }
    for (std::size_t i = 0; i < res.decompositions.size(); ++i) {
        const Decomposition& dec = res.decompositions[i];
        std::cout << "[" << i + 1 << "] ";
        if (dec.D != 1) std::cout << "(1/" << dec.D.get_str() << ") [ " << term_sum(dec) << " ]";
        else if (dec.terms.empty()) std::cout << "0";
        else std::cout << term_sum(dec);
        std::cout << "\n";
    }
    return 0;
}

int cmd_denominator_bound(const std::vector<std::string>& args, const std::string& gamma_path,
                          const Config& cfg) {
    std::vector<BettiDiagram> family;
    for (const std::string& arg : args) family.push_back(load_operand(arg));

    Int d = 1;
    std::vector<BettiDiagram> all = family;
    if (!gamma_path.empty()) {
        const BettiDiagram gamma = load_operand(gamma_path);
        d = gamma.clear_denominators().first;
        all.push_back(gamma.clear_denominators().second);
    }

    SupportBasis basis;
    if (cfg.embedding == "full") {
        long pdim = 0, reg = 0;
        for (const BettiDiagram& b : all) {
            pdim = std::max(pdim, b.pdim());
            reg = std::max(reg, b.reg());
        }
        basis = SupportBasis::full_rectangle(pdim, reg);
    } else {
        basis = SupportBasis::from_supports(all);
    }
    const Int dp = denominator_bound(family, basis);

    if (cfg.format == "json") {
        nlohmann::ordered_json out;
        out["N"] = basis.size();
        out["d"] = json_int(d);
        out["d_prime"] = json_int(dp);
        out["D"] = json_int(d * dp);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "N = " << basis.size() << "\n"
                  << "d = " << d.get_str() << "\n"
                  << "d' = " << dp.get_str() << "\n"
                  << "D = " << Int(d * dp).get_str() << "\n";
    }
    return 0;
}

int cmd_candidates(const std::string& input, const Config& cfg) {
    const BettiDiagram gamma = load_operand(input);
    long w = gamma.is_zero() ? 0 : gamma.pdim();
    if (cfg.variables) w = std::min(w, *cfg.variables);
    const long h = gamma.is_zero() ? 0 : gamma.reg();
    const CandidateSet cs = candidates(gamma, w, h);

    if (cfg.format == "json") {
        nlohmann::ordered_json out;
        out["C0"] = cs.C0;
        out["C1"] = cs.C1;
        out["L"] = nlohmann::json::array();
        for (const DeterminingVector& v : cs.L) out["L"].push_back(v.entries());
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto set_line = [](const char* name, const std::vector<long>& xs) {
        std::cout << name << " = {";
        for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? ", " : "") << xs[i];
        std::cout << "}\n";
    };
    set_line("C0", cs.C0);
    set_line("C1", cs.C1);
    std::cout << "r = " << cs.r() << "\n";
    for (const DeterminingVector& v : cs.L) std::cout << format_vector_literal(v) << "\n";
    return 0;
}

int cmd_extremality(const std::string& vec, long p) {
    const bool ok = extremality_check(parse_vector_literal(vec), Int(p));
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Betti diagrams of complete intersections: tables, products,"
                 " and cone membership with integral decompositions"};
    app.require_subcommand(1);
    Config cfg;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto add_toprow = [&](CLI::App* sub) {
        sub->add_option("--toprow", cfg.toprow, "First displayed row");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--embedding", cfg.embedding, "Coordinate cells for the minor bound")
            ->check(CLI::IsMember({"reduced", "full"}));
        sub->add_option("--d-prime", cfg.d_prime,
                        "Bound strategy: escalate, exact, or override=K");
        sub->add_option("--prune", cfg.prune, "Search pruning")
            ->check(CLI::IsMember({"on", "off"}));
        sub->add_option("--max-solutions", cfg.max_solutions,
                        "Stop after this many decompositions");
        sub->add_option("--variables", cfg.variables, "Cap the candidate codimension");
    };

    std::string vec, input, lhs, rhs, gamma_path;
    std::vector<std::string> family;
    long p = 1;

    CLI::App* table = app.add_subcommand("table", "Print the Betti diagram of a complete intersection");
    table->add_option("vector", vec, "Determining vector, e.g. \"(1,2,2,3)\"")->required();
    add_format(table);
    add_toprow(table);

    CLI::App* dec = app.add_subcommand("decompose", "Decompose a diagram over the cone of complete intersections");
    dec->add_option("input", input, "Diagram file or inline vector")->required();
    add_format(dec);
    add_search(dec);

    CLI::App* prod = app.add_subcommand("product", "Convolution product of two diagrams");
    prod->add_option("lhs", lhs, "Diagram file or inline vector")->required();
    prod->add_option("rhs", rhs, "Diagram file or inline vector")->required();
    add_format(prod);
    add_toprow(prod);

    CLI::App* den = app.add_subcommand("denominator-bound", "Integral-scale bound for a diagram family");
    den->add_option("family", family, "Diagram files or inline vectors")->required();
    den->add_option("--gamma", gamma_path, "Diagram whose denominators contribute d");
    den->add_option("--embedding", cfg.embedding, "Coordinate cells for the minor bound")
        ->check(CLI::IsMember({"reduced", "full"}));
    add_format(den);

    CLI::App* cand = app.add_subcommand("candidates", "List the determining vectors that pass the support filters");
    cand->add_option("input", input, "Diagram file or inline vector")->required();
    cand->add_option("--variables", cfg.variables, "Cap the candidate codimension");
    add_format(cand);

    CLI::App* ext = app.add_subcommand("extremality", "Check that multiples of one diagram only decompose trivially");
    ext->add_option("vector", vec, "Determining vector")->required();
    ext->add_option("-p,--multiplier", p, "Positive multiplier")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(table)) return cmd_table(vec, cfg);
        if (app.got_subcommand(dec)) return cmd_decompose(input, cfg);
        if (app.got_subcommand(prod)) return cmd_product(lhs, rhs, cfg);
        if (app.got_subcommand(den)) return cmd_denominator_bound(family, gamma_path, cfg);
        if (app.got_subcommand(cand)) return cmd_candidates(input, cfg);
        if (app.got_subcommand(ext)) return cmd_extremality(vec, p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
