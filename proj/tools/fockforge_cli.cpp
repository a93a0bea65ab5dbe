// fockforge: graded dimension tables, finite-dimensional counts, operator
// application, crystal export and the invariant suite, all in exact arithmetic.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 invariant failure.

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockforge/crystal.hpp"
#include "fockforge/errors.hpp"
#include "fockforge/fock.hpp"
#include "fockforge/grading.hpp"
#include "fockforge/invariants.hpp"

using namespace fockforge;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kInvariant = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int m = 2;
    int ell = 1;
    std::string charge_text;
    int max_degree = 6;
    std::string format;
    std::string crystal_order = "content-then-component";

    std::string op;
    std::vector<std::string> op_args;

    FockSpaceParams params() const {
        FockSpaceParams p;
        p.m = m;
        p.ell = ell;
        p.degree_bound = max_degree;
        std::vector<int> s;
        if (charge_text.empty()) {
            s.assign(static_cast<std::size_t>(std::max(ell, 0)), 0);
        } else {
            std::stringstream in(charge_text);
            std::string item;
            while (std::getline(in, item, ',')) {
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(item, &used);
                } catch (const std::exception&) {
                    throw UsageError("charge entry '" + item + "' is not an integer");
                }
                if (used != item.size()) throw UsageError("charge entry '" + item + "' is not an integer");
                s.push_back(value);
            }
        }
        p.charge = Charge(s);
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return p;
    }

    // The requested format, or the command's default; anything else is a usage error.
    std::string format_for(const std::vector<std::string>& allowed) const {
        if (format.empty()) return allowed.front();
        for (const auto& f : allowed)
            if (f == format) return f;
        throw UsageError("format '" + format + "' is not available for this command");
    }
};

ojson params_json(const FockSpaceParams& p) {
    return {{"m", p.m}, {"ell", p.ell}, {"charge", p.charge.entries()}, {"max_degree", p.degree_bound}};
}

int cmd_gr_table(const RunConfig& cfg) {
    const FockSpaceParams p = cfg.params();
    const std::string format = cfg.format_for({"json", "csv", "text"});
    GradingEngine engine(p);
    std::vector<GradedTable> tables;
    for (int n = 0; n <= p.degree_bound; ++n) tables.push_back(engine.graded_dims(n));
    if (format == "json") {
        ojson out{{"params", params_json(p)}, {"tables", ojson::array()}};
        for (const auto& t : tables) out["tables"].push_back(to_json(t));
        std::cout << out.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "n,i,j,dim\n";
        for (const auto& t : tables) std::cout << to_csv(t);
    } else {
        for (const auto& t : tables) {
            std::cout << "n=" << t.n << ':';
            for (const auto& [ij, d] : t.entries) std::cout << " (" << ij.first << ',' << ij.second << ")=" << d;
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_findim(const RunConfig& cfg) {
    const FockSpaceParams p = cfg.params();
    const std::string format = cfg.format_for({"json", "csv", "text"});
    GradingEngine engine(p);
    const auto h = engine.findim_counts();
    std::vector<long long> singular;
    for (int n = 0; n <= p.degree_bound; ++n) singular.push_back(engine.singular_space(n).dim());
    const bool match = h == singular;
    if (format == "json") {
        std::cout << ojson{{"params", params_json(p)}, {"h", h}, {"singular", singular}, {"match", match}}.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "n,h,singular\n";
        for (int n = 0; n <= p.degree_bound; ++n) std::cout << n << ',' << h[n] << ',' << singular[n] << '\n';
    } else {
        for (int n = 0; n <= p.degree_bound; ++n) std::cout << "h_" << n << " = " << h[n] << "  singular " << singular[n] << '\n';
        std::cout << "match: " << (match ? "true" : "false") << '\n';
    }
    if (!match) throw InvariantFailure("deconvolution and singular dimensions disagree");
    return 0;
}

int parse_index(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw UsageError(what + " '" + text + "' is not an integer");
    return value;
}

int cmd_apply(const RunConfig& cfg) {
    FockSpaceParams p = cfg.params();
    const std::string format = cfg.format_for({"text", "json"});
    const auto& args = cfg.op_args;
    const bool casimir = cfg.op == "casimir";
    if (!casimir && cfg.op != "e" && cfg.op != "f" && cfg.op != "b" && cfg.op != "b'")
        throw UsageError("unknown operator '" + cfg.op + "'; expected e, f, b, b' or casimir");
    if (args.size() != (casimir ? 1u : 2u))
        throw UsageError(casimir ? "usage: apply casimir VECTOR" : "usage: apply " + cfg.op + " INDEX VECTOR");
    const int index = casimir ? 0 : parse_index(args[0], "operator index");
    if ((cfg.op == "e" || cfg.op == "f") && (index < 0 || index >= p.m))
        throw UsageError("residue must lie in 0.." + std::to_string(p.m - 1));
    if ((cfg.op == "b" || cfg.op == "b'") && index < 1) throw UsageError("Heisenberg index must be positive");

    // Widen the bound so the operator never truncates its own output.
    FockVector v(p);
    try {
        FockSpaceParams wide = p;
        wide.degree_bound = 1 << 20;
        const FockVector probe = parse_fock_vector(args.back(), wide);
        int top = 0;
        for (const auto& [lambda, c] : probe.coeffs()) top = std::max(top, lambda.size());
        p.degree_bound = std::max(p.degree_bound, top + (cfg.op == "b" ? p.m * index : cfg.op == "f" ? 1 : 0));
        v = parse_fock_vector(args.back(), p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    FockVector out(p);
    if (cfg.op == "e") out = apply_e(index, v);
    else if (cfg.op == "f") out = apply_f(index, v);
    else if (cfg.op == "b") out = apply_b(index, v);
    else if (cfg.op == "b'") out = apply_b_dual(index, v);
    else out = apply_casimir(v);
    if (format == "json") std::cout << to_json(out).dump() << '\n';
    else std::cout << to_string(out) << '\n';
    return 0;
}

int cmd_crystal(const RunConfig& cfg) {
    const FockSpaceParams p = cfg.params();
    const std::string format = cfg.format_for({"dot", "json"});
    CrystalOrder order;
    try {
        order = parse_crystal_order(cfg.crystal_order);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const CrystalGraph g = build_graph(p, order);
    if (format == "json") {
        ojson out{{"params", params_json(p)}, {"crystal_order", to_string(order)}};
        const ojson graph = to_json(g);
        out["vertices"] = graph["vertices"];
        out["arrows"] = graph["arrows"];
        std::cout << out.dump() << '\n';
    } else {
        std::cout << to_dot(g);
    }
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    const FockSpaceParams p = cfg.params();
    const std::string format = cfg.format_for({"text", "json"});
    CrystalOrder order;
    try {
        order = parse_crystal_order(cfg.crystal_order);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto results = run_invariant_suite(p, order);
    const CheckResult* first_failure = nullptr;
    for (const auto& r : results)
        if (!r.passed && !first_failure) first_failure = &r;
    if (format == "json") {
        ojson list = ojson::array();
        for (const auto& r : results) list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        std::cout << ojson{{"params", params_json(p)}, {"results", list}}.dump() << '\n';
    } else {
        int passed = 0;
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
            passed += r.passed;
        }
        std::cout << passed << '/' << results.size() << " invariants hold\n";
    }
    if (first_failure) throw InvariantFailure(first_failure->name + ": " + first_failure->detail);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bigraded dimensions of higher-level Fock spaces of affine sl_m"};
    app.name("fockforge");
    RunConfig cfg;
    app.add_option("--m", cfg.m, "rank of affine sl_m (m >= 2)")->capture_default_str();
    app.add_option("--ell", cfg.ell, "level, the number of components (ell >= 1)")->capture_default_str();
    app.add_option("--charge", cfg.charge_text, "comma-separated charge s_0,...,s_{ell-1}; default all zero");
    app.add_option("--max-degree", cfg.max_degree, "largest degree N")->capture_default_str();
    app.add_option("--format", cfg.format, "json, csv, dot or text; each command has its own default")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    app.add_option("--crystal-order", cfg.crystal_order, "content-then-component or component-then-content")
        ->capture_default_str();
    app.require_subcommand(1);

    auto* gr = app.add_subcommand("gr-table", "dimensions of the (depth, Casimir) bigrading for n <= N");
    auto* findim = app.add_subcommand("findim", "finite-dimensional counts h_n, by deconvolution and directly");
    auto* apply = app.add_subcommand("apply", "apply e q, f q, b r, b' r or casimir to a vector");
    // Operator and vector are read raw: CLI11 would otherwise treat "[...]" as list syntax.
    apply->prefix_command();
    apply->footer("  apply e Q VECTOR | f Q VECTOR | b R VECTOR | b' R VECTOR | casimir VECTOR\n"
                  "  VECTOR is a sum such as \"[2] - 1/2 [1,1]\"; components are separated by '|'.");
    auto* crystal = app.add_subcommand("crystal", "crystal graph on all degrees <= N");
    auto* check = app.add_subcommand("check", "run the invariant suite");
    for (auto* sub : {gr, findim, crystal, check}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gr->parsed()) return cmd_gr_table(cfg);
        if (findim->parsed()) return cmd_findim(cfg);
        if (apply->parsed()) {
            auto raw = apply->remaining();
            if (raw.empty()) throw UsageError("apply needs an operator and a vector");
            for (const auto& arg : raw)
                if (arg.rfind("--", 0) == 0) throw UsageError("global option " + arg + " must come before the subcommand");
            cfg.op = raw.front();
            cfg.op_args.assign(raw.begin() + 1, raw.end());
            return cmd_apply(cfg);
        }
        if (crystal->parsed()) return cmd_crystal(cfg);
        return cmd_check(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantFailure& e) {
        std::cout.flush();
        std::cerr << "invariant failure: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
