// Command-line workbench: parse/normalize equations, instantiate the built-in
// families, run Rado checks, emit and re-check valuation obstruction
// certificates, verify colorings, search for bad colorings and forcing
// bounds, export/solve/decode CNF encodings, and build explicit solution
// witnesses.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/family.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/rado.hpp"
#include "ramsey/search.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/witness.hpp"

using namespace ramsey;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 verdict in the affirmative sense of the query, 1 verdict in
// the negative sense (forced / invalid / collision / unsat), 2 budget or cap
// exceeded, 3 usage error.
enum ExitCode { ExitYes = 0, ExitNo = 1, ExitCap = 2, ExitUsage = 3 };

struct Output {
    bool json_mode = false;
    json report;

    void header(const std::string& command, const json& config) {
        report["tool"] = "ramsey";
        report["version"] = kVersion;
        report["command"] = command;
        report["config"] = config;
    }

    void emit() const {
        if (json_mode)
            std::cout << report.dump(2) << "\n";
    }

    template <typename T>
    void result(const std::string& key, const T& value) {
        report["result"][key] = value;
    }

    void text(const std::string& line) {
        if (!json_mode)
            std::cout << line << "\n";
    }
};

// --family NAME k=v... | --equation TEXT | --pattern NAME-or-JSON-file
struct TargetOptions {
    std::string family;
    std::vector<std::string> family_params;
    std::string equation;
    std::string pattern;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "built-in family name (k=v parameters follow)");
        cmd->add_option("params", family_params, "family parameters as k=v");
        cmd->add_option("--equation", equation, "equation text, e.g. \"x^2 + y^2 - z^2\"");
        cmd->add_option("--pattern", pattern,
                        "built-in pattern (schur, schur-distinct, moreira, 3ap, pyth, bowen) or a "
                        "pattern JSON file");
    }

    FamilySpec parse_family_spec() const {
        FamilySpec spec;
        spec.family = family_from_string(family);
        for (const auto& kv : family_params) {
            auto eq_pos = kv.find('=');
            if (eq_pos == std::string::npos)
                throw Error(ErrorKind::BadParameters, "family parameter '" + kv + "' is not k=v");
            spec.params[kv.substr(0, eq_pos)] = Rational::parse(kv.substr(eq_pos + 1));
        }
        return spec;
    }

    // Named search targets. "schur", "3ap" and "pyth" are the classical
    // desk-number targets (x = y allowed for schur); "schur-distinct" is the
    // pattern with x != y.
    Target resolve_pattern_name() const {
        if (pattern == "schur")
            return Target(parse_equation("x + y - z"));
        if (pattern == "schur-distinct")
            return Target(instantiate_pattern({Family::Schur, {}}));
        if (pattern == "moreira")
            return Target(instantiate_pattern({Family::Moreira, {}}));
        if (pattern == "3ap")
            return Target(instantiate_pattern({Family::VdwAp, {{"l", Rational(3)}}}));
        if (pattern == "pyth")
            return Target(instantiate_equation({Family::Pyth, {}}));
        if (pattern == "bowen")
            return Target(instantiate_pattern(
                {Family::BowenFinite, {{"a", Rational(2)}, {"b", Rational(1)}}}));
        std::ifstream in(pattern);
        if (!in)
            throw Error(ErrorKind::BadParameters, "unknown pattern '" + pattern +
                                                      "' and no such file");
        json j;
        in >> j;
        return Target(pattern_from_json(j));
    }

    Target resolve() const {
        int sources = (!family.empty()) + (!equation.empty()) + (!pattern.empty());
        if (sources != 1)
            throw Error(ErrorKind::BadParameters,
                        "exactly one of --family/--equation/--pattern is required");
        if (!family.empty())
            return instantiate(parse_family_spec());
        if (!equation.empty())
            return Target(parse_equation(equation));
        return resolve_pattern_name();
    }

    json config() const {
        return json{{"family", family},
                    {"family_params", family_params},
                    {"equation", equation},
                    {"pattern", pattern}};
    }
};

Coloring load_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::BadParameters, "cannot open coloring file '" + path + "'");
    return load_coloring(in);
}

// "p,modulus" for --padic
std::pair<Int, int> parse_padic_arg(const std::string& arg) {
    auto comma = arg.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::BadParameters, "--padic expects \"p,modulus\"");
    return {Int(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1))};
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ','))
        out.push_back(Rational::parse(item));
    return out;
}

json target_json(const Target& target) {
    if (const auto* eq = std::get_if<Equation>(&target))
        return equation_to_json(*eq);
    return pattern_to_json(std::get<PatternSpec>(target));
}

int run_cli(int argc, char** argv) {
    CLI::App app{"arithmetic Ramsey theory workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags also work after a subcommand name
    app.set_version_flag("--version", kVersion);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output");
    Output out;

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "normalize an equation and echo it");
    std::string parse_text;
    parse_cmd->add_option("equation", parse_text, "equation text")->required();

    // family
    auto* family_cmd = app.add_subcommand("family", "list or instantiate built-in families");
    bool family_list = false;
    family_cmd->add_flag("--list", family_list, "list families and parameters");
    TargetOptions family_target;
    family_target.attach(family_cmd);

    // rado
    auto* rado_cmd = app.add_subcommand("rado", "Rado regularity checks for linear systems");
    std::string rado_coeffs, rado_matrix;
    rado_cmd->add_option("--coeffs", rado_coeffs, "single equation coefficients, e.g. \"1,1,-1\"");
    rado_cmd->add_option("--matrix", rado_matrix, "system rows separated by ';'");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "valuation obstruction certificate");
    TargetOptions certify_target;
    certify_target.attach(certify_cmd);
    std::string certify_p = "2";
    int certify_mod = 0;
    bool certify_sweep = false;
    std::string certify_out, certify_check;
    certify_cmd->add_option("--p", certify_p, "prime of the valuation coloring");
    certify_cmd->add_option("--mod", certify_mod, "modulus of the valuation coloring");
    certify_cmd->add_flag("--sweep", certify_sweep, "sweep p in {2,3,5,7}, modulus 2..12");
    certify_cmd->add_option("--out", certify_out, "write the certificate JSON here");
    certify_cmd->add_option("--check", certify_check, "re-check an archived certificate JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a target");
    TargetOptions verify_target;
    verify_target.attach(verify_cmd);
    std::string verify_coloring_file, verify_padic;
    long verify_n = 0;
    bool verify_distinct = false;
    std::uint64_t verify_budget = UINT64_MAX;
    int verify_workers = 1;
    verify_cmd->add_option("--coloring", verify_coloring_file, "coloring file");
    verify_cmd->add_option("--padic", verify_padic, "rule coloring \"p,modulus\" on [1,N] (default N=1000)");
    verify_cmd->add_option("--N", verify_n, "restrict to [1, N] (default: coloring domain)");
    verify_cmd->add_flag("--distinct", verify_distinct, "require pairwise distinct values");
    verify_cmd->add_option("--budget", verify_budget, "node budget");
    verify_cmd->add_option("--workers", verify_workers, "parallel workers");

    // search
    auto* search_cmd = app.add_subcommand("search", "find a bad coloring or the forcing bound");
    TargetOptions search_target;
    search_target.attach(search_cmd);
    int search_colors = 2;
    long search_n = 0, search_cap = 0;
    bool search_least = false, search_distinct = false;
    std::uint64_t search_budget = UINT64_MAX;
    int search_workers = 1;
    std::string search_out;
    search_cmd->add_option("--colors", search_colors, "number of colors")->required();
    search_cmd->add_option("--N", search_n, "search colorings of [1, N]");
    search_cmd->add_flag("--least-forcing", search_least, "scan for the least forced N");
    search_cmd->add_option("--cap", search_cap, "cap for --least-forcing");
    search_cmd->add_flag("--distinct", search_distinct, "require pairwise distinct values");
    search_cmd->add_option("--budget", search_budget, "node budget");
    search_cmd->add_option("--workers", search_workers, "parallel workers");
    search_cmd->add_option("--out", search_out, "write a found coloring here");

    // cnf
    auto* cnf_cmd = app.add_subcommand("cnf", "CNF export / solve / decode");
    cnf_cmd->require_subcommand(1);
    auto* cnf_export = cnf_cmd->add_subcommand("export", "write DIMACS and the variable map");
    TargetOptions cnf_target;
    cnf_target.attach(cnf_export);
    int cnf_colors = 2;
    long cnf_n = 0;
    std::string cnf_out, cnf_map;
    cnf_export->add_option("--colors", cnf_colors, "number of colors")->required();
    cnf_export->add_option("--N", cnf_n, "domain bound")->required();
    cnf_export->add_option("--out", cnf_out, "DIMACS output path")->required();
    cnf_export->add_option("--map", cnf_map, "variable-map sidecar JSON path");

    auto* cnf_solve = cnf_cmd->add_subcommand("solve", "solve a DIMACS file internally");
    std::string cnf_solve_file;
    std::uint64_t cnf_budget = UINT64_MAX;
    cnf_solve->add_option("file", cnf_solve_file, "DIMACS file")->required();
    cnf_solve->add_option("--budget", cnf_budget, "decision budget");

    auto* cnf_decode = cnf_cmd->add_subcommand("decode", "decode a model into a coloring file");
    TargetOptions decode_target;
    decode_target.attach(cnf_decode);
    int decode_colors = 2;
    long decode_n = 0;
    std::string decode_model, decode_out;
    cnf_decode->add_option("--colors", decode_colors, "number of colors")->required();
    cnf_decode->add_option("--N", decode_n, "domain bound")->required();
    cnf_decode->add_option("--model", decode_model, "solver model file (v-lines)")->required();
    cnf_decode->add_option("--out", decode_out, "coloring file output");

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "explicit solution constructions");
    witness_cmd->require_subcommand(1);

    auto* wit_mn = witness_cmd->add_subcommand("mn", "MN(p,m,n) monochromatic solution shape");
    std::string mn_p = "2", mn_b = "2", mn_d = "2";
    unsigned mn_m = 1, mn_n = 2, mn_j = 1;
    bool mn_permissive = false;
    wit_mn->add_option("--p", mn_p)->required();
    wit_mn->add_option("--m", mn_m)->required();
    wit_mn->add_option("--n", mn_n)->required();
    wit_mn->add_option("--j", mn_j)->required();
    wit_mn->add_option("--b", mn_b)->required();
    wit_mn->add_option("--d", mn_d)->required();
    wit_mn->add_flag("--permissive", mn_permissive, "accept p^(mj) | (b+d)");

    auto* wit_ln = witness_cmd->add_subcommand("ln", "L_n-style construction");
    std::string ln_a = "2", ln_c = "2", ln_b = "2", ln_d = "2";
    unsigned ln_n = 2, ln_j = 1;
    bool ln_upper_n = false;
    wit_ln->add_option("--a", ln_a)->required();
    wit_ln->add_option("--c", ln_c)->required();
    wit_ln->add_option("--n", ln_n)->required();
    wit_ln->add_option("--j", ln_j)->required();
    wit_ln->add_option("--b", ln_b)->required();
    wit_ln->add_option("--d", ln_d)->required();
    wit_ln->add_flag("--q-upper-n", ln_upper_n, "sum Q to upper index n instead of n-1 (keeps the residual observable)");

    auto* wit_shift = witness_cmd->add_subcommand("pyth-shift", "X^2+Y^2 = Z^2 + c U^n V");
    std::string ps_x = "3", ps_y = "4", ps_z = "5", ps_u = "1", ps_c = "0";
    unsigned ps_n = 1;
    bool ps_integral = false;
    wit_shift->add_option("--x", ps_x)->required();
    wit_shift->add_option("--y", ps_y)->required();
    wit_shift->add_option("--z", ps_z)->required();
    wit_shift->add_option("--u", ps_u)->required();
    wit_shift->add_option("--c", ps_c)->required();
    wit_shift->add_option("--n", ps_n)->required();
    wit_shift->add_flag("--integral", ps_integral, "require values in Z+");

    auto* wit_pm = witness_cmd->add_subcommand("pyth-pm", "X^2+Y^2 = Z^2 +- c(U, V) identity form");
    std::string pm_x = "3", pm_y = "4", pm_z = "5", pm_d = "2", pm_c = "2", pm_sign = "+";
    bool pm_integral = false;
    wit_pm->add_option("--x", pm_x)->required();
    wit_pm->add_option("--y", pm_y)->required();
    wit_pm->add_option("--z", pm_z)->required();
    wit_pm->add_option("--d", pm_d)->required();
    wit_pm->add_option("--c", pm_c)->required();
    wit_pm->add_option("--sign", pm_sign, "+ or -")->required();
    wit_pm->add_flag("--integral", pm_integral, "require values in Z+");

    auto* wit_moreira = witness_cmd->add_subcommand("moreira", "check {x, xy, x+f(y)} values");
    std::string mo_x = "1", mo_y = "1", mo_fs = "y", mo_padic = "2,2";
    long mo_n = 100;
    wit_moreira->add_option("--x", mo_x)->required();
    wit_moreira->add_option("--y", mo_y)->required();
    wit_moreira->add_option("--fs", mo_fs, "';'-separated polynomials in y");
    wit_moreira->add_option("--padic", mo_padic, "rule coloring \"p,modulus\"");
    wit_moreira->add_option("--N", mo_n, "coloring domain");

    // identity
    auto* identity_cmd = app.add_subcommand("identity", "polynomial identity checks");
    std::string id_lhs, id_rhs, id_relation;
    bool id_corpus = false;
    identity_cmd->add_option("--lhs", id_lhs, "left side");
    identity_cmd->add_option("--rhs", id_rhs, "right side");
    identity_cmd->add_option("--relation", id_relation, "optional side relation (== 0)");
    identity_cmd->add_flag("--corpus", id_corpus, "run the built-in identity corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help/version or a one-line reason
        return code == 0 ? ExitYes : ExitUsage;
    }
    out.json_mode = json_mode;

    if (parse_cmd->parsed()) {
        Equation eq = parse_equation(parse_text);
        out.header("parse", {{"equation", parse_text}});
        out.result("normalized", eq.str());
        out.result("terms", equation_to_json(eq)["terms"]);
        out.text(eq.str());
        out.emit();
        return ExitYes;
    }

    if (family_cmd->parsed()) {
        if (family_list) {
            out.header("family", {{"list", true}});
            json families = json::array();
            for (Family f : all_families()) {
                families.push_back({{"name", family_to_string(f)},
                                    {"kind", family_is_equation(f) ? "equation" : "pattern"},
                                    {"parameters", family_parameter_help(f)}});
                out.text(family_to_string(f) + "  [" +
                         (family_is_equation(f) ? "equation" : "pattern") + "]  parameters: " +
                         family_parameter_help(f));
            }
            out.result("families", families);
            out.emit();
            return ExitYes;
        }
        FamilySpec spec = family_target.parse_family_spec();
        Target target = instantiate(spec);
        out.header("family", family_target.config());
        out.result("target", target_json(target));
        out.text(target_str(target));
        out.emit();
        return ExitYes;
    }

    if (rado_cmd->parsed()) {
        if (!rado_coeffs.empty()) {
            std::vector<Rational> coeffs = parse_coeff_list(rado_coeffs);
            bool pr = single_pr(coeffs);
            out.header("rado", {{"coeffs", rado_coeffs}});
            out.result("partition_regular", pr);
            out.text(pr ? "partition regular (a nonempty subset of coefficients sums to zero)"
                        : "not partition regular");
            out.emit();
            return pr ? ExitYes : ExitNo;
        }
        if (!rado_matrix.empty()) {
            LinearSystem sys;
            std::stringstream rows(rado_matrix);
            std::string row;
            while (std::getline(rows, row, ';'))
                sys.rows.push_back(parse_coeff_list(row));
            ColumnsConditionResult cc = columns_condition(sys);
            out.header("rado", {{"matrix", rado_matrix}});
            out.result("columns_condition", cc.holds);
            if (cc.holds) {
                out.result("blocks", cc.blocks);
                std::string blocks;
                for (const auto& b : cc.blocks) {
                    blocks += "{";
                    for (std::size_t i = 0; i < b.size(); ++i)
                        blocks += (i ? "," : "") + std::to_string(b[i] + 1);
                    blocks += "}";
                }
                out.text("columns condition holds, blocks " + blocks);
            } else {
                out.text("columns condition fails");
            }
            out.emit();
            return cc.holds ? ExitYes : ExitNo;
        }
        throw Error(ErrorKind::BadParameters, "rado needs --coeffs or --matrix");
    }

    if (certify_cmd->parsed() && !certify_check.empty()) {
        std::ifstream f(certify_check);
        if (!f)
            throw Error(ErrorKind::BadParameters, "cannot open '" + certify_check + "'");
        json stored;
        f >> stored;
        Equation eq = equation_from_json(stored.at("equation"));
        ObstructionReport rep =
            obstruction_certificate(eq, Int(stored.at("p").get<std::string>()),
                                    stored.at("modulus").get<int>());
        json recomputed = certificate_to_json(rep);
        bool matches = recomputed["outcome"] == stored.at("outcome") &&
                       recomputed["residue_table"] == stored.at("residue_table");
        out.header("certify", {{"check", certify_check}});
        out.result("matches", matches);
        out.result("certificate", recomputed);
        out.text(matches ? "certificate re-validates" : "certificate does NOT match a recomputation");
        out.emit();
        return matches ? ExitYes : ExitNo;
    }

    if (certify_cmd->parsed()) {
        Target target = certify_target.resolve();
        const auto* eq = std::get_if<Equation>(&target);
        if (!eq)
            throw Error(ErrorKind::BadParameters, "certificates apply to equations only");
        out.header("certify", certify_target.config());
        if (certify_sweep) {
            json sweeps = json::array();
            bool any = false;
            for (long p : {2L, 3L, 5L, 7L}) {
                for (int mod = 2; mod <= 12; ++mod) {
                    ObstructionReport rep = obstruction_certificate(*eq, Int(p), mod);
                    if (rep.obstructed) {
                        any = true;
                        sweeps.push_back({{"p", p}, {"modulus", mod}});
                        out.text("obstructed at p=" + std::to_string(p) +
                                 " modulus=" + std::to_string(mod));
                    }
                }
            }
            out.result("obstructions", sweeps);
            if (!any)
                out.text("no obstruction in the sweep range");
            out.emit();
            return any ? ExitYes : ExitNo;
        }
        if (certify_mod < 2)
            throw Error(ErrorKind::BadParameters, "--mod must be >= 2 (or use --sweep)");
        ObstructionReport rep = obstruction_certificate(*eq, Int(certify_p), certify_mod);
        json cert = certificate_to_json(rep);
        out.result("certificate", cert);
        if (!certify_out.empty()) {
            std::ofstream f(certify_out);
            f << cert.dump(2) << "\n";
        }
        if (rep.obstructed) {
            out.text("Obstructed: every color class forces pairwise distinct term valuations");
        } else {
            out.text("Collision at color " + std::to_string(rep.collision_color) + ": terms " +
                     std::to_string(rep.collision_term_a) + " and " +
                     std::to_string(rep.collision_term_b) + " share a residue");
        }
        out.emit();
        return rep.obstructed ? ExitYes : ExitNo;
    }

    if (verify_cmd->parsed()) {
        Target target = verify_target.resolve();
        std::optional<Coloring> coloring;
        if (!verify_coloring_file.empty()) {
            coloring = load_coloring_file(verify_coloring_file);
        } else if (!verify_padic.empty()) {
            auto [p, mod] = parse_padic_arg(verify_padic);
            long n = verify_n > 0 ? verify_n : 1000;
            coloring = Coloring::padic(p, mod, n);
        } else {
            throw Error(ErrorKind::BadParameters, "verify needs --coloring or --padic");
        }
        long n = verify_n > 0 ? verify_n : coloring->domain_size();
        VerifyPolicy policy;
        policy.require_distinct = verify_distinct;
        policy.budget = verify_budget;
        policy.workers = verify_workers;
        VerifyOutcome outcome = verify_avoids(target, *coloring, n, policy);
        out.header("verify", {{"target", verify_target.config()},
                              {"N", n},
                              {"distinct", verify_distinct},
                              {"budget", verify_budget == UINT64_MAX ? json() : json(verify_budget)},
                              {"workers", verify_workers}});
        out.result("nodes", outcome.nodes);
        switch (outcome.kind) {
        case VerifyOutcome::Kind::Ok:
            out.result("outcome", "avoids");
            out.text("Ok: the coloring avoids the target up to N=" + std::to_string(n));
            out.emit();
            return ExitYes;
        case VerifyOutcome::Kind::Counterexample: {
            out.result("outcome", "counterexample");
            out.result("counterexample", counterexample_to_json(*outcome.counterexample));
            std::string vals;
            for (const auto& [v, x] : outcome.counterexample->assignment)
                vals += v.name() + "=" + int_str(x) + " ";
            out.text("Counterexample (color " + std::to_string(outcome.counterexample->color) +
                     "): " + vals);
            out.emit();
            return ExitNo;
        }
        case VerifyOutcome::Kind::BudgetExceeded:
            out.result("outcome", "budget-exceeded");
            out.text("Budget exceeded before a verdict");
            out.emit();
            return ExitCap;
        }
    }

    if (search_cmd->parsed()) {
        Target target = search_target.resolve();
        SearchOptions options;
        options.budget = search_budget;
        options.workers = search_workers;
        options.require_distinct = search_distinct;
        out.header("search", {{"target", search_target.config()},
                              {"colors", search_colors},
                              {"N", search_n},
                              {"least_forcing", search_least},
                              {"cap", search_cap},
                              {"workers", search_workers}});
        if (search_least) {
            if (search_cap < 1)
                throw Error(ErrorKind::BadParameters, "--least-forcing needs --cap");
            LeastForcingResult r = least_forcing_N(target, search_colors, search_cap, options);
            out.result("nodes", r.nodes);
            if (r.kind == LeastForcingResult::Kind::Found) {
                out.result("outcome", "forced");
                out.result("least_forcing_N", r.n);
                out.text(std::to_string(r.n));
                out.emit();
                return ExitYes;
            }
            out.result("outcome", r.kind == LeastForcingResult::Kind::CapExceeded
                                      ? "budget-exceeded"
                                      : "not-forced-within-cap");
            out.text(r.kind == LeastForcingResult::Kind::CapExceeded
                         ? "budget exceeded"
                         : "not forced within cap " + std::to_string(search_cap));
            out.emit();
            return ExitCap;
        }
        if (search_n < 1)
            throw Error(ErrorKind::BadParameters, "search needs --N or --least-forcing");
        SearchResult r = find_bad_coloring(target, search_colors, search_n, options);
        out.result("nodes", r.nodes);
        switch (r.kind) {
        case SearchResult::Kind::BadColoring: {
            out.result("outcome", "bad-coloring");
            out.result("coloring", coloring_to_json(*r.coloring));
            if (!search_out.empty()) {
                std::ofstream f(search_out);
                save_coloring(*r.coloring, f);
            }
            std::string table;
            for (long x = 1; x <= r.coloring->domain_size(); ++x)
                table += std::to_string(r.coloring->color(x));
            out.text("BadColoring " + table);
            out.emit();
            return ExitYes;
        }
        case SearchResult::Kind::AllForced:
            out.result("outcome", "all-forced");
            out.text("AllForced(" + std::to_string(search_n) + ")");
            out.emit();
            return ExitNo;
        case SearchResult::Kind::CapExceeded:
            out.result("outcome", "budget-exceeded");
            out.text("budget exceeded");
            out.emit();
            return ExitCap;
        }
    }

    if (cnf_export->parsed()) {
        Target target = cnf_target.resolve();
        CnfInstance cnf = export_cnf(target, cnf_colors, cnf_n);
        {
            std::ofstream f(cnf_out);
            if (!f)
                throw Error(ErrorKind::BadParameters, "cannot write '" + cnf_out + "'");
            write_dimacs(cnf, f, "target: " + target_str(target));
        }
        if (!cnf_map.empty()) {
            std::ofstream f(cnf_map);
            f << varmap_to_json(cnf).dump(2) << "\n";
        }
        out.header("cnf export", {{"target", cnf_target.config()},
                                  {"colors", cnf_colors},
                                  {"N", cnf_n},
                                  {"out", cnf_out},
                                  {"map", cnf_map}});
        out.result("variables", cnf.num_vars);
        out.result("clauses", cnf.clauses.size());
        out.text("p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()));
        out.emit();
        return ExitYes;
    }

    if (cnf_solve->parsed()) {
        std::ifstream f(cnf_solve_file);
        if (!f)
            throw Error(ErrorKind::BadParameters, "cannot open '" + cnf_solve_file + "'");
        Cnf cnf = parse_dimacs(f);
        SatResult r = solve_cnf(cnf.num_vars, cnf.clauses, cnf_budget);
        out.header("cnf solve", {{"file", cnf_solve_file}});
        out.result("decisions", r.decisions);
        out.result("propagations", r.propagations);
        if (r.status == SatStatus::Sat) {
            out.result("outcome", "sat");
            std::string vline = "v";
            json model = json::array();
            for (int v = 1; v <= cnf.num_vars; ++v) {
                int lit = r.model[static_cast<std::size_t>(v)] ? v : -v;
                vline += " " + std::to_string(lit);
                model.push_back(lit);
            }
            out.result("model", model);
            out.text("s SATISFIABLE");
            out.text(vline + " 0");
            out.emit();
            return ExitYes;
        }
        if (r.status == SatStatus::Unsat) {
            out.result("outcome", "unsat");
            out.text("s UNSATISFIABLE");
            out.emit();
            return ExitNo;
        }
        out.result("outcome", "budget-exceeded");
        out.text("s UNKNOWN");
        out.emit();
        return ExitCap;
    }

    if (cnf_decode->parsed()) {
        Target target = decode_target.resolve();
        CnfInstance cnf = export_cnf(target, decode_colors, decode_n);
        std::ifstream mf(decode_model);
        if (!mf)
            throw Error(ErrorKind::BadParameters, "cannot open '" + decode_model + "'");
        auto model = parse_model(mf, cnf.num_vars);
        Coloring coloring = decode_coloring(cnf, model);
        out.header("cnf decode", {{"target", decode_target.config()},
                                  {"colors", decode_colors},
                                  {"N", decode_n},
                                  {"model", decode_model}});
        out.result("coloring", coloring_to_json(coloring));
        if (!decode_out.empty()) {
            std::ofstream f(decode_out);
            save_coloring(coloring, f);
        }
        VerifyOutcome check = verify_avoids(target, coloring, decode_n);
        out.result("re_verifies", check.kind == VerifyOutcome::Kind::Ok);
        out.text(check.kind == VerifyOutcome::Kind::Ok ? "decoded coloring re-verifies"
                                                       : "decoded coloring does NOT avoid the target");
        out.emit();
        return check.kind == VerifyOutcome::Kind::Ok ? ExitYes : ExitNo;
    }

    auto witness_exit = [&](const WitnessReport& report, const std::string& which,
                            const json& config) {
        out.header("witness " + which, config);
        out.result("witness", witness_to_json(report));
        out.text(report.str());
        out.emit();
        return report.valid ? ExitYes : ExitNo;
    };

    if (wit_mn->parsed()) {
        WitnessReport r = mn_witness(Int(mn_p), mn_m, mn_n, mn_j, Int(mn_b), Int(mn_d), mn_permissive);
        return witness_exit(r, "mn",
                            {{"p", mn_p}, {"m", mn_m}, {"n", mn_n}, {"j", mn_j}, {"b", mn_b}, {"d", mn_d}});
    }
    if (wit_ln->parsed()) {
        WitnessReport r = ln_witness(Int(ln_a), Rational::parse(ln_c), ln_n, ln_j, Int(ln_b), Int(ln_d),
                                     ln_upper_n ? LnQIndex::UpperN : LnQIndex::UpperNMinus1);
        return witness_exit(r, "ln",
                            {{"a", ln_a}, {"c", ln_c}, {"n", ln_n}, {"j", ln_j}, {"b", ln_b},
                             {"d", ln_d}, {"q_upper_n", ln_upper_n}});
    }
    if (wit_shift->parsed()) {
        WitnessReport r = pyth_shift_witness(Int(ps_x), Int(ps_y), Int(ps_z), Int(ps_u),
                                             Rational::parse(ps_c), ps_n,
                                             ps_integral ? WitnessMode::RequireIntegral
                                                         : WitnessMode::RationalOnly);
        return witness_exit(r, "pyth-shift",
                            {{"x", ps_x}, {"y", ps_y}, {"z", ps_z}, {"u", ps_u}, {"c", ps_c}, {"n", ps_n}});
    }
    if (wit_pm->parsed()) {
        if (pm_sign != "+" && pm_sign != "-")
            throw Error(ErrorKind::BadParameters, "--sign must be + or -");
        WitnessReport r = pyth_pm_witness(Int(pm_x), Int(pm_y), Int(pm_z), Int(pm_d),
                                          Rational::parse(pm_c),
                                          pm_sign == "+" ? PmSign::Plus : PmSign::Minus,
                                          pm_integral ? WitnessMode::RequireIntegral
                                                      : WitnessMode::RationalOnly);
        return witness_exit(r, "pyth-pm",
                            {{"x", pm_x}, {"y", pm_y}, {"z", pm_z}, {"d", pm_d}, {"c", pm_c}, {"sign", pm_sign}});
    }
    if (wit_moreira->parsed()) {
        auto [p, mod] = parse_padic_arg(mo_padic);
        Coloring coloring = Coloring::padic(p, mod, mo_n);
        std::vector<Polynomial> fs;
        std::stringstream s(mo_fs);
        std::string item;
        while (std::getline(s, item, ';'))
            fs.push_back(parse_polynomial(item));
        MoreiraReport r = moreira_check(Int(mo_x), Int(mo_y), fs, coloring);
        out.header("witness moreira",
                   {{"x", mo_x}, {"y", mo_y}, {"fs", mo_fs}, {"padic", mo_padic}, {"N", mo_n}});
        json values = json::array();
        std::string line = "values:";
        for (const auto& v : r.values) {
            values.push_back(int_str(v));
            line += " " + int_str(v);
        }
        out.result("values", values);
        out.result("monochromatic", r.monochromatic);
        out.text(line + (r.monochromatic ? "  monochromatic (color " + std::to_string(r.color) + ")"
                                         : "  not monochromatic"));
        out.emit();
        return r.monochromatic ? ExitYes : ExitNo;
    }

    if (identity_cmd->parsed()) {
        if (id_corpus) {
            out.header("identity", {{"corpus", true}});
            json results = json::array();
            bool all_true = true;

            auto record = [&](const std::string& name, bool holds, bool expected) {
                results.push_back({{"name", name}, {"holds", holds}, {"expected", expected}});
                out.text(std::string(holds == expected ? "ok   " : "FAIL ") + name + " -> " +
                         (holds ? "identity" : "not an identity"));
                if (holds != expected)
                    all_true = false;
            };

            // Thm-style shifted Pythagorean forms, n = 1..3
            for (unsigned n = 1; n <= 3; ++n) {
                Polynomial x = Polynomial::var(VarId("x"));
                Polynomial y = Polynomial::var(VarId("y"));
                Polynomial z = Polynomial::var(VarId("z"));
                Polynomial c = Polynomial::var(VarId("c"));
                Polynomial u = Polynomial::var(VarId("u"));
                Polynomial cun = c * u.pow(n);
                Polynomial lhs = (x + Rational(1, 2) * cun).pow(2) + y.pow(2) - z.pow(2) -
                                 cun * (x + Rational(1, 4) * cun);
                record("pyth-shift substitution reduces by x^2+y^2-z^2 (n=" + std::to_string(n) + ")",
                       identity_holds(lhs, Polynomial(), x.pow(2) + y.pow(2) - z.pow(2)), true);
            }
            {
                Polynomial x = Polynomial::var(VarId("x"));
                Polynomial y = Polynomial::var(VarId("y"));
                Polynomial z = Polynomial::var(VarId("z"));
                Polynomial c = Polynomial::var(VarId("c"));
                Polynomial d = Polynomial::var(VarId("d"));
                Polynomial half = Rational(1, 2) * c * d;
                for (int sign : {+1, -1}) {
                    Polynomial ypm = (sign > 0) ? y + half : y - half;
                    Polynomial lhs = (z + half).pow(2) - ypm.pow(2);
                    Polynomial rhs = x.pow(2) + c * (z * d - Rational(sign) * y * d);
                    record(std::string("pyth-pm identity (sign ") + (sign > 0 ? "+" : "-") + ")",
                           identity_holds(lhs, rhs, x.pow(2) + y.pow(2) - z.pow(2)), true);
                }
            }
            // LN witness residual: corrected index n-1 exact, printed index n not
            for (unsigned q_upper_n = 0; q_upper_n <= 1; ++q_upper_n) {
                bool ok = true;
                for (unsigned n = 2; n <= 4 && ok; ++n) {
                    for (unsigned j = 1; j <= n - 1 && ok; ++j) {
                        Int b = int_pow(Int(2), j + 2);
                        WitnessReport w = ln_witness(Int(2), Rational(4), n, j, b, Int(4),
                                                     q_upper_n ? LnQIndex::UpperN
                                                               : LnQIndex::UpperNMinus1);
                        ok = ok && w.valid;
                    }
                }
                record(q_upper_n ? "ln witness with Q upper index n"
                                 : "ln witness with Q upper index n-1",
                       ok, q_upper_n == 0);
            }
            out.result("checks", results);
            out.emit();
            return all_true ? ExitYes : ExitNo;
        }
        if (id_lhs.empty() || id_rhs.empty())
            throw Error(ErrorKind::BadParameters, "identity needs --lhs and --rhs (or --corpus)");
        Polynomial lhs = parse_polynomial(id_lhs);
        Polynomial rhs = parse_polynomial(id_rhs);
        std::optional<Polynomial> relation;
        if (!id_relation.empty())
            relation = parse_polynomial(id_relation);
        bool holds = identity_holds(lhs, rhs, relation);
        out.header("identity", {{"lhs", id_lhs}, {"rhs", id_rhs}, {"relation", id_relation}});
        out.result("holds", holds);
        out.text(holds ? "identity" : "not an identity");
        out.emit();
        return holds ? ExitYes : ExitNo;
    }

    return ExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error: bad arguments (see --help)\n";
        return ExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return ExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitUsage;
    }
}
