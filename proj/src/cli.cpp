#include "pjsat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pjsat/cspec.hpp"
#include "pjsat/errors.hpp"
#include "pjsat/jsem.hpp"
#include "pjsat/parser.hpp"
#include "pjsat/solver.hpp"

namespace pjsat::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string formula_source(const RunConfig& cfg) {
    if (cfg.formula_text) return *cfg.formula_text;
    if (cfg.formula_path.empty()) throw UsageError("no formula given");
    return read_file(cfg.formula_path);
}

ConstantSpec load_cs(const RunConfig& cfg, std::ostream& err) {
    ConstantSpec cs = cfg.cs_path ? parse_cs(read_file(*cfg.cs_path)) : default_cs();
    cs.flags.require_injective = cfg.require_injective;
    cs.flags.require_appropriate = cfg.require_appropriate;
    auto diagnostics = validate(cs);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) err << "constant specification: " << d.message << "\n";
        throw UsageError("constant specification does not meet the requested flags");
    }
    return cs;
}

SolveOptions solve_options(const RunConfig& cfg, std::ostream& out) {
    SolveOptions opts;
    opts.atom_cap = cfg.atom_cap;
    if (cfg.dump_lp)
        opts.on_system = [&out](std::size_t disjunct, const LinearSystem& s) {
            out << "# lp disjunct " << disjunct + 1 << "\n" << dump_lp(s);
        };
    return opts;
}

int run_sat(const RunConfig& cfg, const ConstantSpec& cs, std::ostream& out) {
    PFormula f = parse_pformula(formula_source(cfg));
    SatResult r = solve_sat(f, cs, solve_options(cfg, out));
    std::string text = format_result(r);
    out << text;
    if (cfg.model_out) {
        std::ofstream file(*cfg.model_out, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + *cfg.model_out + "'");
        file << text;
    }
    return r.sat ? kYes : kNo;
}

int run_valid(const RunConfig& cfg, const ConstantSpec& cs, std::ostream& out) {
    PFormula f = parse_pformula(formula_source(cfg));
    bool v = valid(f, cs, solve_options(cfg, out));
    out << (v ? "VALID" : "NOT-VALID") << "\n";
    return v ? kYes : kNo;
}

int run_jsat(const RunConfig& cfg, const ConstantSpec& cs, std::ostream& out) {
    JFormula f = parse_jformula(formula_source(cfg));
    bool sat = jformula_sat(f, cs, cfg.atom_cap);
    out << (sat ? "true" : "false") << "\n";
    return sat ? kYes : kNo;
}

int run_atoms(const RunConfig& cfg, const ConstantSpec& cs, std::ostream& out) {
    std::string text = formula_source(cfg);
    Basis basis;
    try {
        basis = basis_of(parse_pformula(text));
    } catch (const ParseError&) {
        basis = basis_of(parse_jformula(text));
    }
    auto atoms = atoms_of(basis, cfg.atom_cap);
    for (std::size_t k = 0; k < atoms.size(); ++k)
        out << "atom " << k + 1 << " jsat " << (atom_jsat(atoms[k], cs) ? "true" : "false") << " "
            << to_string(atoms[k]) << "\n";
    return kYes;
}

int run_check(const RunConfig& cfg, const ConstantSpec& cs, std::ostream& out) {
    if (!cfg.model_path) throw UsageError("check requires --model");
    PFormula f = parse_pformula(formula_source(cfg));
    SmallModel m = parse_model(read_file(*cfg.model_path));
    Certificate c = certify(m, f, cs);
    for (const auto& v : c.violations) out << "violation: " << v << "\n";
    out << (c.ok() ? "check PASS" : "check FAIL") << "\n";
    return c.ok() ? kYes : kNo;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        ConstantSpec cs = load_cs(cfg, err);
        switch (cfg.command) {
            case Command::Sat: return run_sat(cfg, cs, out);
            case Command::Valid: return run_valid(cfg, cs, out);
            case Command::Jsat: return run_jsat(cfg, cs, out);
            case Command::Atoms: return run_atoms(cfg, cs, out);
            case Command::Check: return run_check(cfg, cs, out);
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decides satisfiability and validity of probabilistic justification formulas"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string cs_path, model_out, model_path, expr;

    auto common = [&](CLI::App* sub, bool probability) {
        sub->add_option("formula", cfg.formula_path, "Formula file ('-' for stdin)");
        sub->add_option("-e,--expr", expr, "Formula given inline");
        sub->add_option("--cs", cs_path, "Constant specification file");
        sub->add_option("--cap", cfg.atom_cap, "Atom enumeration cap (basic subformulas)")
            ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
        sub->add_flag("--require-injective", cfg.require_injective, "Reject CS that is not schematically injective");
        sub->add_flag("--require-appropriate", cfg.require_appropriate,
                      "Reject CS that is not axiomatically appropriate");
        if (probability) sub->add_flag("--dump-lp", cfg.dump_lp, "Print each linear system before solving it");
    };

    auto* sat = app.add_subcommand("sat", "Decide satisfiability and print a small model");
    common(sat, true);
    sat->add_option("--model-out", model_out, "Also write the model to this file");
    auto* val = app.add_subcommand("valid", "Decide validity");
    common(val, true);
    auto* jsat = app.add_subcommand("jsat", "Decide satisfiability of a justification formula");
    common(jsat, false);
    auto* atoms = app.add_subcommand("atoms", "List atoms with their J-satisfiability");
    common(atoms, false);
    auto* check = app.add_subcommand("check", "Re-verify a model file against a formula");
    common(check, false);
    check->add_option("--model", model_path, "Model file produced by 'sat'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; everything else is a usage error.
        return app.exit(e, out, err) == 0 ? kYes : kUsage;
    }

    if (*sat) cfg.command = Command::Sat;
    else if (*val) cfg.command = Command::Valid;
    else if (*jsat) cfg.command = Command::Jsat;
    else if (*atoms) cfg.command = Command::Atoms;
    else cfg.command = Command::Check;

    if (!expr.empty()) cfg.formula_text = expr;
    if (!cs_path.empty()) cfg.cs_path = cs_path;
    if (!model_out.empty()) cfg.model_out = model_out;
    if (!model_path.empty()) cfg.model_path = model_path;
    if (!cfg.formula_text && cfg.formula_path.empty()) {
        err << "usage error: give a formula file or --expr\n";
        return kUsage;
    }
    return run(cfg, out, err);
}

}  // namespace pjsat::cli
