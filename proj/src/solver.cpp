#include "pjsat/solver.hpp"

#include <cstdint>
#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pjsat/errors.hpp"
#include "pjsat/jsem.hpp"
#include "pjsat/parser.hpp"

namespace pjsat {
namespace {

void collect_occurrences(const PFormula& f, std::vector<PFormula>& out) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast:
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
            break;
        case PFormula::Kind::Not: collect_occurrences(f.body(), out); break;
        case PFormula::Kind::And:
            collect_occurrences(f.left(), out);
            collect_occurrences(f.right(), out);
            break;
    }
}

bool eval_boolean(const PFormula& f, const std::function<bool(const PFormula&)>& leaf) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: return leaf(f);
        case PFormula::Kind::Not: return !eval_boolean(f.body(), leaf);
        case PFormula::Kind::And: return eval_boolean(f.left(), leaf) && eval_boolean(f.right(), leaf);
    }
    return false;
}

std::string weight_violation(std::size_t i, const Rational& w, std::size_t a, std::size_t n) {
    std::ostringstream os;
    os << "world " << i + 1 << ": weight " << to_fraction_string(w) << " has size " << size_of(w)
       << " > bound " << size_bound_value(a, n);
    return os.str();
}

}  // namespace

PDnf p_dnf(const PFormula& f, std::size_t cap) {
    std::vector<PFormula> occ;
    collect_occurrences(f, occ);
    if (occ.size() > cap || occ.size() >= 63)
        throw ResourceError("formula has " + std::to_string(occ.size()) +
                            " distinct probability operators; DNF cap is " + std::to_string(cap));
    PDnf dnf;
    const std::size_t k = occ.size();
    const std::uint64_t count = std::uint64_t{1} << k;
    std::vector<bool> value(k);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t j = 0; j < k; ++j) value[j] = ((mask >> (k - 1 - j)) & 1U) == 0;
        auto leaf = [&](const PFormula& g) {
            auto it = std::find(occ.begin(), occ.end(), g);
            return static_cast<bool>(value[static_cast<std::size_t>(it - occ.begin())]);
        };
        if (!eval_boolean(f, leaf)) continue;
        std::vector<PLiteral> conj;
        for (std::size_t j = 0; j < k; ++j)
            conj.push_back({occ[j].jbody(), value[j] ? PRelation::Ge : PRelation::Lt, occ[j].threshold()});
        dnf.disjuncts.push_back(std::move(conj));
    }
    return dnf;
}

LinearSystem build_system(const std::vector<PLiteral>& conj, const std::vector<Atom>& sat_atoms) {
    const std::size_t n = sat_atoms.size();
    LinearSystem s(n);
    s.add_row(std::vector<Rational>(n, Rational(1)), Relation::Eq, 1);
    for (const auto& lit : conj) {
        std::vector<Rational> coeffs(n);
        for (std::size_t k = 0; k < n; ++k)
            if (eval_under_atom(lit.body, sat_atoms[k])) coeffs[k] = 1;
        s.add_row(std::move(coeffs), lit.rel == PRelation::Ge ? Relation::Ge : Relation::Lt, lit.threshold);
    }
    return s;
}

Rational SmallModel::measure(const std::function<bool(const Atom&)>& event) const {
    Rational total = 0;
    for (const auto& w : worlds)
        if (event(w.atom)) total += w.weight;
    return total;
}

SatResult solve_sat(const PFormula& f, const ConstantSpec& cs, const SolveOptions& opts) {
    Basis basis = basis_of(f);
    std::vector<Atom> sat_atoms;
    for (Atom& a : atoms_of(basis, opts.atom_cap))
        if (atom_jsat(a, cs)) sat_atoms.push_back(std::move(a));

    PDnf dnf = p_dnf(f, opts.atom_cap);
    for (std::size_t i = 0; i < dnf.disjuncts.size(); ++i) {
        LinearSystem system = build_system(dnf.disjuncts[i], sat_atoms);
        if (opts.on_system) opts.on_system(i, system);
        std::optional<Solution> x = feasible(system);
        if (!x) continue;

        // Shrinking runs on the integer form so the size bound is stated in its terms;
        // both forms have the same solutions.
        Integerized integer = integerize(system);
        Solution y = shrink_solution(integer.system, *x);

        SmallModel model;
        model.basis = sat_atoms.empty() ? std::make_shared<const Basis>(basis) : sat_atoms.front().shared_basis();
        for (std::size_t k = 0; k < y.size(); ++k)
            if (sgn(y[k]) > 0) model.worlds.push_back({sat_atoms[k], y[k]});

        Certificate cert = certify(model, f, cs);
        if (!cert.ok()) {
            std::string why;
            for (const auto& v : cert.violations) why += "\n  " + v;
            throw std::logic_error("solve_sat: emitted model failed certification:" + why);
        }
        return {true, std::move(model), i};
    }
    return {};
}

bool check_model(const SmallModel& m, const PFormula& f) {
    for (const auto& b : basis_of(f))
        if (!std::binary_search(m.basis->begin(), m.basis->end(), b, basis_less))
            throw BasisMismatch("model basis lacks '" + to_string(b) + "'");
    return eval_boolean(f, [&](const PFormula& p) {
        Rational mu = m.measure([&](const Atom& a) { return eval_under_atom(p.jbody(), a); });
        return mu >= p.threshold();
    });
}

Certificate certify(const SmallModel& m, const PFormula& f, const ConstantSpec& cs) {
    Certificate c;
    const std::size_t a_size = size_p(f);
    const std::size_t a_norm = norm(f);
    const std::size_t w = m.worlds.size();

    c.worlds_within_size = w <= a_size;
    if (!c.worlds_within_size)
        c.violations.push_back(std::to_string(w) + " worlds exceed |A| = " + std::to_string(a_size));

    bool positive = std::all_of(m.worlds.begin(), m.worlds.end(), [](const World& x) { return sgn(x.weight) > 0; });
    Rational total = m.measure([](const Atom&) { return true; });
    c.powerset_algebra = positive && total == 1;
    if (!positive) c.violations.push_back("a world has non-positive weight");
    if (total != 1) c.violations.push_back("weights sum to " + to_string(total) + ", not 1");

    c.weight_sizes = true;
    for (std::size_t i = 0; i < w; ++i)
        if (!within_size_bound(size_of(m.worlds[i].weight), a_size, a_norm)) {
            c.weight_sizes = false;
            c.violations.push_back(weight_violation(i, m.worlds[i].weight, a_size, a_norm));
        }

    // Additivity over the full powerset: mu(V) + mu(W \ V) = mu(W) with mu(V) taken as
    // the sum over V. Enumerated outright for small W.
    c.additive = true;
    if (w <= 16) {
        for (std::uint32_t mask = 0; mask < (1U << w); ++mask) {
            Rational in = 0, out = 0;
            for (std::size_t i = 0; i < w; ++i) ((mask >> i) & 1U ? in : out) += m.worlds[i].weight;
            if (in < 0 || in > 1 || in + out != total) {
                c.additive = false;
                c.violations.push_back("measure is not additive on subset mask " + std::to_string(mask));
                break;
            }
        }
    }

    c.atoms_distinct = true;
    for (std::size_t i = 0; i < w && c.atoms_distinct; ++i)
        for (std::size_t j = i + 1; j < w; ++j)
            if (m.worlds[i].atom == m.worlds[j].atom) {
                c.atoms_distinct = false;
                c.violations.push_back("worlds " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                       " carry the same atom");
                break;
            }

    c.satisfies = check_model(m, f);
    if (!c.satisfies) c.violations.push_back("model does not satisfy the formula");

    c.worlds_jsat = true;
    for (std::size_t i = 0; i < w; ++i)
        if (!atom_jsat(m.worlds[i].atom, cs)) {
            c.worlds_jsat = false;
            c.violations.push_back("world " + std::to_string(i + 1) + " carries a J-unsatisfiable atom");
        }
    return c;
}

bool valid(const PFormula& f, const ConstantSpec& cs, const SolveOptions& opts) {
    return !solve_sat(PFormula::negation(f), cs, opts).sat;
}

PFormula lift_to_p1(const JFormula& alpha) { return PFormula::at_least(1, alpha); }

std::string format_result(const SatResult& r) {
    if (!r.sat) return "UNSAT\n";
    std::string out = "SAT\n";
    const auto& worlds = r.model->worlds;
    for (std::size_t i = 0; i < worlds.size(); ++i)
        out += "world " + std::to_string(i + 1) + " weight " + to_fraction_string(worlds[i].weight) + " atom " +
               to_string(worlds[i].atom) + "\n";
    out += "check PASS\n";
    return out;
}

namespace {

void flatten_conjunction(const JFormula& f, std::vector<JFormula>& out) {
    if (f.kind() == JFormula::Kind::And) {
        flatten_conjunction(f.left(), out);
        flatten_conjunction(f.right(), out);
    } else {
        out.push_back(f);
    }
}

}  // namespace

SmallModel parse_model(std::string_view text) {
    SmallModel m;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t offset = 0;
    bool header = false, trailer = false;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        if (!header) {
            if (line != "SAT") throw ParseError("model must start with SAT", line_offset);
            header = true;
            continue;
        }
        if (line.rfind("check ", 0) == 0) {
            trailer = true;
            continue;
        }
        if (trailer) throw ParseError("content after check trailer", line_offset);

        std::istringstream ls(line);
        std::string kw_world, index, kw_weight, weight, kw_atom;
        ls >> kw_world >> index >> kw_weight >> weight >> kw_atom;
        if (kw_world != "world" || kw_weight != "weight" || kw_atom != "atom")
            throw ParseError("expected 'world <i> weight <n>/<d> atom <literals>'", line_offset);
        std::string atom_text;
        std::getline(ls, atom_text);

        Rational w;
        try {
            w = parse_rational(weight);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad weight: ") + e.what(), line_offset);
        }

        std::vector<JFormula> literals;
        try {
            flatten_conjunction(parse_jformula(atom_text), literals);
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad atom: ") + e.what(), line_offset);
        }
        std::vector<JFormula> basics;
        std::vector<bool> signs;
        for (const auto& lit : literals) {
            bool negative = lit.kind() == JFormula::Kind::Not;
            const JFormula& b = negative ? lit.body() : lit;
            if (!b.is_basic()) throw ParseError("atom literal is not a basic formula", line_offset);
            basics.push_back(b);
            signs.push_back(!negative);
        }
        Basis basis = canonical_basis(basics);
        if (basis.size() != basics.size()) throw ParseError("atom repeats a basic formula", line_offset);
        if (!m.basis) {
            m.basis = std::make_shared<const Basis>(basis);
        } else if (*m.basis != basis) {
            throw ParseError("worlds disagree on the atom basis", line_offset);
        }
        std::vector<bool> ordered(basis.size());
        for (std::size_t i = 0; i < basics.size(); ++i) {
            auto it = std::lower_bound(basis.begin(), basis.end(), basics[i], basis_less);
            ordered[static_cast<std::size_t>(it - basis.begin())] = signs[i];
        }
        m.worlds.push_back({Atom(m.basis, std::move(ordered)), w});
    }
    if (!header) throw ParseError("empty model", 0);
    if (!m.basis) m.basis = std::make_shared<const Basis>();
    return m;
}

}  // namespace pjsat
