// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/forward_closure.hpp"
#include "oracles/fourier_motzkin.hpp"
#include "oracles/truth_table.hpp"
#include "pjsat/jsem.hpp"
#include "pjsat/parser.hpp"
#include "pjsat/solver.hpp"
#include "support/atoms.hpp"
#include "support/generators.hpp"
#include "support/shrink_check.hpp"

using namespace pjsat;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> details;  // first few failures
    std::size_t failures = 0;

    void fail(const std::string& why) {
        pass = false;
        if (failures++ < 5) details.push_back(why);
    }
};

void report(int id, const std::string& name, const Verdict& v, const std::string& summary, double seconds) {
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << summary;
    std::cout << " [" << std::fixed;
    std::cout.precision(1);
    std::cout << seconds << "s]\n";
    for (const auto& d : v.details) std::cout << "    " << d << "\n";
    if (v.failures > v.details.size()) std::cout << "    ... " << v.failures - v.details.size() << " more\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

JFormula j(std::string_view s) { return parse_jformula(s); }

// ---------------------------------------------------------------------------
// Criterion 1 corpus: every combination of a Boolean shape, bodies from a family
// pool and thresholds from the fixed set. Each family's bodies range over at most
// three basic formulas.

struct Family {
    std::string name;
    std::vector<JFormula> bodies;
};

std::vector<Family> families() {
    return {
        {"propositional", {j("p1"), j("~p1"), j("p2"), j("p1 & p2"), j("~(p1 & ~p3)")}},
        {"sum-closure", {j("t:p1"), j("(t+s):p1"), j("~(t+s):p1"), j("t:p1 & ~(t+s):p1"), j("p1 & ~t:p1")}},
        {"mixed", {j("p1"), j("t:p1"), j("~p2"), j("t:p1 & ~p1"), j("p1 | p2")}},
    };
}

using Shape = std::function<PFormula(const std::vector<PFormula>&)>;

std::vector<std::vector<Shape>> shapes() {
    auto N = [](PFormula a) { return PFormula::negation(std::move(a)); };
    auto A = [](PFormula a, PFormula b) { return PFormula::conjunction(std::move(a), std::move(b)); };
    using L = const std::vector<PFormula>&;
    return {
        {},
        {[](L x) { return x[0]; }, [=](L x) { return N(x[0]); }},
        {[=](L x) { return A(x[0], x[1]); }, [=](L x) { return A(x[0], N(x[1])); },
         [=](L x) { return A(N(x[0]), N(x[1])); }, [=](L x) { return N(A(x[0], x[1])); }},
        {[=](L x) { return A(A(x[0], x[1]), x[2]); }, [=](L x) { return A(x[0], A(N(x[1]), N(x[2]))); },
         [=](L x) { return A(N(A(x[0], x[1])), x[2]); }, [=](L x) { return N(A(A(x[0], N(x[1])), x[2])); }},
    };
}

std::vector<PFormula> corpus() {
    const auto thresholds = gen::standard_thresholds();
    const auto all_shapes = shapes();
    std::vector<PFormula> out;
    for (const auto& fam : families()) {
        const std::size_t b = fam.bodies.size();
        for (std::size_t k = 1; k <= 3; ++k) {
            // Body tuples: all ordered tuples for k <= 2, strictly increasing triples for k = 3.
            std::vector<std::vector<std::size_t>> tuples;
            if (k == 1)
                for (std::size_t x = 0; x < b; ++x) tuples.push_back({x});
            if (k == 2)
                for (std::size_t x = 0; x < b; ++x)
                    for (std::size_t y = 0; y < b; ++y) tuples.push_back({x, y});
            if (k == 3)
                for (std::size_t x = 0; x < b; ++x)
                    for (std::size_t y = x + 1; y < b; ++y)
                        for (std::size_t z = y + 1; z < b; ++z) tuples.push_back({x, y, z});
            std::size_t combos = 1;
            for (std::size_t i = 0; i < k; ++i) combos *= thresholds.size();
            for (const auto& tuple : tuples)
                for (std::size_t c = 0; c < combos; ++c) {
                    std::vector<PFormula> leaves;
                    std::size_t rest = c;
                    for (std::size_t i = 0; i < k; ++i) {
                        leaves.push_back(PFormula::at_least(thresholds[rest % thresholds.size()], fam.bodies[tuple[i]]));
                        rest /= thresholds.size();
                    }
                    for (const auto& shape : all_shapes[k]) out.push_back(shape(leaves));
                }
        }
    }
    return out;
}

// The oracle's own reading of a formula: its distinct P>= occurrences, every
// satisfying assignment, and one linear system per assignment over the
// J-satisfiable atoms with truth-table coefficients.
void occurrences(const PFormula& f, std::vector<PFormula>& out) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast:
            for (const auto& g : out)
                if (g == f) return;
            out.push_back(f);
            return;
        case PFormula::Kind::Not: occurrences(f.body(), out); return;
        case PFormula::Kind::And:
            occurrences(f.left(), out);
            occurrences(f.right(), out);
            return;
    }
}

bool eval_with(const PFormula& f, const std::vector<PFormula>& occ, const std::vector<bool>& value) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast:
            for (std::size_t i = 0; i < occ.size(); ++i)
                if (occ[i] == f) return value[i];
            return false;
        case PFormula::Kind::Not: return !eval_with(f.body(), occ, value);
        case PFormula::Kind::And: return eval_with(f.left(), occ, value) && eval_with(f.right(), occ, value);
    }
    return false;
}

bool oracle_sat(const PFormula& f, const ConstantSpec& cs) {
    std::vector<Atom> atoms;
    for (const Atom& a : atoms_of(f))
        if (atom_jsat(a, cs)) atoms.push_back(a);
    std::vector<oracle::Assignment> tables;
    for (const auto& a : atoms) tables.push_back(oracle::assignment_of(a));

    std::vector<PFormula> occ;
    occurrences(f, occ);
    const std::size_t k = occ.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<bool> value(k);
        for (std::size_t i = 0; i < k; ++i) value[i] = (mask >> i) & 1U;
        if (!eval_with(f, occ, value)) continue;
        LinearSystem s(atoms.size());
        s.add_row(std::vector<Rational>(atoms.size(), 1), Relation::Eq, 1);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Rational> row(atoms.size());
            for (std::size_t a = 0; a < atoms.size(); ++a)
                row[a] = oracle::truth_table_eval(occ[i].jbody(), tables[a]) ? 1 : 0;
            s.add_row(std::move(row), value[i] ? Relation::Ge : Relation::Lt, occ[i].threshold());
        }
        if (oracle::fm_feasible(s)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Criterion 2: the small-model conditions, checked here without the library's
// certificate code.

bool truth_table_measure_holds(const SmallModel& m, const PFormula& f) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: {
            Rational mu = 0;
            for (const auto& w : m.worlds)
                if (oracle::truth_table_eval(f.jbody(), oracle::assignment_of(w.atom))) mu += w.weight;
            return mu >= f.threshold();
        }
        case PFormula::Kind::Not: return !truth_table_measure_holds(m, f.body());
        case PFormula::Kind::And: return truth_table_measure_holds(m, f.left()) && truth_table_measure_holds(m, f.right());
    }
    return false;
}

std::vector<std::string> model_violations(const SmallModel& m, const PFormula& f, const ConstantSpec& cs) {
    std::vector<std::string> out;
    const std::size_t a = size_p(f);
    const std::size_t n = norm(f);
    const std::size_t w = m.worlds.size();
    if (w == 0 || w > a) out.push_back(std::to_string(w) + " worlds, |A| = " + std::to_string(a));

    Rational total = 0;
    for (const auto& x : m.worlds) {
        if (x.weight <= 0) out.push_back("non-positive weight " + to_string(x.weight));
        total += x.weight;
    }
    if (total != 1) out.push_back("weights sum to " + to_string(total));
    // Every subset is an event; its measure is the sum of its singletons and lies in [0, 1].
    for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
        Rational in = 0;
        for (std::size_t i = 0; i < w; ++i)
            if ((mask >> i) & 1U) in += m.worlds[i].weight;
        if (in < 0 || in > 1) out.push_back("subset measure out of range");
    }

    const long double bound = 2.0L * (static_cast<long double>(a) * n + a * std::log2(static_cast<long double>(a)) + 1);
    for (const auto& x : m.worlds) {
        const std::size_t size = size_of(Integer(abs(x.weight.get_num()))) + size_of(Integer(x.weight.get_den()));
        if (static_cast<long double>(size) > bound + 1e-9L)
            out.push_back("weight " + to_string(x.weight) + " of size " + std::to_string(size) + " over bound");
    }

    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t k = i + 1; k < w; ++k)
            if (m.worlds[i].atom.signs() == m.worlds[k].atom.signs()) out.push_back("repeated atom");
    for (const auto& x : m.worlds)
        if (!atom_jsat(x.atom, cs)) out.push_back("J-unsatisfiable world " + to_string(x.atom));

    if (!check_model(m, f)) out.push_back("check_model is false");
    if (!truth_table_measure_holds(m, f)) out.push_back("truth-table evaluation of the model is false");
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 6: atoms with up to four positive assertions and negatives aimed at
// their one-step consequences.

struct AtomSpec {
    std::vector<std::pair<JFormula, bool>> lits;
};

std::size_t term_depth(const Term& t) { return t.depth(); }

AtomSpec closure_atom(gen::Gen& g) {
    static const std::vector<std::string> base_terms{"s", "t", "u"};
    static const std::vector<std::string> all_constants{"s", "t", "u", "c1", "c2", "c3", "c4", "c5", "c6"};
    const std::vector<JFormula> bodies{j("p1"),           j("p2"),        j("p1 -> p2"),        j("~p1"),
                                       j("s:p1"),         j("s:(p1 -> p2)"), j("t:p1"),          j("p2 -> p1")};
    for (;;) {
        AtomSpec spec;
        std::set<JFormula> seen;
        auto add = [&](const JFormula& b, bool sign) {
            if (seen.insert(b).second) spec.lits.emplace_back(b, sign);
        };
        std::vector<std::pair<Term, JFormula>> pos;
        const std::size_t npos = 1 + g.below(4);
        for (std::size_t i = 0; i < npos; ++i) {
            Term t = g.term(2, base_terms, 0);
            JFormula b = g.pick(bodies);
            pos.emplace_back(t, b);
            add(JFormula::assertion(t, b), true);
        }
        const std::size_t nneg = 1 + g.below(3);
        for (std::size_t i = 0; i < nneg; ++i) {
            const auto& [t1, b1] = g.pick(pos);
            const auto& [t2, b2] = g.pick(pos);
            Term r = g.term(1, all_constants, 0);
            JFormula target = j("p1");
            Term term = t1;
            switch (g.below(7)) {
                case 0: term = g.coin() ? Term::sum(t1, r) : Term::sum(r, t1); target = b1; break;
                case 1:
                    term = Term::app(t1, t2);
                    // Modus ponens target when b1 is an implication, else a guess.
                    if (b1.kind() == JFormula::Kind::Not && b1.body().kind() == JFormula::Kind::And &&
                        b1.body().right().kind() == JFormula::Kind::Not)
                        target = b1.body().right().body();
                    else
                        target = g.pick(bodies);
                    break;
                case 2: term = Term::constant("c1"); target = implies(b1, implies(b2, b1)); break;
                case 3: term = Term::app(Term::constant("c1"), t1); target = implies(b2, b1); break;
                case 4:
                    term = Term::app(Term::constant(g.coin() ? "c5" : "c6"), t1);
                    target = b1.kind() == JFormula::Kind::Assert
                                 ? JFormula::assertion(g.coin() ? Term::sum(b1.term(), r) : Term::sum(r, b1.term()),
                                                       b1.body())
                                 : b1;
                    break;
                case 5:
                    term = Term::app(Term::app(Term::constant("c4"), t1), t2);
                    target = b1.kind() == JFormula::Kind::Assert && b2.kind() == JFormula::Kind::Assert
                                 ? JFormula::assertion(Term::app(b1.term(), b2.term()), j("p2"))
                                 : j("p2");
                    break;
                default: term = g.term(3, all_constants, 0); target = g.pick(bodies); break;
            }
            add(JFormula::assertion(term, target), false);
        }
        if (g.coin(0.3)) add(j("p1"), g.coin());
        bool ok = true;
        for (const auto& [b, sign] : spec.lits)
            ok = ok && (b.kind() != JFormula::Kind::Assert || term_depth(b.term()) <= 3);
        std::size_t positives = 0;
        for (const auto& [b, sign] : spec.lits) positives += sign && b.kind() == JFormula::Kind::Assert;
        if (ok && positives <= 4) return spec;
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: JFormulas built from application and sum traps.

JFormula trap_formula(gen::Gen& g) {
    static const std::vector<std::vector<std::string>> traps{
        {"s:(p1 -> p2)", "t:p1", "(s.t):p2"},
        {"t:p1", "(t+u):p1", "(u+t):p1"},
        {"u:s:(p1 -> p2)", "v:t:p1", "((c4.u).v):(s.t):p2"},
        {"t:p2", "(c1.t):(p1 -> p2)", "c1:(p2 -> (p1 -> p2))"},
        {"s:~(p1 & ~p2)", "t:p1", "(s.t):p2"},
    };
    const auto& trap = g.pick(traps);
    std::vector<JFormula> pool;
    for (const auto& x : trap) pool.push_back(j(x));
    // Either the trap itself (premises plus negated conclusion) or a random mix.
    if (g.coin(0.35)) {
        JFormula f = JFormula::negation(pool.back());
        for (std::size_t i = 0; i + 1 < pool.size(); ++i) f = JFormula::conjunction(pool[i], f);
        if (g.coin()) f = JFormula::conjunction(f, g.jformula(2, 2));
        return f;
    }
    return g.jformula(4, 2, pool);
}

// ---------------------------------------------------------------------------
// Criterion 7: rewrite one or all AtLeast bodies.

PFormula rewrite(const PFormula& f, const std::function<JFormula(const JFormula&)>& r, int& index, int target) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: {
            int mine = index++;
            if (target < 0 || mine == target) return PFormula::at_least(f.threshold(), r(f.jbody()));
            return f;
        }
        case PFormula::Kind::Not: return PFormula::negation(rewrite(f.body(), r, index, target));
        case PFormula::Kind::And: {
            PFormula left = rewrite(f.left(), r, index, target);
            return PFormula::conjunction(left, rewrite(f.right(), r, index, target));
        }
    }
    return f;
}

int count_at_least(const PFormula& f) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: return 1;
        case PFormula::Kind::Not: return count_at_least(f.body());
        case PFormula::Kind::And: return count_at_least(f.left()) + count_at_least(f.right());
    }
    return 0;
}

}  // namespace

int main() {
    const ConstantSpec cs = default_cs();
    bool all = true;
    using clock = std::chrono::steady_clock;

    // 1 and 2 share the corpus.
    {
        auto t0 = clock::now();
        const auto formulas = corpus();
        Verdict c1, c2;
        std::size_t sat = 0, models = 0;
        double c2_seconds = 0;
        for (const auto& f : formulas) {
            SatResult r = solve_sat(f, cs);
            bool expected = oracle_sat(f, cs);
            if (r.sat != expected)
                c1.fail(to_string(f) + ": solver " + (r.sat ? "SAT" : "UNSAT") + ", oracle " +
                        (expected ? "SAT" : "UNSAT"));
            if (!r.sat) continue;
            ++sat;
            auto t2 = clock::now();
            if (!r.model) {
                c2.fail(to_string(f) + ": SAT without a model");
            } else {
                ++models;
                for (const auto& v : model_violations(*r.model, f, cs)) c2.fail(to_string(f) + ": " + v);
            }
            c2_seconds += seconds_since(t2);
        }
        const double total = seconds_since(t0);
        report(1, "oracle equivalence", c1,
               std::to_string(formulas.size()) + " formulas (" + std::to_string(sat) + " SAT), " +
                   std::to_string(c1.failures) + " disagreements with Fourier-Motzkin",
               total - c2_seconds);
        report(2, "small-model certification", c2,
               std::to_string(models) + " models, " + std::to_string(c2.failures) + " violations", c2_seconds);
        all = all && c1.pass && c2.pass;
    }

    // 3: shrink_solution on planted systems.
    {
        auto t0 = clock::now();
        gen::Gen g(20231);
        Verdict v;
        std::size_t reduced = 0;
        for (int i = 0; i < 200; ++i) {
            auto [s, x] = gen::planted_system(g, 5, 6);
            Solution y = shrink_solution(s, x);
            reduced += positive_count(y) < positive_count(x);
            for (const auto& e : gen::shrink_violations(s, x, y)) v.fail("system " + std::to_string(i) + ": " + e);
        }
        report(3, "small solutions", v,
               "200 systems, " + std::to_string(reduced) + " with reduced support, " + std::to_string(v.failures) +
                   " violations",
               seconds_since(t0));
        all = all && v.pass;
    }

    // 4: jformula_sat against the lifted probabilistic problem.
    {
        auto t0 = clock::now();
        gen::Gen g(4099);
        Verdict v;
        std::size_t sat = 0;
        for (int i = 0; i < 100; ++i) {
            JFormula alpha = trap_formula(g);
            bool direct = jformula_sat(alpha, cs);
            bool lifted = solve_sat(lift_to_p1(alpha), cs).sat;
            sat += direct;
            if (direct != lifted)
                v.fail(to_string(alpha) + ": jformula_sat " + (direct ? "true" : "false") + ", P>=1 " +
                       (lifted ? "SAT" : "UNSAT"));
        }
        report(4, "P>=1 reduction", v,
               "100 formulas (" + std::to_string(sat) + " satisfiable), " + std::to_string(v.failures) +
                   " disagreements",
               seconds_since(t0));
        all = all && v.pass;
    }

    // 5: evaluation under atoms.
    {
        auto t0 = clock::now();
        gen::Gen g(8191);
        Verdict v;
        std::size_t invariance_checks = 0;
        for (int i = 0; i < 1000; ++i) {
            JFormula phi = g.any_jformula(5);
            Basis own = basis_of(phi);
            if (own.size() > 12) {
                --i;
                continue;
            }
            std::vector<std::pair<JFormula, bool>> lits;
            for (const auto& b : own) lits.emplace_back(b, g.coin());
            Atom a = gen::atom_from(lits);
            bool value = eval_under_atom(phi, a);
            if (value != oracle::truth_table_eval(phi, oracle::assignment_of(a)))
                v.fail(to_string(phi) + " under " + to_string(a) + ": disagrees with truth table");

            // Extra basis entries not occurring in phi, with arbitrary signs.
            auto wide = lits;
            std::set<JFormula> present(own.begin(), own.end());
            for (int k = 0; k < 3; ++k) {
                JFormula extra = g.coin() ? JFormula::prop(static_cast<unsigned>(10 + g.below(5)))
                                          : JFormula::assertion(Term::constant("w" + std::to_string(g.below(5))),
                                                                JFormula::prop(static_cast<unsigned>(g.below(4))));
                if (present.insert(extra).second) wide.emplace_back(extra, g.coin());
            }
            for (int flip = 0; flip < 4; ++flip) {
                for (std::size_t k = lits.size(); k < wide.size(); ++k) wide[k].second = g.coin();
                ++invariance_checks;
                if (eval_under_atom(phi, gen::atom_from(wide)) != value)
                    v.fail(to_string(phi) + ": value changed with entries outside the formula");
            }
        }
        report(5, "evaluation under atoms", v,
               "1000 pairs, " + std::to_string(invariance_checks) + " invariance checks, " +
                   std::to_string(v.failures) + " disagreements",
               seconds_since(t0));
        all = all && v.pass;
    }

    // 6: derivation search against forward saturation.
    {
        auto t0 = clock::now();
        gen::Gen g(131071);
        Verdict v;
        std::size_t unsat = 0;
        for (int i = 0; i < 100; ++i) {
            Atom a = gen::atom_from(closure_atom(g).lits);
            bool search = atom_jsat(a, cs);
            bool closure = oracle::ForwardClosure(a, cs).consistent();
            unsat += !search;
            if (search != closure)
                v.fail(to_string(a) + ": derives says " + (search ? "J-sat" : "J-unsat") + ", closure says " +
                       (closure ? "J-sat" : "J-unsat"));
        }
        report(6, "derivation search", v,
               "100 atoms (" + std::to_string(unsat) + " J-unsatisfiable), " + std::to_string(v.failures) +
                   " disagreements with forward closure",
               seconds_since(t0));
        all = all && v.pass;
    }

    // 7: equivalent bodies leave the verdict unchanged.
    {
        auto t0 = clock::now();
        const auto formulas = corpus();
        Verdict v;
        std::size_t variants = 0, sat = 0;
        const auto twice = [](const JFormula& a) { return JFormula::conjunction(a, a); };
        const auto double_neg = [](const JFormula& a) { return JFormula::negation(JFormula::negation(a)); };
        const std::size_t stride = formulas.size() / 100;
        for (std::size_t n = 0; n < 100; ++n) {
            const PFormula& f = formulas[n * stride + (n * 7919) % stride];
            const bool base = solve_sat(f, cs).sat;
            sat += base;
            const int occ = count_at_least(f);
            for (const auto& r : {std::function<JFormula(const JFormula&)>(twice),
                                  std::function<JFormula(const JFormula&)>(double_neg)}) {
                for (int target = -1; target < occ; ++target) {
                    int index = 0;
                    PFormula g = rewrite(f, r, index, target);
                    ++variants;
                    if (solve_sat(g, cs).sat != base) v.fail(to_string(f) + " vs " + to_string(g));
                }
            }
        }
        report(7, "metamorphic equivalence", v,
               "100 formulas (" + std::to_string(sat) + " SAT), " + std::to_string(variants) + " variants, " +
                   std::to_string(v.failures) + " verdict changes",
               seconds_since(t0));
        all = all && v.pass;
    }

    return all ? 0 : 1;
}
