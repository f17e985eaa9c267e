#include <gtest/gtest.h>

#include "pjsat/errors.hpp"
#include "pjsat/jsem.hpp"
#include "pjsat/parser.hpp"
#include "pjsat/solver.hpp"
#include "support/atoms.hpp"
#include "support/generators.hpp"

using namespace pjsat;

namespace {

PFormula p(std::string_view s) { return parse_pformula(s); }

const ConstantSpec& empty_cs() {
    static const ConstantSpec cs;
    return cs;
}

SmallModel model_of(std::initializer_list<std::pair<const char*, Rational>> worlds) {
    std::vector<Atom> atoms;
    for (const auto& [text, w] : worlds) atoms.push_back(gen::atom_of(text));
    SmallModel m;
    m.basis = atoms.front().shared_basis();
    std::size_t i = 0;
    for (const auto& [text, w] : worlds) {
        m.worlds.push_back({Atom(m.basis, atoms[i++].signs()), w});
    }
    return m;
}

}  // namespace

TEST(PDnf, SingleOccurrence) {
    PDnf d = p_dnf(p("P>=1/2 p1"));
    ASSERT_EQ(d.disjuncts.size(), 1u);
    ASSERT_EQ(d.disjuncts[0].size(), 1u);
    EXPECT_EQ(d.disjuncts[0][0], (PLiteral{parse_jformula("p1"), PRelation::Ge, Rational(1, 2)}));
}

TEST(PDnf, NegationAndConjunction) {
    PDnf d = p_dnf(p("~(P>=1/2 p1 & P>=1/3 p2)"));
    ASSERT_EQ(d.disjuncts.size(), 3u);
    // Assignments in binary order, true first: (T,F), (F,T), (F,F).
    EXPECT_EQ(d.disjuncts[0][0].rel, PRelation::Ge);
    EXPECT_EQ(d.disjuncts[0][1].rel, PRelation::Lt);
    EXPECT_EQ(d.disjuncts[1][0].rel, PRelation::Lt);
    EXPECT_EQ(d.disjuncts[1][1].rel, PRelation::Ge);
    EXPECT_EQ(d.disjuncts[2][0].rel, PRelation::Lt);
    EXPECT_EQ(d.disjuncts[2][1].rel, PRelation::Lt);
}

TEST(PDnf, RepeatedOccurrencesShareAVariable) {
    EXPECT_TRUE(p_dnf(p("P>=1/2 p1 & ~P>=1/2 p1")).disjuncts.empty());
    EXPECT_EQ(p_dnf(p("P>=1/2 p1 & P>=1/2 p1")).disjuncts.size(), 1u);
}

TEST(PDnf, Cap) {
    EXPECT_THROW(p_dnf(p("P>=1/2 p1 & P>=1/2 p2 & P>=1/2 p3"), 2), ResourceError);
}

// Each disjunct is a full assignment of the occurrences that makes the formula true.
TEST(PDnf, DisjunctsAreExactlyTheSatisfyingAssignments) {
    gen::Gen g(73);
    std::vector<JFormula> bodies{parse_jformula("p1"), parse_jformula("p2"), parse_jformula("p1 & p2")};
    for (int i = 0; i < 200; ++i) {
        PFormula f = g.pformula(5, bodies, gen::standard_thresholds());
        PDnf d = p_dnf(f);
        std::set<std::vector<bool>> listed;
        for (const auto& conj : d.disjuncts) {
            std::vector<bool> v;
            for (const auto& lit : conj) v.push_back(lit.rel == PRelation::Ge);
            EXPECT_TRUE(listed.insert(v).second);
            // Evaluate f with each occurrence fixed to its literal's polarity.
            std::function<bool(const PFormula&)> eval = [&](const PFormula& h) -> bool {
                switch (h.kind()) {
                    case PFormula::Kind::AtLeast:
                        for (const auto& lit : conj)
                            if (lit.body == h.jbody() && lit.threshold == h.threshold())
                                return lit.rel == PRelation::Ge;
                        ADD_FAILURE() << "occurrence missing from disjunct";
                        return false;
                    case PFormula::Kind::Not: return !eval(h.body());
                    case PFormula::Kind::And: return eval(h.left()) && eval(h.right());
                }
                return false;
            };
            EXPECT_TRUE(eval(f)) << to_string(f);
        }
        if (!d.disjuncts.empty()) {
            std::size_t k = d.disjuncts.front().size();
            std::size_t satisfying = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                std::vector<bool> v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = (mask >> j) & 1U;
                satisfying += listed.contains(v);
            }
            EXPECT_EQ(satisfying, d.disjuncts.size());
        }
    }
}

TEST(BuildSystem, Rows) {
    auto atoms = atoms_of(parse_jformula("p1"));
    LinearSystem s = build_system({{parse_jformula("p1"), PRelation::Ge, Rational(1, 2)},
                                   {parse_jformula("~p1"), PRelation::Lt, Rational(1, 3)}},
                                  atoms);
    ASSERT_EQ(s.row_count(), 3u);
    EXPECT_EQ(dump_lp(s), "1/1*z1 + 1/1*z2 = 1/1\n1/1*z1 >= 1/2\n1/1*z2 < 1/3\n");
}

TEST(SolveSat, TwoWorldModel) {
    PFormula f = p("P>=1/2 p1 & P>=1/2 ~p1");
    SatResult r = solve_sat(f, empty_cs());
    ASSERT_TRUE(r.sat);
    ASSERT_EQ(r.model->worlds.size(), 2u);
    EXPECT_EQ(r.model->worlds[0].weight, Rational(1, 2));
    EXPECT_EQ(r.model->worlds[1].weight, Rational(1, 2));
    EXPECT_TRUE(check_model(*r.model, f));
    EXPECT_TRUE(certify(*r.model, f, empty_cs()).ok());
}

TEST(SolveSat, Unsat) {
    EXPECT_FALSE(solve_sat(p("P>=1 p1 & ~P>=1 p1"), empty_cs()).sat);
    EXPECT_FALSE(solve_sat(p("P>=2/3 p1 & P>=2/3 ~p1"), empty_cs()).sat);
    EXPECT_FALSE(solve_sat(p("~P>=0 p1"), empty_cs()).sat);
}

TEST(SolveSat, ApplicationTrap) {
    PFormula f = p("P>=1 s:(p1 -> p2) & P>=1 t:p1 & ~P>=1 (s.t):p2");
    EXPECT_FALSE(solve_sat(f, empty_cs()).sat);
    // Swapping the application order removes the trap.
    EXPECT_TRUE(solve_sat(p("P>=1 s:(p1 -> p2) & P>=1 t:p1 & ~P>=1 (t.s):p2"), empty_cs()).sat);
}

TEST(SolveSat, ConstantSpecificationMatters) {
    PFormula f = p("P>=1/2 ~c1:(p1 -> (p2 -> p1))");
    EXPECT_TRUE(solve_sat(f, empty_cs()).sat);
    EXPECT_FALSE(solve_sat(f, default_cs()).sat);
}

TEST(SolveSat, StrictThresholds) {
    SatResult r = solve_sat(p("~P>=1/3 p1 & ~P>=1/3 p2 & P>=1/2 (p1 | p2)"), empty_cs());
    ASSERT_TRUE(r.sat);
    Rational mu1 = r.model->measure([](const Atom& a) { return a.sign_of(parse_jformula("p1")); });
    EXPECT_LT(mu1, Rational(1, 3));
    EXPECT_FALSE(solve_sat(p("~P>=1/3 p1 & ~P>=1/3 p2 & P>=2/3 (p1 | p2)"), empty_cs()).sat);
}

TEST(SolveSat, ReportsSystems) {
    std::size_t calls = 0;
    SolveOptions opts;
    opts.on_system = [&](std::size_t, const LinearSystem& s) {
        ++calls;
        EXPECT_EQ(s.var_count(), 2u);
    };
    solve_sat(p("~(P>=1/2 p1 & P>=1/2 ~p1)"), empty_cs(), opts);
    EXPECT_GE(calls, 1u);
}

TEST(SolveSat, RandomModelsCertify) {
    gen::Gen g(79);
    ConstantSpec cs = default_cs();
    std::vector<JFormula> bodies{parse_jformula("p1"), parse_jformula("s:p1"), parse_jformula("~(p1 & t:p2)"),
                                 parse_jformula("(s.t):p2 & p2"), parse_jformula("s:(p1 -> p2) & t:p1")};
    int sat = 0;
    for (int i = 0; i < 150; ++i) {
        PFormula f = g.pformula(4, bodies, gen::standard_thresholds());
        SatResult r = solve_sat(f, cs);
        if (!r.sat) continue;
        ++sat;
        Certificate c = certify(*r.model, f, cs);
        for (const auto& v : c.violations) ADD_FAILURE() << to_string(f) << ": " << v;
    }
    EXPECT_GT(sat, 20);
}

TEST(CheckModel, Examples) {
    SmallModel one = model_of({{"p1", 1}});
    EXPECT_TRUE(check_model(one, p("P>=1 p1")));
    EXPECT_FALSE(check_model(one, p("~P>=1 p1")));
    SmallModel halves = model_of({{"p1", Rational(1, 2)}, {"~p1", Rational(1, 2)}});
    EXPECT_FALSE(check_model(halves, p("P>=2/3 p1")));
    EXPECT_TRUE(check_model(halves, p("P>=1/2 p1")));
    EXPECT_THROW(check_model(one, p("P>=1 p2")), BasisMismatch);
}

TEST(Certify, FlagsViolations) {
    SmallModel twice = model_of({{"p1", Rational(1, 2)}, {"p1", Rational(1, 2)}});
    Certificate c = certify(twice, p("P>=1 p1"), empty_cs());
    EXPECT_FALSE(c.atoms_distinct);
    EXPECT_TRUE(c.worlds_within_size);
    EXPECT_FALSE(c.ok());

    SmallModel crowded = model_of({{"p1 & p2", Rational(1, 3)}, {"p1 & ~p2", Rational(1, 3)}, {"~p1 & p2", Rational(1, 3)}});
    EXPECT_FALSE(certify(crowded, p("P>=1/3 p1"), empty_cs()).worlds_within_size);

    SmallModel light = model_of({{"p1", Rational(1, 3)}});
    Certificate d = certify(light, p("P>=1/3 p1"), empty_cs());
    EXPECT_FALSE(d.powerset_algebra);

    SmallModel trap = model_of({{"p1 & p2 & s:(p1 -> p2) & t:p1 & ~(s.t):p2", 1}});
    Certificate e = certify(trap, p("P>=1 s:(p1 -> p2)"), empty_cs());
    EXPECT_FALSE(e.worlds_jsat);
}

TEST(Valid, Examples) {
    EXPECT_TRUE(valid(p("~(P>=1 p1 & ~P>=1 p1)"), empty_cs()));
    EXPECT_FALSE(valid(p("P>=1 p1"), empty_cs()));
    EXPECT_TRUE(valid(p("~(P>=1 s:~(p1 & ~p2) & P>=1 t:p1 & ~P>=1 (s.t):p2)"), empty_cs()));
    EXPECT_TRUE(valid(p("P>=0 p1"), empty_cs()));
    EXPECT_TRUE(valid(p("P>=1 c1:(p1 -> (p2 -> p1))"), default_cs()));
}

TEST(LiftToP1, AgreesWithJformulaSat) {
    ConstantSpec cs = default_cs();
    for (const char* text : {"p1 & ~p1", "t:p1", "s:~(p1 & ~p2) & t:p1 & ~(s.t):p2", "~c1:(p1 -> (p2 -> p1))",
                             "t:p1 & ~(t+s):p1", "~t:p1 & (s+t):p1"}) {
        JFormula alpha = parse_jformula(text);
        EXPECT_EQ(solve_sat(lift_to_p1(alpha), cs).sat, jformula_sat(alpha, cs)) << text;
    }
    EXPECT_EQ(lift_to_p1(parse_jformula("p1")), p("P>=1 p1"));
}

TEST(ModelText, RoundTrip) {
    PFormula f = p("P>=1/2 p1 & P>=1/4 t:p1 & ~P>=3/4 t:p1");
    SatResult r = solve_sat(f, empty_cs());
    ASSERT_TRUE(r.sat);
    std::string text = format_result(r);
    EXPECT_EQ(text.substr(0, 4), "SAT\n");
    SmallModel m = parse_model(text);
    ASSERT_EQ(m.worlds.size(), r.model->worlds.size());
    for (std::size_t i = 0; i < m.worlds.size(); ++i) {
        EXPECT_EQ(m.worlds[i].weight, r.model->worlds[i].weight);
        EXPECT_EQ(m.worlds[i].atom, r.model->worlds[i].atom);
    }
    EXPECT_TRUE(check_model(m, f));
    EXPECT_EQ(format_result(SatResult{}), "UNSAT\n");
}

TEST(ModelText, Errors) {
    EXPECT_THROW(parse_model("UNSAT\n"), ParseError);
    EXPECT_THROW(parse_model("SAT\nworld 1 weight x atom p1\n"), ParseError);
    EXPECT_THROW(parse_model("SAT\nworld 1 weight 1 atom p1 &\n"), ParseError);
    EXPECT_THROW(parse_model("SAT\nplanet 1 weight 1 atom p1\n"), ParseError);
}
