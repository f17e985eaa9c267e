#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pjsat/cspec.hpp"
#include "pjsat/linrat.hpp"
#include "pjsat/measures.hpp"

namespace pjsat {

enum class PRelation { Ge, Lt };

// One probability literal of a DNF disjunct: mu([body]) >= s, or mu([body]) < s.
struct PLiteral {
    JFormula body;
    PRelation rel;
    Rational threshold;

    friend bool operator==(const PLiteral&, const PLiteral&) = default;
};

struct PDnf {
    std::vector<std::vector<PLiteral>> disjuncts;
};

// Full DNF over the distinct P>= occurrences of f (each occurrence treated as a
// Boolean variable). Disjuncts follow the binary order of occurrence assignments,
// "true" first, occurrences in left-to-right order. Throws ResourceError when the
// number of distinct occurrences exceeds `cap`.
PDnf p_dnf(const PFormula& f, std::size_t cap = kDefaultAtomCap);

// sum z = 1 plus, per literal, sum over {k : body true under atom k} of z_k (rel) s.
LinearSystem build_system(const std::vector<PLiteral>& conj, const std::vector<Atom>& sat_atoms);

struct World {
    Atom atom;
    Rational weight;
};

// Finite model: every subset of worlds is an event; mu(V) = sum of weights in V.
struct SmallModel {
    std::shared_ptr<const Basis> basis;
    std::vector<World> worlds;

    Rational measure(const std::function<bool(const Atom&)>& event) const;
};

struct SolveOptions {
    std::size_t atom_cap = kDefaultAtomCap;
    // Called with each disjunct's system before it is solved.
    std::function<void(std::size_t disjunct, const LinearSystem&)> on_system;
};

struct SatResult {
    bool sat = false;
    std::optional<SmallModel> model;
    std::size_t disjunct = 0;  // index of the feasible disjunct when sat
};

SatResult solve_sat(const PFormula& f, const ConstantSpec& cs, const SolveOptions& opts = {});

// Evaluates f in M: each P>=s a becomes mu([a]) >= s, then the Boolean structure.
// Throws BasisMismatch when basis_of(f) is not contained in M's basis.
bool check_model(const SmallModel& m, const PFormula& f);

// The five small-model conditions plus satisfaction and atom J-satisfiability.
struct Certificate {
    bool worlds_within_size = false;    // |W| <= |A|
    bool powerset_algebra = false;      // every subset measurable, mu(W) = 1
    bool weight_sizes = false;          // |mu({w})| <= 2(|A|*||A|| + |A|*log2|A| + 1)
    bool additive = false;              // mu(V) = sum of singleton weights
    bool atoms_distinct = false;        // each atom holds in at most one world
    bool satisfies = false;             // check_model(M, A)
    bool worlds_jsat = false;           // every world's atom is J-satisfiable
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

Certificate certify(const SmallModel& m, const PFormula& f, const ConstantSpec& cs);

bool valid(const PFormula& f, const ConstantSpec& cs, const SolveOptions& opts = {});

PFormula lift_to_p1(const JFormula& alpha);

// Stable text form:
//   SAT
//   world <i> weight <n>/<d> atom <literals>
//   check PASS
// or the single line UNSAT.
std::string format_result(const SatResult& r);

// Reads the SAT form back. Throws ParseError on malformed text.
SmallModel parse_model(std::string_view text);

}  // namespace pjsat
