#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pjsat/cspec.hpp"
#include "pjsat/measures.hpp"
#include "pjsat/unify.hpp"

namespace pjsat {

// The evidence an atom commits to: its positive and negated assertions, keyed by the
// exact term, and its propositional signs.
struct AtomContext {
    std::map<Term, std::vector<JFormula>> positives;
    std::vector<std::pair<Term, JFormula>> negatives;
    std::map<unsigned, bool> prop_signs;
    const ConstantSpec* cs = nullptr;

    static AtomContext from_atom(const Atom& a, const ConstantSpec& cs);
};

// Receives each derivation's substitution; return true to stop the search.
using DerivationSink = std::function<bool(const Substitution&)>;

// Enumerates substitutions s' extending s under which (phi s') belongs to the least
// evidence set of `term` generated by the context's positive assertions and CS.
// Rules: hypothesis, constant specification, application (u.v via a fresh X with
// X -> phi from u and X from v), sum (either side). `!t` only has hypotheses.
// Returns true if the sink asked to stop.
bool derives(const AtomContext& ctx, const Term& term, const JFormula& phi, const Substitution& s,
             FreshSupply& fresh, const DerivationSink& sink);

// Convenience: is ground `phi` in the least evidence set of `term`?
bool derivable(const AtomContext& ctx, const Term& term, const JFormula& phi);

// No negated assertion of the atom is forced by its positive ones.
bool atom_jsat(const Atom& a, const ConstantSpec& cs);

// Truth value of phi under the literal assignment of `a`. Throws BasisMismatch if
// phi has a basic subformula outside the atom's basis.
bool eval_under_atom(const JFormula& phi, const Atom& a);

// Some atom of alpha makes alpha true and is J-satisfiable. Throws ResourceError
// when the basis exceeds `cap`.
bool jformula_sat(const JFormula& alpha, const ConstantSpec& cs, std::size_t cap = kDefaultAtomCap);

}  // namespace pjsat
