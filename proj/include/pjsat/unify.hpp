#pragma once

#include <map>
#include <optional>

#include "pjsat/syntax.hpp"

namespace pjsat {

// Bindings for the two metavariable sorts. Stored triangularly: a bound value may
// itself mention other bound metavariables; `apply` resolves fully.
class Substitution {
public:
    const JFormula* formula_binding(unsigned id) const;
    const Term* term_binding(unsigned id) const;

    void bind(unsigned formula_meta, JFormula value) { formulas_.insert_or_assign(formula_meta, std::move(value)); }
    void bind(unsigned term_meta, Term value) { terms_.insert_or_assign(term_meta, std::move(value)); }

    bool empty() const { return formulas_.empty() && terms_.empty(); }
    std::size_t size() const { return formulas_.size() + terms_.size(); }

    const std::map<unsigned, JFormula>& formula_bindings() const { return formulas_; }
    const std::map<unsigned, Term>& term_bindings() const { return terms_; }

private:
    std::map<unsigned, JFormula> formulas_;
    std::map<unsigned, Term> terms_;
};

// Follows top-level metavariable bindings until an unbound meta or a non-meta node.
JFormula walk(JFormula f, const Substitution& s);
Term walk(Term t, const Substitution& s);

// Replaces every bound metavariable, recursively.
JFormula apply(const JFormula& f, const Substitution& s);
Term apply(const Term& t, const Substitution& s);

// Most general unifier extending `s`, or nullopt. The occurs check is always on.
std::optional<Substitution> unify(const JFormula& a, const JFormula& b, const Substitution& s);
std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s);

// One-sided matching: binds metavariables of `pattern` so that it becomes `ground`.
// `bindings` is extended in place; on failure its contents are unspecified.
bool match(const JFormula& pattern, const JFormula& ground, Substitution& bindings);
bool match(const Term& pattern, const Term& ground, Substitution& bindings);

// Fresh metavariable ids. Every id handed out is distinct for the supply's lifetime.
struct FreshSupply {
    unsigned next_formula = 0;
    unsigned next_term = 0;

    JFormula formula_meta() { return JFormula::meta(next_formula++); }
};

// Shifts every metavariable in `pattern` by the given offsets.
JFormula rename_metas(const JFormula& pattern, unsigned formula_offset, unsigned term_offset);

// One past the largest metavariable id of each sort (0 when none occur).
struct MetaExtent {
    unsigned formulas = 0;
    unsigned terms = 0;
};
MetaExtent meta_extent(const JFormula& f);

}  // namespace pjsat
