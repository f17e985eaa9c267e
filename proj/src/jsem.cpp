#include "pjsat/jsem.hpp"

#include <stdexcept>

#include "pjsat/errors.hpp"

namespace pjsat {

AtomContext AtomContext::from_atom(const Atom& a, const ConstantSpec& cs) {
    AtomContext ctx;
    ctx.cs = &cs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const JFormula& b = a.basis()[i];
        bool positive = a.signs()[i];
        if (b.kind() == JFormula::Kind::Prop) {
            ctx.prop_signs[b.index()] = positive;
        } else if (positive) {
            ctx.positives[b.term()].push_back(b.body());
        } else {
            ctx.negatives.emplace_back(b.term(), b.body());
        }
    }
    return ctx;
}

namespace {

bool try_unify(const JFormula& phi, const JFormula& candidate, const Substitution& s,
               const DerivationSink& sink) {
    if (auto next = unify(phi, candidate, s)) return sink(*next);
    return false;
}

}  // namespace

bool derives(const AtomContext& ctx, const Term& term, const JFormula& phi, const Substitution& s,
             FreshSupply& fresh, const DerivationSink& sink) {
    if (auto it = ctx.positives.find(term); it != ctx.positives.end())
        for (const auto& psi : it->second)
            if (try_unify(phi, psi, s, sink)) return true;

    switch (term.kind()) {
        case Term::Kind::Constant: {
            if (!ctx.cs) break;
            for (const auto& name : ctx.cs->schemes_for(term.name())) {
                const Scheme* scheme = find_scheme(name);
                MetaExtent extent = meta_extent(scheme->pattern);
                JFormula renamed = rename_metas(scheme->pattern, fresh.next_formula, fresh.next_term);
                fresh.next_formula += extent.formulas;
                fresh.next_term += extent.terms;
                if (try_unify(phi, renamed, s, sink)) return true;
            }
            for (const auto& instance : ctx.cs->finite_for(term.name()))
                if (try_unify(phi, instance, s, sink)) return true;
            break;
        }
        case Term::Kind::App: {
            JFormula x = fresh.formula_meta();
            const Term& rhs = term.right();
            return derives(ctx, term.left(), implies(x, phi), s, fresh,
                           [&](const Substitution& s1) { return derives(ctx, rhs, x, s1, fresh, sink); });
        }
        case Term::Kind::Sum:
            if (derives(ctx, term.left(), phi, s, fresh, sink)) return true;
            return derives(ctx, term.right(), phi, s, fresh, sink);
        case Term::Kind::Variable:
        case Term::Kind::Bang: break;
        case Term::Kind::Meta: throw std::invalid_argument("derives: term must be ground");
    }
    return false;
}

bool derivable(const AtomContext& ctx, const Term& term, const JFormula& phi) {
    FreshSupply fresh;
    return derives(ctx, term, phi, Substitution{}, fresh, [](const Substitution&) { return true; });
}

bool atom_jsat(const Atom& a, const ConstantSpec& cs) {
    AtomContext ctx = AtomContext::from_atom(a, cs);
    for (const auto& [term, gamma] : ctx.negatives)
        if (derivable(ctx, term, gamma)) return false;
    return true;
}

bool eval_under_atom(const JFormula& phi, const Atom& a) {
    switch (phi.kind()) {
        case JFormula::Kind::Prop:
        case JFormula::Kind::Assert: return a.sign_of(phi);
        case JFormula::Kind::Not: return !eval_under_atom(phi.body(), a);
        case JFormula::Kind::And: {
            // Both sides are visited so a basis mismatch is never masked.
            bool left = eval_under_atom(phi.left(), a);
            bool right = eval_under_atom(phi.right(), a);
            return left && right;
        }
        case JFormula::Kind::Meta: break;
    }
    throw std::invalid_argument("eval_under_atom: formula must be ground");
}

bool jformula_sat(const JFormula& alpha, const ConstantSpec& cs, std::size_t cap) {
    for (const Atom& a : atoms_of(alpha, cap))
        if (eval_under_atom(alpha, a) && atom_jsat(a, cs)) return true;
    return false;
}

}  // namespace pjsat
