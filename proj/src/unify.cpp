#include "pjsat/unify.hpp"

#include <algorithm>

namespace pjsat {

const JFormula* Substitution::formula_binding(unsigned id) const {
    auto it = formulas_.find(id);
    return it == formulas_.end() ? nullptr : &it->second;
}

const Term* Substitution::term_binding(unsigned id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? nullptr : &it->second;
}

JFormula walk(JFormula f, const Substitution& s) {
    while (f.kind() == JFormula::Kind::Meta) {
        const JFormula* next = s.formula_binding(f.index());
        if (!next) break;
        f = *next;
    }
    return f;
}

Term walk(Term t, const Substitution& s) {
    while (t.kind() == Term::Kind::Meta) {
        const Term* next = s.term_binding(t.index());
        if (!next) break;
        t = *next;
    }
    return t;
}

Term apply(const Term& t, const Substitution& s) {
    if (t.is_ground()) return t;
    switch (t.kind()) {
        case Term::Kind::Meta: {
            Term w = walk(t, s);
            return w.kind() == Term::Kind::Meta ? w : apply(w, s);
        }
        case Term::Kind::App: return Term::app(apply(t.left(), s), apply(t.right(), s));
        case Term::Kind::Sum: return Term::sum(apply(t.left(), s), apply(t.right(), s));
        case Term::Kind::Bang: return Term::bang(apply(t.inner(), s));
        default: return t;
    }
}

JFormula apply(const JFormula& f, const Substitution& s) {
    if (f.is_ground()) return f;
    switch (f.kind()) {
        case JFormula::Kind::Meta: {
            JFormula w = walk(f, s);
            return w.kind() == JFormula::Kind::Meta ? w : apply(w, s);
        }
        case JFormula::Kind::Not: return JFormula::negation(apply(f.body(), s));
        case JFormula::Kind::And: return JFormula::conjunction(apply(f.left(), s), apply(f.right(), s));
        case JFormula::Kind::Assert: return JFormula::assertion(apply(f.term(), s), apply(f.body(), s));
        default: return f;
    }
}

namespace {

bool occurs(unsigned id, const Term& t, const Substitution& s) {
    if (t.is_ground()) return false;
    Term w = walk(t, s);
    switch (w.kind()) {
        case Term::Kind::Meta: return w.index() == id;
        case Term::Kind::App:
        case Term::Kind::Sum: return occurs(id, w.left(), s) || occurs(id, w.right(), s);
        case Term::Kind::Bang: return occurs(id, w.inner(), s);
        default: return false;
    }
}

bool occurs(unsigned id, const JFormula& f, const Substitution& s) {
    if (f.is_ground()) return false;
    JFormula w = walk(f, s);
    switch (w.kind()) {
        case JFormula::Kind::Meta: return w.index() == id;
        case JFormula::Kind::Not:
        case JFormula::Kind::Assert: return occurs(id, w.body(), s);
        case JFormula::Kind::And: return occurs(id, w.left(), s) || occurs(id, w.right(), s);
        default: return false;
    }
}

bool unify_in_place(const Term& a, const Term& b, Substitution& s) {
    Term x = walk(a, s);
    Term y = walk(b, s);
    if (x == y) return true;
    if (x.kind() == Term::Kind::Meta) {
        if (occurs(x.index(), y, s)) return false;
        s.bind(x.index(), y);
        return true;
    }
    if (y.kind() == Term::Kind::Meta) {
        if (occurs(y.index(), x, s)) return false;
        s.bind(y.index(), x);
        return true;
    }
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case Term::Kind::Constant: return x.name() == y.name();
        case Term::Kind::Variable: return x.index() == y.index();
        case Term::Kind::App:
        case Term::Kind::Sum:
            return unify_in_place(x.left(), y.left(), s) && unify_in_place(x.right(), y.right(), s);
        case Term::Kind::Bang: return unify_in_place(x.inner(), y.inner(), s);
        case Term::Kind::Meta: break;
    }
    return false;
}

bool unify_in_place(const JFormula& a, const JFormula& b, Substitution& s) {
    JFormula x = walk(a, s);
    JFormula y = walk(b, s);
    if (x == y) return true;
    if (x.kind() == JFormula::Kind::Meta) {
        if (occurs(x.index(), y, s)) return false;
        s.bind(x.index(), y);
        return true;
    }
    if (y.kind() == JFormula::Kind::Meta) {
        if (occurs(y.index(), x, s)) return false;
        s.bind(y.index(), x);
        return true;
    }
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case JFormula::Kind::Prop: return x.index() == y.index();
        case JFormula::Kind::Not: return unify_in_place(x.body(), y.body(), s);
        case JFormula::Kind::And:
            return unify_in_place(x.left(), y.left(), s) && unify_in_place(x.right(), y.right(), s);
        case JFormula::Kind::Assert:
            return unify_in_place(x.term(), y.term(), s) && unify_in_place(x.body(), y.body(), s);
        case JFormula::Kind::Meta: break;
    }
    return false;
}

Term rename_term(const Term& t, unsigned offset) {
    if (t.is_ground()) return t;
    switch (t.kind()) {
        case Term::Kind::Meta: return Term::meta(t.index() + offset);
        case Term::Kind::App: return Term::app(rename_term(t.left(), offset), rename_term(t.right(), offset));
        case Term::Kind::Sum: return Term::sum(rename_term(t.left(), offset), rename_term(t.right(), offset));
        case Term::Kind::Bang: return Term::bang(rename_term(t.inner(), offset));
        default: return t;
    }
}

void extent_of(const Term& t, MetaExtent& e) {
    if (t.is_ground()) return;
    switch (t.kind()) {
        case Term::Kind::Meta: e.terms = std::max(e.terms, t.index() + 1); break;
        case Term::Kind::App:
        case Term::Kind::Sum:
            extent_of(t.left(), e);
            extent_of(t.right(), e);
            break;
        case Term::Kind::Bang: extent_of(t.inner(), e); break;
        default: break;
    }
}

void extent_of(const JFormula& f, MetaExtent& e) {
    if (f.is_ground()) return;
    switch (f.kind()) {
        case JFormula::Kind::Meta: e.formulas = std::max(e.formulas, f.index() + 1); break;
        case JFormula::Kind::Not: extent_of(f.body(), e); break;
        case JFormula::Kind::Assert:
            extent_of(f.term(), e);
            extent_of(f.body(), e);
            break;
        case JFormula::Kind::And:
            extent_of(f.left(), e);
            extent_of(f.right(), e);
            break;
        default: break;
    }
}

}  // namespace

std::optional<Substitution> unify(const JFormula& a, const JFormula& b, const Substitution& s) {
    Substitution out = s;
    if (!unify_in_place(a, b, out)) return std::nullopt;
    return out;
}

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s) {
    Substitution out = s;
    if (!unify_in_place(a, b, out)) return std::nullopt;
    return out;
}

bool match(const Term& pattern, const Term& ground, Substitution& bindings) {
    switch (pattern.kind()) {
        case Term::Kind::Meta:
            if (const Term* bound = bindings.term_binding(pattern.index())) return *bound == ground;
            bindings.bind(pattern.index(), ground);
            return true;
        case Term::Kind::Constant:
            return ground.kind() == Term::Kind::Constant && ground.name() == pattern.name();
        case Term::Kind::Variable:
            return ground.kind() == Term::Kind::Variable && ground.index() == pattern.index();
        case Term::Kind::App:
        case Term::Kind::Sum:
            return ground.kind() == pattern.kind() && match(pattern.left(), ground.left(), bindings) &&
                   match(pattern.right(), ground.right(), bindings);
        case Term::Kind::Bang:
            return ground.kind() == Term::Kind::Bang && match(pattern.inner(), ground.inner(), bindings);
    }
    return false;
}

bool match(const JFormula& pattern, const JFormula& ground, Substitution& bindings) {
    switch (pattern.kind()) {
        case JFormula::Kind::Meta:
            if (const JFormula* bound = bindings.formula_binding(pattern.index())) return *bound == ground;
            bindings.bind(pattern.index(), ground);
            return true;
        case JFormula::Kind::Prop:
            return ground.kind() == JFormula::Kind::Prop && ground.index() == pattern.index();
        case JFormula::Kind::Not:
            return ground.kind() == JFormula::Kind::Not && match(pattern.body(), ground.body(), bindings);
        case JFormula::Kind::And:
            return ground.kind() == JFormula::Kind::And && match(pattern.left(), ground.left(), bindings) &&
                   match(pattern.right(), ground.right(), bindings);
        case JFormula::Kind::Assert:
            return ground.kind() == JFormula::Kind::Assert && match(pattern.term(), ground.term(), bindings) &&
                   match(pattern.body(), ground.body(), bindings);
    }
    return false;
}

JFormula rename_metas(const JFormula& pattern, unsigned formula_offset, unsigned term_offset) {
    if (pattern.is_ground()) return pattern;
    switch (pattern.kind()) {
        case JFormula::Kind::Meta: return JFormula::meta(pattern.index() + formula_offset);
        case JFormula::Kind::Not: return JFormula::negation(rename_metas(pattern.body(), formula_offset, term_offset));
        case JFormula::Kind::And:
            return JFormula::conjunction(rename_metas(pattern.left(), formula_offset, term_offset),
                                         rename_metas(pattern.right(), formula_offset, term_offset));
        case JFormula::Kind::Assert:
            return JFormula::assertion(rename_term(pattern.term(), term_offset),
                                       rename_metas(pattern.body(), formula_offset, term_offset));
        default: return pattern;
    }
}

MetaExtent meta_extent(const JFormula& f) {
    MetaExtent e;
    extent_of(f, e);
    return e;
}

}  // namespace pjsat
