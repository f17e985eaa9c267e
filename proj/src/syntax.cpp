#include "pjsat/syntax.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pjsat {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::strong_ordering compare_strings(const std::string& a, const std::string& b) {
    int c = a.compare(b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

// --- Term ------------------------------------------------------------------

Term Term::constant(std::string name) {
    if (name.empty()) throw std::invalid_argument("constant name must be nonempty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->hash = mix(1, std::hash<std::string>{}(name));
    n->name = std::move(name);
    n->depth = 1;
    return Term(std::move(n));
}

Term Term::variable(unsigned index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->index = index;
    n->hash = mix(2, index);
    n->depth = 1;
    return Term(std::move(n));
}

Term Term::meta(unsigned id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Meta;
    n->index = id;
    n->hash = mix(3, id);
    n->depth = 1;
    n->ground = false;
    return Term(std::move(n));
}

Term Term::app(Term left, Term right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->hash = mix(mix(4, left.hash()), right.hash());
    n->depth = 1 + std::max(left.depth(), right.depth());
    n->ground = left.is_ground() && right.is_ground();
    n->a = std::move(left);
    n->b = std::move(right);
    return Term(std::move(n));
}

Term Term::sum(Term left, Term right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->hash = mix(mix(5, left.hash()), right.hash());
    n->depth = 1 + std::max(left.depth(), right.depth());
    n->ground = left.is_ground() && right.is_ground();
    n->a = std::move(left);
    n->b = std::move(right);
    return Term(std::move(n));
}

Term Term::bang(Term inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bang;
    n->hash = mix(6, inner.hash());
    n->depth = 1 + inner.depth();
    n->ground = inner.is_ground();
    n->a = std::move(inner);
    return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::Constant: return a.name() == b.name();
        case Term::Kind::Variable:
        case Term::Kind::Meta: return a.index() == b.index();
        case Term::Kind::App:
        case Term::Kind::Sum: return a.left() == b.left() && a.right() == b.right();
        case Term::Kind::Bang: return a.inner() == b.inner();
    }
    return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    switch (a.kind()) {
        case Term::Kind::Constant: return compare_strings(a.name(), b.name());
        case Term::Kind::Variable:
        case Term::Kind::Meta: return a.index() <=> b.index();
        case Term::Kind::App:
        case Term::Kind::Sum:
            if (auto c = a.left() <=> b.left(); c != 0) return c;
            return a.right() <=> b.right();
        case Term::Kind::Bang: return a.inner() <=> b.inner();
    }
    return std::strong_ordering::equal;
}

// --- JFormula --------------------------------------------------------------

JFormula JFormula::prop(unsigned index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prop;
    n->index = index;
    n->hash = mix(11, index);
    return JFormula(std::move(n));
}

JFormula JFormula::meta(unsigned id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Meta;
    n->index = id;
    n->hash = mix(12, id);
    n->ground = false;
    return JFormula(std::move(n));
}

JFormula JFormula::negation(JFormula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->hash = mix(13, body.hash());
    n->ground = body.is_ground();
    n->a = std::move(body);
    return JFormula(std::move(n));
}

JFormula JFormula::conjunction(JFormula left, JFormula right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->hash = mix(mix(14, left.hash()), right.hash());
    n->ground = left.is_ground() && right.is_ground();
    n->a = std::move(left);
    n->b = std::move(right);
    return JFormula(std::move(n));
}

JFormula JFormula::assertion(Term term, JFormula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Assert;
    n->hash = mix(mix(15, term.hash()), body.hash());
    n->ground = term.is_ground() && body.is_ground();
    n->term = std::move(term);
    n->a = std::move(body);
    return JFormula(std::move(n));
}

bool operator==(const JFormula& a, const JFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case JFormula::Kind::Prop:
        case JFormula::Kind::Meta: return a.index() == b.index();
        case JFormula::Kind::Not: return a.body() == b.body();
        case JFormula::Kind::And: return a.left() == b.left() && a.right() == b.right();
        case JFormula::Kind::Assert: return a.term() == b.term() && a.body() == b.body();
    }
    return false;
}

std::strong_ordering operator<=>(const JFormula& a, const JFormula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    switch (a.kind()) {
        case JFormula::Kind::Prop:
        case JFormula::Kind::Meta: return a.index() <=> b.index();
        case JFormula::Kind::Not: return a.body() <=> b.body();
        case JFormula::Kind::And:
            if (auto c = a.left() <=> b.left(); c != 0) return c;
            return a.right() <=> b.right();
        case JFormula::Kind::Assert:
            if (auto c = a.term() <=> b.term(); c != 0) return c;
            return a.body() <=> b.body();
    }
    return std::strong_ordering::equal;
}

JFormula implies(JFormula a, JFormula b) {
    return JFormula::negation(JFormula::conjunction(std::move(a), JFormula::negation(std::move(b))));
}

JFormula disjunction(JFormula a, JFormula b) {
    return JFormula::negation(
        JFormula::conjunction(JFormula::negation(std::move(a)), JFormula::negation(std::move(b))));
}

// --- PFormula --------------------------------------------------------------

PFormula PFormula::at_least(Rational threshold, JFormula body) {
    threshold.canonicalize();
    if (threshold < 0 || threshold > 1)
        throw std::invalid_argument("threshold " + to_string(threshold) + " outside [0,1]");
    auto n = std::make_shared<Node>();
    n->kind = Kind::AtLeast;
    n->hash = mix(mix(21, std::hash<std::string>{}(to_fraction_string(threshold))), body.hash());
    n->threshold = std::move(threshold);
    n->jbody = std::move(body);
    return PFormula(std::move(n));
}

PFormula PFormula::negation(PFormula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->hash = mix(22, body.hash());
    n->a = std::move(body);
    return PFormula(std::move(n));
}

PFormula PFormula::conjunction(PFormula left, PFormula right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->hash = mix(mix(23, left.hash()), right.hash());
    n->a = std::move(left);
    n->b = std::move(right);
    return PFormula(std::move(n));
}

bool operator==(const PFormula& a, const PFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case PFormula::Kind::AtLeast: return a.threshold() == b.threshold() && a.jbody() == b.jbody();
        case PFormula::Kind::Not: return a.body() == b.body();
        case PFormula::Kind::And: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

std::strong_ordering operator<=>(const PFormula& a, const PFormula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    switch (a.kind()) {
        case PFormula::Kind::AtLeast: {
            int c = cmp(a.threshold(), b.threshold());
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            return a.jbody() <=> b.jbody();
        }
        case PFormula::Kind::Not: return a.body() <=> b.body();
        case PFormula::Kind::And:
            if (auto c = a.left() <=> b.left(); c != 0) return c;
            return a.right() <=> b.right();
    }
    return std::strong_ordering::equal;
}

// --- printing --------------------------------------------------------------

namespace {

void print_term(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Constant: out += t.name(); break;
        case Term::Kind::Variable: out += 'x' + std::to_string(t.index()); break;
        case Term::Kind::Meta: out += "?S" + std::to_string(t.index()); break;
        case Term::Kind::App:
            out += '(';
            print_term(t.left(), out);
            out += '.';
            print_term(t.right(), out);
            out += ')';
            break;
        case Term::Kind::Sum:
            out += '(';
            print_term(t.left(), out);
            out += '+';
            print_term(t.right(), out);
            out += ')';
            break;
        case Term::Kind::Bang:
            out += '!';
            print_term(t.inner(), out);
            break;
    }
}

void print_jformula(const JFormula& f, std::string& out) {
    switch (f.kind()) {
        case JFormula::Kind::Prop: out += 'p' + std::to_string(f.index()); break;
        case JFormula::Kind::Meta: out += "?A" + std::to_string(f.index()); break;
        case JFormula::Kind::Not:
            out += '~';
            print_jformula(f.body(), out);
            break;
        case JFormula::Kind::And:
            out += '(';
            print_jformula(f.left(), out);
            out += " & ";
            print_jformula(f.right(), out);
            out += ')';
            break;
        case JFormula::Kind::Assert:
            print_term(f.term(), out);
            out += ':';
            print_jformula(f.body(), out);
            break;
    }
}

void print_pformula(const PFormula& f, std::string& out) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast:
            out += "P>=";
            out += to_string(f.threshold());
            out += ' ';
            print_jformula(f.jbody(), out);
            break;
        case PFormula::Kind::Not:
            out += '~';
            print_pformula(f.body(), out);
            break;
        case PFormula::Kind::And:
            out += '(';
            print_pformula(f.left(), out);
            out += " & ";
            print_pformula(f.right(), out);
            out += ')';
            break;
    }
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out;
    print_term(t, out);
    return out;
}

std::string to_string(const JFormula& f) {
    std::string out;
    print_jformula(f, out);
    return out;
}

std::string to_string(const PFormula& f) {
    std::string out;
    print_pformula(f, out);
    return out;
}

}  // namespace pjsat
