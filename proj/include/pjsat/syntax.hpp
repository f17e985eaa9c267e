#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

#include "pjsat/rational.hpp"

namespace pjsat {

// Justification terms:  c | x | (t.t) | (t+t) | !t
// `Meta` nodes are term metavariables; they only appear in scheme patterns and
// in intermediate search states, never in parsed input.
class Term {
public:
    enum class Kind { Constant, Variable, App, Sum, Bang, Meta };

    static Term constant(std::string name);
    static Term variable(unsigned index);
    static Term app(Term left, Term right);
    static Term sum(Term left, Term right);
    static Term bang(Term inner);
    static Term meta(unsigned id);

    Kind kind() const;
    const std::string& name() const;  // Constant
    unsigned index() const;           // Variable index or Meta id
    const Term& left() const;         // App, Sum
    const Term& right() const;        // App, Sum
    const Term& inner() const;        // Bang

    bool is_ground() const;
    std::size_t hash() const;
    std::size_t depth() const;

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    struct Node;
    friend class JFormula;
    friend class PFormula;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Justification formulas:  p | ~a | a & a | t:a, plus formula metavariables.
class JFormula {
public:
    enum class Kind { Prop, Not, And, Assert, Meta };

    static JFormula prop(unsigned index);
    static JFormula negation(JFormula body);
    static JFormula conjunction(JFormula left, JFormula right);
    static JFormula assertion(Term term, JFormula body);
    static JFormula meta(unsigned id);

    Kind kind() const;
    unsigned index() const;         // Prop index or Meta id
    const JFormula& body() const;   // Not, Assert
    const JFormula& left() const;   // And
    const JFormula& right() const;  // And
    const Term& term() const;       // Assert

    bool is_basic() const { return kind() == Kind::Prop || kind() == Kind::Assert; }
    bool is_ground() const;
    std::size_t hash() const;

    friend bool operator==(const JFormula& a, const JFormula& b);
    friend std::strong_ordering operator<=>(const JFormula& a, const JFormula& b);

private:
    struct Node;
    friend class PFormula;
    explicit JFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// a -> b, stored as ~(a & ~b).
JFormula implies(JFormula a, JFormula b);
// a | b, stored as ~(~a & ~b).
JFormula disjunction(JFormula a, JFormula b);

// Probability formulas:  P>=s a | ~A | A & A
class PFormula {
public:
    enum class Kind { AtLeast, Not, And };

    // Throws std::invalid_argument unless 0 <= threshold <= 1.
    static PFormula at_least(Rational threshold, JFormula body);
    static PFormula negation(PFormula body);
    static PFormula conjunction(PFormula left, PFormula right);

    Kind kind() const;
    const Rational& threshold() const;  // AtLeast
    const JFormula& jbody() const;      // AtLeast
    const PFormula& body() const;       // Not
    const PFormula& left() const;       // And
    const PFormula& right() const;      // And

    std::size_t hash() const;

    friend bool operator==(const PFormula& a, const PFormula& b);
    friend std::strong_ordering operator<=>(const PFormula& a, const PFormula& b);

private:
    struct Node;
    explicit PFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Printing. Output reparses to the identical tree for ground input.
std::string to_string(const Term& t);
std::string to_string(const JFormula& f);
std::string to_string(const PFormula& f);

// ---------------------------------------------------------------------------

struct Term::Node {
    Kind kind;
    std::string name;
    unsigned index = 0;
    Term a{nullptr};
    Term b{nullptr};
    std::size_t hash = 0;
    std::size_t depth = 0;
    bool ground = true;
};

struct JFormula::Node {
    Kind kind;
    unsigned index = 0;
    Term term{nullptr};
    JFormula a{nullptr};
    JFormula b{nullptr};
    std::size_t hash = 0;
    bool ground = true;
};

struct PFormula::Node {
    Kind kind;
    Rational threshold;
    JFormula jbody{nullptr};
    PFormula a{nullptr};
    PFormula b{nullptr};
    std::size_t hash = 0;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline unsigned Term::index() const { return node_->index; }
inline const Term& Term::left() const { return node_->a; }
inline const Term& Term::right() const { return node_->b; }
inline const Term& Term::inner() const { return node_->a; }
inline bool Term::is_ground() const { return node_->ground; }
inline std::size_t Term::hash() const { return node_->hash; }
inline std::size_t Term::depth() const { return node_->depth; }

inline JFormula::Kind JFormula::kind() const { return node_->kind; }
inline unsigned JFormula::index() const { return node_->index; }
inline const JFormula& JFormula::body() const { return node_->a; }
inline const JFormula& JFormula::left() const { return node_->a; }
inline const JFormula& JFormula::right() const { return node_->b; }
inline const Term& JFormula::term() const { return node_->term; }
inline bool JFormula::is_ground() const { return node_->ground; }
inline std::size_t JFormula::hash() const { return node_->hash; }

inline PFormula::Kind PFormula::kind() const { return node_->kind; }
inline const Rational& PFormula::threshold() const { return node_->threshold; }
inline const JFormula& PFormula::jbody() const { return node_->jbody; }
inline const PFormula& PFormula::body() const { return node_->a; }
inline const PFormula& PFormula::left() const { return node_->a; }
inline const PFormula& PFormula::right() const { return node_->b; }
inline std::size_t PFormula::hash() const { return node_->hash; }

}  // namespace pjsat

template <>
struct std::hash<pjsat::Term> {
    std::size_t operator()(const pjsat::Term& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<pjsat::JFormula> {
    std::size_t operator()(const pjsat::JFormula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<pjsat::PFormula> {
    std::size_t operator()(const pjsat::PFormula& f) const noexcept { return f.hash(); }
};
