#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pjsat/syntax.hpp"

namespace pjsat {

// An axiom scheme. Formula metavariables A, B, C are JFormula metas 0, 1, 2; term
// metavariables S, T are Term metas 0, 1. Implications are stored desugared.
struct Scheme {
    std::string name;
    JFormula pattern;
};

// TAUT1, TAUT2, TAUT3 (Hilbert propositional base), APP, SUM_L, SUM_R.
const std::vector<Scheme>& builtin_schemes();
const Scheme* find_scheme(std::string_view name);

struct CsFlags {
    bool require_injective = false;
    bool require_appropriate = false;
};

// Almost-schematic constant specification: a scheme assignment per constant plus a
// finite set of (constant, ground axiom instance) pairs. Immutable once loaded.
class ConstantSpec {
public:
    ConstantSpec() = default;

    // Throws std::invalid_argument for an unknown scheme name.
    void assign(const std::string& constant, const std::string& scheme);
    // Throws std::invalid_argument unless `instance` is a ground instance of some
    // built-in scheme, or if the pair is already covered by the schematic part.
    void add_finite(const std::string& constant, const JFormula& instance);

    const std::set<std::string>& schemes_for(const std::string& constant) const;
    const std::map<std::string, std::set<std::string>>& schematic() const { return schematic_; }
    const std::set<std::pair<std::string, JFormula>>& finite() const { return finite_; }
    std::vector<JFormula> finite_for(const std::string& constant) const;

    CsFlags flags;

private:
    std::map<std::string, std::set<std::string>> schematic_;
    std::set<std::pair<std::string, JFormula>> finite_;
};

// One fresh constant per built-in scheme:
//   c1:TAUT1  c2:TAUT2  c3:TAUT3  c4:APP  c5:SUM_L  c6:SUM_R
ConstantSpec default_cs();

// Name of the first built-in scheme `ground` is an instance of, if any.
std::optional<std::string> instance_of_scheme(const JFormula& ground);

// (c, phi) in CS: finite membership or a one-sided match against c's schemes.
bool cs_contains(const ConstantSpec& cs, const std::string& constant, const JFormula& phi);

struct CsDiagnostic {
    enum class Kind { NotInjective, FiniteInInjective, NotAppropriate };
    Kind kind;
    std::string message;
};

// Reports violations of the flags requested in `cs.flags`.
std::vector<CsDiagnostic> validate(const ConstantSpec& cs);

// Line-oriented format:
//   [schematic]
//   c1 : APP
//   [finite]
//   c9 : x1:p1 -> (x1+x2):p1
// `#` comments and blank lines are ignored. Throws ParseError on malformed input.
ConstantSpec parse_cs(std::string_view text);
std::string to_cs_text(const ConstantSpec& cs);

}  // namespace pjsat
