#include "pjsat/cspec.hpp"

#include <cctype>
#include <stdexcept>

#include "pjsat/errors.hpp"
#include "pjsat/parser.hpp"
#include "pjsat/unify.hpp"

namespace pjsat {
namespace {

JFormula A() { return JFormula::meta(0); }
JFormula B() { return JFormula::meta(1); }
JFormula C() { return JFormula::meta(2); }
Term S() { return Term::meta(0); }
Term T() { return Term::meta(1); }

std::vector<Scheme> make_builtins() {
    using F = JFormula;
    std::vector<Scheme> out;
    out.push_back({"TAUT1", implies(A(), implies(B(), A()))});
    out.push_back({"TAUT2", implies(implies(A(), implies(B(), C())),
                                    implies(implies(A(), B()), implies(A(), C())))});
    out.push_back({"TAUT3", implies(implies(F::negation(A()), F::negation(B())), implies(B(), A()))});
    out.push_back({"APP", implies(F::assertion(S(), implies(A(), B())),
                                  implies(F::assertion(T(), A()), F::assertion(Term::app(S(), T()), B())))});
    out.push_back({"SUM_L", implies(F::assertion(S(), A()), F::assertion(Term::sum(S(), T()), A()))});
    out.push_back({"SUM_R", implies(F::assertion(T(), A()), F::assertion(Term::sum(S(), T()), A()))});
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool matches_scheme(const Scheme& scheme, const JFormula& phi) {
    Substitution bindings;
    return match(scheme.pattern, phi, bindings);
}

}  // namespace

const std::vector<Scheme>& builtin_schemes() {
    static const std::vector<Scheme> schemes = make_builtins();
    return schemes;
}

const Scheme* find_scheme(std::string_view name) {
    for (const auto& s : builtin_schemes())
        if (s.name == name) return &s;
    return nullptr;
}

void ConstantSpec::assign(const std::string& constant, const std::string& scheme) {
    if (!find_scheme(scheme)) throw std::invalid_argument("unknown axiom scheme '" + scheme + "'");
    schematic_[constant].insert(scheme);
}

void ConstantSpec::add_finite(const std::string& constant, const JFormula& instance) {
    if (!instance.is_ground()) throw std::invalid_argument("finite CS entry must be ground");
    if (!instance_of_scheme(instance))
        throw std::invalid_argument("'" + to_string(instance) + "' is not an instance of any axiom scheme");
    for (const auto& name : schemes_for(constant))
        if (matches_scheme(*find_scheme(name), instance))
            throw std::invalid_argument("finite entry for '" + constant +
                                        "' duplicates its schematic part (" + name + ")");
    finite_.emplace(constant, instance);
}

const std::set<std::string>& ConstantSpec::schemes_for(const std::string& constant) const {
    static const std::set<std::string> none;
    auto it = schematic_.find(constant);
    return it == schematic_.end() ? none : it->second;
}

std::vector<JFormula> ConstantSpec::finite_for(const std::string& constant) const {
    std::vector<JFormula> out;
    for (const auto& [c, f] : finite_)
        if (c == constant) out.push_back(f);
    return out;
}

ConstantSpec default_cs() {
    ConstantSpec cs;
    int i = 1;
    for (const auto& s : builtin_schemes()) cs.assign("c" + std::to_string(i++), s.name);
    return cs;
}

std::optional<std::string> instance_of_scheme(const JFormula& ground) {
    for (const auto& s : builtin_schemes())
        if (matches_scheme(s, ground)) return s.name;
    return std::nullopt;
}

bool cs_contains(const ConstantSpec& cs, const std::string& constant, const JFormula& phi) {
    if (cs.finite().contains({constant, phi})) return true;
    for (const auto& name : cs.schemes_for(constant))
        if (matches_scheme(*find_scheme(name), phi)) return true;
    return false;
}

std::vector<CsDiagnostic> validate(const ConstantSpec& cs) {
    std::vector<CsDiagnostic> out;
    if (cs.flags.require_injective) {
        for (const auto& [c, schemes] : cs.schematic()) {
            if (schemes.size() < 2) continue;
            std::string list;
            for (const auto& s : schemes) list += (list.empty() ? "" : ", ") + s;
            out.push_back({CsDiagnostic::Kind::NotInjective,
                           "constant '" + c + "' justifies more than one scheme: " + list});
        }
        if (!cs.finite().empty())
            out.push_back({CsDiagnostic::Kind::FiniteInInjective,
                           "schematically injective mode requires an empty finite part (" +
                               std::to_string(cs.finite().size()) + " entries present)"});
    }
    if (cs.flags.require_appropriate) {
        for (const auto& scheme : builtin_schemes()) {
            bool covered = false;
            for (const auto& [c, schemes] : cs.schematic()) covered = covered || schemes.contains(scheme.name);
            if (!covered)
                out.push_back({CsDiagnostic::Kind::NotAppropriate,
                               "axiom scheme " + scheme.name + " is not justified by any constant"});
        }
    }
    return out;
}

ConstantSpec parse_cs(std::string_view text) {
    enum class Section { None, Schematic, Finite };
    Section section = Section::None;
    std::vector<std::pair<std::string, std::string>> schematic;
    struct Pending {
        std::string constant;
        JFormula formula;
        std::size_t offset;
    };
    std::vector<Pending> finite;

    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        const std::size_t line_offset = offset;
        offset = end + 1;
        if (line.empty()) continue;

        if (line == "[schematic]") {
            section = Section::Schematic;
            continue;
        }
        if (line == "[finite]") {
            section = Section::Finite;
            continue;
        }
        if (line.front() == '[') throw ParseError("unknown section " + std::string(line), line_offset);
        if (section == Section::None) throw ParseError("entry outside of a section", line_offset);

        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'constant : ...'", line_offset);
        std::string constant(trim(line.substr(0, colon)));
        std::string_view rest = trim(line.substr(colon + 1));
        Term head = [&] {
            try {
                return parse_term(constant);
            } catch (const ParseError& e) {
                throw ParseError("bad constant name '" + constant + "'", line_offset);
            }
        }();
        if (head.kind() != Term::Kind::Constant)
            throw ParseError("'" + constant + "' is not a constant name", line_offset);

        if (section == Section::Schematic) {
            if (!find_scheme(rest)) throw ParseError("unknown axiom scheme '" + std::string(rest) + "'", line_offset);
            schematic.emplace_back(constant, std::string(rest));
        } else {
            try {
                finite.push_back({constant, parse_jformula(rest), line_offset});
            } catch (const ParseError& e) {
                throw ParseError(std::string("in finite entry: ") + e.what(), line_offset);
            }
        }
    }

    ConstantSpec cs;
    for (const auto& [c, s] : schematic) cs.assign(c, s);
    for (const auto& p : finite) {
        try {
            cs.add_finite(p.constant, p.formula);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), p.offset);
        }
    }
    return cs;
}

std::string to_cs_text(const ConstantSpec& cs) {
    std::string out = "[schematic]\n";
    for (const auto& [c, schemes] : cs.schematic())
        for (const auto& s : schemes) out += c + " : " + s + "\n";
    out += "[finite]\n";
    for (const auto& [c, f] : cs.finite()) out += c + " : " + to_string(f) + "\n";
    return out;
}

}  // namespace pjsat
