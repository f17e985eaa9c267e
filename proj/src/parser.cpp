#include "pjsat/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace pjsat {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// `p12` -> 12, `x3` -> 3; anything else is not an indexed name.
std::optional<unsigned> indexed_name(std::string_view ident, char prefix) {
    if (ident.size() < 2 || ident[0] != prefix) return std::nullopt;
    unsigned long value = 0;
    for (char c : ident.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<unsigned long>(c - '0');
        if (value > 0xffffffffUL) return std::nullopt;
    }
    return static_cast<unsigned>(value);
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    PFormula pformula_document() {
        PFormula f = pimpl();
        expect_end();
        return f;
    }

    JFormula jformula_document() {
        JFormula f = jimpl();
        expect_end();
        return f;
    }

    Term term_document() {
        Term t = term();
        expect_end();
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool peek(std::string_view tok) {
        skip_ws();
        return src_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok) {
        if (!peek(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    void expect_end() {
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& what) {
        std::string near = pos_ < src_.size() ? " near '" + std::string(src_.substr(pos_, 12)) + "'"
                                              : " at end of input";
        throw ParseError(what + near, pos_);
    }

    std::string_view identifier() {
        skip_ws();
        if (pos_ >= src_.size() || !is_ident_start(src_[pos_])) return {};
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    std::string_view peek_identifier() {
        std::size_t saved = pos_;
        auto id = identifier();
        pos_ = saved;
        return id;
    }

    // --- probability level ---

    PFormula pimpl() {
        PFormula lhs = por();
        if (accept("->")) return desugar_implies(lhs, pimpl());
        return lhs;
    }

    PFormula por() {
        PFormula lhs = pand();
        while (accept("|")) {
            PFormula rhs = pand();
            lhs = PFormula::negation(
                PFormula::conjunction(PFormula::negation(lhs), PFormula::negation(rhs)));
        }
        return lhs;
    }

    PFormula pand() {
        PFormula lhs = pfactor();
        while (accept("&")) lhs = PFormula::conjunction(lhs, pfactor());
        return lhs;
    }

    static PFormula desugar_implies(const PFormula& a, const PFormula& b) {
        return PFormula::negation(PFormula::conjunction(a, PFormula::negation(b)));
    }

    PFormula pfactor() {
        if (accept("~")) return PFormula::negation(pfactor());
        if (accept("(")) {
            PFormula inner = pimpl();
            expect(")");
            return inner;
        }
        if (accept("P>=")) {
            Rational s = threshold();
            return PFormula::at_least(s, jfactor());
        }
        if (accept("P<")) {
            Rational s = threshold();
            return PFormula::negation(PFormula::at_least(s, jfactor()));
        }
        fail("expected probability formula ('~', '(', 'P>=' or 'P<')");
    }

    Rational threshold() {
        skip_ws();
        std::size_t start = pos_;
        auto digits = [&] {
            skip_ws();
            std::size_t b = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (b == pos_) fail("expected rational threshold");
            return std::string(src_.substr(b, pos_ - b));
        };
        std::string text = digits();
        if (accept("/")) text += "/" + digits();
        Rational value;
        try {
            value = parse_rational(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad rational '") + text + "': " + e.what(), start);
        }
        if (value < 0 || value > 1)
            throw ParseError("threshold " + text + " outside [0,1]", start);
        return value;
    }

    // --- justification level ---

    JFormula jimpl() {
        JFormula lhs = jor();
        if (accept("->")) return implies(lhs, jimpl());
        return lhs;
    }

    JFormula jor() {
        JFormula lhs = jand();
        while (accept("|")) lhs = disjunction(lhs, jand());
        return lhs;
    }

    JFormula jand() {
        JFormula lhs = jfactor();
        while (accept("&")) lhs = JFormula::conjunction(lhs, jfactor());
        return lhs;
    }

    JFormula jfactor() {
        if (accept("~")) return JFormula::negation(jfactor());
        if (peek("(")) {
            // Either a parenthesised term heading an assertion, or a grouped formula.
            std::size_t saved = pos_;
            try {
                Term t = term();
                if (accept(":")) return JFormula::assertion(t, jfactor());
            } catch (const ParseError&) {
            }
            pos_ = saved;
            expect("(");
            JFormula inner = jimpl();
            expect(")");
            return inner;
        }
        auto id = peek_identifier();
        if (auto p = indexed_name(id, 'p')) {
            identifier();
            return JFormula::prop(*p);
        }
        if (!id.empty() || peek("!")) {
            Term t = term();
            expect(":");
            return JFormula::assertion(t, jfactor());
        }
        fail("expected justification formula");
    }

    // --- terms ---

    Term term() {
        Term lhs = tfactor();
        while (accept("+")) lhs = Term::sum(lhs, tfactor());
        return lhs;
    }

    Term tfactor() {
        Term lhs = tprim();
        while (accept(".")) lhs = Term::app(lhs, tprim());
        return lhs;
    }

    Term tprim() {
        if (accept("!")) return Term::bang(tprim());
        if (accept("(")) {
            Term inner = term();
            expect(")");
            return inner;
        }
        std::size_t start = pos_;
        auto id = identifier();
        if (id.empty()) fail("expected term");
        if (auto x = indexed_name(id, 'x')) return Term::variable(*x);
        if (indexed_name(id, 'p')) {
            pos_ = start;
            fail("proposition used as a term");
        }
        return Term::constant(std::string(id));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

PFormula parse_pformula(std::string_view text) { return Parser(text).pformula_document(); }
JFormula parse_jformula(std::string_view text) { return Parser(text).jformula_document(); }
Term parse_term(std::string_view text) { return Parser(text).term_document(); }

}  // namespace pjsat
