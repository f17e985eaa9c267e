#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pjsat/syntax.hpp"

namespace pjsat {

// An element of subf(A) for A a probability formula: either level may occur.
using AnyFormula = std::variant<PFormula, JFormula>;

std::set<AnyFormula> subformulas(const PFormula& f);
std::set<AnyFormula> subformulas(const JFormula& f);

std::string to_string(const AnyFormula& f);

// Basic formulas (propositions and assertions) among the subformulas, in canonical
// order: propositions by index, then assertions by printed form.
using Basis = std::vector<JFormula>;

Basis basis_of(const PFormula& f);
Basis basis_of(const JFormula& f);

// Canonical order used by basis_of; exposed so callers can merge bases.
bool basis_less(const JFormula& a, const JFormula& b);
Basis canonical_basis(std::vector<JFormula> basics);

// One signed literal per basis entry. The basis is shared between all atoms of
// the same formula.
class Atom {
public:
    Atom(std::shared_ptr<const Basis> basis, std::vector<bool> signs);

    const Basis& basis() const { return *basis_; }
    const std::shared_ptr<const Basis>& shared_basis() const { return basis_; }
    const std::vector<bool>& signs() const { return signs_; }
    std::size_t size() const { return signs_.size(); }

    // Sign of a basic formula; throws BasisMismatch if it is not in the basis.
    bool sign_of(const JFormula& basic) const;
    // Index of a basic formula in the basis, or npos.
    std::size_t find(const JFormula& basic) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.signs_ == b.signs_ && (a.basis_ == b.basis_ || *a.basis_ == *b.basis_);
    }

private:
    std::shared_ptr<const Basis> basis_;
    std::vector<bool> signs_;
};

// `p1 & ~t:p2`: literals in basis order joined by " & ".
std::string to_string(const Atom& a);

inline constexpr std::size_t kDefaultAtomCap = 20;

// All 2^|basis| atoms. Atom k has entry i negative iff bit (n-1-i) of k is set, so
// the all-positive atom comes first. Throws ResourceError when |basis| > cap.
std::vector<Atom> atoms_of(const Basis& basis, std::size_t cap = kDefaultAtomCap);
std::vector<Atom> atoms_of(const PFormula& f, std::size_t cap = kDefaultAtomCap);
std::vector<Atom> atoms_of(const JFormula& f, std::size_t cap = kDefaultAtomCap);

// |P>=s a| = 2, |~B| = 1 + |B|, |B & C| = |B| + 1 + |C|.
std::size_t size_p(const PFormula& f);

// |s1| + |s2| for the reduced form; |0| = 1 so size_rat(0) = 2.
std::size_t size_rat(const Rational& r);

// Largest size_rat over the thresholds occurring in f.
std::size_t norm(const PFormula& f);

}  // namespace pjsat
