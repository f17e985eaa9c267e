#include "pjsat/measures.hpp"

#include <cstdint>
#include <algorithm>

#include "pjsat/errors.hpp"

namespace pjsat {
namespace {

void collect(const JFormula& f, std::set<AnyFormula>& out) {
    if (!out.insert(f).second) return;
    switch (f.kind()) {
        case JFormula::Kind::Prop:
        case JFormula::Kind::Meta: break;
        case JFormula::Kind::Not:
        case JFormula::Kind::Assert: collect(f.body(), out); break;
        case JFormula::Kind::And:
            collect(f.left(), out);
            collect(f.right(), out);
            break;
    }
}

void collect(const PFormula& f, std::set<AnyFormula>& out) {
    if (!out.insert(f).second) return;
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: collect(f.jbody(), out); break;
        case PFormula::Kind::Not: collect(f.body(), out); break;
        case PFormula::Kind::And:
            collect(f.left(), out);
            collect(f.right(), out);
            break;
    }
}

template <class F>
Basis basis_from(const F& f) {
    std::vector<JFormula> basics;
    for (const auto& g : subformulas(f))
        if (auto* j = std::get_if<JFormula>(&g); j && j->is_basic()) basics.push_back(*j);
    return canonical_basis(std::move(basics));
}

void collect_thresholds(const PFormula& f, std::size_t& best) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: best = std::max(best, size_rat(f.threshold())); break;
        case PFormula::Kind::Not: collect_thresholds(f.body(), best); break;
        case PFormula::Kind::And:
            collect_thresholds(f.left(), best);
            collect_thresholds(f.right(), best);
            break;
    }
}

}  // namespace

std::set<AnyFormula> subformulas(const PFormula& f) {
    std::set<AnyFormula> out;
    collect(f, out);
    return out;
}

std::set<AnyFormula> subformulas(const JFormula& f) {
    std::set<AnyFormula> out;
    collect(f, out);
    return out;
}

std::string to_string(const AnyFormula& f) {
    return std::visit([](const auto& g) { return to_string(g); }, f);
}

bool basis_less(const JFormula& a, const JFormula& b) {
    bool ap = a.kind() == JFormula::Kind::Prop;
    bool bp = b.kind() == JFormula::Kind::Prop;
    if (ap != bp) return ap;
    if (ap) return a.index() < b.index();
    return to_string(a) < to_string(b);
}

Basis canonical_basis(std::vector<JFormula> basics) {
    std::sort(basics.begin(), basics.end(), basis_less);
    basics.erase(std::unique(basics.begin(), basics.end()), basics.end());
    return basics;
}

Basis basis_of(const PFormula& f) { return basis_from(f); }
Basis basis_of(const JFormula& f) { return basis_from(f); }

Atom::Atom(std::shared_ptr<const Basis> basis, std::vector<bool> signs)
    : basis_(std::move(basis)), signs_(std::move(signs)) {
    if (basis_->size() != signs_.size())
        throw std::invalid_argument("atom signs do not match basis length");
}

std::size_t Atom::find(const JFormula& basic) const {
    const Basis& b = *basis_;
    // Basis is sorted by basis_less; binary search keeps lookups logarithmic.
    auto it = std::lower_bound(b.begin(), b.end(), basic, basis_less);
    if (it != b.end() && *it == basic) return static_cast<std::size_t>(it - b.begin());
    return npos;
}

bool Atom::sign_of(const JFormula& basic) const {
    std::size_t i = find(basic);
    if (i == npos) throw BasisMismatch("'" + to_string(basic) + "' is not in the atom's basis");
    return signs_[i];
}

std::string to_string(const Atom& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += " & ";
        if (!a.signs()[i]) out += '~';
        out += to_string(a.basis()[i]);
    }
    return out;
}

std::vector<Atom> atoms_of(const Basis& basis, std::size_t cap) {
    const std::size_t n = basis.size();
    if (n > cap)
        throw ResourceError("basis has " + std::to_string(n) +
                            " basic subformulas; atom enumeration cap is " + std::to_string(cap));
    if (n >= 63) throw ResourceError("basis too large to enumerate");
    auto shared = std::make_shared<const Basis>(basis);
    std::vector<Atom> atoms;
    const std::uint64_t count = std::uint64_t{1} << n;
    atoms.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<bool> signs(n);
        for (std::size_t i = 0; i < n; ++i) signs[i] = ((k >> (n - 1 - i)) & 1U) == 0;
        atoms.emplace_back(shared, std::move(signs));
    }
    return atoms;
}

std::vector<Atom> atoms_of(const PFormula& f, std::size_t cap) { return atoms_of(basis_of(f), cap); }
std::vector<Atom> atoms_of(const JFormula& f, std::size_t cap) { return atoms_of(basis_of(f), cap); }

std::size_t size_p(const PFormula& f) {
    switch (f.kind()) {
        case PFormula::Kind::AtLeast: return 2;
        case PFormula::Kind::Not: return 1 + size_p(f.body());
        case PFormula::Kind::And: return size_p(f.left()) + 1 + size_p(f.right());
    }
    return 0;
}

std::size_t size_rat(const Rational& r) { return size_of(r); }

std::size_t norm(const PFormula& f) {
    std::size_t best = 0;
    collect_thresholds(f, best);
    return best;
}

}  // namespace pjsat
