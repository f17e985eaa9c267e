#include "pjsat/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pjsat {

std::size_t size_of(const Integer& n) {
    if (sgn(n) == 0) return 1;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t size_of(const Rational& r) {
    Integer num = abs(r.get_num());
    return size_of(num) + size_of(r.get_den());
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [](std::string_view digits) {
        if (digits.empty()) throw std::invalid_argument("empty integer");
        std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
        if (start == digits.size()) throw std::invalid_argument("empty integer");
        for (std::size_t i = start; i < digits.size(); ++i)
            if (digits[i] < '0' || digits[i] > '9')
                throw std::invalid_argument("bad digit in '" + std::string(digits) + "'");
        std::string s(digits[0] == '+' ? digits.substr(1) : digits);
        return Integer(s, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_fraction_string(r);
}

bool within_size_bound(std::size_t size, std::size_t rows, std::size_t coeff_size) {
    // Signed arithmetic: the exponent may be negative, in which case the bound holds.
    long long excess = static_cast<long long>(size) -
                       2 * static_cast<long long>(rows) * static_cast<long long>(coeff_size) - 2;
    if (excess <= 0) return true;
    if (rows <= 1) return false;  // r*log2(r) == 0
    Integer lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, static_cast<unsigned long>(excess));
    Integer rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), rows, 2 * rows);
    return lhs <= rhs;
}

double size_bound_value(std::size_t rows, std::size_t coeff_size) {
    double r = static_cast<double>(rows);
    double lg = rows == 0 ? 0.0 : std::log2(r);
    return 2.0 * (r * static_cast<double>(coeff_size) + r * lg + 1.0);
}

}  // namespace pjsat
