#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pjsat/rational.hpp"

namespace pjsat {

enum class Relation { Eq, Le, Ge, Lt };

const char* to_string(Relation r);

struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
};

// Rows over var_count variables; every variable is implicitly non-negative.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t var_count = 0) : var_count_(var_count) {}

    // Throws std::invalid_argument if the coefficient vector has the wrong length.
    // Entries are stored in canonical (reduced) form.
    void add_row(Row row);
    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        add_row(Row{std::move(coeffs), rel, std::move(rhs)});
    }

    std::size_t var_count() const { return var_count_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    bool has_strict() const;
    bool only_equalities() const;

private:
    std::size_t var_count_;
    std::vector<Row> rows_;
};

using Solution = std::vector<Rational>;

// Every row holds under exact substitution (strict rows strictly). Non-negativity is
// not part of this check.
bool satisfies(const LinearSystem& s, const Solution& x);
bool is_nonnegative(const Solution& x);
std::size_t positive_count(const Solution& x);

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status;
    Solution x;      // Optimal only: a basic feasible solution
    Rational value;  // Optimal only
};

// Exact two-phase simplex with Bland's rule: maximise objective . x subject to the
// (non-strict) rows and x >= 0. Throws std::invalid_argument on strict rows.
LpResult maximize(const LinearSystem& s, const std::vector<Rational>& objective);

// A non-negative solution, or nullopt. Strict rows are handled by maximising a
// common slack e (a.z + e <= b, e <= 1); the system is feasible iff the optimum e > 0.
// The returned point is the structural part of a basic optimal solution.
std::optional<Solution> feasible(const LinearSystem& s);

// For an all-equality system with r rows and a non-negative solution x: walks along
// kernel directions of the positive-support columns until at most r entries are
// positive. Support never grows. Throws PreconditionViolation on bad input.
Solution reduce_support(const LinearSystem& eq_system, Solution x);

// Small solution: solves s, non-negative, at most r positive entries, support inside
// support(x), and (for integer coefficients of size <= l) entries of size at most
// 2(r*l + r*log2 r + 1). Throws PreconditionViolation if x does not solve s.
Solution shrink_solution(const LinearSystem& s, const Solution& x);

struct Integerized {
    LinearSystem system;
    std::size_t max_coeff_size;  // l: largest size over all coefficients and right-hand sides
};

// Scales each row by the lcm of its denominators.
Integerized integerize(const LinearSystem& s);

// Rank of a rational matrix (rows given as vectors of equal length).
std::size_t rank(const std::vector<std::vector<Rational>>& matrix);

// `coef*z1 + coef*z2 REL rhs` per line, coefficients and rhs written as n/d.
std::string dump_lp(const LinearSystem& s);

}  // namespace pjsat
