#include "pjsat/linrat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pjsat/errors.hpp"

namespace pjsat {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Le: return "<=";
        case Relation::Ge: return ">=";
        case Relation::Lt: return "<";
    }
    return "?";
}

void LinearSystem::add_row(Row row) {
    if (row.coeffs.size() != var_count_)
        throw std::invalid_argument("row has " + std::to_string(row.coeffs.size()) + " coefficients, expected " +
                                    std::to_string(var_count_));
    // GMP comparisons assume canonical fractions.
    for (auto& a : row.coeffs) a.canonicalize();
    row.rhs.canonicalize();
    rows_.push_back(std::move(row));
}

bool LinearSystem::has_strict() const {
    return std::any_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.rel == Relation::Lt; });
}

bool LinearSystem::only_equalities() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.rel == Relation::Eq; });
}

namespace {

Rational dot(const std::vector<Rational>& a, const Solution& x) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(x[i]) != 0) acc += a[i] * x[i];
    return acc;
}

bool holds(Relation rel, const Rational& lhs, const Rational& rhs) {
    switch (rel) {
        case Relation::Eq: return lhs == rhs;
        case Relation::Le: return lhs <= rhs;
        case Relation::Ge: return lhs >= rhs;
        case Relation::Lt: return lhs < rhs;
    }
    return false;
}

// Dense tableau simplex. Row i of `t` holds the constraint coefficients followed by the
// right-hand side; `obj` holds reduced costs (c_B B^-1 A - c) and the objective value.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : t_(rows, std::vector<Rational>(cols + 1)), obj_(cols + 1), basis_(rows), banned_(cols, false) {}

    std::vector<Rational>& row(std::size_t i) { return t_[i]; }
    std::size_t rows() const { return t_.size(); }
    std::size_t cols() const { return banned_.size(); }
    std::vector<std::size_t>& basis() { return basis_; }
    void ban(std::size_t col) { banned_[col] = true; }
    const Rational& value() const { return obj_.back(); }

    void set_objective(const std::vector<Rational>& c) {
        for (std::size_t j = 0; j < cols(); ++j) obj_[j] = -c[j];
        obj_.back() = 0;
        for (std::size_t i = 0; i < rows(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= cols(); ++j) obj_[j] += cb * t_[i][j];
        }
    }

    // Returns false if the objective is unbounded.
    bool optimize() {
        for (;;) {
            std::size_t enter = cols();
            for (std::size_t j = 0; j < cols(); ++j)
                if (!banned_[j] && sgn(obj_[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols()) return true;
            std::size_t leave = rows();
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = t_[i].back() / t_[i][enter];
                if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = t_[r][c];
        for (auto& v : t_[r]) v /= p;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || sgn(t_[i][c]) == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
        }
        if (sgn(obj_[c]) != 0) {
            Rational f = obj_[c];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (sgn(t_[r][j]) != 0) obj_[j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    void erase_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    Solution primal(std::size_t n) const {
        Solution x(n);
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (basis_[i] < n) x[basis_[i]] = t_[i].back();
        return x;
    }

private:
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> obj_;
    std::vector<std::size_t> basis_;
    std::vector<bool> banned_;
};

// Row-reduces `m` in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// A nonzero vector d with M d = 0 (M given by rows), or empty if the columns are independent.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> m, std::size_t cols) {
    auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == cols) return {};
    std::vector<Rational> d(cols);
    d[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) d[pivots[i]] = -m[i][free];
    return d;
}

// Indices of a maximal linearly independent subset of the rows, greedily in order.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::size_t> keep;
    std::vector<std::vector<Rational>> basis;  // reduced rows kept so far
    std::vector<std::size_t> lead;             // leading column of each reduced row
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> v = rows[i];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (sgn(v[lead[k]]) == 0) continue;
            Rational f = v[lead[k]];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
        if (nz == v.end()) continue;
        std::size_t c = static_cast<std::size_t>(nz - v.begin());
        Rational inv = 1 / v[c];
        for (auto& q : v) q *= inv;
        for (auto& b : basis)
            if (sgn(b[c]) != 0) {
                Rational f = b[c];
                for (std::size_t j = 0; j < b.size(); ++j) b[j] -= f * v[j];
            }
        basis.push_back(std::move(v));
        lead.push_back(c);
        keep.push_back(i);
    }
    return keep;
}

// Unique solution of a square nonsingular system, or nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = row_reduce(a, n);
    if (pivots.size() != n) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

void require_solution(const LinearSystem& s, const Solution& x, const char* who) {
    if (x.size() != s.var_count())
        throw PreconditionViolation(std::string(who) + ": solution length does not match the system");
    if (!is_nonnegative(x)) throw PreconditionViolation(std::string(who) + ": solution has a negative entry");
    if (!satisfies(s, x)) throw PreconditionViolation(std::string(who) + ": vector does not solve the system");
}

}  // namespace

bool satisfies(const LinearSystem& s, const Solution& x) {
    if (x.size() != s.var_count()) return false;
    for (const auto& row : s.rows())
        if (!holds(row.rel, dot(row.coeffs, x), row.rhs)) return false;
    return true;
}

bool is_nonnegative(const Solution& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) >= 0; });
}

std::size_t positive_count(const Solution& x) {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](const Rational& v) { return sgn(v) > 0; }));
}

LpResult maximize(const LinearSystem& s, const std::vector<Rational>& objective) {
    if (s.has_strict()) throw std::invalid_argument("maximize: strict rows are not supported");
    if (objective.size() != s.var_count()) throw std::invalid_argument("maximize: objective length mismatch");
    const std::size_t n = s.var_count();
    const std::size_t m = s.row_count();

    // Normalise to rhs >= 0.
    std::vector<Row> rows = s.rows();
    for (auto& r : rows) {
        if (sgn(r.rhs) >= 0) continue;
        for (auto& c : r.coeffs) c = -c;
        r.rhs = -r.rhs;
        if (r.rel == Relation::Le) r.rel = Relation::Ge;
        else if (r.rel == Relation::Ge) r.rel = Relation::Le;
    }

    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : rows) {
        if (r.rel != Relation::Eq) ++slacks;
        if (r.rel != Relation::Le) ++artificials;
    }
    const std::size_t cols = n + slacks + artificials;
    const std::size_t first_art = n + slacks;
    Tableau tab(m, cols);
    std::size_t next_slack = n, next_art = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        auto& tr = tab.row(i);
        std::copy(rows[i].coeffs.begin(), rows[i].coeffs.end(), tr.begin());
        tr.back() = rows[i].rhs;
        switch (rows[i].rel) {
            case Relation::Le:
                tr[next_slack] = 1;
                tab.basis()[i] = next_slack++;
                break;
            case Relation::Ge:
                tr[next_slack++] = -1;
                tr[next_art] = 1;
                tab.basis()[i] = next_art++;
                break;
            default:
                tr[next_art] = 1;
                tab.basis()[i] = next_art++;
                break;
        }
    }

    if (artificials > 0) {
        std::vector<Rational> phase1(cols);
        for (std::size_t j = first_art; j < cols; ++j) phase1[j] = -1;
        tab.set_objective(phase1);
        tab.optimize();  // bounded above by 0
        if (sgn(tab.value()) < 0) return {LpResult::Status::Infeasible, {}, {}};
        // Pivot zero-level artificials out of the basis; rows with no other support are redundant.
        for (std::size_t i = 0; i < tab.rows();) {
            if (tab.basis()[i] < first_art) {
                ++i;
                continue;
            }
            std::size_t c = 0;
            while (c < first_art && sgn(tab.row(i)[c]) == 0) ++c;
            if (c == first_art) {
                tab.erase_row(i);
                continue;
            }
            tab.pivot(i, c);
            ++i;
        }
        for (std::size_t j = first_art; j < cols; ++j) tab.ban(j);
    }

    std::vector<Rational> c(cols);
    std::copy(objective.begin(), objective.end(), c.begin());
    tab.set_objective(c);
    if (!tab.optimize()) return {LpResult::Status::Unbounded, {}, {}};
    return {LpResult::Status::Optimal, tab.primal(n), tab.value()};
}

std::optional<Solution> feasible(const LinearSystem& s) {
    const std::size_t n = s.var_count();
    if (!s.has_strict()) {
        LpResult r = maximize(s, std::vector<Rational>(n));
        if (r.status != LpResult::Status::Optimal) return std::nullopt;
        return r.x;
    }
    LinearSystem relaxed(n + 1);
    for (const auto& row : s.rows()) {
        std::vector<Rational> coeffs = row.coeffs;
        coeffs.emplace_back(row.rel == Relation::Lt ? 1 : 0);
        relaxed.add_row(std::move(coeffs), row.rel == Relation::Lt ? Relation::Le : row.rel, row.rhs);
    }
    std::vector<Rational> cap(n + 1);
    cap[n] = 1;
    relaxed.add_row(cap, Relation::Le, 1);
    LpResult r = maximize(relaxed, cap);
    if (r.status != LpResult::Status::Optimal || sgn(r.value) <= 0) return std::nullopt;
    r.x.pop_back();
    return r.x;
}

Solution reduce_support(const LinearSystem& eq_system, Solution x) {
    if (!eq_system.only_equalities()) throw PreconditionViolation("reduce_support: system must contain only equalities");
    require_solution(eq_system, x, "reduce_support");
    const std::size_t r = eq_system.row_count();
    for (;;) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (sgn(x[j]) > 0) support.push_back(j);
        if (support.size() <= r) return x;

        std::vector<std::vector<Rational>> m;
        for (const auto& row : eq_system.rows()) {
            std::vector<Rational> sub;
            for (auto j : support) sub.push_back(row.coeffs[j]);
            m.push_back(std::move(sub));
        }
        std::vector<Rational> d = kernel_vector(std::move(m), support.size());
        if (d.empty()) throw std::logic_error("reduce_support: no kernel direction with more columns than rows");
        if (std::none_of(d.begin(), d.end(), [](const Rational& v) { return sgn(v) > 0; }))
            for (auto& v : d) v = -v;

        // Largest step keeping x >= 0; at least one support entry reaches zero.
        std::optional<Rational> step;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (sgn(d[k]) <= 0) continue;
            Rational ratio = x[support[k]] / d[k];
            if (!step || ratio < *step) step = ratio;
        }
        for (std::size_t k = 0; k < support.size(); ++k) x[support[k]] -= *step * d[k];
    }
}

Solution shrink_solution(const LinearSystem& s, const Solution& x) {
    require_solution(s, x, "shrink_solution");
    const std::size_t n = s.var_count();

    // Zero out variables that are zero in x.
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < n; ++j)
        if (sgn(x[j]) > 0) vars.push_back(j);

    auto restrict_to = [&](const std::vector<Rational>& coeffs, const std::vector<std::size_t>& cols) {
        std::vector<Rational> out;
        out.reserve(cols.size());
        for (auto j : cols) out.push_back(coeffs[j]);
        return out;
    };

    // Move to a basic solution of the restricted system before pinning. Pinning the
    // inequalities at an arbitrary x puts x's own entries into the final Cramer
    // system, and their sizes are unbounded; at a basic point every value is a ratio
    // of minors of the original data.
    LinearSystem restricted(vars.size());
    for (const auto& row : s.rows()) restricted.add_row(restrict_to(row.coeffs, vars), row.rel, row.rhs);
    std::optional<Solution> basic = feasible(restricted);
    if (!basic) throw std::logic_error("shrink_solution: restricted system infeasible although x solves it");
    Solution current(n);
    for (std::size_t k = 0; k < vars.size(); ++k) current[vars[k]] = (*basic)[k];

    // Pin every inequality to an equality at the current point.
    std::vector<std::vector<Rational>> eqs;
    std::vector<Rational> rhs;
    for (const auto& row : s.rows()) {
        eqs.push_back(row.coeffs);
        rhs.push_back(row.rel == Relation::Eq ? row.rhs : dot(row.coeffs, current));
    }

    auto restricted_system = [&](const std::vector<std::size_t>& cols) {
        LinearSystem sys(cols.size());
        for (std::size_t i = 0; i < eqs.size(); ++i) sys.add_row(restrict_to(eqs[i], cols), Relation::Eq, rhs[i]);
        return sys;
    };
    auto restricted_point = [&](const std::vector<std::size_t>& cols) {
        Solution p;
        for (auto j : cols) p.push_back(current[j]);
        return p;
    };
    auto drop_dependent_rows = [&] {
        std::vector<std::vector<Rational>> sub;
        for (const auto& e : eqs) sub.push_back(restrict_to(e, vars));
        std::vector<std::size_t> keep = independent_rows(sub);
        std::vector<std::vector<Rational>> new_eqs;
        std::vector<Rational> new_rhs;
        for (auto i : keep) {
            new_eqs.push_back(eqs[i]);
            new_rhs.push_back(rhs[i]);
        }
        eqs = std::move(new_eqs);
        rhs = std::move(new_rhs);
    };

    for (;;) {
        const std::size_t e = eqs.size();
        const std::size_t v = vars.size();
        if (e == v) {
            std::vector<std::vector<Rational>> square;
            for (const auto& eq : eqs) square.push_back(restrict_to(eq, vars));
            if (auto unique = solve_square(std::move(square), rhs)) {
                for (std::size_t k = 0; k < v; ++k)
                    if ((*unique)[k] != current[vars[k]])
                        throw std::logic_error("shrink_solution: Cramer solution differs from the tracked point");
                break;
            }
            drop_dependent_rows();
        } else if (e < v) {
            Solution next = reduce_support(restricted_system(vars), restricted_point(vars));
            std::vector<std::size_t> kept;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                current[vars[k]] = next[k];
                if (sgn(next[k]) > 0) kept.push_back(vars[k]);
            }
            if (kept.size() == vars.size() && e < v)
                throw std::logic_error("shrink_solution: support reduction made no progress");
            vars = std::move(kept);
        } else {
            std::size_t before = eqs.size();
            drop_dependent_rows();
            if (eqs.size() == before) throw std::logic_error("shrink_solution: more independent rows than variables");
        }
    }

    if (!satisfies(s, current)) throw std::logic_error("shrink_solution: result does not solve the system");
    return current;
}

Integerized integerize(const LinearSystem& s) {
    Integerized out{LinearSystem(s.var_count()), 0};
    for (const auto& row : s.rows()) {
        Integer scale = row.rhs.get_den();
        for (const auto& c : row.coeffs) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
            scale = l;
        }
        Row scaled{{}, row.rel, row.rhs * scale};
        for (const auto& c : row.coeffs) {
            scaled.coeffs.emplace_back(c * scale);
            out.max_coeff_size = std::max(out.max_coeff_size, size_of(Integer(scaled.coeffs.back().get_num())));
        }
        out.max_coeff_size = std::max(out.max_coeff_size, size_of(Integer(scaled.rhs.get_num())));
        out.system.add_row(std::move(scaled));
    }
    return out;
}

std::size_t rank(const std::vector<std::vector<Rational>>& matrix) {
    if (matrix.empty()) return 0;
    auto m = matrix;
    return row_reduce(m, m.front().size()).size();
}

std::string dump_lp(const LinearSystem& s) {
    std::string out;
    for (const auto& row : s.rows()) {
        std::string line;
        for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
            if (sgn(row.coeffs[j]) == 0) continue;
            if (!line.empty()) line += " + ";
            line += to_fraction_string(row.coeffs[j]) + "*z" + std::to_string(j + 1);
        }
        if (line.empty()) line = "0";
        out += line + " " + to_string(row.rel) + " " + to_fraction_string(row.rhs) + "\n";
    }
    return out;
}

}  // namespace pjsat
