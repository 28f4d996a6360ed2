#include "qbounds/simplex.hpp"

#include "qbounds/errors.hpp"

#include <optional>

namespace qbounds {

namespace {

/// Tableau rows are constraints; the last column is the right-hand side.
/// The objective row holds reduced costs for a maximisation.
class Tableau {
public:
    Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
        : rows_(std::move(rows)), basis_(std::move(basis)) {}

    std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }

    /// Maximises c . x over the allowed columns. Returns false if unbounded.
    bool optimise(const std::vector<Rational>& c, const std::vector<bool>& allowed) {
        for (;;) {
            // Reduced cost of column j: c_j - c_B . column_j.
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols() && !entering; ++j) {
                if (!allowed[j] || is_basic(j)) continue;
                Rational reduced = c[j];
                for (std::size_t i = 0; i < rows_.size(); ++i) reduced -= c[basis_[i]] * rows_[i][j];
                if (reduced > 0) entering = j;
            }
            if (!entering) return true;

            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][*entering];
                if (a <= 0) continue;
                Rational ratio = rows_[i].back() / a;
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, *entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational p = rows_[row][col];
        for (auto& v : rows_[row]) v /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            Rational f = rows_[i][col];
            for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    Rational value_of(std::size_t j) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] == j) return rows_[i].back();
        return 0;
    }

    std::vector<std::vector<Rational>>& rows() { return rows_; }
    std::vector<std::size_t>& basis() { return basis_; }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    const std::size_t nv = lp.num_vars;
    if (lp.objective.size() != nv) throw ParameterError("objective length must equal the number of variables");
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != nv) throw ParameterError("constraint length must equal the number of variables");

    // Normalise to nonnegative right-hand sides.
    std::vector<LinearConstraint> cons = lp.constraints;
    for (auto& c : cons) {
        if (c.rhs >= 0) continue;
        for (auto& a : c.coeffs) a = -a;
        c.rhs = -c.rhs;
        if (c.relation == Relation::less_equal)
            c.relation = Relation::greater_equal;
        else if (c.relation == Relation::greater_equal)
            c.relation = Relation::less_equal;
    }

    std::size_t slacks = 0, artificials = 0;
    for (const auto& c : cons) {
        if (c.relation != Relation::equal) ++slacks;
        if (c.relation != Relation::less_equal) ++artificials;
    }
    const std::size_t total = nv + slacks + artificials;
    const std::size_t first_artificial = nv + slacks;

    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;
    std::size_t next_slack = nv, next_art = first_artificial;
    for (const auto& c : cons) {
        std::vector<Rational> row(total + 1, Rational(0));
        for (std::size_t j = 0; j < nv; ++j) row[j] = c.coeffs[j];
        row.back() = c.rhs;
        switch (c.relation) {
            case Relation::less_equal:
                row[next_slack] = 1;
                basis.push_back(next_slack++);
                break;
            case Relation::greater_equal:
                row[next_slack++] = -1;
                row[next_art] = 1;
                basis.push_back(next_art++);
                break;
            case Relation::equal:
                row[next_art] = 1;
                basis.push_back(next_art++);
                break;
        }
        rows.push_back(std::move(row));
    }

    Tableau t(std::move(rows), std::move(basis));
    std::vector<bool> all(total, true);

    // Phase 1: drive the artificial variables to zero.
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = -1;
    t.optimise(phase1, all);
    Rational infeasibility = 0;
    for (std::size_t j = first_artificial; j < total; ++j) infeasibility += t.value_of(j);
    LpSolution sol;
    if (infeasibility > 0) {
        sol.status = LpStatus::infeasible;
        return sol;
    }

    // Pivot degenerate artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows().size();) {
        if (t.basis()[i] < first_artificial) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < first_artificial && !col; ++j)
            if (t.rows()[i][j] != 0) col = j;
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.rows().erase(t.rows().begin() + static_cast<std::ptrdiff_t>(i));
            t.basis().erase(t.basis().begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<bool> allowed(total, true);
    for (std::size_t j = first_artificial; j < total; ++j) allowed[j] = false;
    std::vector<Rational> phase2(total, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) phase2[j] = lp.objective[j];
    if (!t.optimise(phase2, allowed)) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.x.resize(nv);
    sol.value = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        sol.x[j] = t.value_of(j);
        sol.value += lp.objective[j] * sol.x[j];
    }
    return sol;
}

}  // namespace qbounds
