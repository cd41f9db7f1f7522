#include "infoatoms/lp.hpp"

#include "infoatoms/error.hpp"

namespace infoatoms {

ExactSimplex::ExactSimplex(std::size_t variables, const std::vector<LpRow>& rows,
                           const std::vector<std::optional<Rational>>& lower)
    : n_(variables), var_columns_(variables), shift_(variables, Rational(0)) {
  if (lower.size() != variables) {
    throw Error(ErrorCode::InvalidArgument, "lower bound vector does not match variable count");
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (lower[v]) {
      shift_[v] = *lower[v];
      var_columns_[v].push_back({cols_++, 1});
    } else {
      var_columns_[v].push_back({cols_++, 1});
      var_columns_[v].push_back({cols_++, -1});
    }
  }
  std::size_t slacks = 0;
  for (const LpRow& r : rows) {
    if (r.sense != Sense::Equal) ++slacks;
  }
  structural_ = cols_ + slacks;

  // Rows whose slack enters with +1 start with the slack basic; all others
  // get an artificial column.
  std::size_t next_slack = cols_;
  std::vector<std::size_t> needs_artificial;
  for (const LpRow& r : rows) {
    std::vector<Rational> row(structural_, Rational(0));
    Rational rhs = r.rhs;
    for (const auto& [v, a] : r.terms) {
      if (v >= n_) throw Error(ErrorCode::InvalidArgument, "row references unknown variable");
      for (const auto& [c, s] : var_columns_[v]) row[c] += s * a;
      rhs -= a * shift_[v];
    }
    std::optional<std::size_t> slack;
    if (r.sense == Sense::LessEqual) {
      row[next_slack] = 1;
      slack = next_slack++;
    } else if (r.sense == Sense::GreaterEqual) {
      row[next_slack] = -1;
      slack = next_slack++;
    }
    if (rhs < 0) {
      for (Rational& x : row) x = -x;
      rhs = -rhs;
    }
    tab_.push_back(std::move(row));
    rhs_.push_back(rhs);
    if (slack && tab_.back()[*slack] == 1) {
      basis_.push_back(*slack);
    } else {
      basis_.push_back(0);
      needs_artificial.push_back(tab_.size() - 1);
    }
  }
  cols_ = structural_ + needs_artificial.size();
  for (auto& row : tab_) row.resize(cols_, Rational(0));
  for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
    tab_[needs_artificial[k]][structural_ + k] = 1;
    basis_[needs_artificial[k]] = structural_ + k;
  }
}

void ExactSimplex::pivot(std::size_t row, std::size_t col) {
  ++pivots_;
  std::vector<Rational>& pr = tab_[row];
  const Rational p = pr[col];
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < cols_; ++k) {
    if (sgn(pr[k]) != 0) {
      pr[k] /= p;
      nz.push_back(k);
    }
  }
  rhs_[row] /= p;
  for (std::size_t i = 0; i < tab_.size(); ++i) {
    if (i == row || sgn(tab_[i][col]) == 0) continue;
    const Rational f = tab_[i][col];
    for (std::size_t k : nz) tab_[i][k] -= f * pr[k];
    rhs_[i] -= f * rhs_[row];
  }
  if (!reduced_.empty() && sgn(reduced_[col]) != 0) {
    const Rational f = reduced_[col];
    for (std::size_t k : nz) reduced_[k] -= f * pr[k];
  }
  basis_[row] = col;
}

bool ExactSimplex::optimize(const std::vector<Rational>& cost, std::size_t active_cols) {
  reduced_.assign(cols_, Rational(0));
  for (std::size_t j = 0; j < active_cols; ++j) reduced_[j] = cost[j];
  for (std::size_t i = 0; i < tab_.size(); ++i) {
    const Rational cb = cost[basis_[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(tab_[i][j]) != 0) reduced_[j] -= cb * tab_[i][j];
    }
  }
  for (;;) {
    std::size_t enter = active_cols;
    for (std::size_t j = 0; j < active_cols; ++j) {
      if (sgn(reduced_[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == active_cols) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (sgn(tab_[i][enter]) <= 0) continue;
      Rational ratio = rhs_[i] / tab_[i][enter];
      if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (!leave) {
      reduced_.clear();
      return false;
    }
    pivot(*leave, enter);
  }
  reduced_.clear();
  return true;
}

bool ExactSimplex::feasible() {
  if (feasible_) return *feasible_;
  if (cols_ > structural_) {
    std::vector<Rational> cost(cols_, Rational(0));
    for (std::size_t j = structural_; j < cols_; ++j) cost[j] = 1;
    optimize(cost, cols_);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (basis_[i] >= structural_) infeasibility += rhs_[i];
    }
    if (sgn(infeasibility) > 0) {
      feasible_ = false;
      return false;
    }
    // Drive remaining (zero-valued) artificials out of the basis; a row with
    // no structural entry left is redundant and dropped.
    for (std::size_t i = 0; i < tab_.size();) {
      if (basis_[i] < structural_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < structural_ && sgn(tab_[i][j]) == 0) ++j;
      if (j < structural_) {
        pivot(i, j);
        ++i;
      } else {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : tab_) row.resize(structural_);
    cols_ = structural_;
  }
  feasible_ = true;
  return true;
}

std::vector<Rational> ExactSimplex::column_cost(const LinearForm& c) const {
  std::vector<Rational> cost(cols_, Rational(0));
  for (const auto& [v, a] : c) {
    if (v >= n_) throw Error(ErrorCode::InvalidArgument, "objective references unknown variable");
    for (const auto& [col, s] : var_columns_[v]) cost[col] += s * a;
  }
  return cost;
}

Rational ExactSimplex::objective_value(const LinearForm& c) const {
  const std::vector<Rational> x = point();
  Rational value = 0;
  for (const auto& [v, a] : c) value += a * x[v];
  return value;
}

std::optional<Rational> ExactSimplex::minimize(const LinearForm& c) {
  if (!feasible()) throw Error(ErrorCode::InvalidArgument, "minimize called on an infeasible program");
  if (!optimize(column_cost(c), cols_)) return std::nullopt;
  return objective_value(c);
}

std::optional<Rational> ExactSimplex::maximize(const LinearForm& c) {
  LinearForm neg = c;
  for (auto& term : neg) term.second = -term.second;
  if (!feasible()) throw Error(ErrorCode::InvalidArgument, "maximize called on an infeasible program");
  if (!optimize(column_cost(neg), cols_)) return std::nullopt;
  return objective_value(c);
}

std::vector<Rational> ExactSimplex::point() const {
  std::vector<Rational> y(cols_, Rational(0));
  for (std::size_t i = 0; i < tab_.size(); ++i) y[basis_[i]] = rhs_[i];
  std::vector<Rational> x(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    x[v] = shift_[v];
    for (const auto& [col, s] : var_columns_[v]) x[v] += s * y[col];
  }
  return x;
}

}  // namespace infoatoms
