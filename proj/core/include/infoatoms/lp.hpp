#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "infoatoms/rational.hpp"

namespace infoatoms {

enum class Sense { Equal, LessEqual, GreaterEqual };

/// Sparse linear form: (variable, coefficient) pairs.
using LinearForm = std::vector<std::pair<std::size_t, Rational>>;

struct LpRow {
  LinearForm terms;
  Sense sense = Sense::Equal;
  Rational rhs;
};

/// Exact rational simplex (two-phase, Bland's rule). Variables carry an
/// optional lower bound; without one they are free. After the first
/// feasibility check the basis is kept, so repeated objectives warm-start.
class ExactSimplex {
 public:
  ExactSimplex(std::size_t variables, const std::vector<LpRow>& rows,
               const std::vector<std::optional<Rational>>& lower);

  bool feasible();
  /// Minimum of c.x, or nullopt when unbounded below. Requires feasibility.
  std::optional<Rational> minimize(const LinearForm& c);
  std::optional<Rational> maximize(const LinearForm& c);
  /// The current basic solution in the original variables.
  std::vector<Rational> point() const;

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  void pivot(std::size_t row, std::size_t col);
  // Runs the simplex on cost vector `cost` over columns [0, active_cols).
  // Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t active_cols);
  std::vector<Rational> column_cost(const LinearForm& c) const;
  Rational objective_value(const LinearForm& c) const;

  std::size_t n_;
  // Each original variable maps to (column, sign) pairs plus a constant shift.
  std::vector<std::vector<std::pair<std::size_t, int>>> var_columns_;
  std::vector<Rational> shift_;
  std::size_t structural_ = 0;  // columns before artificials
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;  // live reduced-cost row during optimize
  std::vector<std::size_t> basis_;
  std::optional<bool> feasible_;
  std::size_t pivots_ = 0;
};

}  // namespace infoatoms
