#pragma once

#include <vector>

#include "cosmoface/types.hpp"

namespace cosmoface::lp {

/// Variable bounds; absent sides are unbounded.
struct Bound {
  bool has_lo = false;
  bool has_up = false;
  Rational lo = 0;
  Rational up = 0;

  static Bound free() { return {}; }
  static Bound nonneg() { return {true, false, 0, 0}; }
  static Bound boxed(Rational l, Rational u) { return {true, true, std::move(l), std::move(u)}; }
  static Bound fixed(Rational v) { return {true, true, v, v}; }
};

enum class Rel { LE, GE, EQ };

struct Row {
  std::vector<Rational> coeffs;
  Rel rel = Rel::LE;
  Rational rhs = 0;
};

/// maximize objective . z subject to the rows and variable bounds.
struct Problem {
  std::vector<Bound> vars;
  std::vector<Rational> objective;
  std::vector<Row> rows;
};

enum class Status { Optimal, Unbounded, Infeasible };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective_value = 0;
  std::vector<Rational> values;  // structural variables only
};

/// Two-phase primal simplex on a dense rational tableau. Nonbasic variables
/// rest at a bound (or at zero when free); Bland's rule picks the entering
/// and leaving variables, which guarantees termination.
Solution maximize(const Problem& problem);

}  // namespace cosmoface::lp
