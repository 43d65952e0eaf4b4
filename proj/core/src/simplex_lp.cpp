#include "cosmoface/simplex_lp.hpp"

#include <algorithm>

#include "cosmoface/errors.hpp"

namespace cosmoface::lp {

namespace {

enum class State { Basic, AtLower, AtUpper, FreeAtZero };

struct UnboundedSignal {};

// Dense tableau kept in basis-reduced form: every basic column is a unit
// vector, so a[r][j] is the rate at which basic variable basis[r] moves
// when nonbasic j moves.
struct Tableau {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> value;
  std::vector<Bound> bound;
  std::vector<State> state;
  std::vector<int> basis;
  std::vector<Rational> cost;
  std::vector<Rational> d;  // reduced costs

  bool is_fixed(int j) const {
    return bound[j].has_lo && bound[j].has_up && bound[j].lo == bound[j].up;
  }

  void reset_reduced_costs() {
    d = cost;
    for (int r = 0; r < m; ++r) {
      const Rational cb = cost[basis[r]];
      if (cb == 0) continue;
      for (int j = 0; j < n; ++j)
        if (a[r][j] != 0) d[j] -= cb * a[r][j];
    }
  }

  void pivot(int row, int col) {
    const Rational inv = a[row][col];
    for (int j = 0; j < n; ++j)
      if (a[row][j] != 0) a[row][j] /= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = 0; j < n; ++j)
        if (a[row][j] != 0) a[r][j] -= f * a[row][j];
    }
    if (d[col] != 0) {
      const Rational f = d[col];
      for (int j = 0; j < n; ++j)
        if (a[row][j] != 0) d[j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  // One simplex step. Returns false at optimality.
  bool step() {
    // Bland: lowest-index nonbasic with an improving direction.
    int enter = -1, dir = 0;
    for (int j = 0; j < n; ++j) {
      if (state[j] == State::Basic || is_fixed(j)) continue;
      if (state[j] == State::FreeAtZero && d[j] != 0) {
        enter = j;
        dir = d[j] > 0 ? 1 : -1;
        break;
      }
      if (state[j] == State::AtLower && d[j] > 0) {
        enter = j;
        dir = 1;
        break;
      }
      if (state[j] == State::AtUpper && d[j] < 0) {
        enter = j;
        dir = -1;
        break;
      }
    }
    if (enter < 0) return false;

    // Ratio test. Blockers: the entering variable's opposite bound and each
    // basic variable's bound. Ties break on the smallest blocking variable
    // index (Bland), the entering variable counting as blocker index `enter`.
    bool bounded = false;
    Rational limit = 0;
    int block_var = -1;
    int leave_row = -1;
    bool leave_at_upper = false;

    auto offer = [&](const Rational& room, int var, int row, bool at_upper) {
      if (!bounded || room < limit || (room == limit && var < block_var)) {
        bounded = true;
        limit = room;
        block_var = var;
        leave_row = row;
        leave_at_upper = at_upper;
      }
    };

    const Bound& eb = bound[enter];
    if (dir > 0 && eb.has_up) offer(eb.up - value[enter], enter, -1, true);
    if (dir < 0 && eb.has_lo) offer(value[enter] - eb.lo, enter, -1, false);

    for (int r = 0; r < m; ++r) {
      const Rational& alpha = a[r][enter];
      if (alpha == 0) continue;
      const int k = basis[r];
      // value_k moves at rate -dir*alpha per unit step.
      const Rational rate = dir > 0 ? alpha : Rational(-alpha);
      if (rate > 0) {
        if (bound[k].has_lo) offer((value[k] - bound[k].lo) / rate, k, r, false);
      } else {
        if (bound[k].has_up) offer((bound[k].up - value[k]) / -rate, k, r, true);
      }
    }

    if (!bounded) throw UnboundedSignal{};

    if (limit != 0) {
      const Rational delta = dir > 0 ? limit : Rational(-limit);
      value[enter] += delta;
      for (int r = 0; r < m; ++r)
        if (a[r][enter] != 0) value[basis[r]] -= delta * a[r][enter];
    }
    if (leave_row < 0) {
      if (block_var == enter) {
        state[enter] = leave_at_upper ? State::AtUpper : State::AtLower;
        return true;
      }
      throw InternalError("simplex ratio test chose a blocker without a row");
    }
    const int leaving = basis[leave_row];
    state[leaving] = leave_at_upper ? State::AtUpper : State::AtLower;
    value[leaving] = leave_at_upper ? bound[leaving].up : bound[leaving].lo;
    state[enter] = State::Basic;
    pivot(leave_row, enter);
    return true;
  }

  Rational objective_value() const {
    Rational acc = 0;
    for (int j = 0; j < n; ++j)
      if (cost[j] != 0 && value[j] != 0) acc += cost[j] * value[j];
    return acc;
  }
};

}  // namespace

Solution maximize(const Problem& problem) {
  const int n_struct = static_cast<int>(problem.vars.size());
  const int m = static_cast<int>(problem.rows.size());
  for (const Row& row : problem.rows)
    if (static_cast<int>(row.coeffs.size()) != n_struct)
      throw InputError("row width does not match variable count");
  if (static_cast<int>(problem.objective.size()) != n_struct)
    throw InputError("objective width does not match variable count");

  Tableau t;
  t.m = m;
  // Column layout: structurals, slacks for inequality rows, one artificial
  // per row (used only when the slack cannot seed a feasible basis).
  std::vector<int> slack_of(m, -1);
  int n = n_struct;
  for (int r = 0; r < m; ++r)
    if (problem.rows[r].rel != Rel::EQ) slack_of[r] = n++;
  const int art0 = n;
  n += m;
  t.n = n;

  t.a.assign(m, std::vector<Rational>(n, 0));
  t.bound.assign(n, Bound::nonneg());
  t.cost.assign(n, 0);
  t.value.assign(n, 0);
  t.state.assign(n, State::AtLower);
  t.basis.assign(m, -1);

  for (int j = 0; j < n_struct; ++j) {
    t.bound[j] = problem.vars[j];
    if (t.bound[j].has_lo) {
      t.state[j] = State::AtLower;
      t.value[j] = t.bound[j].lo;
    } else if (t.bound[j].has_up) {
      t.state[j] = State::AtUpper;
      t.value[j] = t.bound[j].up;
    } else {
      t.state[j] = State::FreeAtZero;
      t.value[j] = 0;
    }
  }

  bool need_phase_one = false;
  for (int r = 0; r < m; ++r) {
    const Row& row = problem.rows[r];
    const bool gezap = row.rel == Rel::GE;  // rewrite >= as <=
    for (int j = 0; j < n_struct; ++j)
      t.a[r][j] = gezap ? Rational(-row.coeffs[j]) : row.coeffs[j];
    Rational rhs = gezap ? Rational(-row.rhs) : row.rhs;
    if (slack_of[r] >= 0) t.a[r][slack_of[r]] = 1;

    Rational residual = rhs;
    for (int j = 0; j < n_struct; ++j)
      if (t.a[r][j] != 0 && t.value[j] != 0) residual -= t.a[r][j] * t.value[j];

    if (slack_of[r] >= 0 && residual >= 0) {
      // The slack seeds the basis directly.
      t.basis[r] = slack_of[r];
      t.state[slack_of[r]] = State::Basic;
      t.value[slack_of[r]] = residual;
    } else {
      if (residual < 0) {
        // Negate the row so the artificial column is a +1 unit vector.
        for (int j = 0; j < n; ++j)
          if (t.a[r][j] != 0) t.a[r][j] = -t.a[r][j];
        residual = -residual;
      }
      const int art = art0 + r;
      t.a[r][art] = 1;
      t.basis[r] = art;
      t.state[art] = State::Basic;
      t.value[art] = residual;
      if (residual != 0) need_phase_one = true;
    }
  }

  constexpr long kMaxIters = 2'000'000;
  long iters = 0;

  if (need_phase_one) {
    for (int r = 0; r < m; ++r) t.cost[art0 + r] = -1;
    t.reset_reduced_costs();
    try {
      while (t.step())
        if (++iters > kMaxIters) throw InternalError("simplex iteration limit hit in phase 1");
    } catch (const UnboundedSignal&) {
      throw InternalError("phase 1 reported unbounded");
    }
    if (t.objective_value() != 0) return Solution{Status::Infeasible, 0, {}};
    for (int r = 0; r < m; ++r) t.cost[art0 + r] = 0;
  }
  // Artificials are frozen at zero from here on.
  for (int r = 0; r < m; ++r) t.bound[art0 + r] = Bound::fixed(0);

  for (int j = 0; j < n_struct; ++j) t.cost[j] = problem.objective[j];
  t.reset_reduced_costs();

  Solution out;
  try {
    while (t.step())
      if (++iters > kMaxIters) throw InternalError("simplex iteration limit hit in phase 2");
  } catch (const UnboundedSignal&) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.values.assign(t.value.begin(), t.value.begin() + n_struct);
  out.objective_value = 0;
  for (int j = 0; j < n_struct; ++j)
    if (problem.objective[j] != 0 && out.values[j] != 0)
      out.objective_value += problem.objective[j] * out.values[j];
  return out;
}

}  // namespace cosmoface::lp
