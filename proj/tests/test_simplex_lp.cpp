#include "cosmoface/simplex_lp.hpp"
#include "doctest.h"

using namespace cosmoface;
using namespace cosmoface::lp;

namespace {

Row row(std::initializer_list<long long> coeffs, Rel rel, long long rhs) {
  Row r;
  for (long long c : coeffs) r.coeffs.emplace_back(c);
  r.rel = rel;
  r.rhs = rhs;
  return r;
}

}  // namespace

TEST_CASE("textbook 2d maximum") {
  // max x + y st x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), value 14/5.
  Problem p;
  p.vars = {Bound::nonneg(), Bound::nonneg()};
  p.objective = {1, 1};
  p.rows = {row({1, 2}, Rel::LE, 4), row({3, 1}, Rel::LE, 6)};
  Solution s = maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective_value == Rational(14, 5));
  CHECK(s.values[0] == Rational(8, 5));
  CHECK(s.values[1] == Rational(6, 5));
}

TEST_CASE("boxed and free variables") {
  // max 2x - y with x in [-1,1], y free, x + y = 3 -> x=1, y=2.
  Problem p;
  p.vars = {Bound::boxed(-1, 1), Bound::free()};
  p.objective = {2, -1};
  p.rows = {row({1, 1}, Rel::EQ, 3)};
  Solution s = maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.values[0] == 1);
  CHECK(s.values[1] == 2);
  CHECK(s.objective_value == 0);
}

TEST_CASE("unbounded detection") {
  Problem p;
  p.vars = {Bound::nonneg()};
  p.objective = {1};
  p.rows = {row({-1}, Rel::LE, 5)};
  CHECK(maximize(p).status == Status::Unbounded);
}

TEST_CASE("infeasible detection") {
  Problem p;
  p.vars = {Bound::nonneg()};
  p.objective = {0};
  p.rows = {row({1}, Rel::LE, 1), row({1}, Rel::GE, 2)};
  CHECK(maximize(p).status == Status::Infeasible);
}

TEST_CASE("greater-equal rows and negative rhs") {
  // min x (as max -x) st x >= -2, x <= 7 -> x = -2.
  Problem p;
  p.vars = {Bound::free()};
  p.objective = {-1};
  p.rows = {row({1}, Rel::GE, -2), row({1}, Rel::LE, 7)};
  Solution s = maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.values[0] == -2);
}

TEST_CASE("degenerate equalities stay exact") {
  // max t st u - c = 0, v - c + t <= 0, u,v in [0,1], c,t free.
  // With u pinned to c and v free up to 1, optimum is t = 1 (c=1, v=0).
  Problem p;
  p.vars = {Bound::boxed(0, 1), Bound::boxed(0, 1), Bound::free(), Bound::free()};
  p.objective = {0, 0, 0, 1};
  p.rows = {row({1, 0, -1, 0}, Rel::EQ, 0), row({0, 1, -1, 1}, Rel::LE, 0)};
  Solution s = maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective_value == 1);
}

TEST_CASE("fractional pivots keep exact rationals") {
  // max y st 3y <= 1, 7y <= 2 -> y = 2/7.
  Problem p;
  p.vars = {Bound::nonneg()};
  p.objective = {1};
  p.rows = {row({3}, Rel::LE, 1), row({7}, Rel::LE, 2)};
  Solution s = maximize(p);
  CHECK(s.objective_value == Rational(2, 7));
}
