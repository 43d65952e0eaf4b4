#include "cosmoface/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "cosmoface/errors.hpp"
#include "cosmoface/linalg.hpp"
#include "cosmoface/simplex_lp.hpp"

namespace cosmoface {

int affine_rank(const std::vector<std::vector<int>>& points) {
  return affine_dimension(points);
}

namespace {

// Row-reduced description of aff(X): pivot columns plus reduced rows of the
// difference matrix. Membership of further points is a cheap reduction.
struct AffineHull {
  std::vector<int> base;                       // coords of x0
  std::vector<std::vector<Rational>> rows;     // reduced difference rows
  std::vector<int> pivot_col;                  // per row

  bool contains(const std::vector<int>& point) const {
    std::vector<Rational> v(base.size());
    for (size_t i = 0; i < base.size(); ++i) v[i] = point[i] - base[i];
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivot_col[r]];  // copy: the loop below zeroes the slot
      if (f == 0) continue;
      for (size_t c = 0; c < v.size(); ++c)
        if (rows[r][c] != 0) v[c] -= f * rows[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  }
};

AffineHull affine_hull(const std::vector<std::vector<int>>& points) {
  AffineHull hull;
  hull.base = points.front();
  const size_t d = hull.base.size();
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> v(d);
    for (size_t c = 0; c < d; ++c) v[c] = points[i][c] - hull.base[c];
    for (size_t r = 0; r < hull.rows.size(); ++r) {
      const Rational f = v[hull.pivot_col[r]];
      if (f == 0) continue;
      for (size_t c = 0; c < d; ++c)
        if (hull.rows[r][c] != 0) v[c] -= f * hull.rows[r][c];
    }
    int pc = -1;
    for (size_t c = 0; c < d; ++c)
      if (v[c] != 0) {
        pc = static_cast<int>(c);
        break;
      }
    if (pc < 0) continue;
    const Rational inv = v[pc];
    for (size_t c = 0; c < d; ++c) v[c] /= inv;
    hull.rows.push_back(std::move(v));
    hull.pivot_col.push_back(pc);
  }
  return hull;
}

}  // namespace

LpDecision lp_is_face(const CosmoPolytope& poly, const FaceSet& x) {
  poly.validate_face_set(x);
  const int nv = poly.vertex_count();
  const int d = poly.ambient_dimension();

  LpDecision out;
  if (x.empty()) {
    out.is_face = true;
    return out;
  }
  if (static_cast<int>(x.size()) == nv) {
    out.is_face = true;
    LinearFunctional zero;
    zero.coeffs.assign(d, 0);
    out.certificate = zero;
    return out;
  }

  std::vector<char> in(nv, 0);
  for (int i : x) in[i] = 1;

  // Exact presolve: a functional constant on X is constant on aff(X), so a
  // vertex outside X inside that hull rules the face out immediately.
  std::vector<std::vector<int>> x_coords = poly.coordinates(x);
  AffineHull hull = affine_hull(x_coords);
  for (int i = 0; i < nv; ++i) {
    if (in[i]) continue;
    if (hull.contains(poly.vertex(i).coords)) {
      out.is_face = false;
      out.witness_vertex = i;
      return out;
    }
  }

  // Variables: phi split into [0,1] halves, then free c and t.
  lp::Problem p;
  const int c_var = 2 * d;
  const int t_var = 2 * d + 1;
  p.vars.assign(2 * d, lp::Bound::boxed(0, 1));
  p.vars.push_back(lp::Bound::free());
  p.vars.push_back(lp::Bound::free());
  p.objective.assign(2 * d + 2, 0);
  p.objective[t_var] = 1;

  for (int i = 0; i < nv; ++i) {
    lp::Row row;
    row.coeffs.assign(2 * d + 2, 0);
    const std::vector<int>& coords = poly.vertex(i).coords;
    for (int c = 0; c < d; ++c) {
      row.coeffs[c] = coords[c];
      row.coeffs[d + c] = -coords[c];
    }
    row.coeffs[c_var] = -1;
    row.rhs = 0;
    if (in[i]) {
      row.rel = lp::Rel::EQ;
    } else {
      row.coeffs[t_var] = 1;
      row.rel = lp::Rel::LE;
    }
    p.rows.push_back(std::move(row));
  }

  lp::Solution sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal)
    throw InternalError("face LP did not reach an optimum");

  out.margin = sol.objective_value;
  out.is_face = out.margin > 0;
  LinearFunctional cert;
  cert.coeffs.assign(d, 0);
  for (int c = 0; c < d; ++c) cert.coeffs[c] = -(sol.values[c] - sol.values[d + c]);
  cert.offset = sol.values[c_var];
  out.certificate = std::move(cert);
  return out;
}

std::vector<FaceSet> brute_force_faces(const CosmoPolytope& poly, const Caps& caps) {
  const int nv = poly.vertex_count();
  if (nv > caps.max_bf_vertices)
    throw CapError("brute-force face enumeration limited to " +
                   std::to_string(caps.max_bf_vertices) + " polytope vertices; this polytope has " +
                   std::to_string(nv));
  std::vector<FaceSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
    FaceSet x;
    for (int i = 0; i < nv; ++i)
      if (mask & (std::uint64_t{1} << i)) x.push_back(i);
    if (lp_is_face(poly, x).is_face) out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::vector<int> default_vertex_rank(const CosmoPolytope& poly) {
  // rank[i] = position of vertex i in label-lexicographic order
  std::vector<int> order(poly.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return poly.vertex(a).label < poly.vertex(b).label;
  });
  std::vector<int> rank(poly.vertex_count());
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) rank[order[pos]] = pos;
  return rank;
}

std::vector<std::vector<FaceSet>> pull_all(const FaceLattice& lattice,
                                           const std::vector<int>& rank) {
  const auto& faces = lattice.faces();
  std::vector<std::vector<FaceSet>> memo(faces.size());
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& face = faces[fi];
    if (face.dim < 0) continue;
    if (static_cast<int>(face.vertices.size()) == face.dim + 1) {
      memo[fi] = {face.vertices};
      continue;
    }
    const int pulled = *std::min_element(
        face.vertices.begin(), face.vertices.end(),
        [&](int a, int b) { return rank[a] < rank[b]; });
    for (int qi : lattice.facets_of(static_cast<int>(fi))) {
      const Face& facet = faces[qi];
      if (std::binary_search(facet.vertices.begin(), facet.vertices.end(), pulled)) continue;
      for (const FaceSet& simplex : memo[qi]) {
        FaceSet coned = simplex;
        coned.insert(std::lower_bound(coned.begin(), coned.end(), pulled), pulled);
        memo[fi].push_back(std::move(coned));
      }
    }
    if (memo[fi].empty())
      throw InternalError("pulling triangulation found no facets avoiding the pulled vertex");
  }
  return memo;
}

}  // namespace

std::vector<FaceSet> face_pulling_triangulation(const FaceLattice& lattice,
                                                const CosmoPolytope& poly, int face_index,
                                                const std::vector<int>* vertex_rank) {
  if (face_index < 0 || face_index >= static_cast<int>(lattice.faces().size()))
    throw InputError("face index out of range");
  std::vector<int> rank = vertex_rank ? *vertex_rank : default_vertex_rank(poly);
  return pull_all(lattice, rank)[face_index];
}

Triangulation pulling_triangulation(const FaceLattice& lattice, const CosmoPolytope& poly,
                                    const std::vector<int>* vertex_rank) {
  const int top = static_cast<int>(lattice.faces().size()) - 1;
  return Triangulation{face_pulling_triangulation(lattice, poly, top, vertex_rank)};
}

BigInt normalized_volume(const Multigraph& g, const Caps& caps,
                         const std::vector<int>* vertex_rank) {
  if (!(g.edge_count() >= 1 && g.is_connected()))
    throw InputError("normalized volume is defined for connected graphs with at least one edge");
  FaceEngine engine(g, caps);
  const CosmoPolytope& poly = engine.polytope();
  FaceLattice lattice = FaceLattice::build(engine);
  Triangulation tri = pulling_triangulation(lattice, poly, vertex_rank);

  // Basis of span(P - v0) intersected with Z^d.
  const std::vector<int>& base = poly.vertex(0).coords;
  IntMatrix diffs;
  for (int i = 1; i < poly.vertex_count(); ++i) {
    IntVector row(base.size());
    for (size_t c = 0; c < base.size(); ++c) row[c] = poly.vertex(i).coords[c] - base[c];
    diffs.push_back(std::move(row));
  }
  std::vector<IntVector> basis = saturated_row_lattice(diffs);
  const int dim = static_cast<int>(basis.size());

  BigInt volume = 0;
  for (const FaceSet& simplex : tri.simplices) {
    if (static_cast<int>(simplex.size()) != dim + 1)
      throw InternalError("triangulation simplex has wrong vertex count");
    IntMatrix edge_coords(dim, IntVector(dim));
    const std::vector<int>& origin = poly.vertex(simplex[0]).coords;
    for (int i = 1; i <= dim; ++i) {
      IntVector diff(origin.size());
      const std::vector<int>& p = poly.vertex(simplex[i]).coords;
      for (size_t c = 0; c < origin.size(); ++c) diff[c] = p[c] - origin[c];
      auto alpha = express_in_lattice_basis(basis, diff);
      if (!alpha)
        throw InternalError("simplex edge vector is not an integer lattice combination");
      edge_coords[i - 1] = std::move(*alpha);
    }
    BigInt det = integer_determinant(std::move(edge_coords));
    volume += det < 0 ? -det : det;
  }
  return volume;
}

}  // namespace cosmoface
