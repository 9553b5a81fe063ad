#include "cyclespace/invariant.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclespace/errors.hpp"
#include "cyclespace/simplex.hpp"

namespace cyclespace {

namespace {

// Keeps a row-reduced basis of the span of inserted vectors; insert returns
// true when the vector was independent of the previous ones.
class SpanBuilder {
 public:
  bool insert(Vec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& lead = rows_[k][pivots_[k]];
      if (v[pivots_[k]] == 0) continue;
      Rational f = v[pivots_[k]] / lead;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        pivots_.push_back(j);
        rows_.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Vec flatten(const RatMatrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

// Intersects the span of `basis` with the fixed space of the signed edge map.
std::vector<Vec> fixed_subspace(const std::vector<Vec>& basis,
                                const SignedEdgeMap& s) {
  std::vector<Vec> diff;
  diff.reserve(basis.size());
  bool already_fixed = true;
  for (const Vec& b : basis) {
    Vec d = sub(s.apply(b), b);
    if (!is_zero(d)) already_fixed = false;
    diff.push_back(std::move(d));
  }
  if (already_fixed) return basis;
  std::vector<Vec> out;
  for (const Vec& y : nullspace(RatMatrix::from_columns(diff))) {
    Vec v(basis.front().size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (y[k] != 0) v = add(v, scale(basis[k], y[k]));
    out.push_back(std::move(v));
  }
  return out;
}

bool vertex_transitive(const std::vector<GraphAutomorphism>& elements,
                       std::size_t vertex_count) {
  std::vector<bool> hit(vertex_count, false);
  for (const auto& g : elements) hit[g(0)] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

// An invariant map A: B -> Z on a vertex-transitive group is determined by
// Y = A(X(0)): Y must lie in the cycle space, be fixed by the stabilizer of
// vertex 0, and satisfy sum over v of t_v(Y) = 0 for coset representatives
// t_v(0) = v (the image of the single relation among the cut vectors).
// Conversely any such Y yields an invariant map via A(X(v)) = t_v(Y).
struct TransitiveCommutant {
  std::vector<Vec> seeds;              // admissible Y, one per dimension
  std::vector<SignedEdgeMap> cosets;   // cosets[v] maps vertex 0 to v
};

TransitiveCommutant transitive_commutant(const OrientedGraph& g,
                                         const GroupSpec& group) {
  const auto& elements = group.enumerated();
  const std::size_t nv = g.vertex_count();

  TransitiveCommutant out;
  out.cosets.resize(nv);
  std::vector<bool> have(nv, false);
  for (const auto& el : elements) {
    std::size_t v = el(0);
    if (!have[v]) {
      have[v] = true;
      out.cosets[v] = edge_action(el, g);
    }
  }

  std::vector<Vec> fixed = cycle_basis(g);
  for (const auto& el : stabilizer(elements, 0)) {
    if (fixed.empty()) break;
    fixed = fixed_subspace(fixed, edge_action(el, g));
  }
  if (fixed.empty()) return out;

  std::vector<Vec> summed;
  summed.reserve(fixed.size());
  for (const Vec& f : fixed) {
    Vec s(g.edge_count(), Rational(0));
    for (std::size_t v = 0; v < nv; ++v) s = add(s, out.cosets[v].apply(f));
    summed.push_back(std::move(s));
  }
  for (const Vec& y : nullspace(RatMatrix::from_columns(summed))) {
    Vec seed(g.edge_count(), Rational(0));
    for (std::size_t k = 0; k < fixed.size(); ++k)
      if (y[k] != 0) seed = add(seed, scale(fixed[k], y[k]));
    out.seeds.push_back(std::move(seed));
  }
  return out;
}

// Left inverse on the column span: (C^T C)^{-1} C^T.
RatMatrix left_inverse(const RatMatrix& c) {
  RatMatrix ct = c.transpose();
  return inverse(ct * c) * ct;
}

}  // namespace

RatMatrix ProjectionFamily::member(const Vec& parameters) const {
  if (parameters.size() != basis.size())
    fail(ErrorCode::BadInput, "parameter count does not match family dimension");
  RatMatrix p = p_orth;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (parameters[i] == 0) continue;
    p = p + basis[i].scaled(parameters[i]);
  }
  return p;
}

RatMatrix average_projection(const RatMatrix& p0, const OrientedGraph& g,
                             const GroupSpec& group) {
  const auto& elements = group.enumerated();
  const std::size_t ne = g.edge_count();
  RatMatrix sum(ne, ne);
  for (const auto& el : elements) {
    SignedEdgeMap m = edge_action(el, g);
    // (m^T p0 m)[a][b] = sign[a] sign[b] p0[image[a]][image[b]]
    for (std::size_t a = 0; a < ne; ++a)
      for (std::size_t b = 0; b < ne; ++b)
        sum.at(a, b) += Rational(m.sign[a] * m.sign[b]) *
                        p0.at(m.image[a], m.image[b]);
  }
  return sum.scaled(Rational(1) / Rational(static_cast<unsigned long>(elements.size())));
}

std::vector<RatMatrix> averaged_commutant_maps(const OrientedGraph& g,
                                               const GroupSpec& group) {
  const auto& elements = group.enumerated();
  std::vector<Vec> zb = cycle_basis(g);
  std::vector<Vec> bb = cut_basis(g);
  RatMatrix z_mat = RatMatrix::from_columns(zb);
  RatMatrix b_mat = RatMatrix::from_columns(bb);
  RatMatrix z_pinv = left_inverse(z_mat);
  RatMatrix b_pinv = left_inverse(b_mat);
  const std::size_t dz = zb.size();
  const std::size_t db = bb.size();

  // Coordinate actions R_g on Z and S_g on B, plus the index of g^{-1}.
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k)
    index[elements[k].permutation] = k;
  std::vector<RatMatrix> r(elements.size()), s(elements.size());
  std::vector<std::size_t> inv(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    SignedEdgeMap m = edge_action(elements[k], g);
    std::vector<Vec> zi, bi;
    for (const Vec& c : zb) zi.push_back(m.apply(c));
    for (const Vec& c : bb) bi.push_back(m.apply(c));
    r[k] = z_pinv * RatMatrix::from_columns(zi);
    s[k] = b_pinv * RatMatrix::from_columns(bi);
    inv[k] = index.at(inverse(elements[k]).permutation);
  }

  // Average the elementary maps E_ij: B -> Z over the group; the image of
  // the averaging operator spans the commutant.
  SpanBuilder span;
  std::vector<RatMatrix> coord_maps;
  for (std::size_t i = 0; i < dz; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      RatMatrix avg(dz, db);
      for (std::size_t k = 0; k < elements.size(); ++k) {
        // R_{g^{-1}} E_ij S_g = outer(col_i R_{g^{-1}}, row_j S_g)
        const RatMatrix& ri = r[inv[k]];
        const RatMatrix& sk = s[k];
        for (std::size_t a = 0; a < dz; ++a) {
          if (ri.at(a, i) == 0) continue;
          for (std::size_t b = 0; b < db; ++b)
            avg.at(a, b) += ri.at(a, i) * sk.at(j, b);
        }
      }
      if (span.insert(flatten(avg))) coord_maps.push_back(std::move(avg));
    }
  }

  std::vector<RatMatrix> out;
  out.reserve(coord_maps.size());
  for (const RatMatrix& a : coord_maps) out.push_back(z_mat * a * b_pinv);
  return out;
}

std::size_t commutant_dimension(const OrientedGraph& g,
                                const GroupSpec& group) {
  if (vertex_transitive(group.enumerated(), g.vertex_count()))
    return transitive_commutant(g, group).seeds.size();
  return averaged_commutant_maps(g, group).size();
}

ProjectionFamily commutant_family(const OrientedGraph& g,
                                  const GroupSpec& group) {
  ProjectionFamily family;
  family.p_orth = orth_project_onto_span(cycle_basis(g));
  family.p_cut = orth_project_onto_span(cut_basis(g));

  if (!vertex_transitive(group.enumerated(), g.vertex_count())) {
    family.basis = averaged_commutant_maps(g, group);
    return family;
  }

  TransitiveCommutant tc = transitive_commutant(g, group);
  if (tc.seeds.empty()) return family;
  RatMatrix cut_pinv = left_inverse(RatMatrix::from_columns(cut_basis(g)));
  for (const Vec& seed : tc.seeds) {
    // A(X(v)) = t_v(seed), extended by A . P_B to the whole edge space.
    std::vector<Vec> images;
    for (std::size_t v = 1; v < g.vertex_count(); ++v)
      images.push_back(tc.cosets[v].apply(seed));
    family.basis.push_back(RatMatrix::from_columns(images) * cut_pinv);
  }
  return family;
}

std::vector<EdgeVector> torus_invariant_basis(std::size_t n) {
  if (n < 3)
    fail(ErrorCode::UnsupportedParameter, "torus invariant basis needs n >= 3");
  OrientedGraph g = torus_graph(n, 2);
  auto neg = [n](std::size_t i) { return (n - 1 - i) % n; };

  auto orbit = [&](std::size_t i, std::size_t j) {
    // index pairs in the alternating sum, with signs +,-,-,+,-,+,-,+
    return std::vector<std::pair<std::size_t, std::size_t>>{
        {i, j},           {neg(i), j},      {j, i},           {neg(j), i},
        {i, neg(j)},      {neg(i), neg(j)}, {neg(j), neg(i)}, {j, neg(i)}};
  };
  static const int signs[8] = {1, -1, -1, 1, -1, 1, -1, 1};

  std::vector<EdgeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == neg(i)) continue;
      if (n % 2 == 1 && (i == n / 2 || j == n / 2)) continue;
      auto orb = orbit(i, j);
      bool canonical = true;
      for (const auto& p : orb)
        if (p < std::make_pair(i, j)) canonical = false;
      if (!canonical) continue;
      Vec v(g.edge_count(), Rational(0));
      for (std::size_t k = 0; k < 8; ++k)
        v = add(v, scale(torus_small_square(g, n, orb[k].first, orb[k].second),
                         Rational(signs[k])));
      out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> edge_orbit_representatives(const OrientedGraph& g,
                                                    const GroupSpec& group) {
  if (group.edge_transitive) return {0};
  const std::size_t ne = g.edge_count();
  std::vector<std::size_t> comp(ne);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& m : group.edge_generators)
    for (std::size_t e = 0; e < ne; ++e) {
      std::size_t a = find(e), b = find(m.image[e]);
      if (a != b) comp[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> reps;
  for (std::size_t e = 0; e < ne; ++e)
    if (find(e) == e) reps.push_back(e);
  return reps;
}

}  // namespace

MinimizeResult minimize_l1(const ProjectionFamily& family,
                           const OrientedGraph& g, const GroupSpec& group) {
  MinimizeResult result;
  const std::size_t d = family.dimension();
  if (d == 0) {
    result.p_min = family.p_orth;
    result.norm = l1_operator_norm(family.p_orth);
    result.unique_minimizer = true;
    return result;
  }

  const std::size_t ne = g.edge_count();
  std::vector<std::size_t> reps = edge_orbit_representatives(g, group);
  const std::size_t nr = reps.size();

  // Variables: x (free, d), t (1), s_{r,e} (nr * ne). For each orbit
  // representative column r: |column entries| <= s_{r,.}, sum_e s_{r,e} <= t.
  const std::size_t nvars = d + 1 + nr * ne;
  auto svar = [&](std::size_t ri, std::size_t e) { return d + 1 + ri * ne + e; };

  LpProblem lp;
  lp.objective.assign(nvars, Rational(0));
  lp.objective[d] = 1;
  lp.free_vars.assign(nvars, false);
  for (std::size_t i = 0; i < d; ++i) lp.free_vars[i] = true;

  for (std::size_t ri = 0; ri < nr; ++ri) {
    Vec base = family.p_orth.column(reps[ri]);
    std::vector<Vec> dirs;
    for (const auto& m : family.basis) dirs.push_back(m.column(reps[ri]));
    for (std::size_t e = 0; e < ne; ++e) {
      for (int sgn : {1, -1}) {
        LpProblem::Row row;
        row.coeffs.assign(nvars, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
          row.coeffs[i] = Rational(sgn) * dirs[i][e];
        row.coeffs[svar(ri, e)] = -1;
        row.rel = LpProblem::Rel::Le;
        row.rhs = Rational(-sgn) * base[e];
        lp.rows.push_back(std::move(row));
      }
    }
    LpProblem::Row cap;
    cap.coeffs.assign(nvars, Rational(0));
    for (std::size_t e = 0; e < ne; ++e) cap.coeffs[svar(ri, e)] = 1;
    cap.coeffs[d] = -1;
    cap.rel = LpProblem::Rel::Le;
    cap.rhs = 0;
    lp.rows.push_back(std::move(cap));
  }

  LpSolution opt = solve_lp(lp);
  if (opt.status != LpSolution::Status::Optimal)
    fail(ErrorCode::BadInput, "norm minimization LP did not solve");
  result.parameters.assign(opt.x.begin(), opt.x.begin() + d);
  result.norm = opt.objective;
  result.p_min = family.member(result.parameters);

  // Uniqueness: the optimal face projects to a single parameter point iff
  // each coordinate has equal max and min over { norm(x) <= optimum }.
  LpProblem face = lp;
  LpProblem::Row bound;
  bound.coeffs.assign(nvars, Rational(0));
  bound.coeffs[d] = 1;
  bound.rel = LpProblem::Rel::Le;
  bound.rhs = result.norm;
  face.rows.push_back(std::move(bound));
  result.unique_minimizer = true;
  for (std::size_t i = 0; i < d && result.unique_minimizer; ++i) {
    Rational extremes[2];
    for (int dir = 0; dir < 2; ++dir) {
      face.objective.assign(nvars, Rational(0));
      face.objective[i] = dir == 0 ? Rational(1) : Rational(-1);
      LpSolution sol = solve_lp(face);
      if (sol.status != LpSolution::Status::Optimal)
        fail(ErrorCode::BadInput, "uniqueness LP did not solve");
      extremes[dir] = sol.x[i];
    }
    if (extremes[0] != extremes[1]) result.unique_minimizer = false;
  }
  return result;
}

ProjectionReport projection_report(const OrientedGraph& g,
                                   const GroupSpec& group) {
  ProjectionFamily family = commutant_family(g, group);
  MinimizeResult min = minimize_l1(family, g, group);
  RatMatrix id = RatMatrix::identity(g.edge_count());

  ProjectionReport rep;
  rep.dimension = family.dimension();
  rep.p_orth_norm = l1_operator_norm(family.p_orth);
  rep.i_minus_p_orth_norm = l1_operator_norm(id - family.p_orth);
  rep.p_min_norm = min.norm;
  rep.i_minus_p_min_norm = l1_operator_norm(id - min.p_min);
  rep.unique_minimizer = min.unique_minimizer;
  std::size_t dim_z = g.edge_count() - g.vertex_count() + 1;
  rep.trace_value = Rational(static_cast<unsigned long>(dim_z)) /
                    Rational(static_cast<unsigned long>(g.edge_count()));
  rep.lambda_lip0 = rep.i_minus_p_min_norm;
  rep.c1_upper_bound = rep.i_minus_p_min_norm;
  // the sharper lower bound via lambda(lip0) applies under edge transitivity
  rep.bm_lower_bound =
      group.edge_transitive ? rep.i_minus_p_min_norm : rep.p_min_norm - 1;
  return rep;
}

}  // namespace cyclespace
