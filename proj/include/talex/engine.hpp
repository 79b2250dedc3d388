// Twisted Alexander polynomials of Montesinos links via per-tangle boundary
// data: the eta-recursion over twist regions, the numerator / denominator
// closure formulas, the epsilon-augmented fallback for singular b^ne, and the
// trivial-representation specialization.
#pragma once

#include <vector>

#include "talex/representation.hpp"

namespace talex {

struct TangleBoundary {
  SquareMatrix b_ne, b_sw, b_se;
  SquareMatrix out_sw, out_se;  // meridians of the tangle's south output arcs
  int sw_arc = -1, se_arc = -1;
};

struct TapResult {
  CanonicalResult value;
  VarContext context;
  bool used_degenerate_path = false;
  bool oracle_checked = false;
};

namespace detail {

// Region entry arguments for the recursion. Horizontal bands are swept
// west->east and take their nw/sw ports; the meridian enters uninverted when
// the directed arc flows into the band. Vertical bands are swept
// north->south, take their nw/ne ports, and the inversion rule flips.
inline SquareMatrix region_arg(const Representation& rep, const Diagram::Region& r, bool first_arg) {
  const Diagram::Port& p = r.horizontal ? (first_arg ? r.nw : r.sw) : (first_arg ? r.nw : r.ne);
  int sigma = r.horizontal ? (p.into_region ? 1 : -1) : (p.into_region ? -1 : 1);
  return rep.meridian_signed(p.arc, sigma);
}

}  // namespace detail

// Runs the eta-recursion across one tangle's twist regions:
//   eta_{y^(0)} = 1, eta_{y^(1)} = u_{k_1}(a_1, b_1), eta_{x^(1)} = u_{k_1-1},
//   (eta_{y^(j)}, eta_{x^(j)})^T = G_{k_j}(a_j, b_j) (eta_{y^(j-2)}, eta_{x^(j-1)})^T.
inline TangleBoundary tangle_boundary(const Diagram& diagram, int tangle_index, const Representation& rep) {
  const auto& tangle = diagram.tangles[static_cast<std::size_t>(tangle_index)];
  const int r = static_cast<int>(tangle.regions.size());
  const int d = rep.dim();
  const RingSpec& ring = rep.ring();
  const VarContext& ctx = rep.context();

  std::vector<SquareMatrix> eta_y(static_cast<std::size_t>(r) + 1, SquareMatrix(d, ring, ctx));
  std::vector<SquareMatrix> eta_x(static_cast<std::size_t>(r) + 1, SquareMatrix(d, ring, ctx));
  eta_y[0] = SquareMatrix::identity(d, ring, ctx);

  for (int j = 1; j <= r; ++j) {
    const auto& region = tangle.regions[static_cast<std::size_t>(j - 1)];
    SquareMatrix a = detail::region_arg(rep, region, true);
    SquareMatrix b = detail::region_arg(rep, region, false);
    if (j == 1) {
      eta_y[1] = u_matrix(region.k, a, b);
      eta_x[1] = u_matrix(region.k - 1, a, b);
    } else {
      GBlocks g = g_matrix(region.k, a, b);
      eta_y[static_cast<std::size_t>(j)] = g.r0c0 * eta_y[static_cast<std::size_t>(j - 2)] +
                                           g.r0c1 * eta_x[static_cast<std::size_t>(j - 1)];
      eta_x[static_cast<std::size_t>(j)] = g.r1c0 * eta_y[static_cast<std::size_t>(j - 2)] +
                                           g.r1c1 * eta_x[static_cast<std::size_t>(j - 1)];
    }
  }

  TangleBoundary tb;
  tb.b_ne = eta_y[static_cast<std::size_t>(r)];
  tb.b_sw = eta_y[static_cast<std::size_t>(r - 1)];
  tb.b_se = eta_x[static_cast<std::size_t>(r)];
  tb.sw_arc = tangle.sw_arc;
  tb.se_arc = tangle.se_arc;
  tb.out_sw = rep.meridian(tangle.sw_arc);
  tb.out_se = rep.meridian(tangle.se_arc);
  return tb;
}

namespace detail {

inline FractionElem one_minus_det(const Representation& rep, int arc) {
  SquareMatrix id = SquareMatrix::identity(rep.dim(), rep.ring(), rep.context());
  return (id - rep.meridian(arc)).determinant();
}

inline TapResult make_result(const FractionElem& value, bool degenerate) {
  TapResult r;
  r.value = canonical_form(value);
  r.context = value.context();
  r.used_degenerate_path = degenerate;
  return r;
}

}  // namespace detail

// N(T): det(b^ne) / det(1 - x^se).
inline TapResult tap_numerator(const Diagram& diagram, const Representation& rep) {
  if (!diagram.spec.numerator || diagram.tangles.size() != 1)
    throw error(errc::precondition_failed, "tap_numerator needs a numerator closure of one tangle");
  TangleBoundary tb = tangle_boundary(diagram, 0, rep);
  FractionElem den = detail::one_minus_det(rep, tb.se_arc);
  if (den.is_zero()) throw error(errc::zero_denominator, "det(1 - x^se) vanishes identically");
  return detail::make_result(tb.b_ne.determinant() / den, false);
}

namespace detail {

// Assembles cbar = p_1 + p_2 q_1 + ... + p_s q_{s-1} ... q_1 with
// p_k = b_k^sw (b_k^ne)^{-1}, q_k = (b_k^se - b_k^sw)(b_k^ne)^{-1}, keeping a
// polynomial matrix over the common denominator prod_k det(b_k^ne). Returns
// the full chain value det(cbar) * prod_k det(b_k^ne) as one fraction.
inline FractionElem chain_value(const std::vector<SquareMatrix>& b_ne, const std::vector<SquareMatrix>& b_sw,
                                const std::vector<SquareMatrix>& b_se) {
  const int s = static_cast<int>(b_ne.size());
  const int d = b_ne[0].dim();
  const RingSpec& ring = b_ne[0].ring();
  const VarContext& ctx = b_ne[0].context();

  std::vector<SquareMatrix> adj;
  std::vector<FractionElem> det;
  FractionElem det_prod = FractionElem::one(ring, ctx);
  for (int k = 0; k < s; ++k) {
    adj.push_back(b_ne[static_cast<std::size_t>(k)].adjugate());
    det.push_back(b_ne[static_cast<std::size_t>(k)].determinant());
    det_prod = det_prod * det.back();
  }

  // suffix_k = prod_{j > k} det_j
  std::vector<FractionElem> suffix(static_cast<std::size_t>(s), FractionElem::one(ring, ctx));
  for (int k = s - 2; k >= 0; --k)
    suffix[static_cast<std::size_t>(k)] = suffix[static_cast<std::size_t>(k + 1)] * det[static_cast<std::size_t>(k + 1)];

  SquareMatrix c_num(d, ring, ctx);  // cbar * det_prod, polynomial
  SquareMatrix qprod = SquareMatrix::identity(d, ring, ctx);  // Q_{k-1} ... Q_1, polynomial
  for (int k = 0; k < s; ++k) {
    SquareMatrix p = b_sw[static_cast<std::size_t>(k)] * adj[static_cast<std::size_t>(k)];
    SquareMatrix term = (p * qprod).scaled(suffix[static_cast<std::size_t>(k)]);
    c_num = k == 0 ? term : c_num + term;
    if (k + 1 < s)
      qprod = ((b_se[static_cast<std::size_t>(k)] - b_sw[static_cast<std::size_t>(k)]) *
               adj[static_cast<std::size_t>(k)]) *
              qprod;
  }

  // det(cbar) * det_prod = det(c_num) / det_prod^{d-1}
  FractionElem value = c_num.determinant();
  for (int i = 1; i < d; ++i) value = value / det_prod;
  return value;
}

}  // namespace detail

// Degenerate path shared by tap_denominator: epsilon-augmented b^ne.
inline TapResult tap_degenerate(const Diagram& diagram, const Representation& rep) {
  const int s = static_cast<int>(diagram.tangles.size());
  if (diagram.spec.numerator || s < 2)
    throw error(errc::precondition_failed, "degenerate path needs a denominator closure");
  const int d = rep.dim();
  const RingSpec& ring = rep.ring();
  const VarContext base = rep.context();
  const VarContext ext{base.n, s};

  std::vector<SquareMatrix> b_ne, b_sw, b_se;
  int se_arc = -1;
  for (int k = 0; k < s; ++k) {
    TangleBoundary tb = tangle_boundary(diagram, k, rep);
    SquareMatrix eps = SquareMatrix::scalar(d, FractionElem(LaurentPoly::variable(ring, ext, base.n + k)));
    b_ne.push_back(tb.b_ne.with_context(ext) + eps);
    b_sw.push_back(tb.b_sw.with_context(ext));
    b_se.push_back(tb.b_se.with_context(ext));
    se_arc = tb.se_arc;
  }

  FractionElem full = detail::chain_value(b_ne, b_sw, b_se);
  auto poly = exact_divide(full.num(), full.den());
  if (!poly) throw error(errc::division_failed, "degenerate product is not polynomial");
  Exponents mins = poly->min_exponents();
  for (int v = base.n; v < ext.total(); ++v)
    if (mins[static_cast<std::size_t>(v)] < 0)
      throw error(errc::division_failed, "degenerate quotient has negative auxiliary exponents");
  LaurentPoly at_zero = poly->eps_set_zero().dropped_eps(base);

  FractionElem den = detail::one_minus_det(rep, se_arc);
  if (den.is_zero()) throw error(errc::zero_denominator, "det(1 - x_s^se) vanishes identically");
  return detail::make_result(FractionElem(at_zero) / den, true);
}

// D(T_1 * ... * T_s): (prod_k det b_k^ne / det(1 - x_s^se)) det(cbar) with
// cbar = p_1 + p_2 q_1 + ... + p_s q_{s-1} ... q_1. Switches to the
// epsilon path automatically when some det(b_k^ne) vanishes.
inline TapResult tap_denominator(const Diagram& diagram, const Representation& rep, bool force_degenerate = false) {
  const int s = static_cast<int>(diagram.tangles.size());
  if (diagram.spec.numerator || s < 2)
    throw error(errc::precondition_failed, "tap_denominator needs a denominator closure");
  if (force_degenerate) return tap_degenerate(diagram, rep);

  std::vector<SquareMatrix> b_ne, b_sw, b_se;
  int se_arc = -1;
  for (int k = 0; k < s; ++k) {
    TangleBoundary tb = tangle_boundary(diagram, k, rep);
    if (tb.b_ne.determinant().is_zero()) return tap_degenerate(diagram, rep);
    b_ne.push_back(tb.b_ne);
    b_sw.push_back(tb.b_sw);
    b_se.push_back(tb.b_se);
    se_arc = tb.se_arc;
  }

  FractionElem den = detail::one_minus_det(rep, se_arc);
  if (den.is_zero()) throw error(errc::zero_denominator, "det(1 - x_s^se) vanishes identically");
  return detail::make_result(detail::chain_value(b_ne, b_sw, b_se) / den, false);
}

// s = 3 shortcut when b_i^sw is the identity (index 1-based, cyclic):
//   det(b_{i-1}^ne)/det(1-x_{i-1}^se) *
//   det(b_{i+1}^ne + (b_i^se - 1)(b_{i+1}^sw + b_{i-1}^sw b_{i-1}^{ne,-1}(b_{i+1}^se - b_{i+1}^sw))).
inline TapResult tap_three_strand_simplified(const Diagram& diagram, const Representation& rep, int i) {
  if (diagram.spec.numerator || diagram.tangles.size() != 3)
    throw error(errc::precondition_failed, "three-strand shortcut needs s = 3");
  if (i < 1 || i > 3) throw error(errc::precondition_failed, "tangle index must be 1..3");

  auto idx = [](int v) { return ((v - 1) % 3 + 3) % 3; };
  TangleBoundary ti = tangle_boundary(diagram, idx(i), rep);
  TangleBoundary tm = tangle_boundary(diagram, idx(i - 1), rep);
  TangleBoundary tp = tangle_boundary(diagram, idx(i + 1), rep);

  const SquareMatrix id = SquareMatrix::identity(rep.dim(), rep.ring(), rep.context());
  if (!(ti.b_sw == id)) throw error(errc::precondition_failed, "b_i^sw is not the identity");

  FractionElem det_m = tm.b_ne.determinant();
  if (det_m.is_zero()) throw error(errc::zero_denominator, "det(b_{i-1}^ne) vanishes; use tap_denominator");

  // inner * det_m stays polynomial; divide the determinant back out once.
  SquareMatrix scaled_inner = tp.b_ne.scaled(det_m) +
                              (ti.b_se - id) * (tp.b_sw.scaled(det_m) +
                                                tm.b_sw * tm.b_ne.adjugate() * (tp.b_se - tp.b_sw));
  FractionElem value = scaled_inner.determinant();
  for (int k = 1; k < rep.dim(); ++k) value = value / det_m;
  FractionElem den = detail::one_minus_det(rep, tm.se_arc);
  if (den.is_zero()) throw error(errc::zero_denominator, "det(1 - x_{i-1}^se) vanishes identically");
  return detail::make_result(value / den, false);
}

inline TapResult compute_tap(const Diagram& diagram, const Representation& rep, bool force_degenerate = false) {
  if (diagram.spec.numerator) return tap_numerator(diagram, rep);
  return tap_denominator(diagram, rep, force_degenerate);
}

// Delta_L = Delta_{L,1} * (t - 1) for knots, Delta_{L,1} for links.
inline TapResult alexander_polynomial(const MontesinosSpec& spec) {
  Diagram d = synthesize_diagram(spec);
  Representation rep = trivial_representation(d);
  TapResult tap = compute_tap(d, rep);
  if (d.num_components == 1) {
    LaurentPoly t = LaurentPoly::variable(rep.ring(), rep.context(), 0);
    LaurentPoly one = LaurentPoly::constant_int(rep.ring(), rep.context(), 1);
    FractionElem adjusted = tap.value.as_fraction() * FractionElem(t - one);
    tap.value = canonical_form(adjusted);
  }
  return tap;
}

// f | g in R[t^{+-1}] up to dot-equivalence (univariate).
inline bool divides(const TapResult& f, const TapResult& g) {
  if (f.context.n != 1 || g.context.n != 1 || f.context.e != 0 || g.context.e != 0)
    throw error(errc::unsupported_context, "divides is univariate only");
  FractionElem fv = f.value.as_fraction();
  if (fv.is_zero()) throw error(errc::division_by_zero, "divides by zero polynomial");
  FractionElem ratio = g.value.as_fraction() / fv;
  return canonical_form(ratio).polynomial;
}

}  // namespace talex
