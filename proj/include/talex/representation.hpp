// Linear representations of the link group, ingested from seed-meridian
// matrices and propagated through the diagram by Wirtinger conjugation.
// A meridian matrix is t_c * rho(x) for an arc x on component c.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "talex/matrix.hpp"
#include "talex/tangle.hpp"

namespace talex {

// J K J^{-1} for positive crossings, J^{-1} K J for negative ones.
inline SquareMatrix conjugate_meridian(int sign, const SquareMatrix& over, const SquareMatrix& under_in) {
  SquareMatrix inv = over.inverse();
  return sign > 0 ? over * under_in * inv : inv * under_in * over;
}

class Representation {
 public:
  Representation(RingSpec ring, int dim, const Diagram& diagram)
      : ring_(std::move(ring)),
        dim_(dim),
        ctx_{diagram.num_components, 0},
        arcs_(static_cast<std::size_t>(diagram.arc_count())) {}

  const RingSpec& ring() const { return ring_; }
  int dim() const { return dim_; }
  const VarContext& context() const { return ctx_; }

  bool has(int arc) const { return arcs_[static_cast<std::size_t>(arc)].has_value(); }

  const SquareMatrix& meridian(int arc) const {
    const auto& m = arcs_[static_cast<std::size_t>(arc)];
    if (!m) throw error(errc::underdetermined_seeds, "arc has no meridian matrix");
    return *m;
  }

  // Meridian of the arc traversed with (+1) or against (-1) its direction.
  SquareMatrix meridian_signed(int arc, int sign) const {
    return sign > 0 ? meridian(arc) : meridian(arc).inverse();
  }

  void assign(int arc, SquareMatrix m, std::vector<std::string>* conflicts, const std::string& label) {
    auto& slot = arcs_[static_cast<std::size_t>(arc)];
    if (slot) {
      if (!(*slot == m) && conflicts)
        conflicts->push_back("arc " + std::to_string(arc) + " (" + label + "): conflicting meridian assignment");
      return;
    }
    slot = std::move(m);
  }

  const std::vector<std::string>& seed_conflicts() const { return seed_conflicts_; }
  std::vector<std::string>& seed_conflicts() { return seed_conflicts_; }

 private:
  RingSpec ring_;
  int dim_;
  VarContext ctx_;
  std::vector<std::optional<SquareMatrix>> arcs_;
  std::vector<std::string> seed_conflicts_;
};

using SeedMatrices = std::map<std::string, std::vector<std::vector<RingElem>>>;

// Fills every arc from the named seeds by deterministic fixpoint iteration
// over the crossings (forward and backward conjugation).
inline Representation propagate(const Diagram& diagram, const RingSpec& ring, int dim, const SeedMatrices& seeds) {
  Representation rep(ring, dim, diagram);
  const VarContext ctx = rep.context();

  for (const auto& [name, rows] : seeds) {
    if (static_cast<int>(rows.size()) != dim) throw error(errc::invalid_representation, "seed " + name + " has wrong dimension");
    int arc = diagram.seed_arc(name);
    SquareMatrix rho = SquareMatrix::from_ring_entries(rows, ctx);
    FractionElem det = rho.determinant();
    bool unit = !det.is_zero() && det.num().is_constant() && det.num().leading().second.is_unit();
    if (!unit) throw error(errc::invalid_representation, "seed " + name + " is not invertible over " + ring.name());
    int comp = diagram.arc_component[static_cast<std::size_t>(arc)];
    SquareMatrix merid = rho.scaled(FractionElem(LaurentPoly::variable(ring, ctx, comp)));
    rep.assign(arc, std::move(merid), &rep.seed_conflicts(), name);
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& c : diagram.crossings) {
      if (!rep.has(c.over)) continue;
      if (rep.has(c.under_in) && !rep.has(c.under_out)) {
        rep.assign(c.under_out, conjugate_meridian(c.sign, rep.meridian(c.over), rep.meridian(c.under_in)), nullptr, "");
        progress = true;
      } else if (!rep.has(c.under_in) && rep.has(c.under_out)) {
        rep.assign(c.under_in, conjugate_meridian(-c.sign, rep.meridian(c.over), rep.meridian(c.under_out)), nullptr, "");
        progress = true;
      }
    }
  }

  for (int a = 0; a < diagram.arc_count(); ++a) {
    if (!rep.has(a))
      throw error(errc::underdetermined_seeds,
                  "arc " + std::to_string(a) + " unreachable from the given seeds");
  }
  return rep;
}

// Every crossing relation must hold as a matrix identity; extra seed
// assignments must agree with propagated values.
inline std::vector<std::string> verify_representation(const Representation& rep, const Diagram& diagram) {
  std::vector<std::string> violations = rep.seed_conflicts();
  for (std::size_t i = 0; i < diagram.crossings.size(); ++i) {
    const auto& c = diagram.crossings[i];
    SquareMatrix expect = conjugate_meridian(c.sign, rep.meridian(c.over), rep.meridian(c.under_in));
    if (!(expect == rep.meridian(c.under_out))) {
      violations.push_back("crossing " + std::to_string(i) + ": Wirtinger relation violated (arcs " +
                           std::to_string(c.over) + "," + std::to_string(c.under_in) + "," +
                           std::to_string(c.under_out) + ")");
    }
  }
  return violations;
}

// d = 1, every meridian is [t_c].
inline Representation trivial_representation(const Diagram& diagram) {
  RingSpec z = RingSpec::integers();
  Representation rep(z, 1, diagram);
  const VarContext ctx = rep.context();
  for (int a = 0; a < diagram.arc_count(); ++a) {
    SquareMatrix m(1, z, ctx);
    m.at(0, 0) = FractionElem(LaurentPoly::variable(z, ctx, diagram.arc_component[static_cast<std::size_t>(a)]));
    rep.assign(a, std::move(m), nullptr, "");
  }
  return rep;
}

}  // namespace talex
