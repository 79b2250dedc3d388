// Brute-force ground truth: the Wirtinger presentation's Fox-derivative
// matrix M, the sparse rewriting matrix Q, and Wada's invariant evaluated
// directly as a quotient of minor determinants. Intentionally the naive
// definition, so engine bugs and oracle bugs stay uncorrelated.
#pragma once

#include <vector>

#include "talex/representation.hpp"

namespace talex {

using BlockMatrix = std::vector<std::vector<SquareMatrix>>;  // m x m of d x d

// Row i holds (1 - x_{i'}, x_ibar, -1) at columns (ibar, iunder, i') for a
// positive crossing, (-x_ibar^{-1} + x_{i'} x_ibar^{-1}, x_ibar^{-1}, -1) for
// a negative one; coinciding columns are summed.
inline BlockMatrix fox_matrix(const Diagram& diagram, const Representation& rep) {
  const int m = diagram.crossing_count();
  const int d = rep.dim();
  BlockMatrix M(static_cast<std::size_t>(m),
                std::vector<SquareMatrix>(static_cast<std::size_t>(m), SquareMatrix(d, rep.ring(), rep.context())));
  SquareMatrix id = SquareMatrix::identity(d, rep.ring(), rep.context());
  for (int i = 0; i < m; ++i) {
    const auto& c = diagram.crossings[static_cast<std::size_t>(i)];
    const SquareMatrix& over = rep.meridian(c.over);
    const SquareMatrix& out = rep.meridian(c.under_out);
    auto& row = M[static_cast<std::size_t>(i)];
    if (c.sign > 0) {
      row[static_cast<std::size_t>(c.over)] = row[static_cast<std::size_t>(c.over)] + (id - out);
      row[static_cast<std::size_t>(c.under_in)] = row[static_cast<std::size_t>(c.under_in)] + over;
    } else {
      const SquareMatrix& over_inv = rep.meridian_signed(c.over, -1);
      row[static_cast<std::size_t>(c.over)] = row[static_cast<std::size_t>(c.over)] + (out * over_inv - over_inv);
      row[static_cast<std::size_t>(c.under_in)] = row[static_cast<std::size_t>(c.under_in)] + over_inv;
    }
    row[static_cast<std::size_t>(c.under_out)] = row[static_cast<std::size_t>(c.under_out)] - id;
  }
  return M;
}

// Row i holds (1 - x_ibar^eps, x_ibar^eps, -1) with eps the crossing sign.
inline BlockMatrix q_matrix(const Diagram& diagram, const Representation& rep) {
  const int m = diagram.crossing_count();
  const int d = rep.dim();
  BlockMatrix Q(static_cast<std::size_t>(m),
                std::vector<SquareMatrix>(static_cast<std::size_t>(m), SquareMatrix(d, rep.ring(), rep.context())));
  SquareMatrix id = SquareMatrix::identity(d, rep.ring(), rep.context());
  for (int i = 0; i < m; ++i) {
    const auto& c = diagram.crossings[static_cast<std::size_t>(i)];
    const SquareMatrix& ov = rep.meridian_signed(c.over, c.sign);
    auto& row = Q[static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(c.over)] = row[static_cast<std::size_t>(c.over)] + (id - ov);
    row[static_cast<std::size_t>(c.under_in)] = row[static_cast<std::size_t>(c.under_in)] + ov;
    row[static_cast<std::size_t>(c.under_out)] = row[static_cast<std::size_t>(c.under_out)] - id;
  }
  return Q;
}

// Diagonal blocks of D (column j: 1 - x_j) and D' (row i: 1 - x_{i'}).
inline SquareMatrix d_block(const Diagram&, const Representation& rep, int j) {
  SquareMatrix id = SquareMatrix::identity(rep.dim(), rep.ring(), rep.context());
  return id - rep.meridian(j);
}

inline SquareMatrix d_prime_block(const Diagram& diagram, const Representation& rep, int i) {
  SquareMatrix id = SquareMatrix::identity(rep.dim(), rep.ring(), rep.context());
  return id - rep.meridian(diagram.crossings[static_cast<std::size_t>(i)].under_out);
}

struct WadaOptions {
  int row = 0;       // block row to delete
  int col = 0;       // block column to delete
  bool use_q = false;
  int size_cap = 60;  // maximum (m-1)*d
};

struct TapResultOracle {
  CanonicalResult value;
  VarContext context;
};

// det(minor of the evaluated matrix) / det(1 - xbar), the denominator taken
// from the deleted column's generator (M route) or the deleted row's
// under-out arc (Q route).
inline TapResultOracle wada_invariant(const Diagram& diagram, const Representation& rep,
                                      const WadaOptions& opt = {}) {
  const int m = diagram.crossing_count();
  const int d = rep.dim();
  if (m < 1) throw error(errc::invalid_diagram, "empty diagram");
  if ((m - 1) * d > opt.size_cap)
    throw error(errc::size_cap, "oracle minor exceeds the configured size cap");

  BlockMatrix blocks = opt.use_q ? q_matrix(diagram, rep) : fox_matrix(diagram, rep);

  SquareMatrix big((m - 1) * d, rep.ring(), rep.context());
  for (int bi = 0, ri = 0; bi < m; ++bi) {
    if (bi == opt.row) continue;
    for (int bj = 0, rj = 0; bj < m; ++bj) {
      if (bj == opt.col) continue;
      const SquareMatrix& blk = blocks[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) big.at(ri * d + a, rj * d + b) = blk.at(a, b);
      ++rj;
    }
    ++ri;
  }

  FractionElem den;
  if (opt.use_q) {
    den = d_prime_block(diagram, rep, opt.row).determinant();
  } else {
    den = d_block(diagram, rep, opt.col).determinant();
  }
  if (den.is_zero()) throw error(errc::zero_denominator, "Wada denominator vanishes identically");

  TapResultOracle out;
  out.value = canonical_form(big.determinant() / den);
  out.context = rep.context();
  return out;
}

}  // namespace talex
