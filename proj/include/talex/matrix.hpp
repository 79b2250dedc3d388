// Dense square matrices over the Laurent fraction field, exact determinants
// (cofactor expansion for small sizes, fraction-free Bareiss elimination for
// large ones), adjugate inverses, and the bracket / u_k / G_k calculus.
#pragma once

#include <optional>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

class SquareMatrix {
 public:
  SquareMatrix() : SquareMatrix(0, RingSpec::integers(), VarContext{}) {}
  SquareMatrix(int dim, RingSpec ring, VarContext ctx)
      : dim_(dim), ring_(std::move(ring)), ctx_(ctx),
        e_(static_cast<std::size_t>(dim) * dim, FractionElem::zero(ring_, ctx_)) {}

  static SquareMatrix identity(int dim, const RingSpec& r, const VarContext& c) {
    SquareMatrix m(dim, r, c);
    for (int i = 0; i < dim; ++i) m.at(i, i) = FractionElem::one(r, c);
    return m;
  }

  static SquareMatrix scalar(int dim, const FractionElem& v) {
    SquareMatrix m(dim, v.ring(), v.context());
    for (int i = 0; i < dim; ++i) m.at(i, i) = v;
    return m;
  }

  // Lifts a d x d matrix of ring elements into the polynomial world.
  static SquareMatrix from_ring_entries(const std::vector<std::vector<RingElem>>& rows, const VarContext& ctx) {
    int d = static_cast<int>(rows.size());
    if (d == 0) throw error(errc::dimension_mismatch, "empty matrix");
    SquareMatrix m(d, rows[0][0].spec(), ctx);
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(rows[i].size()) != d) throw error(errc::dimension_mismatch, "matrix is not square");
      for (int j = 0; j < d; ++j) m.at(i, j) = FractionElem(LaurentPoly::constant(rows[i][j], ctx));
    }
    return m;
  }

  int dim() const { return dim_; }
  const RingSpec& ring() const { return ring_; }
  const VarContext& context() const { return ctx_; }

  FractionElem& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const FractionElem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        if (i == j ? !(at(i, j) == FractionElem::one(ring_, ctx_)) : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    SquareMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    SquareMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }

  SquareMatrix operator-() const {
    SquareMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    SquareMatrix r(a.dim_, a.ring_, a.ctx_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_ || a.ring_ != b.ring_ || a.ctx_ != b.ctx_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

  SquareMatrix scaled(const FractionElem& c) const {
    SquareMatrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
  }

  SquareMatrix with_context(const VarContext& nc) const {
    SquareMatrix r(dim_, ring_, nc);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].with_context(nc);
    return r;
  }

  SquareMatrix transposed() const {
    SquareMatrix r(dim_, ring_, ctx_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  FractionElem determinant() const {
    if (dim_ == 0) return FractionElem::one(ring_, ctx_);
    if (dim_ <= 4) return det_cofactor(*this);
    return det_bareiss(*this);
  }

  SquareMatrix adjugate() const {
    SquareMatrix adj(dim_, ring_, ctx_);
    if (dim_ == 1) {
      adj.at(0, 0) = FractionElem::one(ring_, ctx_);
      return adj;
    }
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        FractionElem c = minor_matrix(*this, i, j).determinant();
        if ((i + j) % 2 != 0) c = -c;
        adj.at(j, i) = c;
      }
    return adj;
  }

  std::optional<SquareMatrix> try_inverse() const {
    FractionElem det = determinant();
    if (det.is_zero()) return std::nullopt;
    return adjugate().scaled(det.inverse());
  }

  SquareMatrix inverse() const {
    auto inv = try_inverse();
    if (!inv) throw error(errc::singular_matrix, "matrix is singular");
    return *inv;
  }

  SquareMatrix pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    SquareMatrix acc = identity(dim_, ring_, ctx_);
    SquareMatrix base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  bool all_polynomial() const {
    for (const auto& x : e_)
      if (!x.is_polynomial()) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < dim_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < dim_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
    }
    return s + "]";
  }

 private:
  static SquareMatrix minor_matrix(const SquareMatrix& m, int row, int col) {
    SquareMatrix r(m.dim_ - 1, m.ring_, m.ctx_);
    for (int i = 0, ri = 0; i < m.dim_; ++i) {
      if (i == row) continue;
      for (int j = 0, rj = 0; j < m.dim_; ++j) {
        if (j == col) continue;
        r.at(ri, rj) = m.at(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

  static FractionElem det_cofactor(const SquareMatrix& m) {
    if (m.dim_ == 1) return m.at(0, 0);
    if (m.dim_ == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    FractionElem acc = FractionElem::zero(m.ring_, m.ctx_);
    for (int j = 0; j < m.dim_; ++j) {
      if (m.at(0, j).is_zero()) continue;
      FractionElem term = m.at(0, j) * det_cofactor(minor_matrix(m, 0, j));
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  }

  // Fraction-free elimination; rows are first cleared to polynomial entries.
  static FractionElem det_bareiss(const SquareMatrix& m) {
    const int n = m.dim_;
    std::vector<LaurentPoly> a(static_cast<std::size_t>(n) * n, LaurentPoly::zero(m.ring_, m.ctx_));
    FractionElem scale = FractionElem::one(m.ring_, m.ctx_);  // product of row multipliers
    for (int i = 0; i < n; ++i) {
      LaurentPoly row_den = LaurentPoly::constant_int(m.ring_, m.ctx_, 1);
      for (int j = 0; j < n; ++j)
        if (!m.at(i, j).is_polynomial()) row_den = row_den * m.at(i, j).den();
      if (!row_den.is_one()) scale = scale * FractionElem(row_den);
      for (int j = 0; j < n; ++j) {
        const FractionElem& x = m.at(i, j);
        if (x.is_polynomial()) {
          a[static_cast<std::size_t>(i) * n + j] = x.num() * row_den;
        } else {
          auto q = exact_divide(row_den, x.den());
          if (!q) throw error(errc::division_failed, "row denominator clearing failed");
          a[static_cast<std::size_t>(i) * n + j] = x.num() * *q;
        }
      }
    }

    auto at = [&](int i, int j) -> LaurentPoly& { return a[static_cast<std::size_t>(i) * n + j]; };
    LaurentPoly prev = LaurentPoly::constant_int(m.ring_, m.ctx_, 1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
      int pivot = -1;
      for (int i = k; i < n; ++i)
        if (!at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return FractionElem::zero(m.ring_, m.ctx_);
      if (pivot != k) {
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) {
          LaurentPoly v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
          auto q = exact_divide(v, prev);
          if (!q) throw error(errc::division_failed, "Bareiss exact division failed");
          at(i, j) = *q;
        }
        at(i, k) = LaurentPoly::zero(m.ring_, m.ctx_);
      }
      prev = at(k, k);
    }
    LaurentPoly det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return FractionElem(det) / scale;
  }

  void check_compatible(const SquareMatrix& o) const {
    if (dim_ != o.dim_) throw error(errc::dimension_mismatch, "matrix dimension mismatch");
    if (ring_ != o.ring_ || ctx_ != o.ctx_) throw error(errc::context_mismatch, "matrix context mismatch");
  }

  int dim_;
  RingSpec ring_;
  VarContext ctx_;
  std::vector<FractionElem> e_;
};

// [k]_a = 1 + a + ... + a^{k-1} for k > 0, 0 for k = 0, -a^k(1+...+a^{|k|-1})
// for k < 0. Computed by running sums; a must be invertible when k < 0.
inline SquareMatrix bracket(long k, const SquareMatrix& a) {
  const int d = a.dim();
  SquareMatrix zero(d, a.ring(), a.context());
  if (k == 0) return zero;
  long n = k > 0 ? k : -k;
  SquareMatrix acc = SquareMatrix::identity(d, a.ring(), a.context());
  SquareMatrix pw = a;
  for (long i = 1; i < n; ++i) {
    acc = acc + pw;
    if (i + 1 < n) pw = pw * a;
  }
  if (k > 0) return acc;
  return -(a.pow(k) * acc);
}

// u_k(a, b): [h]_{ab} a (1-b) for k = 2h, [h+1]_{ab} a - [h]_{ab} a b for
// k = 2h+1.
inline SquareMatrix u_matrix(long k, const SquareMatrix& a, const SquareMatrix& b) {
  const SquareMatrix ab = a * b;
  const SquareMatrix id = SquareMatrix::identity(a.dim(), a.ring(), a.context());
  if (k % 2 == 0) {
    long h = k / 2;
    return bracket(h, ab) * a * (id - b);
  }
  long h = (k - 1) / 2;
  return bracket(h + 1, ab) * a - bracket(h, ab) * ab;
}

struct GBlocks {
  SquareMatrix r0c0, r0c1, r1c0, r1c1;
};

inline GBlocks g_matrix(long k, const SquareMatrix& a, const SquareMatrix& b) {
  const SquareMatrix id = SquareMatrix::identity(a.dim(), a.ring(), a.context());
  SquareMatrix uk = u_matrix(k, a, b);
  SquareMatrix uk1 = u_matrix(k - 1, a, b);
  return GBlocks{id - uk, uk, id - uk1, uk1};
}

}  // namespace talex
