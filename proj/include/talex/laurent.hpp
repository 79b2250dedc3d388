// Multivariate Laurent polynomials over an exact coefficient ring, the
// fraction field built on them, exact division, and the dot-equivalence
// (unit times monomial) canonicalization used throughout.
//
// Monomial order everywhere: graded lexicographic with t1 > t2 > ... > e1 > ...
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "talex/rings.hpp"

namespace talex {

struct VarContext {
  int n = 1;  // abelianization variables t_1..t_n
  int e = 0;  // auxiliary variables e_1..e_s

  int total() const { return n + e; }
  friend bool operator==(const VarContext& a, const VarContext& b) { return a.n == b.n && a.e == b.e; }
  friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }
};

using Exponents = std::vector<std::int32_t>;

struct grlex_greater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

class LaurentPoly {
 public:
  using term_map = std::map<Exponents, RingElem, grlex_greater>;

  LaurentPoly() : LaurentPoly(RingSpec::integers(), VarContext{}) {}
  LaurentPoly(RingSpec ring, VarContext ctx) : ring_(std::move(ring)), ctx_(ctx) {}

  static LaurentPoly zero(const RingSpec& r, const VarContext& c) { return LaurentPoly(r, c); }

  static LaurentPoly constant(const RingElem& c, const VarContext& ctx) {
    LaurentPoly p(c.spec(), ctx);
    p.add_term(Exponents(ctx.total(), 0), c);
    return p;
  }

  static LaurentPoly constant_int(const RingSpec& r, const VarContext& ctx, long v) {
    return constant(RingElem::from_int(r, v), ctx);
  }

  // t_i (0-based), as a monomial with exponent k.
  static LaurentPoly variable(const RingSpec& r, const VarContext& ctx, int i, std::int32_t k = 1) {
    LaurentPoly p(r, ctx);
    Exponents e(ctx.total(), 0);
    e[i] = k;
    p.add_term(e, RingElem::one(r));
    return p;
  }

  static LaurentPoly monomial(const RingElem& c, const VarContext& ctx, Exponents e) {
    LaurentPoly p(c.spec(), ctx);
    p.add_term(std::move(e), c);
    return p;
  }

  const RingSpec& ring() const { return ring_; }
  const VarContext& context() const { return ctx_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() && is_constant_exp(terms_.begin()->first);
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_constant_exp(terms_.begin()->first)); }

  // Single term c * monomial?
  bool is_single_term() const { return terms_.size() == 1; }

  const std::pair<const Exponents, RingElem>& leading() const {
    if (terms_.empty()) throw error(errc::division_by_zero, "leading term of zero polynomial");
    return *terms_.begin();
  }

  void add_term(Exponents e, const RingElem& c) {
    if (static_cast<int>(e.size()) != ctx_.total()) throw error(errc::context_mismatch, "bad exponent vector length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(ring_, ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.ring_, a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        RingElem c = ca * cb;
        if (c.is_zero()) continue;
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), c);
      }
    }
    return r;
  }

  LaurentPoly scaled(const RingElem& c) const {
    LaurentPoly r(ring_, ctx_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }

  LaurentPoly shifted(const Exponents& by) const {
    LaurentPoly r(ring_, ctx_);
    for (const auto& [e, v] : terms_) {
      Exponents ne(e);
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += by[i];
      r.terms_.emplace(std::move(ne), v);
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ring_ != b.ring_ || a.ctx_ != b.ctx_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt) {
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Per-variable minimum exponent over all terms (0 for absent variables).
  Exponents min_exponents() const {
    Exponents m(ctx_.total(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
      } else {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
      }
    }
    return m;
  }

  // t_i -> t_i^{-1} for flagged t-variables.
  LaurentPoly inverted_vars(const std::vector<bool>& flags) const {
    LaurentPoly r(ring_, ctx_);
    for (const auto& [e, c] : terms_) {
      Exponents ne(e);
      for (int i = 0; i < ctx_.n && i < static_cast<int>(flags.size()); ++i)
        if (flags[i]) ne[i] = -ne[i];
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  // Keep only terms free of auxiliary variables (i.e. substitute e_k = 0).
  LaurentPoly eps_set_zero() const {
    LaurentPoly r(ring_, ctx_);
    for (const auto& [e, c] : terms_) {
      bool pure = true;
      for (int i = ctx_.n; i < ctx_.total(); ++i)
        if (e[i] != 0) pure = false;
      if (pure) r.terms_.emplace(e, c);
    }
    return r;
  }

  LaurentPoly with_context(const VarContext& nc) const {
    if (nc.n != ctx_.n || nc.e < ctx_.e) throw error(errc::context_mismatch, "cannot shrink variable context");
    LaurentPoly r(ring_, nc);
    for (const auto& [e, c] : terms_) {
      Exponents ne(e);
      ne.resize(nc.total(), 0);
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  // Drops trailing auxiliary variables; all their exponents must be zero.
  LaurentPoly dropped_eps(const VarContext& nc) const {
    if (nc.n != ctx_.n || nc.e > ctx_.e) throw error(errc::context_mismatch, "bad context restriction");
    LaurentPoly r(ring_, nc);
    for (const auto& [e, c] : terms_) {
      for (int i = nc.total(); i < ctx_.total(); ++i)
        if (e[i] != 0) throw error(errc::context_mismatch, "nonzero auxiliary exponent in restriction");
      Exponents ne(e.begin(), e.begin() + nc.total());
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  // Coefficient-wise ring conversion (Z -> Q and the identity cases).
  LaurentPoly converted(const RingSpec& target) const;

  std::string to_string() const;

 private:
  bool is_constant_exp(const Exponents& e) const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
  }

  void check_compatible(const LaurentPoly& o) const {
    if (ring_ != o.ring_) throw error(errc::ring_mismatch, "mixed coefficient rings");
    if (ctx_ != o.ctx_) throw error(errc::context_mismatch, "mixed variable contexts");
  }

  RingSpec ring_;
  VarContext ctx_;
  term_map terms_;
};

// Exact division in the Laurent ring: returns q with f = q*g, or nullopt.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw error(errc::division_by_zero, "division by zero polynomial");
  if (f.is_zero()) return LaurentPoly::zero(f.ring(), f.context());

  const Exponents fa = f.min_exponents();
  const Exponents gb = g.min_exponents();
  Exponents neg_fa(fa), neg_gb(gb);
  for (auto& x : neg_fa) x = -x;
  for (auto& x : neg_gb) x = -x;
  LaurentPoly r = f.shifted(neg_fa);
  LaurentPoly g0 = g.shifted(neg_gb);

  LaurentPoly q(f.ring(), f.context());
  const auto& [ge, gc] = g0.leading();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    Exponents qe(re);
    bool ok = true;
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= ge[i];
      if (qe[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    auto qc = RingElem::divide_exact(rc, gc);
    if (!qc) return std::nullopt;
    LaurentPoly term = LaurentPoly::monomial(*qc, f.context(), qe);
    q = q + term;
    r = r - term * g0;
  }
  // Undo the shifts: f = t^fa f0, g = t^gb g0, f0 = q g0.
  Exponents shift(fa);
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= gb[i];
  return q.shifted(shift);
}

class FractionElem {
 public:
  FractionElem() = default;
  explicit FractionElem(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant_int(num_.ring(), num_.context(), 1)) {}
  FractionElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator");
    normalize();
  }

  static FractionElem zero(const RingSpec& r, const VarContext& c) {
    return FractionElem(LaurentPoly::zero(r, c));
  }
  static FractionElem one(const RingSpec& r, const VarContext& c) {
    return FractionElem(LaurentPoly::constant_int(r, c, 1));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const RingSpec& ring() const { return num_.ring(); }
  const VarContext& context() const { return num_.context(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend FractionElem operator+(const FractionElem& a, const FractionElem& b) {
    if (a.den_.is_one() && b.den_.is_one()) return FractionElem(a.num_ + b.num_);
    return FractionElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FractionElem operator-(const FractionElem& a, const FractionElem& b) {
    if (a.den_.is_one() && b.den_.is_one()) return FractionElem(a.num_ - b.num_);
    return FractionElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  FractionElem operator-() const {
    FractionElem r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend FractionElem operator*(const FractionElem& a, const FractionElem& b) {
    if (a.den_.is_one() && b.den_.is_one()) return FractionElem(a.num_ * b.num_);
    return FractionElem(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend FractionElem operator/(const FractionElem& a, const FractionElem& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "division by zero fraction");
    return FractionElem(a.num_ * b.den_, a.den_ * b.num_);
  }

  FractionElem inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero fraction");
    return FractionElem(den_, num_);
  }

  // Equality by cross-multiplication.
  friend bool operator==(const FractionElem& a, const FractionElem& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const FractionElem& a, const FractionElem& b) { return !(a == b); }

  FractionElem with_context(const VarContext& nc) const {
    return FractionElem(num_.with_context(nc), den_.with_context(nc));
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  // Folds unit-times-monomial denominators into the numerator, so meridian
  // matrix inverses and similar stay plain polynomials.
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant_int(num_.ring(), num_.context(), 1);
      return;
    }
    if (den_.is_one()) return;
    if (den_.is_single_term()) {
      const auto& [e, c] = den_.leading();
      if (c.is_unit()) {
        Exponents inv(e);
        for (auto& x : inv) x = -x;
        num_ = num_.shifted(inv).scaled(c.inverse());
        den_ = LaurentPoly::constant_int(num_.ring(), num_.context(), 1);
      }
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

// ---------------------------------------------------------------------------
// Canonicalization and dot-equivalence.

namespace detail {

// Strips the t-monomial content (minimum exponents to zero). Auxiliary
// variables are left untouched.
inline LaurentPoly strip_t_content(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents m = p.min_exponents();
  for (int i = p.context().n; i < p.context().total(); ++i) m[i] = 0;
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

// Scales by a unit so the leading coefficient is 1 (fields) or positive (Z).
inline LaurentPoly normalize_lead(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const RingElem& lead = p.leading().second;
  if (p.ring().kind == ring_kind::integers) {
    return lead.render_negative() ? -p : p;
  }
  if (lead.is_unit()) return p.scaled(lead.inverse());
  return p;
}

inline LaurentPoly canon_poly(const LaurentPoly& p) { return normalize_lead(strip_t_content(p)); }

}  // namespace detail

struct CanonicalResult {
  bool polynomial = true;
  LaurentPoly value;  // the polynomial, or the fraction numerator
  LaurentPoly den;    // 1 when polynomial

  FractionElem as_fraction() const { return polynomial ? FractionElem(value) : FractionElem(value, den); }
  std::string to_string() const {
    if (polynomial) return value.to_string();
    return "(" + value.to_string() + ")/(" + den.to_string() + ")";
  }
};

namespace detail {

// Dense univariate view over a field, used for gcd reduction when n=1, e=0.
inline std::vector<RingElem> to_dense(const LaurentPoly& p) {
  Exponents m = p.min_exponents();
  LaurentPoly q = p.shifted({static_cast<std::int32_t>(-m[0])});
  std::int32_t deg = 0;
  for (const auto& [e, c] : q.terms()) deg = std::max(deg, e[0]);
  std::vector<RingElem> d(static_cast<std::size_t>(deg) + 1, RingElem::zero(p.ring()));
  for (const auto& [e, c] : q.terms()) d[static_cast<std::size_t>(e[0])] = c;
  return d;
}

inline void dense_trim(std::vector<RingElem>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// In-place remainder, returns nothing; field coefficients.
inline void dense_mod(std::vector<RingElem>& a, const std::vector<RingElem>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    RingElem c = *RingElem::divide_exact(a.back(), b.back());
    std::size_t k = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = a[k + j] - c * b[j];
    dense_trim(a);
  }
}

inline std::vector<RingElem> dense_gcd(std::vector<RingElem> a, std::vector<RingElem> b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    dense_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

inline LaurentPoly from_dense(const std::vector<RingElem>& d, const RingSpec& r, const VarContext& ctx) {
  LaurentPoly p(r, ctx);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    p.add_term({static_cast<std::int32_t>(i)}, d[i]);
  }
  return p;
}

}  // namespace detail

inline LaurentPoly LaurentPoly::converted(const RingSpec& target) const {
  if (target == ring_) return *this;
  LaurentPoly r(target, ctx_);
  if (ring_.kind == ring_kind::integers) {
    for (const auto& [e, c] : terms_) r.add_term(e, RingElem::from_mpz(target, c.as_mpz()));
    return r;
  }
  throw error(errc::ring_mismatch, "unsupported ring conversion");
}

namespace detail {

// Reduces num/den by their univariate gcd (n = 1, e = 0 only). For Z the
// computation runs over Q and is rescaled back to a joint-primitive pair.
inline void univariate_reduce(LaurentPoly& num, LaurentPoly& den) {
  const VarContext ctx = num.context();
  if (ctx.n != 1 || ctx.e != 0 || num.is_zero()) return;
  const RingSpec ring = num.ring();

  if (ring.kind == ring_kind::integers) {
    RingSpec q = RingSpec::rationals();
    LaurentPoly nq = num.converted(q), dq = den.converted(q);
    univariate_reduce(nq, dq);
    // Clear rational coefficients to a joint-primitive integer pair.
    mpz_class lcm_den = 1, gcd_num = 0;
    for (const LaurentPoly* p : {&nq, &dq})
      for (const auto& [e, c] : p->terms())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.as_mpq().get_den().get_mpz_t());
    nq = nq.scaled(RingElem::from_mpz(q, lcm_den));
    dq = dq.scaled(RingElem::from_mpz(q, lcm_den));
    for (const LaurentPoly* p : {&nq, &dq})
      for (const auto& [e, c] : p->terms())
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.as_mpq().get_num().get_mpz_t());
    if (gcd_num == 0) gcd_num = 1;
    RingElem inv_g = RingElem::from_mpq(q, mpq_class(1, gcd_num));
    nq = nq.scaled(inv_g);
    dq = dq.scaled(inv_g);
    // Coefficients are integers now; map back.
    LaurentPoly ni(ring, ctx), di(ring, ctx);
    for (const auto& [e, c] : nq.terms()) ni.add_term(e, RingElem::from_mpz(ring, c.as_mpq().get_num()));
    for (const auto& [e, c] : dq.terms()) di.add_term(e, RingElem::from_mpz(ring, c.as_mpq().get_num()));
    num = ni;
    den = di;
    return;
  }

  if (!ring.is_field() || !ring.is_exact()) return;
  auto a = to_dense(num);
  auto b = to_dense(den);
  auto g = dense_gcd(a, b);
  if (g.size() <= 1) return;  // coprime up to monomials
  LaurentPoly gp = from_dense(g, ring, ctx);
  auto qn = exact_divide(num, gp);
  auto qd = exact_divide(den, gp);
  if (!qn || !qd) throw error(errc::division_failed, "univariate gcd reduction failed");
  num = *qn;
  den = *qd;
}

}  // namespace detail

// Dot-equivalence normal form: exact division when possible, otherwise a
// normalized fraction (gcd-reduced in the univariate case).
inline CanonicalResult canonical_form(const FractionElem& f) {
  CanonicalResult out;
  if (f.is_zero()) {
    out.polynomial = true;
    out.value = LaurentPoly::zero(f.ring(), f.context());
    out.den = LaurentPoly::constant_int(f.ring(), f.context(), 1);
    return out;
  }
  auto q = exact_divide(f.num(), f.den());
  if (q) {
    out.polynomial = true;
    out.value = detail::canon_poly(*q);
    out.den = LaurentPoly::constant_int(f.ring(), f.context(), 1);
    return out;
  }
  LaurentPoly num = f.num(), den = f.den();
  detail::univariate_reduce(num, den);
  FractionElem reduced(num, den);  // refolds monomial denominators
  if (reduced.is_polynomial()) {
    out.polynomial = true;
    out.value = detail::canon_poly(reduced.num());
    out.den = LaurentPoly::constant_int(f.ring(), f.context(), 1);
    return out;
  }
  out.polynomial = false;
  out.value = detail::canon_poly(reduced.num());
  out.den = detail::canon_poly(reduced.den());
  return out;
}

// f == unit * t-monomial * g, optionally after inverting flagged t-variables
// of g (every subset of the flagged set is tried).
inline bool equiv(const FractionElem& f, const FractionElem& g, const std::vector<bool>& invert_flags = {}) {
  if (f.ring() != g.ring() || f.context() != g.context())
    throw error(errc::context_mismatch, "equiv operands in different contexts");
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();

  std::vector<int> flagged;
  for (std::size_t i = 0; i < invert_flags.size(); ++i)
    if (invert_flags[i]) flagged.push_back(static_cast<int>(i));

  const int n = f.context().n;
  for (unsigned mask = 0; mask < (1u << flagged.size()); ++mask) {
    std::vector<bool> sel(static_cast<std::size_t>(n), false);
    for (std::size_t b = 0; b < flagged.size(); ++b)
      if (mask & (1u << b)) sel[static_cast<std::size_t>(flagged[b])] = true;
    LaurentPoly lhs = f.num() * g.den().inverted_vars(sel);
    LaurentPoly rhs = g.num().inverted_vars(sel) * f.den();
    if (detail::canon_poly(lhs) == detail::canon_poly(rhs)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rendering: terms in decreasing monomial order, `c*t1^a*t2^b*e1^c` style.

inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c.render_negative();
    RingElem mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }

    std::string vars;
    for (int i = 0; i < ctx_.total(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      if (i < ctx_.n)
        vars += ctx_.n == 1 ? "t" : "t" + std::to_string(i + 1);
      else
        vars += "e" + std::to_string(i - ctx_.n + 1);
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }

    bool parens = mag.render_term_count() > 1 || ring_.kind == ring_kind::complex_float;
    if (vars.empty()) {
      if (parens)
        os << "(" << mag.to_string() << ")";
      else
        os << mag.to_string();
    } else if (mag.is_one() && !parens) {
      os << vars;
    } else {
      if (parens)
        os << "(" << mag.to_string() << ")";
      else
        os << mag.to_string();
      os << "*" << vars;
    }
  }
  return os.str();
}

}  // namespace talex
