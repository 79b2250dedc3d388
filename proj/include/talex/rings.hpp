// Exact coefficient rings: integers, rationals, prime fields, cyclotomic
// fields Q[z]/Phi_m(z), and a best-effort complex-double ring.
//
// Elements are immutable values in canonical form; all operations are pure.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace talex {

enum class errc {
  parse_error,
  ring_mismatch,
  not_a_unit,
  division_by_zero,
  dimension_mismatch,
  context_mismatch,
  degenerate_fraction,
  singular_matrix,
  invalid_diagram,
  underdetermined_seeds,
  invalid_representation,
  zero_denominator,
  division_failed,
  precondition_failed,
  unsupported_context,
  size_cap,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

enum class ring_kind { integers, rationals, prime_field, cyclotomic, complex_float };

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Coefficients of the m-th cyclotomic polynomial, ascending degree.
// Computed as (z^m - 1) / prod_{d | m, d < m} Phi_d via exact division in Z[z].
// Cached; the recursive mutex keeps concurrent ring construction safe.
inline const std::vector<mpz_class>& cyclotomic_coeffs(unsigned m) {
  static std::recursive_mutex mutex;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<mpz_class> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& phi_d = cyclotomic_coeffs(d);
    // Exact long division num /= phi_d (phi_d is monic).
    std::vector<mpz_class> quot(num.size() - phi_d.size() + 1);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      mpz_class c = num[k + phi_d.size() - 1];
      quot[k] = c;
      if (c != 0) {
        for (std::size_t j = 0; j < phi_d.size(); ++j) num[k + j] -= c * phi_d[j];
      }
    }
    num = std::move(quot);
  }
  return cache.emplace(m, std::move(num)).first->second;
}

}  // namespace detail

struct RingSpec {
  ring_kind kind = ring_kind::integers;
  std::uint64_t p = 0;       // prime_field modulus
  unsigned m = 0;            // cyclotomic order
  double tol = 1e-9;         // complex_float comparison tolerance

  static RingSpec integers() { return RingSpec{ring_kind::integers}; }
  static RingSpec rationals() { return RingSpec{ring_kind::rationals}; }
  static RingSpec prime_field(std::uint64_t p) {
    if (!detail::is_prime_u64(p)) throw error(errc::parse_error, "prime field modulus is not prime");
    RingSpec s{ring_kind::prime_field};
    s.p = p;
    return s;
  }
  static RingSpec cyclotomic(unsigned m) {
    if (m < 1) throw error(errc::parse_error, "cyclotomic order must be positive");
    RingSpec s{ring_kind::cyclotomic};
    s.m = m;
    return s;
  }
  static RingSpec complex_float(double tol = 1e-9) {
    RingSpec s{ring_kind::complex_float};
    s.tol = tol;
    return s;
  }

  bool is_field() const { return kind != ring_kind::integers; }
  bool is_exact() const { return kind != ring_kind::complex_float; }
  unsigned cyclotomic_degree() const {
    return static_cast<unsigned>(detail::cyclotomic_coeffs(m).size()) - 1;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind == b.kind && a.p == b.p && a.m == b.m;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

  std::string name() const {
    switch (kind) {
      case ring_kind::integers: return "Z";
      case ring_kind::rationals: return "Q";
      case ring_kind::prime_field: return "F" + std::to_string(p);
      case ring_kind::cyclotomic: return "Q(zeta" + std::to_string(m) + ")";
      case ring_kind::complex_float: return "C";
    }
    return "?";
  }
};

class RingElem {
 public:
  using cyc_vec = std::vector<mpq_class>;                 // coefficients of 1, z, z^2, ...
  using payload = std::variant<mpz_class, mpq_class, std::uint64_t, cyc_vec, std::complex<double>>;

  RingElem() : RingElem(RingSpec::integers()) {}
  explicit RingElem(const RingSpec& s) : spec_(s), v_(make_zero(s)) {}

  static RingElem zero(const RingSpec& s) { return RingElem(s); }
  static RingElem one(const RingSpec& s) { return from_int(s, 1); }

  static RingElem from_int(const RingSpec& s, long n) { return from_mpz(s, mpz_class(n)); }

  static RingElem from_mpz(const RingSpec& s, const mpz_class& n) {
    RingElem r(s);
    switch (s.kind) {
      case ring_kind::integers: r.v_ = n; break;
      case ring_kind::rationals: r.v_ = mpq_class(n); break;
      case ring_kind::prime_field: {
        mpz_class q = n % mpz_class(static_cast<unsigned long>(s.p));
        if (q < 0) q += static_cast<unsigned long>(s.p);
        r.v_ = static_cast<std::uint64_t>(q.get_ui());
        break;
      }
      case ring_kind::cyclotomic: {
        cyc_vec c(s.cyclotomic_degree());
        if (!c.empty()) c[0] = mpq_class(n);
        r.v_ = reduce_trivial(s, std::move(c));
        break;
      }
      case ring_kind::complex_float: r.v_ = std::complex<double>(n.get_d(), 0.0); break;
    }
    return r;
  }

  static RingElem from_mpq(const RingSpec& s, const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    switch (s.kind) {
      case ring_kind::integers: {
        if (c.get_den() != 1) throw error(errc::parse_error, "non-integral value in Z");
        return from_mpz(s, c.get_num());
      }
      case ring_kind::rationals: {
        RingElem r(s);
        r.v_ = c;
        return r;
      }
      case ring_kind::prime_field: {
        RingElem num = from_mpz(s, c.get_num());
        RingElem den = from_mpz(s, c.get_den());
        return num * den.inverse();
      }
      case ring_kind::cyclotomic: {
        RingElem r(s);
        cyc_vec v(s.cyclotomic_degree());
        if (!v.empty()) v[0] = c;
        r.v_ = std::move(v);
        return r;
      }
      case ring_kind::complex_float: {
        RingElem r(s);
        r.v_ = std::complex<double>(c.get_d(), 0.0);
        return r;
      }
    }
    throw error(errc::parse_error, "bad ring");
  }

  static RingElem from_complex(const RingSpec& s, std::complex<double> z) {
    if (s.kind != ring_kind::complex_float) throw error(errc::ring_mismatch, "complex literal in exact ring");
    RingElem r(s);
    r.v_ = z;
    return r;
  }

  // Residue class of z^power in Q[z]/Phi_m.
  static RingElem root_of_unity_power(unsigned m, long power) {
    RingSpec s = RingSpec::cyclotomic(m);
    long e = power % static_cast<long>(m);
    if (e < 0) e += m;
    unsigned deg = s.cyclotomic_degree();
    cyc_vec raw(static_cast<std::size_t>(e) + 1);
    raw[static_cast<std::size_t>(e)] = 1;
    RingElem r(s);
    r.v_ = reduce_mod_phi(m, std::move(raw), deg);
    return r;
  }

  const RingSpec& spec() const { return spec_; }
  const mpz_class& as_mpz() const { return std::get<mpz_class>(v_); }
  const mpq_class& as_mpq() const { return std::get<mpq_class>(v_); }

  bool is_zero() const {
    switch (spec_.kind) {
      case ring_kind::integers: return std::get<mpz_class>(v_) == 0;
      case ring_kind::rationals: return std::get<mpq_class>(v_) == 0;
      case ring_kind::prime_field: return std::get<std::uint64_t>(v_) == 0;
      case ring_kind::cyclotomic: {
        for (const auto& c : std::get<cyc_vec>(v_))
          if (c != 0) return false;
        return true;
      }
      case ring_kind::complex_float: return std::abs(std::get<std::complex<double>>(v_)) <= spec_.tol;
    }
    return false;
  }

  bool is_one() const { return *this == one(spec_); }

  bool is_unit() const {
    switch (spec_.kind) {
      case ring_kind::integers: {
        const auto& z = std::get<mpz_class>(v_);
        return z == 1 || z == -1;
      }
      default: return !is_zero();
    }
  }

  RingElem operator-() const {
    RingElem r(spec_);
    switch (spec_.kind) {
      case ring_kind::integers: r.v_ = mpz_class(-std::get<mpz_class>(v_)); break;
      case ring_kind::rationals: r.v_ = mpq_class(-std::get<mpq_class>(v_)); break;
      case ring_kind::prime_field: {
        std::uint64_t a = std::get<std::uint64_t>(v_);
        r.v_ = a == 0 ? 0 : spec_.p - a;
        break;
      }
      case ring_kind::cyclotomic: {
        cyc_vec c = std::get<cyc_vec>(v_);
        for (auto& x : c) x = -x;
        r.v_ = std::move(c);
        break;
      }
      case ring_kind::complex_float: r.v_ = -std::get<std::complex<double>>(v_); break;
    }
    return r;
  }

  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    a.check_same(b);
    RingElem r(a.spec_);
    switch (a.spec_.kind) {
      case ring_kind::integers: r.v_ = mpz_class(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_)); break;
      case ring_kind::rationals: r.v_ = mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)); break;
      case ring_kind::prime_field: {
        std::uint64_t x = std::get<std::uint64_t>(a.v_), y = std::get<std::uint64_t>(b.v_);
        std::uint64_t s = x + y;
        if (s >= a.spec_.p || s < x) s -= a.spec_.p;
        r.v_ = s;
        break;
      }
      case ring_kind::cyclotomic: {
        cyc_vec c = std::get<cyc_vec>(a.v_);
        const cyc_vec& d = std::get<cyc_vec>(b.v_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
        r.v_ = std::move(c);
        break;
      }
      case ring_kind::complex_float:
        r.v_ = std::get<std::complex<double>>(a.v_) + std::get<std::complex<double>>(b.v_);
        break;
    }
    return r;
  }

  friend RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    a.check_same(b);
    RingElem r(a.spec_);
    switch (a.spec_.kind) {
      case ring_kind::integers: r.v_ = mpz_class(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_)); break;
      case ring_kind::rationals: r.v_ = mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)); break;
      case ring_kind::prime_field:
        r.v_ = detail::mulmod_u64(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_), a.spec_.p);
        break;
      case ring_kind::cyclotomic: {
        const cyc_vec& x = std::get<cyc_vec>(a.v_);
        const cyc_vec& y = std::get<cyc_vec>(b.v_);
        cyc_vec prod(x.size() + y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] == 0) continue;
          for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            prod[i + j] += x[i] * y[j];
          }
        }
        r.v_ = reduce_mod_phi(a.spec_.m, std::move(prod), a.spec_.cyclotomic_degree());
        break;
      }
      case ring_kind::complex_float:
        r.v_ = std::get<std::complex<double>>(a.v_) * std::get<std::complex<double>>(b.v_);
        break;
    }
    return r;
  }

  RingElem inverse() const {
    if (!is_unit()) throw error(errc::not_a_unit, "element is not a unit in " + spec_.name());
    RingElem r(spec_);
    switch (spec_.kind) {
      case ring_kind::integers: r.v_ = std::get<mpz_class>(v_); break;  // +-1 are self-inverse
      case ring_kind::rationals: r.v_ = mpq_class(1 / std::get<mpq_class>(v_)); break;
      case ring_kind::prime_field:
        r.v_ = detail::powmod_u64(std::get<std::uint64_t>(v_), spec_.p - 2, spec_.p);
        break;
      case ring_kind::cyclotomic: r.v_ = cyclotomic_inverse(spec_.m, std::get<cyc_vec>(v_)); break;
      case ring_kind::complex_float: r.v_ = 1.0 / std::get<std::complex<double>>(v_); break;
    }
    return r;
  }

  // Exact quotient a/b when it exists in the ring.
  static std::optional<RingElem> divide_exact(const RingElem& a, const RingElem& b) {
    a.check_same(b);
    if (b.is_zero()) throw error(errc::division_by_zero, "division by ring zero");
    if (a.spec_.kind == ring_kind::integers) {
      const auto& x = std::get<mpz_class>(a.v_);
      const auto& y = std::get<mpz_class>(b.v_);
      if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return std::nullopt;
      RingElem r(a.spec_);
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      r.v_ = q;
      return r;
    }
    return a * b.inverse();
  }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    if (a.spec_ != b.spec_) return false;
    if (a.spec_.kind == ring_kind::complex_float) {
      return std::abs(std::get<std::complex<double>>(a.v_) - std::get<std::complex<double>>(b.v_)) <= a.spec_.tol;
    }
    return a.v_ == b.v_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  // Total order used only for deterministic tie-breaks.
  friend bool operator<(const RingElem& a, const RingElem& b) {
    a.check_same(b);
    switch (a.spec_.kind) {
      case ring_kind::integers: return std::get<mpz_class>(a.v_) < std::get<mpz_class>(b.v_);
      case ring_kind::rationals: return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
      case ring_kind::prime_field: return std::get<std::uint64_t>(a.v_) < std::get<std::uint64_t>(b.v_);
      case ring_kind::cyclotomic: return std::get<cyc_vec>(a.v_) < std::get<cyc_vec>(b.v_);
      case ring_kind::complex_float: {
        auto x = std::get<std::complex<double>>(a.v_), y = std::get<std::complex<double>>(b.v_);
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
      }
    }
    return false;
  }

  // True when the canonical rendering starts with a minus sign; used by the
  // polynomial printer to fold signs into term separators.
  bool render_negative() const {
    switch (spec_.kind) {
      case ring_kind::integers: return std::get<mpz_class>(v_) < 0;
      case ring_kind::rationals: return std::get<mpq_class>(v_) < 0;
      case ring_kind::prime_field: return false;
      case ring_kind::cyclotomic: {
        const cyc_vec& c = std::get<cyc_vec>(v_);
        for (std::size_t i = c.size(); i-- > 0;)
          if (c[i] != 0) return c[i] < 0;
        return false;
      }
      case ring_kind::complex_float: return false;
    }
    return false;
  }

  // Number of printed addends; >1 forces parentheses inside polynomial terms.
  int render_term_count() const {
    if (spec_.kind != ring_kind::cyclotomic) return 1;
    int n = 0;
    for (const auto& c : std::get<cyc_vec>(v_))
      if (c != 0) ++n;
    return n == 0 ? 1 : n;
  }

  std::string to_string() const {
    std::ostringstream os;
    switch (spec_.kind) {
      case ring_kind::integers: os << std::get<mpz_class>(v_); break;
      case ring_kind::rationals: os << std::get<mpq_class>(v_); break;
      case ring_kind::prime_field: os << std::get<std::uint64_t>(v_); break;
      case ring_kind::cyclotomic: {
        const cyc_vec& c = std::get<cyc_vec>(v_);
        bool first = true;
        for (std::size_t i = c.size(); i-- > 0;) {
          if (c[i] == 0) continue;
          mpq_class coeff = c[i];
          if (first) {
            if (coeff < 0) {
              os << "-";
              coeff = -coeff;
            }
            first = false;
          } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
          }
          if (i == 0) {
            os << coeff;
          } else {
            if (coeff != 1) os << coeff << "*";
            os << "z";
            if (i > 1) os << "^" << i;
          }
        }
        if (first) os << "0";
        break;
      }
      case ring_kind::complex_float: {
        auto z = std::get<std::complex<double>>(v_);
        os.precision(15);
        os << z.real();
        if (z.imag() >= 0)
          os << "+" << z.imag() << "i";
        else
          os << "-" << -z.imag() << "i";
        break;
      }
    }
    return os.str();
  }

  // Parses the ring element literal grammar: integers, a/b, polynomials in z,
  // complex a+bi.
  static RingElem parse(const RingSpec& s, const std::string& text);

  std::complex<double> to_complex() const {
    switch (spec_.kind) {
      case ring_kind::integers: return {std::get<mpz_class>(v_).get_d(), 0.0};
      case ring_kind::rationals: return {std::get<mpq_class>(v_).get_d(), 0.0};
      case ring_kind::prime_field: return {static_cast<double>(std::get<std::uint64_t>(v_)), 0.0};
      case ring_kind::complex_float: return std::get<std::complex<double>>(v_);
      case ring_kind::cyclotomic: {
        const cyc_vec& c = std::get<cyc_vec>(v_);
        std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / spec_.m);
        std::complex<double> acc = 0.0, zp = 1.0;
        for (const auto& q : c) {
          acc += q.get_d() * zp;
          zp *= z;
        }
        return acc;
      }
    }
    return {};
  }

 private:
  static payload make_zero(const RingSpec& s) {
    switch (s.kind) {
      case ring_kind::integers: return mpz_class(0);
      case ring_kind::rationals: return mpq_class(0);
      case ring_kind::prime_field: return std::uint64_t{0};
      case ring_kind::cyclotomic: return cyc_vec(s.cyclotomic_degree());
      case ring_kind::complex_float: return std::complex<double>(0.0, 0.0);
    }
    return mpz_class(0);
  }

  static cyc_vec reduce_trivial(const RingSpec& s, cyc_vec c) {
    c.resize(s.cyclotomic_degree());
    return c;
  }

  // Reduces an arbitrary-degree rational polynomial mod Phi_m to degree < deg.
  static cyc_vec reduce_mod_phi(unsigned m, cyc_vec raw, unsigned deg) {
    const auto& phi = detail::cyclotomic_coeffs(m);
    for (std::size_t i = raw.size(); i-- > deg;) {
      mpq_class c = raw[i];
      if (c == 0) continue;
      raw[i] = 0;
      for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi[j];
    }
    raw.resize(deg);
    return raw;
  }

  // Extended Euclid in Q[z] against Phi_m.
  static cyc_vec cyclotomic_inverse(unsigned m, const cyc_vec& a);

  void check_same(const RingElem& o) const {
    if (spec_ != o.spec_) throw error(errc::ring_mismatch, "mixed ring operands");
  }

  RingSpec spec_;
  payload v_;
};

inline RingElem cyclotomic_embed(unsigned m, long power) { return RingElem::root_of_unity_power(m, power); }

namespace detail {

// Dense rational polynomial helpers for the cyclotomic extended Euclid.
using qpoly = std::vector<mpq_class>;

inline void qpoly_trim(qpoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline qpoly qpoly_mul(const qpoly& a, const qpoly& b) {
  if (a.empty() || b.empty()) return {};
  qpoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qpoly_trim(r);
  return r;
}

inline qpoly qpoly_sub(qpoly a, const qpoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qpoly_trim(a);
  return a;
}

// Division with remainder; returns quotient, leaves remainder in a.
inline qpoly qpoly_divmod(qpoly& a, const qpoly& b) {
  qpoly q;
  if (b.empty()) throw error(errc::division_by_zero, "polynomial division by zero");
  if (a.size() < b.size()) return q;
  q.resize(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t k = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[k] += c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    qpoly_trim(a);
  }
  return q;
}

}  // namespace detail

inline RingElem::cyc_vec RingElem::cyclotomic_inverse(unsigned m, const cyc_vec& a) {
  using detail::qpoly;
  const auto& phi_z = detail::cyclotomic_coeffs(m);
  qpoly phi(phi_z.size());
  for (std::size_t i = 0; i < phi_z.size(); ++i) phi[i] = mpq_class(phi_z[i]);
  qpoly r0 = phi, r1(a.begin(), a.end());
  detail::qpoly_trim(r1);
  qpoly s0 = {}, s1 = {mpq_class(1)};  // Bezout coefficients against a
  while (!r1.empty()) {
    qpoly rem = r0;
    qpoly q = detail::qpoly_divmod(rem, r1);
    qpoly s2 = detail::qpoly_sub(s0, detail::qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd, a unit in Q[z] since Phi_m is irreducible and a != 0 mod Phi_m.
  if (r0.size() != 1) throw error(errc::not_a_unit, "cyclotomic inverse failed");
  mpq_class lead = r0[0];
  cyc_vec out(RingSpec::cyclotomic(m).cyclotomic_degree());
  for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / lead;
  return out;
}

namespace detail {

struct literal_parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit literal_parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
    if (start == pos) throw error(errc::parse_error, "expected number in ring literal: " + s);
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

inline RingElem RingElem::parse(const RingSpec& spec, const std::string& text) {
  detail::literal_parser p(text);

  if (spec.kind == ring_kind::complex_float) {
    double re = 0.0, im = 0.0;
    int sign = p.accept('-') ? -1 : (p.accept('+'), 1);
    if (p.peek() == 'i') {
      p.accept('i');
      im = sign;
    } else {
      std::string n = p.number();
      double v = sign * std::stod(n);
      if (p.peek() == 'i') {
        p.accept('i');
        im = v;
      } else {
        re = v;
        if (!p.done()) {
          int s2 = p.accept('-') ? -1 : (p.accept('+') ? 1 : throw error(errc::parse_error, "bad complex literal: " + text));
          if (p.peek() == 'i') {
            im = s2;
          } else {
            im = s2 * std::stod(p.number());
          }
          p.accept('i');
        }
      }
    }
    if (!p.done()) throw error(errc::parse_error, "trailing input in complex literal: " + text);
    return from_complex(spec, {re, im});
  }

  // Sum of terms: [sign] coeff [* z [^k]] | [sign] z [^k]
  RingElem acc = RingElem::zero(spec);
  bool any = false;
  while (!p.done()) {
    int sign = 1;
    if (p.accept('-'))
      sign = -1;
    else if (p.accept('+'))
      sign = 1;
    else if (any)
      throw error(errc::parse_error, "expected +/- between terms: " + text);

    mpq_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      std::string num = p.number();
      std::string den = "1";
      if (p.accept('/')) den = p.number();
      coeff = mpq_class(mpz_class(num), mpz_class(den));
      coeff.canonicalize();
      have_coeff = true;
    }
    long zexp = 0;
    if (p.peek() == '*' || p.peek() == 'z') {
      if (have_coeff) p.accept('*');
      if (!p.accept('z')) throw error(errc::parse_error, "expected z: " + text);
      if (spec.kind != ring_kind::cyclotomic)
        throw error(errc::parse_error, "root symbol z outside cyclotomic ring: " + text);
      zexp = 1;
      if (p.accept('^')) zexp = std::stol(p.number());
    } else if (!have_coeff) {
      throw error(errc::parse_error, "expected term in ring literal: " + text);
    }

    RingElem term = from_mpq(spec, sign * coeff);
    if (zexp != 0) term = term * root_of_unity_power(spec.m, zexp);
    acc = acc + term;
    any = true;
  }
  if (!any) throw error(errc::parse_error, "empty ring literal");
  return acc;
}

}  // namespace talex
