// Rational tangles, Montesinos specifications, continued fractions, and
// synthesis of an explicit directed-arc crossing diagram.
//
// Layout convention for [[k_1],...,[k_r]]: region j is a horizontal band when
// j == r (mod 2), vertical otherwise; horizontal regions compose to the right,
// vertical regions compose below. In a horizontal band positive twists put the
// nw->se strand on top; bands are swept west->east (horizontal) or
// north->south (vertical). Numerator closure joins nw-ne and sw-se, denominator
// closure joins nw-sw and ne-se.
#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "talex/rings.hpp"

namespace talex {

// [[k_1]] = k_1, [[k_1,...,k_j]] = k_j + 1/[[k_1,...,k_{j-1}]].
inline mpq_class continued_fraction(const std::vector<long>& twists) {
  if (twists.empty()) throw error(errc::degenerate_fraction, "empty twist sequence");
  mpq_class acc(twists[0]);
  for (std::size_t j = 1; j < twists.size(); ++j) {
    if (acc == 0) throw error(errc::degenerate_fraction, "zero intermediate continued fraction");
    acc = mpq_class(twists[j]) + 1 / acc;
  }
  return acc;
}

// Euclidean-style expansion with truncation toward zero; round-trips exactly
// through continued_fraction.
inline std::vector<long> fraction_to_twists(const mpq_class& value) {
  mpq_class x(value);
  x.canonicalize();
  std::vector<long> rev;
  for (;;) {
    mpz_class k;
    mpz_tdiv_q(k.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    rev.push_back(static_cast<long>(k.get_si()));
    mpq_class rem = x - mpq_class(k);
    if (rem == 0) break;
    x = 1 / rem;
  }
  return {rev.rbegin(), rev.rend()};
}

struct RationalTangleSpec {
  std::vector<long> twists;
  mpq_class fraction;

  static RationalTangleSpec from_twists(std::vector<long> ks) {
    RationalTangleSpec t;
    t.fraction = continued_fraction(ks);
    t.twists = std::move(ks);
    return t;
  }
  static RationalTangleSpec from_fraction(const mpq_class& f) {
    RationalTangleSpec t;
    t.twists = fraction_to_twists(f);
    t.fraction = continued_fraction(t.twists);
    return t;
  }

  long crossing_count() const {
    long m = 0;
    for (long k : twists) m += std::labs(k);
    return m;
  }
};

struct MontesinosSpec {
  bool numerator = false;  // N(T) of a single tangle vs D(T_1 * ... * T_s)
  std::vector<RationalTangleSpec> tangles;

  static MontesinosSpec numerator_closure(RationalTangleSpec t) {
    MontesinosSpec s;
    s.numerator = true;
    s.tangles.push_back(std::move(t));
    return s;
  }
  static MontesinosSpec denominator_closure(std::vector<RationalTangleSpec> ts) {
    if (ts.size() < 2) throw error(errc::parse_error, "Montesinos chain needs at least two tangles");
    MontesinosSpec s;
    s.numerator = false;
    s.tangles = std::move(ts);
    return s;
  }

  long crossing_count() const {
    long m = 0;
    for (const auto& t : tangles) m += t.crossing_count();
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << (numerator ? "N(" : "M(");
    for (std::size_t i = 0; i < tangles.size(); ++i) {
      if (i) os << ",";
      os << tangles[i].fraction;
    }
    os << ")";
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Diagram synthesis.

struct Diagram {
  struct Crossing {
    int sign = 0;
    int over = -1;
    int under_in = -1;
    int under_out = -1;
  };

  struct Port {
    int arc = -1;
    bool into_region = false;  // directed arc flows into the band at this port
  };

  struct Region {
    bool horizontal = true;
    long k = 0;
    Port nw, ne, sw, se;
  };

  struct Tangle {
    std::vector<Region> regions;
    int nw_arc = -1, ne_arc = -1, sw_arc = -1, se_arc = -1;
  };

  MontesinosSpec spec;
  std::vector<Crossing> crossings;
  int num_components = 0;
  std::vector<int> arc_component;  // arc id -> component (0-based)
  std::vector<Tangle> tangles;
  std::vector<std::pair<std::string, int>> seeds;  // name -> arc id

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int arc_count() const { return static_cast<int>(arc_component.size()); }

  int seed_arc(const std::string& name) const {
    for (const auto& [n, a] : seeds)
      if (n == name) return a;
    throw error(errc::parse_error, "unknown seed name: " + name);
  }

  std::pair<int, int> crossing_census() const {
    int pos = 0, neg = 0;
    for (const auto& c : crossings) (c.sign > 0 ? pos : neg)++;
    return {pos, neg};
  }

  std::string dump() const {
    std::ostringstream os;
    for (const auto& c : crossings)
      os << (c.sign > 0 ? "+1 " : "-1 ") << c.over << " " << c.under_in << " " << c.under_out << "\n";
    std::vector<std::vector<int>> comps(static_cast<std::size_t>(num_components));
    for (int a = 0; a < arc_count(); ++a) comps[static_cast<std::size_t>(arc_component[a])].push_back(a);
    for (int c = 0; c < num_components; ++c) {
      os << "component " << (c + 1) << ":";
      for (int a : comps[static_cast<std::size_t>(c)]) os << " " << a;
      os << "\n";
    }
    for (const auto& [name, arc] : seeds) os << "seed " << name << " = arc " << arc << "\n";
    return os.str();
  }
};

namespace detail {

class diagram_builder {
 public:
  enum port { NW = 0, NE = 1, SW = 2, SE = 3 };

  struct band {
    bool horizontal = true;
    long k = 0;
    int nw = -1, ne = -1, sw = -1, se = -1;  // boundary end ids
  };

  struct tangle_build {
    std::vector<band> regions;
    int nw = -1, ne = -1, sw = -1, se = -1;  // current partial-tangle ends
    int x0_end = -1, y0_end = -1;
  };

  band make_band(bool horizontal, long k) {
    band b{horizontal, k};
    long q = std::labs(k);
    if (q == 0) {
      // Two crossing-free strands passing straight through.
      int w1 = new_wire(), w2 = new_wire();
      if (horizontal) {
        b.nw = wire_end(w1, 0), b.ne = wire_end(w1, 1);
        b.sw = wire_end(w2, 0), b.se = wire_end(w2, 1);
      } else {
        b.nw = wire_end(w1, 0), b.sw = wire_end(w1, 1);
        b.ne = wire_end(w2, 0), b.se = wire_end(w2, 1);
      }
      return b;
    }
    int first = -1, prev = -1;
    for (long i = 0; i < q; ++i) {
      int c = new_crossing(k > 0);
      if (i == 0) first = c;
      if (prev >= 0) {
        if (horizontal) {
          join(cross_end(prev, NE), cross_end(c, NW));
          join(cross_end(prev, SE), cross_end(c, SW));
        } else {
          join(cross_end(prev, SW), cross_end(c, NW));
          join(cross_end(prev, SE), cross_end(c, NE));
        }
      }
      prev = c;
    }
    if (horizontal) {
      b.nw = cross_end(first, NW), b.sw = cross_end(first, SW);
      b.ne = cross_end(prev, NE), b.se = cross_end(prev, SE);
    } else {
      b.nw = cross_end(first, NW), b.ne = cross_end(first, NE);
      b.sw = cross_end(prev, SW), b.se = cross_end(prev, SE);
    }
    return b;
  }

  tangle_build build_tangle(const RationalTangleSpec& t) {
    tangle_build out;
    const int r = static_cast<int>(t.twists.size());
    for (int j = 1; j <= r; ++j) {
      bool horizontal = ((j % 2) == (r % 2));
      band b = make_band(horizontal, t.twists[static_cast<std::size_t>(j - 1)]);
      if (j == 1) {
        out.nw = b.nw, out.ne = b.ne, out.sw = b.sw, out.se = b.se;
        out.x0_end = b.nw;
        out.y0_end = horizontal ? b.sw : b.ne;
      } else if (horizontal) {
        join(out.ne, b.nw);
        join(out.se, b.sw);
        out.ne = b.ne, out.se = b.se;
      } else {
        join(out.sw, b.nw);
        join(out.se, b.ne);
        out.sw = b.sw, out.se = b.se;
      }
      out.regions.push_back(b);
    }
    return out;
  }

  void join(int a, int b) {
    if (join_[static_cast<std::size_t>(a)] != -1 || join_[static_cast<std::size_t>(b)] != -1)
      throw error(errc::invalid_diagram, "port joined twice");
    join_[static_cast<std::size_t>(a)] = b;
    join_[static_cast<std::size_t>(b)] = a;
  }

  Diagram finish(const MontesinosSpec& spec, std::vector<tangle_build> tbs) {
    for (int x : join_)
      if (x == -1) throw error(errc::invalid_diagram, "unmatched port");

    const int num_ends = static_cast<int>(join_.size());

    // Arcs: union across joins, across over-strands, and through wires.
    std::vector<int> parent(static_cast<std::size_t>(num_ends));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int e = 0; e < num_ends; ++e) unite(e, join_[static_cast<std::size_t>(e)]);
    for (int c = 0; c < num_crossings_; ++c) {
      if (over_d1_[static_cast<std::size_t>(c)])
        unite(cross_end(c, NW), cross_end(c, SE));
      else
        unite(cross_end(c, NE), cross_end(c, SW));
    }
    for (int w = 0; w < num_wires_; ++w) unite(wire_end(w, 0), wire_end(w, 1));

    std::vector<int> arc_of(static_cast<std::size_t>(num_ends), -1);
    int num_arcs = 0;
    for (int e = 0; e < num_ends; ++e) {
      int r = find(e);
      if (arc_of[static_cast<std::size_t>(r)] == -1) arc_of[static_cast<std::size_t>(r)] = num_arcs++;
      arc_of[static_cast<std::size_t>(e)] = arc_of[static_cast<std::size_t>(r)];
    }
    if (num_arcs != num_crossings_)
      throw error(errc::invalid_diagram, "diagram has a component that never passes under a crossing");

    // Orientation: traverse each underlying curve, anchored so the canonical
    // entry port of the component's first seed flows into its band.
    std::vector<int> priority;
    for (const auto& tb : tbs) {
      priority.push_back(tb.x0_end);
      priority.push_back(tb.y0_end);
    }
    for (int e = 0; e < num_ends; ++e) priority.push_back(e);

    std::vector<bool> seen(static_cast<std::size_t>(num_ends), false);
    std::vector<bool> inward(static_cast<std::size_t>(num_ends), false);
    std::vector<int> end_component(static_cast<std::size_t>(num_ends), -1);
    int num_components = 0;
    for (int start : priority) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int comp = num_components++;
      int u = start;
      do {
        seen[static_cast<std::size_t>(u)] = true;
        inward[static_cast<std::size_t>(u)] = true;
        end_component[static_cast<std::size_t>(u)] = comp;
        int v = internal_partner(u);
        seen[static_cast<std::size_t>(v)] = true;
        end_component[static_cast<std::size_t>(v)] = comp;
        u = join_[static_cast<std::size_t>(v)];
      } while (u != start);
    }

    Diagram d;
    d.spec = spec;
    d.num_components = num_components;
    d.arc_component.assign(static_cast<std::size_t>(num_arcs), -1);
    for (int e = 0; e < num_ends; ++e)
      d.arc_component[static_cast<std::size_t>(arc_of[static_cast<std::size_t>(e)])] =
          end_component[static_cast<std::size_t>(e)];

    // Crossing records with orientation-resolved signs.
    static const int pos_x[4] = {0, 1, 0, 1};  // NW NE SW SE
    static const int pos_y[4] = {1, 1, 0, 0};
    d.crossings.resize(static_cast<std::size_t>(num_crossings_));
    for (int c = 0; c < num_crossings_; ++c) {
      auto ends_of = [&](bool d1) -> std::pair<int, int> {
        int p = d1 ? cross_end(c, NW) : cross_end(c, NE);
        int q = d1 ? cross_end(c, SE) : cross_end(c, SW);
        if (!inward[static_cast<std::size_t>(p)]) std::swap(p, q);
        return {p, q};  // entry, exit
      };
      bool over_d1 = over_d1_[static_cast<std::size_t>(c)];
      auto [o_in, o_out] = ends_of(over_d1);
      auto [u_in, u_out] = ends_of(!over_d1);
      auto dir = [&](int in, int out) {
        int pi = end_port(in), po = end_port(out);
        return std::pair<int, int>(pos_x[po] - pos_x[pi], pos_y[po] - pos_y[pi]);
      };
      auto [ox, oy] = dir(o_in, o_out);
      auto [ux, uy] = dir(u_in, u_out);
      int cross_z = ox * uy - oy * ux;
      Diagram::Crossing rec;
      rec.sign = cross_z > 0 ? 1 : -1;
      rec.over = arc_of[static_cast<std::size_t>(o_in)];
      rec.under_in = arc_of[static_cast<std::size_t>(u_in)];
      rec.under_out = arc_of[static_cast<std::size_t>(u_out)];
      d.crossings[static_cast<std::size_t>(c)] = rec;
    }

    // Tangle metadata and seed names.
    auto port_of = [&](int e) {
      Diagram::Port p;
      p.arc = arc_of[static_cast<std::size_t>(e)];
      p.into_region = inward[static_cast<std::size_t>(e)];
      return p;
    };
    for (std::size_t ti = 0; ti < tbs.size(); ++ti) {
      const auto& tb = tbs[ti];
      Diagram::Tangle t;
      for (const auto& b : tb.regions) {
        Diagram::Region r;
        r.horizontal = b.horizontal;
        r.k = b.k;
        r.nw = port_of(b.nw);
        r.ne = port_of(b.ne);
        r.sw = port_of(b.sw);
        r.se = port_of(b.se);
        t.regions.push_back(r);
      }
      t.nw_arc = arc_of[static_cast<std::size_t>(tb.nw)];
      t.ne_arc = arc_of[static_cast<std::size_t>(tb.ne)];
      t.sw_arc = arc_of[static_cast<std::size_t>(tb.sw)];
      t.se_arc = arc_of[static_cast<std::size_t>(tb.se)];
      d.tangles.push_back(t);

      std::string base = "T" + std::to_string(ti + 1);
      d.seeds.emplace_back(base + ".x0", arc_of[static_cast<std::size_t>(tb.x0_end)]);
      d.seeds.emplace_back(base + ".y0", arc_of[static_cast<std::size_t>(tb.y0_end)]);
      d.seeds.emplace_back(base + ".ne", t.ne_arc);
      d.seeds.emplace_back(base + ".sw", t.sw_arc);
      d.seeds.emplace_back(base + ".se", t.se_arc);
    }
    return d;
  }

  int cross_end(int c, int p) const { return cross_base_[static_cast<std::size_t>(c)] + p; }
  int wire_end(int w, int i) const { return wire_base_[static_cast<std::size_t>(w)] + i; }

 private:
  int new_crossing(bool over_d1) {
    cross_base_.push_back(static_cast<int>(join_.size()));
    join_.insert(join_.end(), 4, -1);
    over_d1_.push_back(over_d1);
    end_kind_.insert(end_kind_.end(), {0, 1, 2, 3});
    end_owner_.insert(end_owner_.end(), 4, num_crossings_);
    return num_crossings_++;
  }

  int new_wire() {
    wire_base_.push_back(static_cast<int>(join_.size()));
    join_.insert(join_.end(), 2, -1);
    end_kind_.insert(end_kind_.end(), {-1, -1});
    end_owner_.insert(end_owner_.end(), 2, -(num_wires_ + 1));
    return num_wires_++;
  }

  int end_port(int e) const { return end_kind_[static_cast<std::size_t>(e)]; }

  int internal_partner(int e) const {
    int owner = end_owner_[static_cast<std::size_t>(e)];
    if (owner < 0) {
      int w = -owner - 1;
      int b = wire_base_[static_cast<std::size_t>(w)];
      return e == b ? b + 1 : b;
    }
    static const int partner[4] = {SE, SW, NE, NW};
    return cross_end(owner, partner[end_port(e)]);
  }

  std::vector<int> join_;
  std::vector<int> end_kind_;   // port index, -1 for wire ends
  std::vector<int> end_owner_;  // crossing index, or -(wire+1)
  std::vector<int> cross_base_;
  std::vector<int> wire_base_;
  std::vector<bool> over_d1_;
  int num_crossings_ = 0;
  int num_wires_ = 0;
};

}  // namespace detail

inline Diagram synthesize_diagram(const MontesinosSpec& spec) {
  if (spec.tangles.empty()) throw error(errc::invalid_diagram, "no tangles");
  detail::diagram_builder b;
  std::vector<detail::diagram_builder::tangle_build> tbs;
  for (const auto& t : spec.tangles) tbs.push_back(b.build_tangle(t));

  if (spec.numerator) {
    if (spec.tangles.size() != 1) throw error(errc::invalid_diagram, "numerator closure takes one tangle");
    b.join(tbs[0].nw, tbs[0].ne);
    b.join(tbs[0].sw, tbs[0].se);
  } else {
    for (std::size_t k = 1; k < tbs.size(); ++k) {
      b.join(tbs[k - 1].sw, tbs[k].nw);
      b.join(tbs[k - 1].se, tbs[k].ne);
    }
    b.join(tbs[0].nw, tbs.back().sw);
    b.join(tbs[0].ne, tbs.back().se);
  }
  return b.finish(spec, std::move(tbs));
}

inline int component_count(const Diagram& d) { return d.num_components; }

// ---------------------------------------------------------------------------
// Link spec mini-language: N(p/q), N([k1,k2,...]), M(p1/q1,...), P(k1,...).

namespace detail {

struct link_parser {
  const std::string& s;
  std::size_t pos = 0;
  explicit link_parser(const std::string& str) : s(str) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw error(errc::parse_error, std::string("expected '") + c + "' in link spec: " + s);
  }
  long integer() {
    skip();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw error(errc::parse_error, "expected integer in link spec: " + s);
    return std::stol(s.substr(start, pos - start));
  }
  mpq_class rational() {
    long p = integer();
    if (accept('/')) {
      long q = integer();
      if (q == 0) throw error(errc::parse_error, "zero denominator in link spec: " + s);
      mpq_class v(p, q);
      v.canonicalize();
      return v;
    }
    return mpq_class(p);
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
};

}  // namespace detail

inline MontesinosSpec parse_link_spec(const std::string& text) {
  detail::link_parser p(text);
  p.skip();
  if (p.pos >= p.s.size()) throw error(errc::parse_error, "empty link spec");
  char head = p.s[p.pos++];
  p.expect('(');
  MontesinosSpec spec;
  if (head == 'N') {
    RationalTangleSpec t;
    if (p.accept('[')) {
      std::vector<long> ks;
      ks.push_back(p.integer());
      while (p.accept(',')) ks.push_back(p.integer());
      p.expect(']');
      t = RationalTangleSpec::from_twists(std::move(ks));
    } else {
      t = RationalTangleSpec::from_fraction(p.rational());
    }
    spec = MontesinosSpec::numerator_closure(std::move(t));
  } else if (head == 'M' || head == 'P') {
    std::vector<RationalTangleSpec> ts;
    do {
      mpq_class f = head == 'P' ? mpq_class(p.integer()) : p.rational();
      ts.push_back(RationalTangleSpec::from_fraction(f));
    } while (p.accept(','));
    spec = MontesinosSpec::denominator_closure(std::move(ts));
  } else {
    throw error(errc::parse_error, "link spec must start with N, M or P: " + text);
  }
  p.expect(')');
  if (!p.done()) throw error(errc::parse_error, "trailing input in link spec: " + text);
  return spec;
}

}  // namespace talex
