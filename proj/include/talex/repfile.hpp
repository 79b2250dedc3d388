// Representation file format (JSON):
//   { "ring": {"kind":"Fp","p":11} | {"kind":"Q"} | "Z" | ...,
//     "dim": d,
//     "seeds": { "T1.x0": [["1","1"],["0","1"]], ... } }
// Element literals follow the ring literal grammar; plain JSON integers are
// also accepted.
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "talex/representation.hpp"

namespace talex {

struct RepresentationFile {
  RingSpec ring;
  int dim = 0;
  SeedMatrices seeds;
};

namespace detail {

inline RingSpec ring_from_json(const nlohmann::json& j) {
  std::string kind;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else if (j.is_object()) {
    kind = j.at("kind").get<std::string>();
  } else {
    throw error(errc::parse_error, "ring must be a string or object");
  }
  if (kind == "Z" || kind == "integers") return RingSpec::integers();
  if (kind == "Q" || kind == "rationals") return RingSpec::rationals();
  if (kind == "Fp" || kind == "prime_field") return RingSpec::prime_field(j.at("p").get<std::uint64_t>());
  if (kind == "cyclotomic") return RingSpec::cyclotomic(j.at("m").get<unsigned>());
  if (kind == "complex") {
    double tol = j.is_object() && j.contains("tol") ? j.at("tol").get<double>() : 1e-9;
    return RingSpec::complex_float(tol);
  }
  throw error(errc::parse_error, "unknown ring kind: " + kind);
}

inline RingElem elem_from_json(const RingSpec& ring, const nlohmann::json& j) {
  if (j.is_number_integer()) return RingElem::from_int(ring, j.get<long>());
  if (j.is_string()) return RingElem::parse(ring, j.get<std::string>());
  throw error(errc::parse_error, "ring element must be a string or integer");
}

}  // namespace detail

inline RepresentationFile parse_representation_json(const nlohmann::json& j,
                                                    const RingSpec* ring_override = nullptr) {
  RepresentationFile out;
  out.ring = ring_override ? *ring_override : detail::ring_from_json(j.at("ring"));
  out.dim = j.at("dim").get<int>();
  if (out.dim < 1) throw error(errc::parse_error, "dimension must be positive");
  for (const auto& [name, rows] : j.at("seeds").items()) {
    std::vector<std::vector<RingElem>> m;
    for (const auto& row : rows) {
      std::vector<RingElem> r;
      for (const auto& cell : row) r.push_back(detail::elem_from_json(out.ring, cell));
      m.push_back(std::move(r));
    }
    if (static_cast<int>(m.size()) != out.dim)
      throw error(errc::parse_error, "seed " + name + " has wrong row count");
    for (const auto& r : m)
      if (static_cast<int>(r.size()) != out.dim)
        throw error(errc::parse_error, "seed " + name + " has wrong column count");
    out.seeds.emplace(name, std::move(m));
  }
  if (out.seeds.empty()) throw error(errc::parse_error, "representation file has no seeds");
  return out;
}

inline RepresentationFile load_representation_file(const std::string& path,
                                                   const RingSpec* ring_override = nullptr) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open representation file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    return parse_representation_json(j, ring_override);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("bad representation file: ") + e.what());
  }
}

}  // namespace talex
