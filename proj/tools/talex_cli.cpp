// Command-line front end: parse link specs and representation files, run the
// tangle engine and the optional Fox-matrix cross-check, print canonical
// polynomials.
//
// Exit codes: 0 success, 1 parse error, 2 invalid representation,
// 3 engine error, 4 oracle mismatch.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "talex/engine.hpp"
#include "talex/oracle.hpp"
#include "talex/repfile.hpp"

namespace {

using namespace talex;

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::degenerate_fraction:
    case errc::invalid_diagram:
      return 1;
    case errc::invalid_representation:
    case errc::underdetermined_seeds:
      return 2;
    default:
      return 3;
  }
}

struct Options {
  std::string link;
  std::string rep_path;
  std::string ring_override;
  bool oracle_check = false;
  bool force_degenerate = false;
  bool dump_boundaries = false;
  bool match_upto_inversion = false;
};

RingSpec parse_ring_override(const std::string& text) {
  if (text == "Z") return RingSpec::integers();
  if (text == "Q") return RingSpec::rationals();
  if (text == "complex") return RingSpec::complex_float();
  if (text.rfind("Fp:", 0) == 0) return RingSpec::prime_field(std::stoull(text.substr(3)));
  if (text.rfind("cyclotomic:", 0) == 0) return RingSpec::cyclotomic(static_cast<unsigned>(std::stoul(text.substr(11))));
  throw error(errc::parse_error, "bad ring override (use Z, Q, Fp:<p>, cyclotomic:<m>, complex): " + text);
}

Representation load_and_verify(const Diagram& diagram, const Options& opt) {
  const RingSpec* override_ptr = nullptr;
  RingSpec override_ring;
  if (!opt.ring_override.empty()) {
    override_ring = parse_ring_override(opt.ring_override);
    override_ptr = &override_ring;
  }
  RepresentationFile file = load_representation_file(opt.rep_path, override_ptr);
  Representation rep = propagate(diagram, file.ring, file.dim, file.seeds);
  auto violations = verify_representation(rep, diagram);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    throw error(errc::invalid_representation, "seed matrices do not define a representation");
  }
  return rep;
}

void print_boundaries(const Diagram& diagram, const Representation& rep) {
  for (std::size_t k = 0; k < diagram.tangles.size(); ++k) {
    TangleBoundary tb = tangle_boundary(diagram, static_cast<int>(k), rep);
    std::cout << "T" << (k + 1) << ".b_ne = " << tb.b_ne.to_string() << "\n";
    std::cout << "T" << (k + 1) << ".b_sw = " << tb.b_sw.to_string() << "\n";
    std::cout << "T" << (k + 1) << ".b_se = " << tb.b_se.to_string() << "\n";
  }
}

// Recomputes via the Fox-matrix route and compares up to unit * monomial.
bool oracle_agrees(const Diagram& diagram, const Representation& rep, const TapResult& tap,
                   bool upto_inversion) {
  TapResultOracle wada = wada_invariant(diagram, rep);
  std::vector<bool> flags(static_cast<std::size_t>(tap.context.n), upto_inversion);
  return equiv(tap.value.as_fraction(), wada.value.as_fraction(), flags);
}

int run_compute(const Options& opt) {
  Diagram diagram = synthesize_diagram(parse_link_spec(opt.link));
  Representation rep = load_and_verify(diagram, opt);
  if (opt.dump_boundaries) print_boundaries(diagram, rep);
  TapResult tap = compute_tap(diagram, rep, opt.force_degenerate);
  std::cout << tap.value.to_string() << "\n";
  std::cout << "degenerate-path: " << (tap.used_degenerate_path ? "yes" : "no") << "\n";
  if (opt.oracle_check) {
    if (!oracle_agrees(diagram, rep, tap, opt.match_upto_inversion)) {
      std::cerr << "oracle mismatch\n";
      return 4;
    }
    tap.oracle_checked = true;
    std::cout << "oracle-check: ok\n";
  }
  return 0;
}

int run_alexander(const Options& opt) {
  MontesinosSpec spec = parse_link_spec(opt.link);
  TapResult delta = alexander_polynomial(spec);
  std::cout << delta.value.to_string() << "\n";
  if (opt.oracle_check) {
    Diagram diagram = synthesize_diagram(spec);
    Representation rep = trivial_representation(diagram);
    TapResult tap = compute_tap(diagram, rep);
    if (!oracle_agrees(diagram, rep, tap, opt.match_upto_inversion)) {
      std::cerr << "oracle mismatch\n";
      return 4;
    }
    std::cout << "oracle-check: ok\n";
  }
  return 0;
}

int run_diagram(const Options& opt) {
  Diagram diagram = synthesize_diagram(parse_link_spec(opt.link));
  std::cout << diagram.dump();
  return 0;
}

int run_verify(const Options& opt) {
  Diagram diagram = synthesize_diagram(parse_link_spec(opt.link));
  const RingSpec* override_ptr = nullptr;
  RingSpec override_ring;
  if (!opt.ring_override.empty()) {
    override_ring = parse_ring_override(opt.ring_override);
    override_ptr = &override_ring;
  }
  RepresentationFile file = load_representation_file(opt.rep_path, override_ptr);
  Representation rep = propagate(diagram, file.ring, file.dim, file.seeds);
  auto violations = verify_representation(rep, diagram);
  if (violations.empty()) {
    std::cout << "Ok\n";
    return 0;
  }
  for (const auto& v : violations) std::cout << v << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Alexander polynomials of Montesinos links"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_rep) {
    cmd->add_option("--link", opt.link, "link spec: N(p/q), N([k1,k2,...]), M(p1/q1,...), P(k1,...)")
        ->required();
    if (needs_rep) {
      cmd->add_option("--rep", opt.rep_path, "representation JSON file")->required();
      cmd->add_option("--ring", opt.ring_override, "override coefficient ring (Z, Q, Fp:<p>, cyclotomic:<m>)");
    }
  };

  CLI::App* compute = app.add_subcommand("compute", "twisted Alexander polynomial for a representation");
  add_common(compute, true);
  compute->add_flag("--oracle-check", opt.oracle_check, "recompute via Fox matrix minors and compare");
  compute->add_flag("--force-degenerate", opt.force_degenerate, "force the auxiliary-variable path");
  compute->add_flag("--dump-boundaries", opt.dump_boundaries, "print each tangle's b^ne/b^sw/b^se");
  compute->add_flag("--match-upto-inversion", opt.match_upto_inversion,
                    "oracle comparison tolerates per-variable inversion");

  CLI::App* alexander = app.add_subcommand("alexander", "(multi-variable) Alexander polynomial");
  add_common(alexander, false);
  alexander->add_flag("--oracle-check", opt.oracle_check, "recompute via Fox matrix minors and compare");
  alexander->add_flag("--match-upto-inversion", opt.match_upto_inversion,
                      "oracle comparison tolerates per-variable inversion");

  CLI::App* diagram = app.add_subcommand("diagram", "dump the synthesized crossing diagram");
  add_common(diagram, false);

  CLI::App* verify = app.add_subcommand("verify", "check that seed matrices define a representation");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return run_compute(opt);
    if (alexander->parsed()) return run_alexander(opt);
    if (diagram->parsed()) return run_diagram(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const talex::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
