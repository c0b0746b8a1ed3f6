// Command line front end: classification, map checking, unitalization,
// Ore arithmetic, ideal enumeration, delta-simplicity, the simplicity
// pipeline, and the property fuzzer. Exit codes: 0 success / Simple,
// 1 NotSimple or violation found, 2 Unknown, 3 input or precondition error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nuore/nuore.hpp"

namespace {

using namespace nuore;

struct Input {
  std::string label;
  RingPtr ring;
  MapPtr sigma;
  MapPtr delta;
};

struct CommonArgs {
  std::string file;
  std::string corpus;
};

Input load_input(const CommonArgs& a) {
  if (!a.corpus.empty() && !a.file.empty())
    throw BadDescriptorError("give either a description file or --corpus, not both");
  if (!a.corpus.empty()) {
    auto e = corpus_entry(a.corpus);
    if (!e) throw BadDescriptorError("unknown corpus entry '" + a.corpus + "'");
    return {e->name, e->ring, e->sigma, e->delta};
  }
  if (a.file.empty())
    throw BadDescriptorError("give a description file or --corpus <name>");
  ParsedContext pc = parse_description_file(a.file);
  return {a.file, pc.ring, pc.sigma, pc.delta};
}

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("file", a.file, "ring/map description file");
  cmd->add_option("--corpus", a.corpus, "built-in corpus entry instead of a file");
}

std::string cert_line(const Flag& f) {
  std::string s = cert_str(f.value);
  if (!f.why.empty()) s += " (" + f.why + ")";
  return s;
}

// Witness-friendly rendering: identity coefficients collapse into bare powers
// of x, so a corner witness e x^2 prints as "x^2".
std::string pretty_ore(const OrePoly& p) {
  const RingPtr& r = p.ctx->ring;
  auto id = r->identity();
  std::string s;
  for (int i = ore_degree(p); i >= 0; --i) {
    Element c = ore_coeff(p, i);
    if (r->is_zero(c)) continue;
    std::string term;
    if (i == 0) {
      term = r->element_str(c);
    } else {
      std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
      term = (id && c == *id) ? xs : "(" + r->element_str(c) + ") " + xs;
    }
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

int cmd_classify(const CommonArgs& a) {
  Input in = load_input(a);
  auto c = classify_unitality(in.ring);
  const auto& f = in.ring->flags();
  std::cout << "ring: " << in.label << "\n";
  std::cout << "  unital:             " << cert_line(f.unital) << "\n";
  std::cout << "  enough-idempotents: " << cert_line(f.enough_idempotents) << "\n";
  std::cout << "  locally-unital:     " << cert_line(f.locally_unital) << "\n";
  std::cout << "  s-unital:           " << cert_line(f.s_unital) << "\n";
  std::cout << "  idempotent:         " << cert_line(f.idempotent_ring) << "\n";
  std::cout << "finest class: " << c.finest << "\n";
  return 0;
}

int cmd_idempotents(const CommonArgs& a) {
  Input in = load_input(a);
  if (in.ring->is_finite()) {
    auto idems = enumerate_idempotents(in.ring);
    std::cout << "idempotents of " << in.label << " (" << idems.size() << "):\n";
    for (const auto& e : idems) {
      std::cout << "  " << in.ring->element_str(e);
      if (in.ring->is_zero(in.delta->apply(e))) std::cout << "  [in ker delta]";
      std::cout << "\n";
    }
    return 0;
  }
  KernelView kv = kernel_of(in.delta);
  std::cout << "kernel idempotents of delta on " << in.label << " ("
            << kv.idempotents.size() << "):\n";
  for (const auto& e : kv.idempotents)
    std::cout << "  " << in.ring->element_str(e) << "\n";
  if (!kv.note.empty()) std::cout << "note: " << kv.note << "\n";
  return 0;
}

int cmd_check_maps(const CommonArgs& a) {
  Input in = load_input(a);
  MapCheck sc = check_endomorphism(in.sigma);
  MapCheck dc = check_sigma_derivation(in.delta, in.sigma);
  std::cout << "sigma: " << (sc.ok ? "endomorphism verified" : "NOT multiplicative")
            << " [" << sc.mode << "]";
  if (!sc.ok) std::cout << " at " << sc.witness;
  std::cout << "\n";
  std::cout << "delta: "
            << (dc.ok ? "sigma-derivation verified" : "Leibniz rule FAILS") << " ["
            << dc.mode << "]";
  if (!dc.ok) std::cout << " at " << dc.witness;
  std::cout << "\n";
  if (acts_as_identity(in.sigma))
    std::cout << "twist acts as the identity: differential case\n";
  return sc.ok && dc.ok ? 0 : 1;
}

int cmd_unitalize(const CommonArgs& a) {
  Input in = load_input(a);
  RingPtr u = unitalize(in.ring);
  std::cout << "unitalization of " << in.label << ": identity "
            << u->element_str(*u->identity());
  if (u->is_finite()) std::cout << ", carrier " << u->carrier_size();
  std::cout << "\n";
  LiftedMaps lm = lift_maps(u, in.sigma, in.delta);
  std::cout << "sigma lift: "
            << (lm.sigma_check.ok ? "endomorphism verified" : "FAILS") << " ["
            << lm.sigma_check.mode << "], fixes identity: "
            << (lm.identity_fixed ? "yes" : "no") << "\n";
  std::cout << "delta lift: "
            << (lm.delta_check.ok ? "sigma-derivation verified" : "FAILS") << " ["
            << lm.delta_check.mode << "], kills identity: "
            << (lm.identity_killed ? "yes" : "no") << "\n";
  return lm.sigma_check.ok && lm.delta_check.ok ? 0 : 1;
}

int cmd_mul(const CommonArgs& a, const std::string& ptext, const std::string& qtext) {
  Input in = load_input(a);
  OrePtr ctx = make_ore_context(in.ring, in.sigma, in.delta);
  OrePoly p = parse_ore_poly(ctx, ptext);
  OrePoly q = parse_ore_poly(ctx, qtext);
  OrePoly pq = ore_mul(p, q);
  std::cout << "p     = " << ore_str(p) << "\n";
  std::cout << "q     = " << ore_str(q) << "\n";
  std::cout << "p * q = " << ore_str(pq) << "\n";
  std::cout << "degree " << ore_degree(pq) << ": " << pretty_ore(pq) << "\n";
  return 0;
}

int cmd_ideals(const CommonArgs& a) {
  Input in = load_input(a);
  auto ideals = enumerate_ideals(in.ring);
  std::cout << "two-sided ideals of " << in.label << " (" << ideals.size() << "):\n";
  for (const auto& J : ideals) {
    bool sinv = true, dinv = true;
    for (const auto& x : J.elements) {
      if (!J.contains(in.sigma->apply(x))) sinv = false;
      if (!J.contains(in.delta->apply(x))) dinv = false;
    }
    std::cout << "  size " << J.elements.size();
    if (J.elements.size() <= 8) {
      std::cout << " {";
      for (std::size_t i = 0; i < J.elements.size(); ++i)
        std::cout << (i ? ", " : " ") << in.ring->element_str(J.elements[i]);
      std::cout << " }";
    }
    if (sinv && dinv) std::cout << "  [sigma,delta-invariant]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_delta_simple(const CommonArgs& a) {
  Input in = load_input(a);
  if (!in.ring->is_finite()) {
    if (in.ring->flags().simple.yes()) {
      std::cout << "delta-simple: yes (" << in.ring->flags().simple.why << ")\n";
      return 0;
    }
    throw PreconditionError(
        "delta-simplicity needs a finite carrier or a ring already proven simple");
  }
  DeltaSimpleResult r = is_delta_simple(in.ring, in.sigma, in.delta);
  std::cout << "delta-simple: " << (r.delta_simple ? "yes" : "no") << " ("
            << r.ideals_checked << " ideals checked)\n";
  if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  if (r.witness) {
    std::cout << "invariant proper ideal of size " << r.witness->elements.size()
              << ":";
    for (const auto& x : r.witness->elements)
      std::cout << " " << in.ring->element_str(x);
    std::cout << "\n";
  }
  return r.delta_simple ? 0 : 1;
}

std::string verdict_headline(const SimplicityVerdict& v) {
  using C = SimplicityVerdict::Certificate;
  switch (v.outcome) {
    case SimplicityVerdict::Outcome::Simple:
      return "Simple: local units in the coefficient ring certify the center "
             "and lift ideals";
    case SimplicityVerdict::Outcome::NotSimple:
      switch (v.certificate) {
        case C::NotDeltaSimple:
          return "NotSimple: proper invariant ideal of size " +
                 std::to_string(v.ideal_witness ? v.ideal_witness->elements.size()
                                                : 0);
        case C::InnerDerivation:
          return "NotSimple: inner derivation, central witness " +
                 (v.central_witness ? pretty_ore(*v.central_witness)
                                    : std::string("x - a"));
        case C::PositiveDegreeCentral:
          return "NotSimple: central element " + pretty_ore(*v.central_witness);
        case C::CenterDegreeZeroNotField:
          return "NotSimple: non-invertible central element " +
                 (v.degree0_witness
                      ? v.degree0_witness->ring->element_str(*v.degree0_witness)
                      : std::string("?"));
        default: break;
      }
      return "NotSimple";
    default:
      return "Unknown: no obstruction up to degree " + std::to_string(v.bound);
  }
}

int cmd_simplicity(const CommonArgs& a, int bound) {
  Input in = load_input(a);
  OrePtr ctx = make_ore_context(in.ring, in.sigma, in.delta);
  VerdictOptions opts;
  opts.bound = bound;
  SimplicityVerdict v = simplicity_verdict(ctx, opts);
  std::cout << verdict_headline(v) << "\n";
  std::cout << "certificate: " << certificate_str(v.certificate)
            << ", bound: " << v.bound << "\n";
  for (const auto& line : v.log) std::cout << "  " << line << "\n";
  ReplayReport rep = replay_certificate(v, ctx);
  std::cout << "replay: " << (rep.pass ? "pass" : "FAIL") << "\n";
  if (!rep.pass)
    for (const auto& line : rep.log) std::cout << "  " << line << "\n";
  switch (v.outcome) {
    case SimplicityVerdict::Outcome::Simple: return rep.pass ? 0 : 3;
    case SimplicityVerdict::Outcome::NotSimple: return rep.pass ? 1 : 3;
    default: return 2;
  }
}

int cmd_fuzz(const FuzzOptions& o) {
  FuzzReport r = run_fuzz(o);
  std::cout << r.text;
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for non-unital rings, sigma-derivations, "
               "and non-unital Ore extensions"};
  app.require_subcommand(1);

  CommonArgs ca, ci, cm, cu, cx, cd, cs, cl;
  std::string ptext, qtext;
  int bound = 4;
  FuzzOptions fo;

  add_common(app.add_subcommand("classify", "unitality chain membership"), ca);
  add_common(app.add_subcommand("idempotents", "idempotents and kernel membership"),
             ci);
  add_common(app.add_subcommand("check-maps", "verify the twist and the derivation"),
             cm);
  add_common(app.add_subcommand("unitalize", "adjoin an identity and lift the maps"),
             cu);
  auto* mul = app.add_subcommand("mul", "multiply two Ore polynomials");
  mul->add_option("p", ptext, "left factor, coefficients 'c0 ; c1 ; ...'")
      ->required();
  mul->add_option("q", qtext, "right factor")->required();
  add_common(mul, cx);
  add_common(app.add_subcommand("ideals", "enumerate two-sided ideals"), cd);
  add_common(app.add_subcommand("delta-simple", "check for invariant proper ideals"),
             cs);
  auto* simp = app.add_subcommand("simplicity", "decide simplicity of R[x;delta]");
  add_common(simp, cl);
  simp->add_option("--bound", bound, "search degree for central witnesses")
      ->default_val(4);
  auto* fz = app.add_subcommand("fuzz", "property fuzzer over the built-in corpus");
  fz->add_option("--seed", fo.seed, "rng seed")->default_val(0);
  fz->add_option("--samples", fo.samples, "samples per property")->default_val(1000);
  fz->add_option("--bound", fo.bound, "max Ore polynomial degree")->default_val(4);
  fz->add_option("--corpus", fo.corpus, "corpus entry or 'all'")->default_val("all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("classify")) return cmd_classify(ca);
    if (app.got_subcommand("idempotents")) return cmd_idempotents(ci);
    if (app.got_subcommand("check-maps")) return cmd_check_maps(cm);
    if (app.got_subcommand("unitalize")) return cmd_unitalize(cu);
    if (app.got_subcommand("mul")) return cmd_mul(cx, ptext, qtext);
    if (app.got_subcommand("ideals")) return cmd_ideals(cd);
    if (app.got_subcommand("delta-simple")) return cmd_delta_simple(cs);
    if (app.got_subcommand("simplicity")) return cmd_simplicity(cl, bound);
    if (app.got_subcommand("fuzz")) return cmd_fuzz(fo);
  } catch (const nuore::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
