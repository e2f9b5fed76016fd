#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

#include "fillcurve/construct.hpp"
#include "fillcurve/curve.hpp"
#include "fillcurve/io.hpp"
#include "fillcurve/orbits.hpp"
#include "fillcurve/version.hpp"

namespace fillcurve::cli {

bool env_override() {
  const char* v = std::getenv("FILLCURVE_GUARD_OVERRIDE");
  return v && *v && std::string(v) != "0";
}

namespace {

struct Config {
  std::uint64_t q = 0;
  std::string f, g;
  std::uint64_t n = 1000;
  std::uint64_t seed = 0;
  int variant = 0;
  std::uint64_t index = 0;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  bool allow_large = false;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::not_a_prime_power:
    case Errc::degree_mismatch:
    case Errc::zero_form:
    case Errc::mixed_fields:
      return kParse;
    case Errc::precondition_violated:
    case Errc::even_characteristic:
    case Errc::index_out_of_range:
      return kPrecondition;
    case Errc::too_large:
    case Errc::budget_exceeded:
      return kGuard;
    default:
      return kInternal;
  }
}

template <class Doc>
void emit(const Config& cfg, const Doc& doc, const std::string& summary, std::ostream& out) {
  const std::string text = cfg.format == "csv" ? to_csv(doc) : dump(to_json(doc));
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(Errc::internal, "cannot open " + cfg.out + " for writing");
  file << text;
  if (!file) throw Error(Errc::internal, "failed writing " + cfg.out);
  out << summary << '\n';
}

void cmd_check(const Config& cfg, std::ostream& out) {
  const Field F = canonical_field(cfg.q);
  const BinForm f = parse_form(F, cfg.f);
  const BinForm g = parse_form(F, cfg.g);
  Rng rng(cfg.seed);
  const SmoothnessReport rep = check_smoothness(f, g, rng);
  emit(cfg, make_report_doc(f, g, rep), rep.smooth ? "smooth" : "singular", out);
}

void cmd_construct(const Config& cfg, std::ostream& out) {
  const Field F = canonical_field(cfg.q);
  const BinForm f = parse_form(F, cfg.f);
  Rng rng(cfg.seed);
  const Partner p = construct_partner(f, rng);
  emit(cfg, make_construct_doc(f, p), p.g.to_string(), out);
}

void cmd_symmetric(const Config& cfg, std::ostream& out) {
  const BinForm f = symmetric_form(cfg.q, cfg.variant, cfg.index);
  emit(cfg, make_symmetric_doc(cfg.q, cfg.variant, cfg.index, f), f.to_string(), out);
}

void cmd_orbits(const Config& cfg, std::ostream& out) {
  const OrbitTable t = orbit_decomposition(enumerate_gq(cfg.q, cfg.allow_large), cfg.q);
  emit(cfg, make_orbits_doc(t), std::to_string(t.orbits.size()) + " orbits", out);
}

void cmd_census(const Config& cfg, std::ostream& out) {
  const CensusResult c = census(cfg.q, cfg.jobs, cfg.allow_large);
  const CensusDoc d = make_census_doc(c);
  emit(cfg, d, std::to_string(d.total_smooth_pairs) + "/" + std::to_string(d.total_pairs), out);
}

void cmd_sample(const Config& cfg, std::ostream& out) {
  const SampleResult s = sample_stats(cfg.q, cfg.n, cfg.seed, cfg.jobs);
  emit(cfg, make_sample_doc(s), std::to_string(s.smooth) + "/" + std::to_string(s.n), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Smooth space-filling curves C_{f,g} on P1 x P1 over F_q", "fillcurve"};
  app.set_version_flag("--version", kLibraryVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Field order (a prime power)")->required();
    sub->add_option("--out", cfg.out, "Write the artifact to this file");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* check = app.add_subcommand("check", "Decide smoothness of C_{f,g}");
  add_common(check);
  check->add_option("--f", cfg.f, "Coefficients c0,...,c_{q+1} of f")->required();
  check->add_option("--g", cfg.g, "Coefficients c0,...,c_{q+1} of g")->required();
  check->add_option("--seed", cfg.seed, "Seed for factorization");

  auto* construct = app.add_subcommand("construct", "Find g with C_{f,g} smooth (odd q)");
  add_common(construct);
  construct->add_option("--f", cfg.f, "Coefficients of f")->required();
  construct->add_option("--seed", cfg.seed, "Seed for factorization");

  auto* symmetric = app.add_subcommand("symmetric", "Symmetric form f with C_{f,f} smooth (odd q)");
  add_common(symmetric);
  symmetric->add_option("--variant", cfg.variant, "Middle-term variant 0..3");
  symmetric->add_option("--index", cfg.index, "Index into the lambda candidates");

  auto* orbits = app.add_subcommand("orbits", "SL2(F_q)-orbits on G_q");
  add_common(orbits);
  orbits->add_flag("--allow-large", cfg.allow_large, "Lift size guards");

  auto* cen = app.add_subcommand("census", "Orbit-reduced count of smooth pairs");
  add_common(cen);
  cen->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cen->add_flag("--allow-large", cfg.allow_large, "Lift size guards");

  auto* sample = app.add_subcommand("sample", "Count smooth pairs among n random pairs");
  add_common(sample);
  sample->add_option("--n", cfg.n, "Number of pairs");
  sample->add_option("--seed", cfg.seed, "Seed");
  sample->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  cfg.allow_large = cfg.allow_large || env_override();

  try {
    if (*check) cmd_check(cfg, out);
    else if (*construct) cmd_construct(cfg, out);
    else if (*symmetric) cmd_symmetric(cfg, out);
    else if (*orbits) cmd_orbits(cfg, out);
    else if (*cen) cmd_census(cfg, out);
    else if (*sample) cmd_sample(cfg, out);
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace fillcurve::cli
