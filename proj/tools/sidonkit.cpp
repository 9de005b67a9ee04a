// sidonkit command-line tool: constructions, verification, exact search,
// enumeration/classification, and Monte Carlo threshold sweeps over Sidon
// and B_h[g] systems of k-sets.
//
// Exit codes: 0 success, 1 usage/IO/cap errors, 2 property-check failure
// (e.g. `verify` on a family that is not Sidon), so shell pipelines can
// branch on the property.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "sidonkit/constructions.hpp"
#include "sidonkit/family_io.hpp"
#include "sidonkit/kset.hpp"
#include "sidonkit/oracle.hpp"
#include "sidonkit/randomsim.hpp"
#include "sidonkit/verifier.hpp"

using json = nlohmann::json;
using namespace sidonkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPropertyFalse = 2;

// Output sink: --out path, or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json family_to_json(const Family& f) {
  json sets = json::array();
  for (const auto& s : f.sets()) {
    sets.push_back(s);
  }
  return sets;
}

int run_construct(const std::string& kind, Elem n, int k, int g,
                  const std::string& out_path) {
  std::vector<std::string> comments;
  {
    std::ostringstream provenance;
    provenance << "construct kind=" << kind << " n=" << n;
    if (kind == "k4" || kind == "b2g") {
      provenance << " k=" << k;
    }
    if (kind == "b2g") {
      provenance << " g=" << g;
    }
    comments.push_back(provenance.str());
  }

  std::optional<Family> family;
  if (kind == "k2") {
    family = construct_k2(n);
  } else if (kind == "k3") {
    family = construct_k3(n);
  } else if (kind == "k4") {
    K4Construction detail = construct_k4_detailed(n, k);
    std::ostringstream line;
    line << "base";
    for (Elem e : detail.base.elements) {
      line << ' ' << e;
    }
    line << " (erdos-turan p=" << detail.base.prime_p << ")";
    comments.push_back(line.str());
    family = std::move(detail.family);
  } else if (kind == "b2g") {
    B2gConstruction detail = construct_b2g_detailed(n, k, g);
    std::ostringstream line;
    line << "base";
    for (Elem e : detail.base_set) {
      line << ' ' << e;
    }
    line << " inner_size=" << detail.inner_system.size();
    comments.push_back(line.str());
    family = std::move(detail.family);
  } else {
    throw std::invalid_argument("unknown construction kind: " + kind);
  }

  Output out(out_path);
  write_family(out.stream(), *family, comments);
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& format,
               const std::string& out_path, std::uint64_t pair_cap) {
  const Family family = read_family_file(input);
  VerifierOptions opts;
  if (pair_cap > 0) {
    opts.pair_cap = pair_cap;
  }
  const auto records = find_collisions(family, opts);
  Output out(out_path);
  if (records.empty()) {
    if (format == "text") {
      out.stream() << "sidon: true (" << family.size() << " sets)\n";
    }
    return kExitOk;
  }
  for (const auto& rec : records) {
    if (format == "text") {
      out.stream() << "collision ell=" << rec.ell << " key size "
                   << rec.key.size() << "\n";
    } else {
      out.stream() << to_json_line(rec) << "\n";
    }
  }
  return kExitPropertyFalse;
}

int run_bhg_verify(const std::string& input, int h, int g,
                   std::uint64_t tuple_cap) {
  const Family family = read_family_file(input);
  VerifierOptions opts;
  if (tuple_cap > 0) {
    opts.tuple_cap = tuple_cap;
  }
  const bool ok = is_bhg(family, h, g, opts);
  json report;
  report["bhg"] = ok;
  report["h"] = h;
  report["g"] = g;
  report["sets"] = family.size();
  if (!ok) {
    const auto [max_count, witness] = max_representation(family, h, opts);
    report["max_representation"] = max_count;
    report["witness_sumset"] = witness;
  }
  std::cout << report.dump() << "\n";
  return ok ? kExitOk : kExitPropertyFalse;
}

int run_exact_fk(Elem n, int k) {
  const ExactResult result = exact_fk(n, k);
  json report;
  report["n"] = result.n;
  report["k"] = result.k;
  report["value"] = result.value;
  report["nodes"] = result.nodes_explored;
  report["seconds"] = result.elapsed_seconds;
  if (result.witness.has_value()) {
    report["witness"] = family_to_json(*result.witness);
  }
  std::cout << report.dump() << "\n";
  return kExitOk;
}

int run_enum3(Elem n, const std::string& out_path) {
  const auto records = enumerate_3set_equalities(n);
  Output out(out_path);
  for (const auto& rec : records) {
    out.stream() << to_json_line(rec) << "\n";
  }
  std::cerr << "enum3: " << records.size() << " records at n=" << n << "\n";
  return kExitOk;
}

int run_classify3(Elem n) {
  const auto records = enumerate_3set_equalities(n);
  const Classification c = classify_3set_equalities(records);
  json by_family = json::object();
  for (const auto& [id, list] : c.by_family) {
    by_family[std::to_string(id)] = list.size();
  }
  json report;
  report["n"] = n;
  report["records"] = records.size();
  report["by_family"] = by_family;
  report["unclassified"] = c.unclassified.size();
  std::cout << report.dump() << "\n";
  return kExitOk;
}

int run_count_cl(Elem n, int k, int ell, const std::string& out_path) {
  const auto counts = count_c_ell_all(n, k);
  Output out(out_path);
  out.stream() << "n,k,ell,count\n";
  for (int e = 2; e <= 4; ++e) {
    if (ell != 0 && e != ell) {
      continue;
    }
    out.stream() << n << ',' << k << ',' << e << ','
                 << counts[static_cast<std::size_t>(e - 2)] << "\n";
  }
  return kExitOk;
}

int run_sweep(const std::vector<Elem>& ns, int k, int h, double p_single,
              double p_min, double p_max, int grid_points,
              std::uint64_t samples, std::uint64_t seed, int threads,
              const std::string& format, const std::string& out_path) {
  ThresholdFit fit;
  if (p_single > 0.0) {
    // Single-point mode: estimate Pr(property) at one p per n; no crossing
    // or slope fit.
    fit.seed = seed;
    for (Elem n : ns) {
      SampleSpec spec;
      spec.n = n;
      spec.k = k;
      spec.p = p_single;
      spec.h = h;
      spec.seed = seed;
      spec.samples = samples;
      fit.points.push_back(h == 2 ? estimate_sidon_probability(spec, threads)
                                  : estimate_bh_probability(spec, threads));
      fit.per_n.push_back(CrossingEstimate{n, std::nullopt});
    }
  } else {
    PGrid grid;
    grid.p_min = p_min;
    grid.p_max = p_max;
    grid.points = grid_points;
    fit = threshold_sweep(ns, k, h, grid, samples, seed, threads);
  }

  json summary;
  summary["seed"] = fit.seed;
  summary["k"] = k;
  summary["h"] = h;
  summary["samples"] = samples;
  summary["slope"] = fit.slope.has_value() ? json(*fit.slope) : json(nullptr);
  summary["intercept"] =
      fit.intercept.has_value() ? json(*fit.intercept) : json(nullptr);
  json per_n = json::array();
  for (const auto& crossing : fit.per_n) {
    json entry;
    entry["n"] = crossing.n;
    entry["p_half"] =
        crossing.p_half.has_value() ? json(*crossing.p_half) : json(nullptr);
    per_n.push_back(entry);
  }
  summary["per_n"] = per_n;

  Output out(out_path);
  if (format == "json") {
    json points = json::array();
    for (const SweepPoint& pt : fit.points) {
      json entry;
      entry["n"] = pt.spec.n;
      entry["k"] = pt.spec.k;
      entry["h"] = pt.spec.h;
      entry["p"] = pt.spec.p;
      entry["samples"] = pt.spec.samples;
      entry["p_hat"] = pt.p_hat;
      entry["ci"] = pt.ci_half_width;
      entry["mean_collisions"] = pt.mean_collisions;
      points.push_back(entry);
    }
    summary["points"] = points;
    out.stream() << summary.dump() << "\n";
  } else {
    out.stream() << "n,k,h,p,samples,p_hat,ci,mean_collisions\n";
    for (const SweepPoint& pt : fit.points) {
      out.stream() << pt.spec.n << ',' << pt.spec.k << ',' << pt.spec.h << ','
                   << pt.spec.p << ',' << pt.spec.samples << ',' << pt.p_hat
                   << ',' << pt.ci_half_width << ',' << pt.mean_collisions
                   << "\n";
    }
    std::cerr << summary.dump() << "\n";
  }
  return kExitOk;
}

int run_multirep(const std::vector<Elem>& parts) {
  if (parts.size() != 4) {
    throw std::invalid_argument("multirep: --parts needs exactly 4 values");
  }
  const MultiRepDemo demo =
      composite_multirep({parts[0], parts[1], parts[2], parts[3]});
  json pairings = json::array();
  for (const auto& [u, v] : demo.pairings) {
    pairings.push_back(json::array({u, v}));
  }
  json report;
  report["parts"] = parts;
  report["s"] = demo.s;
  report["pairings"] = pairings;
  report["representation_count"] =
      representation_count(demo.six_sets, demo.s, 2);
  std::cout << report.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sidonkit: Sidon systems of k-sets as executable mathematics"};
  app.require_subcommand(1);
  // --h is a domain flag (the fold count), so help is --help only.
  app.set_help_flag("--help", "print help");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a known family");
  std::string kind;
  Elem c_n = 0;
  int c_k = 3;
  int c_g = 2;
  std::string c_out;
  construct->add_option("--kind", kind, "k2|k3|k4|b2g")->required();
  construct->add_option("--n", c_n, "ambient N")->required();
  construct->add_option("--k", c_k, "set size (k4, b2g)");
  construct->add_option("--g", c_g, "representation bound (b2g)");
  construct->add_option("--out", c_out, "output family file");

  // verify
  auto* verify = app.add_subcommand("verify", "check the Sidon property");
  std::string v_input, v_format = "json", v_out;
  std::uint64_t v_cap = 0;
  verify->add_option("input", v_input, "family file")->required();
  verify->add_option("--format", v_format, "json|text");
  verify->add_option("--out", v_out, "output path");
  verify->add_option("--cap", v_cap, "pair enumeration cap override");

  // bhg-verify
  auto* bhg = app.add_subcommand("bhg-verify", "check the B_h[g] property");
  bhg->set_help_flag("--help", "print help");
  std::string b_input;
  int b_h = 2, b_g = 1;
  std::uint64_t b_cap = 0;
  bhg->add_option("input", b_input, "family file")->required();
  bhg->add_option("--h", b_h, "fold count")->required();
  bhg->add_option("--g", b_g, "representation bound")->required();
  bhg->add_option("--cap", b_cap, "tuple cap override");

  // exact-fk
  auto* exact = app.add_subcommand("exact-fk", "exact F_k(N) by search");
  Elem e_n = 0;
  int e_k = 2;
  exact->add_option("--n", e_n, "ambient N")->required();
  exact->add_option("--k", e_k, "set size")->required();

  // enum3
  auto* enum3 = app.add_subcommand("enum3", "enumerate 3-set equalities");
  Elem n3 = 0;
  std::string n3_out;
  enum3->add_option("--n", n3, "ambient N")->required();
  enum3->add_option("--out", n3_out, "output path");

  // classify3
  auto* classify3 =
      app.add_subcommand("classify3", "classify 3-set equalities");
  Elem nc = 0;
  classify3->add_option("--n", nc, "ambient N")->required();

  // count-cl
  auto* countcl = app.add_subcommand("count-cl", "exact |C(ell)| counts");
  Elem cc_n = 0;
  int cc_k = 2, cc_ell = 0;
  std::string cc_out;
  countcl->add_option("--n", cc_n, "ambient N")->required();
  countcl->add_option("--k", cc_k, "set size")->required();
  countcl->add_option("--ell", cc_ell, "restrict to one ell (2..4)");
  countcl->add_option("--out", cc_out, "output path");

  // sweep / bh-sweep
  auto* sweep = app.add_subcommand("sweep", "Sidon threshold sweep");
  auto* bh_sweep = app.add_subcommand("bh-sweep", "B_h[1] threshold sweep");
  for (CLI::App* cmd : {sweep, bh_sweep}) {
    cmd->set_help_flag("--help", "print help");
  }
  std::vector<Elem> s_ns;
  int s_k = 2, s_h = 3, s_grid = 12, s_threads = default_threads();
  double s_p = 0.0, s_pmin = 0.0, s_pmax = 0.0;
  std::uint64_t s_samples = 400, s_seed = 0;
  std::string s_format = "csv", s_out;
  for (CLI::App* cmd : {sweep, bh_sweep}) {
    cmd->add_option("--n", s_ns, "ambient sizes (repeat or comma list)")
        ->required()
        ->delimiter(',');
    cmd->add_option("--k", s_k, "set size")->required();
    cmd->add_option("--p", s_p, "single-point mode: one p per n");
    cmd->add_option("--p-min", s_pmin, "grid lower bound (0 = auto)");
    cmd->add_option("--p-max", s_pmax, "grid upper bound (0 = auto)");
    cmd->add_option("--grid", s_grid, "number of grid points");
    cmd->add_option("--samples", s_samples, "samples per grid cell");
    cmd->add_option("--seed", s_seed, "RNG seed")->required();
    cmd->add_option("--threads", s_threads, "worker threads");
    cmd->add_option("--format", s_format, "csv|json");
    cmd->add_option("--out", s_out, "output path");
  }
  bh_sweep->add_option("--h", s_h, "fold count")->required();

  // multirep
  auto* multirep =
      app.add_subcommand("multirep", "composite-k multi-representation demo");
  std::vector<Elem> parts{1, 2, 4, 8};
  multirep->add_option("--parts", parts, "four 2-set generators")
      ->delimiter(',');

  // bounds
  auto* bounds = app.add_subcommand("bounds", "print the F_k(N) upper bound");
  Elem bd_n = 0;
  int bd_k = 2;
  bounds->add_option("--n", bd_n, "ambient N")->required();
  bounds->add_option("--k", bd_k, "set size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (construct->parsed()) {
      return run_construct(kind, c_n, c_k, c_g, c_out);
    }
    if (verify->parsed()) {
      return run_verify(v_input, v_format, v_out, v_cap);
    }
    if (bhg->parsed()) {
      return run_bhg_verify(b_input, b_h, b_g, b_cap);
    }
    if (exact->parsed()) {
      return run_exact_fk(e_n, e_k);
    }
    if (enum3->parsed()) {
      return run_enum3(n3, n3_out);
    }
    if (classify3->parsed()) {
      return run_classify3(nc);
    }
    if (countcl->parsed()) {
      return run_count_cl(cc_n, cc_k, cc_ell, cc_out);
    }
    if (sweep->parsed()) {
      return run_sweep(s_ns, s_k, 2, s_p, s_pmin, s_pmax, s_grid, s_samples,
                       s_seed, s_threads, s_format, s_out);
    }
    if (bh_sweep->parsed()) {
      return run_sweep(s_ns, s_k, s_h, s_p, s_pmin, s_pmax, s_grid,
                       s_samples, s_seed, s_threads, s_format, s_out);
    }
    if (multirep->parsed()) {
      return run_multirep(parts);
    }
    if (bounds->parsed()) {
      std::cout << upper_bound_fk(bd_n, bd_k) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "sidonkit: error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
