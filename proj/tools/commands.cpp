#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "ymoptics/copies.hpp"
#include "ymoptics/dynamics.hpp"
#include "ymoptics/radial.hpp"
#include "ymoptics/sampling.hpp"

namespace ymo::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << csv_field(cells[i]);
    }
    os_ << "\r\n";
  }

 private:
  std::ostream& os_;
};

Json vec_json(const Vec3& v) { return Json::array({v(0), v(1), v(2)}); }

// Non-finite numbers become strings so the JSON stays valid and lossless.
Json num(double v) {
  if (std::isfinite(v)) return v;
  return fmt(v);
}

void ensure_dir(const RunContext& ctx) {
  if (ctx.out_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(ctx.out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + ctx.out_dir);
}

std::ofstream open_out(const RunContext& ctx, const std::string& file) {
  std::ofstream f(fs::path(ctx.out_dir) / file, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + file + " in " + ctx.out_dir);
  return f;
}

void emit_json(const Json& j, const RunContext& ctx, const std::string& file,
               std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!ctx.out_dir.empty()) open_out(ctx, file) << text;
  out << text;
}

double tolerance(const Section& tols, const Overrides& o,
                 const std::string& key, double fallback) {
  if (o.tol) return *o.tol;
  return tols.num(key, fallback);
}

struct Check {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass() const { return max_residual <= tol; }
};

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const Check& c : checks)
    arr.push_back({{"name", c.name},
                   {"max_residual", num(c.max_residual)},
                   {"tolerance", c.tol},
                   {"pass", c.pass()}});
  return arr;
}

Tensor3R3 lowered_first(const Tensor3R3& k, const Mat3& g) {
  Tensor3R3 out;
  for (int a = 0; a < kDim; ++a)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double s = 0.0;
        for (int r = 0; r < kDim; ++r) s += g(a, r) * k(r, i, j);
        out(a, i, j) = s;
      }
  return out;
}

}  // namespace

int cmd_verify(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const Overrides& o = ctx.overrides;
  const FieldSpec field = field_from(cfg.require("field"), o);
  const Dreibein h = dreibein_from(cfg.section("dreibein"), o);
  const SamplingSpec sp = sampling_from(cfg.section("sampling"), o);
  const Section tols = cfg.section("tolerances");
  const std::vector<Vec3> points =
      sample_shell(sp.seed, sp.count, sp.r_min, sp.r_max);

  const GaugePotential& a = field.potential;
  const MetricField g = metric_field(h);
  const ConnectionField gamma = transcribed_connection_field(a, h);
  const SmoothField<Contorsion> kfield = contorsion_field(a, h);
  const ColorVectorField b_field = magnetic_field_of(a);

  std::vector<Check> checks;
  auto add = [&](const std::string& name, double fallback) -> Check& {
    checks.push_back({name, 0.0, tolerance(tols, o, name, fallback)});
    return checks.back();
  };
  if (field.closed_form_b) add("closed_form_magnetic", 1e-10);
  add("gauss_magnetic", 1e-6);
  add("ampere", 1e-6);
  add("compatibility", 1e-6);
  add("ricci_round_trip", 1e-10);
  add("contorsion_antisymmetry", 1e-13);
  add("curvature_split", 2e-6);
  add("bianchi", 1e-6);
  add("commutator_curvature", 1e-6);

  for (const Vec3& x : points) {
    std::size_t i = 0;
    auto update = [&](double v) {
      Check& c = checks[i++];
      c.max_residual = std::max(c.max_residual, std::isnan(v) ? INFINITY : v);
    };
    const Mat3 b = magnetic_field(a, x);
    if (field.closed_form_b)
      update(max_abs_diff(b, (*field.closed_form_b)(x)));
    update(gauss_residual(a, b_field, x).max_abs());
    update(ampere_residual(a, x).max_abs());
    update(compatibility_residual(g, gamma, x).max_abs());
    const Connection3 conn = transcribe_connection(a, h, x);
    update(max_abs_diff(reconstruct_connection(g, torsion(conn), x), conn));
    const Mat3 gx = g(x);
    const Tensor3R3 kl = lowered_first(
        contorsion_from_torsion(torsion(conn), gx), gx);
    double anti = 0.0;
    for (int p = 0; p < kDim; ++p)
      for (int q = 0; q < kDim; ++q)
        for (int j = 0; j < kDim; ++j)
          anti = std::max(anti, std::fabs(kl(p, q, j) + kl(q, p, j)));
    update(anti / std::max(1.0, kl.max_abs()));
    const CurvatureTensor r = curvature(gamma, x);
    update(max_abs_diff(r, curvature_split(g, kfield, x).total));
    update(bianchi_residual(h, a, x).max_abs());
    const Mat3 frame = h(x);
    update(max_abs_diff(commutator_curvature(a, h, x),
                        transmute_curvature(curvature_from_magnetic(b), frame,
                                            inverse(frame))));
  }

  Json report;
  report["command"] = "verify";
  report["field"] = field.name;
  report["dreibein"] = cfg.section("dreibein").str("name", "identity");
  report["sampling"] = {{"seed", sp.seed},
                        {"count", sp.count},
                        {"r_min", sp.r_min},
                        {"r_max", sp.r_max}};

  if (cfg.has("medium")) {
    const Section ms = cfg.section("medium");
    const OpticalMedium medium = medium_from(ms);
    const std::string source = ms.str("metric", "closed_form");
    MetricField mg;
    if (source == "closed_form")
      mg = medium.metric();
    else if (source == "embedding")
      mg = embedding_metric(medium.kind());
    else
      throw ConfigError("unknown medium.metric '" + source + "'");
    mg = mg.with_step(o.step.value_or(ms.num("step", 1e-3)));
    const ConnectionField lc = christoffel_field(mg);
    const int count = static_cast<int>(ms.integer("count", 50));
    const std::vector<Vec3> mp = sample_shell(
        sp.seed, count, ms.num("r_min", 0.2), ms.num("r_max", 1.5));
    Check ca{"curved_ampere", 0.0, tolerance(tols, o, "curved_ampere", 1e-6)};
    double smin = INFINITY, smax = -INFINITY;
    for (const Vec3& x : mp) {
      ca.max_residual = std::max(
          ca.max_residual, curved_ampere_residual(mg, lc, x).max_abs());
      const double s = scalar_curvature(mg, x);
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
    const double mean = 0.5 * (smin + smax);
    Check spread{"scalar_curvature_spread",
                 (smax - smin) / std::max(std::fabs(mean), 1e-300),
                 tolerance(tols, o, "scalar_curvature_spread", 1e-5)};
    checks.push_back(ca);
    checks.push_back(spread);
    report["medium"] = {{"name", medium.name()},
                        {"metric", source},
                        {"samples", count},
                        {"scalar_curvature_min", smin},
                        {"scalar_curvature_max", smax}};
  }

  report["checks"] = checks_json(checks);

  const AnsatzDiscrepancy d = ansatz_discrepancy(2.0, vec3(1, 0, 0));
  report["ansatz_discrepancy"] = {
      {"q", d.q},
      {"r", d.r},
      {"reference_isotropic", d.reference_isotropic},
      {"reference_radial", d.reference_radial},
      {"oracle_isotropic", d.oracle_isotropic},
      {"oracle_radial", d.oracle_radial},
      {"max_abs_deviation", d.max_abs_deviation},
      {"note",
       "reference closed form vs magnetic field of the ansatz potential; "
       "the oracle is the direct evaluation"}};

  const bool pass = std::all_of(checks.begin(), checks.end(),
                                [](const Check& c) { return c.pass(); });
  report["pass"] = pass;
  ensure_dir(ctx);
  emit_json(report, ctx, "verify_report.json", out);
  return pass ? kPass : kResidualFail;
}

int cmd_ansatz(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const Section s = cfg.section("ansatz");
  ScanOptions opt;
  opt.q_min = s.num("q_min", opt.q_min);
  opt.q_max = s.num("q_max", opt.q_max);
  opt.q_step = s.num("q_step", opt.q_step);
  opt.radii = s.list("radii", opt.radii);
  opt.root_tolerance = s.num("root_tolerance", opt.root_tolerance);
  if (ctx.overrides.tol) opt.root_tolerance = *ctx.overrides.tol;

  std::vector<CandidateFamily> families = candidate_families();
  const std::string only = s.str("families", "all");
  if (only == "power_law") {
    families.resize(1);
  } else if (only != "all") {
    throw ConfigError("ansatz.families must be 'all' or 'power_law'");
  }

  std::vector<ScanRow> rows;
  try {
    rows = ansatz_scan(families, opt);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::ostringstream csv;
  CsvWriter w(csv);
  std::vector<std::string> header{"profile", "q"};
  for (double r : opt.radii) header.push_back("residual_r" + fmt(r));
  header.push_back("defined");
  header.push_back("root");
  w.row(header);
  Json roots = Json::object();
  for (const ScanRow& row : rows) {
    std::vector<std::string> cells{row.profile, fmt(row.q)};
    for (double v : row.residuals) cells.push_back(fmt(v));
    cells.push_back(row.defined ? "true" : "false");
    cells.push_back(row.root ? "true" : "false");
    w.row(cells);
    if (!roots.contains(row.profile)) roots[row.profile] = Json::array();
    if (row.root) roots[row.profile].push_back(row.q);
  }

  Json summary;
  summary["command"] = "ansatz";
  summary["q_min"] = opt.q_min;
  summary["q_max"] = opt.q_max;
  summary["q_step"] = opt.q_step;
  summary["radii"] = opt.radii;
  summary["rows"] = rows.size();
  summary["roots"] = roots;
  ensure_dir(ctx);
  if (!ctx.out_dir.empty()) {
    open_out(ctx, "ansatz_scan.csv") << csv.str();
    emit_json(summary, ctx, "ansatz_summary.json", out);
  } else {
    out << csv.str();
  }
  return kPass;
}

namespace {

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  CsvWriter w(os);
  w.row({"s", "x1", "x2", "x3", "v1", "v2", "v3", "I1", "I2", "I3"});
  for (const Sample& smp : t.samples) {
    const PhaseState& y = smp.state;
    w.row({fmt(smp.s), fmt(y.x(0)), fmt(y.x(1)), fmt(y.x(2)), fmt(y.v(0)),
           fmt(y.v(1)), fmt(y.v(2)), fmt(y.I(0)), fmt(y.I(1)), fmt(y.I(2))});
  }
}

std::string ray_file(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "ray_%03d.csv", i);
  return buf;
}

int trace_rays(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const Section ts = cfg.section("trace");
  const OpticalMedium medium = medium_from(cfg.require("medium"));
  const Vec3 x0 = ts.vec("x0", vec3(1, 0, 0));
  const int count = static_cast<int>(ts.integer("rays", 8));
  if (count <= 0) throw ConfigError("trace.rays must be positive");
  const double step = ctx.overrides.step.value_or(ts.num("step", 1e-3));
  if (!(step > 0.0)) throw ConfigError("step must be positive");
  const double span = ts.num("span", 10.0);
  const int every = static_cast<int>(ts.integer("record_every", 10));
  std::uint64_t seed = static_cast<std::uint64_t>(ts.integer("seed", 1));
  if (ctx.overrides.seed) seed = *ctx.overrides.seed;

  if (!medium.locus().empty() &&
      medium.locus().distance(x0) < kClearanceSteps * step)
    throw DomainError("launch point on or next to the singular locus");
  if (!medium.inside(x0))
    throw DomainError("launch point outside the medium's region");

  const BundleResult bundle =
      trace_bundle(medium, x0, count, seed, span, step, every);
  const MetricField g = medium.metric();

  ensure_dir(ctx);
  Json rays = Json::array();
  double max_speed_drift = 0.0;
  double max_r = 0.0;
  bool any_exit = false;
  for (int i = 0; i < count; ++i) {
    const Trajectory& t = bundle.rays[i];
    double drift = 0.0, rmax = 0.0;
    for (const Sample& smp : t.samples) {
      const Vec3 gv = matvec(g(smp.state.x), smp.state.v);
      drift = std::max(drift, std::fabs(dot(gv, smp.state.v) - 1.0));
      rmax = std::max(rmax, norm(smp.state.x));
    }
    max_speed_drift = std::max(max_speed_drift, drift);
    max_r = std::max(max_r, rmax);
    any_exit = any_exit || t.reason == Termination::domain_exit;
    rays.push_back({{"index", i},
                    {"direction", vec_json(bundle.directions[i])},
                    {"termination", to_string(t.reason)},
                    {"final_s", t.final_parameter()},
                    {"final_x", vec_json(t.final_state().x)},
                    {"max_r", rmax},
                    {"speed_drift", drift}});
    if (!ctx.out_dir.empty()) {
      std::ofstream f = open_out(ctx, ray_file(i));
      write_trajectory_csv(f, t);
    }
  }

  Json summary;
  summary["command"] = "trace";
  summary["mode"] = "ray";
  summary["medium"] = medium.name();
  summary["x0"] = vec_json(x0);
  summary["rays"] = count;
  summary["span"] = span;
  summary["step"] = step;
  summary["seed"] = seed;
  summary["max_speed_drift"] = max_speed_drift;
  if (medium.kind() == MediumKind::spherical &&
      medium.name() == "spherical" && norm(x0) > 0.0) {
    const Vec3 image = fisheye_image_point(x0);
    double spread = 0.0;
    bool complete = true;
    for (const Trajectory& t : bundle.rays) {
      complete = complete && t.reason == Termination::span_complete;
      spread = std::max(spread, norm(t.final_state().x - image));
    }
    summary["focus"] = {{"image_point", vec_json(image)},
                        {"all_span_complete", complete},
                        {"max_distance_to_image", spread}};
  }
  if (medium.bounding_radius()) {
    const double limit = *medium.bounding_radius() - kClearanceSteps * step;
    summary["trapping"] = {{"bounding_radius", *medium.bounding_radius()},
                           {"max_r", max_r},
                           {"limit", limit},
                           {"any_domain_exit", any_exit},
                           {"trapped", !any_exit && max_r < limit}};
  }
  summary["trajectories"] = rays;
  emit_json(summary, ctx, "trace_summary.json", out);
  return kPass;
}

int trace_wong(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const Section ts = cfg.section("trace");
  const FieldSpec field = field_from(cfg.require("field"), ctx.overrides);
  const Dreibein h = dreibein_from(cfg.section("dreibein"), ctx.overrides);
  const WongSystem sys{field.potential, h,
                       force_law_from(ts.str("law", "lorentz"))};
  const double step = ctx.overrides.step.value_or(ts.num("step", 1e-3));
  if (!(step > 0.0)) throw ConfigError("step must be positive");
  const double span = ts.num("span", 10.0);
  const int every = static_cast<int>(ts.integer("record_every", 10));
  const PhaseState start{ts.vec("x0", vec3(0.3, 0, 0)),
                         ts.vec("v0", vec3(0, 1, 0)),
                         ts.vec("I0", vec3(0.3, 0.5, -0.4))};
  const SingularLocus locus = wong_locus(sys);
  if (!locus.empty() && locus.distance(start.x) < kClearanceSteps * step)
    throw DomainError("launch point on or next to the singular locus");

  const Trajectory t = integrate_wong(sys, start, span, step, every);
  const ConservationReport rep = conserved_report(sys, t);
  ensure_dir(ctx);
  if (!ctx.out_dir.empty()) {
    std::ofstream f = open_out(ctx, "wong.csv");
    write_trajectory_csv(f, t);
  }
  Json summary;
  summary["command"] = "trace";
  summary["mode"] = "wong";
  summary["field"] = field.name;
  summary["law"] = to_string(sys.law);
  summary["span"] = span;
  summary["step"] = step;
  summary["termination"] = to_string(t.reason);
  summary["final_s"] = t.final_parameter();
  summary["final_x"] = vec_json(t.final_state().x);
  summary["drift"] = {{"color_norm2", rep.color_norm2},
                      {"speed2", rep.speed2},
                      {"alignment", rep.alignment}};
  emit_json(summary, ctx, "trace_summary.json", out);
  return kPass;
}

}  // namespace

int cmd_trace(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const std::string mode = cfg.section("trace").str("mode", "ray");
  if (mode == "ray") return trace_rays(cfg, ctx, out);
  if (mode == "wong") return trace_wong(cfg, ctx, out);
  throw ConfigError("trace.mode must be 'ray' or 'wong'");
}

int cmd_media(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const Section ms = cfg.require("medium");
  const OpticalMedium medium = medium_from(ms);
  SamplingSpec sp = sampling_from(cfg.section("sampling"), ctx.overrides);
  if (!cfg.section("sampling").has("r_max") && medium.bounding_radius())
    sp.r_max = std::min(sp.r_max, 0.75 * *medium.bounding_radius());
  sp.r_min = std::min(sp.r_min, sp.r_max);
  const MetricField g =
      medium.metric().with_step(ctx.overrides.step.value_or(1e-3));
  const bool has_embedding = medium.kind() == MediumKind::spherical ||
                             medium.kind() == MediumKind::hyperbolic;
  const bool embedding_scale = medium.name() == "spherical" ||
                               medium.name() == "hyperbolic";
  std::optional<MetricField> emb;
  if (has_embedding && embedding_scale)
    emb = embedding_metric(medium.kind());
  const ColorVectorField bfield = associated_magnetic_field(medium);

  std::ostringstream csv;
  CsvWriter w(csv);
  w.row({"x1", "x2", "x3", "r", "n", "scalar_curvature", "energy_density",
         "embedding_metric_deviation"});
  double smin = INFINITY, smax = -INFINITY, emin = INFINITY, emax = -INFINITY;
  double emb_dev = 0.0;
  for (const Vec3& x : sample_shell(sp.seed, sp.count, sp.r_min, sp.r_max)) {
    const double s = scalar_curvature(g, x);
    const double e = energy_density(Mat3{}, bfield(x));
    const double dev = emb ? max_abs_diff((*emb)(x), g(x)) : 0.0;
    smin = std::min(smin, s);
    smax = std::max(smax, s);
    emin = std::min(emin, e);
    emax = std::max(emax, e);
    emb_dev = std::max(emb_dev, dev);
    w.row({fmt(x(0)), fmt(x(1)), fmt(x(2)), fmt(norm(x)),
           fmt(medium.index(x)), fmt(s), fmt(e), emb ? fmt(dev) : ""});
  }
  Json summary;
  summary["command"] = "media";
  summary["medium"] = medium.name();
  summary["kind"] = to_string(medium.kind());
  if (medium.bounding_radius())
    summary["bounding_radius"] = *medium.bounding_radius();
  summary["samples"] = sp.count;
  summary["scalar_curvature"] = {
      {"min", smin},
      {"max", smax},
      {"relative_spread",
       (smax - smin) / std::max(std::fabs(0.5 * (smin + smax)), 1e-300)}};
  summary["energy_density"] = {{"min", emin}, {"max", emax}};
  if (emb) summary["embedding_metric_deviation"] = emb_dev;
  ensure_dir(ctx);
  if (!ctx.out_dir.empty()) open_out(ctx, "media.csv") << csv.str();
  emit_json(summary, ctx, "media_summary.json", out);
  return kPass;
}

int cmd_copies(const Config& cfg, const RunContext& ctx, std::ostream& out) {
  const FieldSpec first = field_from(cfg.require("field"), ctx.overrides);
  const FieldSpec second = field_from(cfg.require("copy"), ctx.overrides);
  const Dreibein h = dreibein_from(cfg.section("dreibein"), ctx.overrides);
  const Section ss = cfg.section("sampling");
  SamplingSpec sp = sampling_from(ss, ctx.overrides);
  if (!ss.has("count")) sp.count = 10;
  const double tol =
      ctx.overrides.tol.value_or(cfg.section("tolerances").num("copies", 1e-8));
  const std::vector<Vec3> points =
      sample_shell(sp.seed, sp.count, sp.r_min, sp.r_max);
  const CopyReport rep = copy_report(first.potential, second.potential, h,
                                     points, tol);
  const Vec3 probe = points.front();
  const TorsionTensor t1 = torsion_fingerprint(first.potential, h, {probe})[0];
  const TorsionTensor t2 = torsion_fingerprint(second.potential, h, {probe})[0];
  auto flat = [](const TorsionTensor& t) {
    return std::vector<double>(t.data().begin(), t.data().end());
  };
  Json report;
  report["command"] = "copies";
  report["first"] = first.name;
  report["second"] = second.name;
  report["dreibein"] = cfg.section("dreibein").str("name", "identity");
  report["samples"] = rep.samples;
  report["tolerance"] = tol;
  report["potential_difference"] = rep.potential_difference;
  report["curvature_deviation"] = rep.curvature_deviation;
  report["torsion_difference"] = rep.torsion_difference;
  report["metric_residual"] = rep.metric_residual;
  report["contorsion_m_residual"] = rep.contorsion_m_residual;
  report["m_difference"] = rep.m_difference;
  report["curvature_equal"] = rep.curvature_equal;
  report["are_copies"] = rep.are_copies;
  report["verdict"] = rep.are_copies         ? "copies"
                      : rep.curvature_equal ? "identical potentials"
                                            : "not copies";
  report["fingerprint"] = {{"x", vec_json(probe)},
                           {"layout", "T[k][i][j] = T^k_ij, row-major"},
                           {"first", flat(t1)},
                           {"second", flat(t2)}};
  ensure_dir(ctx);
  emit_json(report, ctx, "copies_report.json", out);
  return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ymoptics: Yang-Mills fields as optical media"};
  app.require_subcommand(1);
  std::string config_path;
  RunContext ctx;
  std::uint64_t seed = 0;
  double tol = 0.0, step = 0.0;

  app.add_option("--config", config_path, "INI configuration file");
  app.add_option("--out", ctx.out_dir, "output directory for CSV/JSON");
  auto* seed_opt = app.add_option("--seed", seed, "sampling seed");
  auto* tol_opt = app.add_option("--tol", tol, "override every tolerance");
  auto* step_opt = app.add_option("--step", step, "finite-difference / RK4 step");

  auto* verify = app.add_subcommand("verify", "identity and field-equation sweep");
  auto* ansatz = app.add_subcommand("ansatz", "radial ansatz scan (CSV)");
  auto* trace = app.add_subcommand("trace", "ray bundles or a Wong trajectory");
  auto* media = app.add_subcommand("media", "inspect an optical medium");
  auto* copies = app.add_subcommand("copies", "copy report for two potentials");
  for (auto* sub : {verify, ansatz, trace, media, copies})
    sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  if (*seed_opt) ctx.overrides.seed = seed;
  if (*tol_opt) ctx.overrides.tol = tol;
  if (*step_opt) {
    if (!(step > 0.0)) {
      err << "error: --step must be positive\n";
      return kConfigError;
    }
    ctx.overrides.step = step;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);
    else if (!ansatz->parsed())
      throw ConfigError("--config is required for this command");
    if (verify->parsed()) return cmd_verify(cfg, ctx, out);
    if (ansatz->parsed()) return cmd_ansatz(cfg, ctx, out);
    if (trace->parsed()) return cmd_trace(cfg, ctx, out);
    if (media->parsed()) return cmd_media(cfg, ctx, out);
    return cmd_copies(cfg, ctx, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const SingularMatrixError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const IntegrationError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace ymo::cli
