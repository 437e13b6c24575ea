#include "henig/cli.hpp"
#include "henig/problem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace henig::cli {

namespace {

struct Flags {
  std::string problem, fixture, norm, eps, x0, out, format = "table";
  std::optional<double> mesh, tol, delta, h;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_max;
};

struct Resolved {
  ProblemSpec spec;
  double mesh = 1e-3, tol = kMembershipTol;
  std::uint64_t seed = 42;
  std::optional<double> h;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json vec_json(const Eigen::VectorXd& x) { return Json(std::vector<double>(x.data(), x.data() + x.size())); }

// JSON has no infinity; a singleton cloud has no other point to violate a certificate.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InputError(std::string("--") + what + ": '" + cell + "' is not a number");
    }
  }
  if (v.empty()) throw InputError(std::string("--") + what + ": empty list");
  return v;
}

Resolved resolve(const Flags& f) {
  Resolved r;
  if (!f.problem.empty() && !f.fixture.empty()) throw InputError("give either a problem file or --fixture, not both");
  if (!f.fixture.empty()) {
    r.spec = make_fixture(f.fixture, f.h.value_or(0.01));
  } else if (!f.problem.empty()) {
    r.spec = load_problem(f.problem);
  } else {
    throw InputError("no problem file or --fixture given");
  }
  if (!f.norm.empty()) {
    r.spec.space = Space(r.spec.space.dim, parse_norm(f.norm));
    // re-run the cone checks under the new norm
    r.spec = parse_problem(serialize(r.spec), r.spec.base_dir);
  }
  const Parameters& p = r.spec.params;
  r.mesh = f.mesh.value_or(p.mesh.value_or(r.spec.space.dim == 2 ? 1e-3 : 5e-2));
  r.tol = f.tol.value_or(p.tol.value_or(kMembershipTol));
  r.seed = f.seed.value_or(p.seed.value_or(42));
  if (!(r.mesh > 0 && r.mesh < 1)) throw InputError("mesh must lie in (0,1)");
  if (!(r.tol >= 0)) throw InputError("tol must be nonnegative");
  if (f.h && f.fixture.empty()) {
    if (r.spec.set && r.spec.set->kind == SetSpec::Kind::sine_grid) r.spec.set->h = *f.h;
  }
  return r;
}

Json params_json(const Resolved& r) {
  Json j = to_json(r.spec);
  j["resolved"] = {{"mesh", r.mesh}, {"tol", r.tol}, {"seed", r.seed}};
  return j;
}

Json ssp_json(const SspReport& s) {
  Json j = {{"verdict", to_string(s.verdict)},
            {"gap_sampled", s.gap_sampled},
            {"gap_lower_bound", s.gap_lower_bound},
            {"covering_radius", s.covering_radius},
            {"exact", s.exact},
            {"p", vec_json(s.p)},
            {"q", vec_json(s.q)}};
  j["separating_functional"] = s.separating_functional ? vec_json(s.separating_functional->coeffs) : Json(nullptr);
  return j;
}

Json cert_json(const GheCertificate& c) {
  Json j = {{"kind", to_string(c.kind)}, {"eps", c.eps}, {"slack", finite_or_null(c.slack)}};
  if (c.kind == CertKind::bishop_phelps) {
    j["f"] = vec_json(c.f.coeffs);
    j["alpha"] = c.alpha;
  } else {
    Json vs = Json::array();
    for (const auto& v : c.base.vertices) vs.push_back(vec_json(v));
    j["base"] = {{"vertices", vs}, {"delta_B", c.base.delta_B}, {"M", c.base.M}};
  }
  return j;
}

// Flat "key: value" rendering of a report.
void print_table(std::ostream& os, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      print_table(os, v, key);
    } else if (v.is_array() && v.size() > 12) {
      os << key << ": [" << v.size() << " entries]\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
}

class Output {
 public:
  Output(const Flags& f, std::ostream& out) : flags_(f), out_(out) {}

  // Tabular data: to --out if given, else after the report in table format, else inline in JSON.
  void emit(const Json& report, const std::string& csv, Json rows) {
    Json rep = report;
    if (!flags_.out.empty()) {
      rep["table_file"] = flags_.out;
      write_file(csv.empty() ? rep.dump(2) + "\n" : csv);
    } else if (flags_.format == "json" && !rows.is_null()) {
      rep["result"]["rows"] = std::move(rows);
    }
    if (flags_.format == "json") {
      out_ << rep.dump(2) << "\n";
    } else {
      print_table(out_, rep);
      if (flags_.out.empty() && !csv.empty()) out_ << "\n" << csv;
    }
  }

  void write_file(const std::string& text) const {
    std::ofstream f(flags_.out);
    if (!f) throw InputError("cannot write '" + flags_.out + "'");
    f << text;
  }

 private:
  const Flags& flags_;
  std::ostream& out_;
};

Json base_report(const std::string& command, const std::vector<std::string>& args, const Resolved& r) {
  return {{"command", command}, {"args", args}, {"version", kVersion}, {"parameters", params_json(r)}};
}

PointCloud need_set(const Resolved& r) {
  if (!r.spec.set) throw InputError("problem has no set");
  return load_set(r.spec.space, *r.spec.set, r.spec.base_dir);
}

Cone need_polyhedral(const Resolved& r) {
  Cone c = build_cone(r.spec.space, r.spec.cone);
  if (!c.as<Polyhedral>()) throw InputError("this command needs a polyhedral cone");
  return c;
}

void warn_if_not_pointed(const Space& s, const Cone& C, std::ostream& err) {
  if (!C.as<Polyhedral>()) return;
  if (!bounded_base(s, C)) err << "warning: the cone is not pointed; Min labels are still computed\n";
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_ssp(const Flags& f, const std::vector<std::string>& args, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(f);
  if (!r.spec.against) throw InputError("ssp needs a second cone ('against')");
  const Space& s = r.spec.space;
  OrderCone C = build_order_cone(s, r.spec.cone, r.mesh, r.seed);
  OrderCone K = build_order_cone(s, *r.spec.against, r.mesh, r.seed);
  SspReport rep = ssp_gap(s, C, K, r.mesh, r.seed);
  Json j = base_report("ssp", args, r);
  j["result"] = ssp_json(rep);
  j["wall_time_s"] = elapsed(t0);
  Output(f, out).emit(j, "", nullptr);
  switch (rep.verdict) {
    case Verdict::holds_certified: return 0;
    case Verdict::fails_certified: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 5;
}

int cmd_classify(const Flags& f, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(f);
  const Space& s = r.spec.space;
  PointCloud A = need_set(r);
  Cone C = build_cone(s, r.spec.cone);
  warn_if_not_pointed(s, C, err);
  std::vector<PointLabel> labels;
  std::vector<double> ladder;
  if (C.as<Polyhedral>() && bounded_base(s, C)) {
    if (!f.eps.empty()) ladder = parse_list(f.eps, "eps");
    else if (r.spec.params.eps_ladder) ladder = *r.spec.params.eps_ladder;
    else ladder = default_eps_ladder(normalize_base(s, C).delta_B);
    std::sort(ladder.rbegin(), ladder.rend());
    labels = classify_cloud(s, A, C, ladder, r.tol, std::max(r.mesh, 0.05), r.seed);
  } else {
    labels = min_set(s, A, C, r.tol);
  }

  std::ostringstream csv;
  for (int i = 1; i <= s.dim; ++i) csv << "x" << i << ",";
  csv << "label,cert_kind,cert_eps,cert_alpha,slack\n";
  Json rows = Json::array();
  size_t n_min = 0, n_ghe = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& L = labels[i];
    if (L.label != EffLabel::dominated) ++n_min;
    if (L.label == EffLabel::min_and_ghe) ++n_ghe;
    for (Eigen::Index k = 0; k < s.dim; ++k) csv << fmt(A.points[i][k]) << ",";
    csv << to_string(L.label) << ",";
    Json row = {{"x", vec_json(A.points[i])}, {"label", to_string(L.label)}};
    if (L.cert) {
      csv << to_string(L.cert->kind) << "," << fmt(L.cert->eps) << ","
          << (L.cert->kind == CertKind::bishop_phelps ? fmt(L.cert->alpha) : "") << ","
          << (std::isfinite(L.cert->slack) ? fmt(L.cert->slack) : "inf") << "\n";
      row["certificate"] = cert_json(*L.cert);
    } else {
      csv << ",,,\n";
    }
    if (L.dominator) row["dominator"] = *L.dominator;
    rows.push_back(row);
  }
  Json j = base_report("classify", args, r);
  j["result"] = {{"points", A.points.size()}, {"min", n_min}, {"ghe", n_ghe}, {"eps_ladder", ladder}};
  j["wall_time_s"] = elapsed(t0);
  Output(f, out).emit(j, csv.str(), rows);
  return 0;
}

int cmd_scalarize(const Flags& f, const std::vector<std::string>& args, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(f);
  const Space& s = r.spec.space;
  PointCloud A = need_set(r);
  Cone C = need_polyhedral(r);
  double delta = f.delta.value_or(r.spec.params.delta.value_or(0.5));
  Point x0 = r.spec.params.x0.value_or(A.points.front());
  if (!f.x0.empty()) {
    auto v = parse_list(f.x0, "x0");
    if (static_cast<int>(v.size()) != s.dim) throw InputError("--x0 has the wrong dimension");
    x0 = Eigen::Map<Point>(v.data(), s.dim);
  }
  if (!(delta > 0 && delta < 1)) throw InputError("delta must lie in (0,1)");
  const double wmesh = std::max(r.mesh, 0.05);
  Witness w;
  Json wsrc;
  if (r.spec.params.witness) {
    w.f = r.spec.params.witness->f;
    w.alpha = w.delta1 = w.delta2 = r.spec.params.witness->alpha;
    wsrc = "given";
  } else {
    HenigDilation H(s, normalize_base(s, C), delta);
    SspReport rep = ssp_gap(s, C, H, r.mesh, r.seed);
    if (rep.verdict != Verdict::holds_certified) throw PreconditionError("SSP for (C, C_(B,delta)) is not certified");
    WitnessOptions wo;
    wo.mesh = wmesh;
    wo.seed = r.seed;
    auto found = find_witness(s, C, H, rep, wo);
    if (!found) throw PreconditionError("no witness found for (C, C_(B,delta))");
    w = *found;
    wsrc = "found";
  }
  auto [x1, cert] = scalarize_section(s, A, x0, C, delta, w, r.tol, wmesh, r.seed);
  HenigDilation H(s, normalize_base(s, C), delta);
  bool inside = henig_membership(s, H, x0 - x1, r.tol);
  Json j = base_report("scalarize", args, r);
  j["result"] = {{"x0", vec_json(x0)},
                 {"delta", delta},
                 {"x1", vec_json(x1)},
                 {"in_section", inside},
                 {"witness", {{"source", wsrc}, {"f", vec_json(w.f.coeffs)}, {"alpha", w.alpha},
                              {"delta1", w.delta1}, {"delta2", w.delta2}}},
                 {"certificate", cert_json(cert)},
                 {"recheck_slack", finite_or_null(certificate_slack(s, A, x1, cert))}};
  j["wall_time_s"] = elapsed(t0);
  Output(f, out).emit(j, "", nullptr);
  return 0;
}

int cmd_shrink(const Flags& f, const std::vector<std::string>& args, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(f);
  const Space& s = r.spec.space;
  PointCloud A = need_set(r);
  Cone C = need_polyhedral(r);
  double eps = !f.eps.empty() ? parse_list(f.eps, "eps").front() : r.spec.params.eps.value_or(0.5);
  int n_max = f.n_max.value_or(r.spec.params.n_max.value_or(kDefaultNMax));
  Point xbar = r.spec.params.x0.value_or(Point::Zero(s.dim));
  if (!f.x0.empty()) {
    auto v = parse_list(f.x0, "x0");
    if (static_cast<int>(v.size()) != s.dim) throw InputError("--x0 has the wrong dimension");
    xbar = Eigen::Map<Point>(v.data(), s.dim);
  }
  PointCloud T = A;
  for (auto& a : T.points) a -= xbar;
  ShrinkReport rep = section_shrink(s, T, C, eps, n_max, r.tol, std::max(r.mesh, 0.05), r.seed);

  std::ostringstream csv;
  csv << "n,max_norm\n";
  for (size_t i = 0; i < rep.max_norm_in_section.size(); ++i)
    csv << i + 1 << "," << fmt(rep.max_norm_in_section[i]) << "\n";
  Json j = base_report("shrink", args, r);
  j["result"] = {{"xbar", vec_json(xbar)},
                 {"eps", eps},
                 {"n_max", n_max},
                 {"n_eps", rep.n_eps ? Json(*rep.n_eps) : Json(nullptr)},
                 {"max_norm_in_section", rep.max_norm_in_section}};
  j["wall_time_s"] = elapsed(t0);
  Output(f, out).emit(j, csv.str(), nullptr);
  return rep.n_eps ? 0 : 2;
}

int cmd_density(const Flags& f, const std::vector<std::string>& args, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(f);
  const Space& s = r.spec.space;
  PointCloud A = need_set(r);
  Cone C = need_polyhedral(r);
  std::vector<double> eps_list;
  if (!f.eps.empty()) eps_list = parse_list(f.eps, "eps");
  else if (r.spec.params.eps_list) eps_list = *r.spec.params.eps_list;
  else if (r.spec.params.eps) eps_list = {*r.spec.params.eps};
  ApproxOptions opt;
  opt.delta = f.delta.value_or(r.spec.params.delta.value_or(0.5));
  opt.tol = r.tol;
  opt.n_max = f.n_max.value_or(r.spec.params.n_max.value_or(kDefaultNMax));
  opt.mesh = std::max(r.mesh, 0.05);
  opt.seed = r.seed;
  DensityTable t = abb_experiment(s, A, C, eps_list, opt);

  std::ostringstream csv;
  for (int i = 1; i <= s.dim; ++i) csv << "xbar" << i << ",";
  csv << "eps,";
  for (int i = 1; i <= s.dim; ++i) csv << "x_eps" << i << ",";
  csv << "distance,cert_kind,status\n";
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    for (Eigen::Index k = 0; k < s.dim; ++k) csv << fmt(row.xbar[k]) << ",";
    csv << fmt(row.eps) << ",";
    const LocalResult& lr = row.result;
    for (Eigen::Index k = 0; k < s.dim; ++k) csv << (lr.x ? fmt((*lr.x)[k]) : "") << ",";
    csv << (lr.x ? fmt(lr.distance) : "") << "," << (lr.cert ? to_string(lr.cert->kind) : "") << ","
        << (lr.x ? "ok" : "failed:" + lr.failed_stage) << "\n";
    Json jr = {{"xbar", vec_json(row.xbar)}, {"eps", row.eps}, {"n_eps", lr.n_eps}, {"m", lr.m}};
    if (lr.x) {
      jr["x_eps"] = vec_json(*lr.x);
      jr["distance"] = lr.distance;
      jr["certificate"] = cert_json(*lr.cert);
    } else {
      jr["failed_stage"] = lr.failed_stage;
    }
    rows.push_back(jr);
  }
  Json j = base_report("density", args, r);
  j["result"] = {{"eps_list", eps_list}, {"delta", opt.delta}, {"rows", t.rows.size()},
                 {"successes", t.successes}, {"failures", t.failures}};
  j["wall_time_s"] = elapsed(t0);
  Output(f, out).emit(j, csv.str(), rows);
  return t.failures == 0 ? 0 : 2;
}

int cmd_fixture(const Flags& f, const std::string& name, std::ostream& out) {
  ProblemSpec p = make_fixture(name, f.h.value_or(0.01));
  if (!f.norm.empty()) p.space = Space(p.space.dim, parse_norm(f.norm));
  std::string text = serialize(p);
  if (!f.out.empty()) {
    std::ofstream o(f.out);
    if (!o) throw InputError("cannot write '" + f.out + "'");
    o << text;
  } else {
    out << text;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone separation and proper efficiency toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.set_version_flag("--version", kVersion);
  Flags f;
  std::string fixture_name;

  auto common = [&](CLI::App* c, bool takes_problem) {
    if (takes_problem) {
      c->add_option("problem", f.problem, "problem file (JSON)");
      c->add_option("--fixture", f.fixture, "use a built-in fixture instead of a problem file");
    }
    c->add_option("--norm", f.norm, "override the norm")->check(CLI::IsMember({"l1", "l2", "linf"}));
    c->add_option("--mesh", f.mesh, "sampling mesh");
    c->add_option("--tol", f.tol, "membership tolerance");
    c->add_option("--seed", f.seed, "random seed");
    c->add_option("--eps", f.eps, "eps value or comma-separated list");
    c->add_option("--delta", f.delta, "delta in (0,1)");
    c->add_option("--h", f.h, "fixture grid step");
    c->add_option("--x0", f.x0, "comma-separated point");
    c->add_option("--n-max", f.n_max, "largest n tried by shrink");
    c->add_option("--out", f.out, "output file");
    c->add_option("--format", f.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto* ssp = app.add_subcommand("ssp", "strict separation gap between two cones");
  auto* classify = app.add_subcommand("classify", "Min / GHe labels for a point cloud");
  auto* scalarize = app.add_subcommand("scalarize", "scalarized point of a Henig section");
  auto* shrink = app.add_subcommand("shrink", "section shrinking around a point");
  auto* density = app.add_subcommand("density", "local approximation of every Min point");
  auto* fixture = app.add_subcommand("fixture", "write a built-in problem");
  for (auto* c : {ssp, classify, scalarize, shrink, density}) common(c, true);
  common(fixture, false);
  fixture->add_option("name", fixture_name, "fixture name")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*ssp) return cmd_ssp(f, args, out);
    if (*classify) return cmd_classify(f, args, out, err);
    if (*scalarize) return cmd_scalarize(f, args, out);
    if (*shrink) return cmd_shrink(f, args, out);
    if (*density) return cmd_density(f, args, out);
    if (*fixture) return cmd_fixture(f, fixture_name, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 5;
}

}  // namespace henig::cli
