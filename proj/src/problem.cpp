#include "henig/problem.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace henig {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(path, "expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) bad(path, "unknown field '" + it.key() + "'");
}

const Json& need(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) bad(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

double num(const Json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) bad(path, "expected a finite number");
  return v;
}

std::vector<double> nums(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of numbers");
  std::vector<double> v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(num(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Point vec(const Json& j, const std::string& path, int dim) {
  auto v = nums(j, path);
  if (static_cast<int>(v.size()) != dim)
    bad(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return Eigen::Map<Point>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Json vec_json(const Eigen::VectorXd& x) { return Json(std::vector<double>(x.data(), x.data() + x.size())); }

// Structural check; builds plain cones so their own validation runs too.
void check_cone(const Space& s, const Json& j, const std::string& path, bool order) {
  if (!j.is_object() || j.size() != 1) bad(path, "expected an object with exactly one cone tag");
  const std::string tag = j.begin().key();
  if (tag == "eps_neighborhood" || tag == "henig_dilation") {
    if (!order) bad(path, "'" + tag + "' is only allowed as the second cone");
    const Json& b = j.begin().value();
    only_keys(b, path + "." + tag, {"cone", "eps"});
    check_cone(s, need(b, path + "." + tag, "cone"), path + "." + tag + ".cone", false);
    num(need(b, path + "." + tag, "eps"), path + "." + tag + ".eps");
    return;
  }
  try {
    build_cone(s, j);
  } catch (const PreconditionError& e) {
    bad(path, e.what());
  } catch (const InputError& e) {
    std::string m = e.what();
    if (m.rfind(path, 0) == 0) throw;
    bad(path, m);
  }
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

SetSpec parse_set(const Space& s, const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("set", "expected exactly one of points, file, fixture, sine_grid");
  const std::string tag = j.begin().key();
  const Json& v = j.begin().value();
  SetSpec out;
  if (tag == "points") {
    if (!v.is_array()) bad("set.points", "expected an array of points");
    for (size_t i = 0; i < v.size(); ++i) out.points.push_back(vec(v[i], "set.points[" + std::to_string(i) + "]", s.dim));
  } else if (tag == "file") {
    if (!v.is_string()) bad("set.file", "expected a path");
    out.kind = SetSpec::Kind::file;
    out.file = v.get<std::string>();
  } else if (tag == "fixture") {
    if (!v.is_string()) bad("set.fixture", "expected a fixture name");
    ProblemSpec f = make_fixture(v.get<std::string>());
    if (!f.set) bad("set.fixture", "fixture '" + v.get<std::string>() + "' has no point set");
    out = *f.set;
  } else if (tag == "sine_grid") {
    only_keys(v, "set.sine_grid", {"h", "y_top"});
    out.kind = SetSpec::Kind::sine_grid;
    out.h = num(need(v, "set.sine_grid", "h"), "set.sine_grid.h");
    out.y_top = num(need(v, "set.sine_grid", "y_top"), "set.sine_grid.y_top");
    if (!(out.h > 0 && out.h <= 1)) bad("set.sine_grid.h", "expected 0 < h <= 1");
    if (s.dim != 2) bad("set.sine_grid", "needs dim 2");
  } else {
    bad("set", "unknown set kind '" + tag + "'");
  }
  return out;
}

Parameters parse_params(const Space& s, const Json& j) {
  only_keys(j, "parameters",
            {"mesh", "tol", "eps", "delta", "h", "seed", "eps_ladder", "eps_list", "n_max", "x0", "witness"});
  Parameters p;
  auto opt_num = [&](const char* k, std::optional<double>& dst) {
    if (j.contains(k)) dst = num(j.at(k), std::string("parameters.") + k);
  };
  opt_num("mesh", p.mesh);
  opt_num("tol", p.tol);
  opt_num("eps", p.eps);
  opt_num("delta", p.delta);
  opt_num("h", p.h);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("parameters.seed", "expected a nonnegative integer");
    p.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("n_max")) {
    if (!j.at("n_max").is_number_integer() || j.at("n_max").get<long long>() < 1)
      bad("parameters.n_max", "expected a positive integer");
    p.n_max = j.at("n_max").get<int>();
  }
  if (j.contains("eps_ladder")) p.eps_ladder = nums(j.at("eps_ladder"), "parameters.eps_ladder");
  if (j.contains("eps_list")) p.eps_list = nums(j.at("eps_list"), "parameters.eps_list");
  if (j.contains("x0")) p.x0 = vec(j.at("x0"), "parameters.x0", s.dim);
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    only_keys(w, "parameters.witness", {"f", "alpha"});
    WitnessSpec ws;
    ws.f = Functional(vec(need(w, "parameters.witness", "f"), "parameters.witness.f", s.dim));
    ws.alpha = num(need(w, "parameters.witness", "alpha"), "parameters.witness.alpha");
    p.witness = ws;
  }
  return p;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text, const std::string& base_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw InputError("parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                     (pos == std::string::npos ? msg : msg.substr(pos)));
  }
  only_keys(j, "problem", {"space", "cone", "against", "set", "parameters"});
  ProblemSpec p;
  p.base_dir = base_dir;
  const Json& sp = need(j, "problem", "space");
  only_keys(sp, "space", {"dim", "norm"});
  const Json& dim = need(sp, "space", "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 64)
    bad("space.dim", "expected an integer in [1, 64]");
  const Json& nm = need(sp, "space", "norm");
  if (!nm.is_string()) bad("space.norm", "expected one of l1, l2, linf");
  Norm norm;
  try {
    norm = parse_norm(nm.get<std::string>());
  } catch (const InputError& e) {
    bad("space.norm", e.what());
  }
  p.space = Space(dim.get<int>(), norm);
  p.cone = need(j, "problem", "cone");
  check_cone(p.space, p.cone, "cone", false);
  if (j.contains("against")) {
    p.against = j.at("against");
    check_cone(p.space, *p.against, "against", true);
  }
  if (j.contains("set")) p.set = parse_set(p.space, j.at("set"));
  if (j.contains("parameters")) p.params = parse_params(p.space, j.at("parameters"));
  return p;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  return parse_problem(ss.str(), slash == std::string::npos ? "." : path.substr(0, slash));
}

Json to_json(const ProblemSpec& p) {
  Json j;
  j["space"] = {{"dim", p.space.dim}, {"norm", to_string(p.space.norm)}};
  j["cone"] = p.cone;
  if (p.against) j["against"] = *p.against;
  if (p.set) {
    switch (p.set->kind) {
      case SetSpec::Kind::points: {
        Json pts = Json::array();
        for (const auto& x : p.set->points) pts.push_back(vec_json(x));
        j["set"] = {{"points", pts}};
        break;
      }
      case SetSpec::Kind::file: j["set"] = {{"file", p.set->file}}; break;
      case SetSpec::Kind::sine_grid: j["set"] = {{"sine_grid", {{"h", p.set->h}, {"y_top", p.set->y_top}}}}; break;
    }
  }
  Json q = Json::object();
  const Parameters& a = p.params;
  if (a.mesh) q["mesh"] = *a.mesh;
  if (a.tol) q["tol"] = *a.tol;
  if (a.eps) q["eps"] = *a.eps;
  if (a.delta) q["delta"] = *a.delta;
  if (a.h) q["h"] = *a.h;
  if (a.seed) q["seed"] = *a.seed;
  if (a.eps_ladder) q["eps_ladder"] = *a.eps_ladder;
  if (a.eps_list) q["eps_list"] = *a.eps_list;
  if (a.n_max) q["n_max"] = *a.n_max;
  if (a.x0) q["x0"] = vec_json(*a.x0);
  if (a.witness) q["witness"] = {{"f", vec_json(a.witness->f.coeffs)}, {"alpha", a.witness->alpha}};
  if (!q.empty()) j["parameters"] = q;
  return j;
}

std::string serialize(const ProblemSpec& p) { return to_json(p).dump(2) + "\n"; }

Cone build_cone(const Space& s, const Json& j) {
  if (!j.is_object() || j.size() != 1) throw InputError("cone: expected an object with exactly one cone tag");
  const std::string tag = j.begin().key();
  const Json& v = j.begin().value();
  if (tag == "polyhedral") {
    if (!v.is_array() || v.empty()) bad("cone.polyhedral", "expected a nonempty list of generators");
    Points g;
    for (size_t i = 0; i < v.size(); ++i) g.push_back(vec(v[i], "cone.polyhedral[" + std::to_string(i) + "]", s.dim));
    return Cone::polyhedral(g);
  }
  if (tag == "bishop_phelps" || tag == "sublevel") {
    only_keys(v, "cone." + tag, {"f", "alpha"});
    Functional f(vec(need(v, "cone." + tag, "f"), "cone." + tag + ".f", s.dim));
    double a = num(need(v, "cone." + tag, "alpha"), "cone." + tag + ".alpha");
    return tag == "bishop_phelps" ? Cone::bishop_phelps(s, f, a) : Cone::sublevel(s, f, a);
  }
  if (tag == "negated") return Cone::negated(build_cone(s, v));
  throw InputError("cone: unknown cone kind '" + tag + "'");
}

OrderCone build_order_cone(const Space& s, const Json& j, double mesh, std::uint64_t seed) {
  const std::string tag = j.begin().key();
  if (tag == "eps_neighborhood") {
    const Json& b = j.begin().value();
    return EpsNeighborhood(s, build_cone(s, b.at("cone")), b.at("eps").get<double>(), mesh, seed);
  }
  if (tag == "henig_dilation") {
    const Json& b = j.begin().value();
    return HenigDilation(s, normalize_base(s, build_cone(s, b.at("cone"))), b.at("eps").get<double>());
  }
  return build_cone(s, j);
}

Points read_points_csv(std::istream& in, const std::string& name) {
  Points out;
  std::string line;
  int ln = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        v.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (out.empty() && ln == 1) continue;  // header
      throw InputError(name + ": line " + std::to_string(ln) + ": not a row of numbers");
    }
    if (width == 0) width = v.size();
    if (v.size() != width) throw InputError(name + ": line " + std::to_string(ln) + ": wrong number of columns");
    out.push_back(Eigen::Map<Point>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  return out;
}

PointCloud load_set(const Space& s, const SetSpec& set, const std::string& base_dir) {
  PointCloud A;
  switch (set.kind) {
    case SetSpec::Kind::points:
      A.points = set.points;
      A.label = "inline";
      break;
    case SetSpec::Kind::file: {
      std::string path = !set.file.empty() && set.file[0] == '/' ? set.file : base_dir + "/" + set.file;
      std::ifstream in(path);
      if (!in) throw InputError("cannot open set file '" + path + "'");
      A.points = read_points_csv(in, path);
      A.label = set.file;
      break;
    }
    case SetSpec::Kind::sine_grid: A = sine_grid(set.h, set.y_top); break;
  }
  check_cloud(s, A);
  return A;
}

}  // namespace henig
