#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "lindex/cli.hpp"

namespace lindex::cli {

namespace {

std::string child_path(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child_path(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config " + (path.empty() ? std::string("/") : path) + ": " + what);
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

long long integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

Complex complex_at(const Json& j, const std::string& path) {
  if (j.is_number()) return {number_at(j, path), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {number_at(j[0], child_path(path, 0)), number_at(j[1], child_path(path, 1))};
  }
  fail(path, "expected a number or a [re, im] pair");
}

// Walks one JSON object, remembering which keys were consumed so unknown
// ones can be reported.
class Reader {
public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const Json* take(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string path(const std::string& key) const { return child_path(path_, key); }

  int integer(const std::string& key, int def, long long lo, long long hi) {
    const Json* v = take(key);
    if (!v) return def;
    const long long x = integer_at(*v, path(key));
    if (x < lo || x > hi) {
      fail(path(key), "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    }
    return static_cast<int>(x);
  }

  double number(const std::string& key, double def, bool positive) {
    const Json* v = take(key);
    if (!v) return def;
    const double x = number_at(*v, path(key));
    if (positive && !(x > 0.0)) fail(path(key), "must be positive");
    return x;
  }

  std::string string(const std::string& key, const std::string& def,
                     const std::vector<std::string>& allowed = {}) {
    const Json* v = take(key);
    if (!v) return def;
    if (!v->is_string()) fail(path(key), "expected a string");
    std::string s = v->get<std::string>();
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(path(key), "must be one of " + list);
    }
    return s;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(child_path(path_, it.key()), "unknown key");
    }
  }

private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<double> number_list(const Json& j, const std::string& path, std::optional<std::size_t> size,
                                bool positive, bool nonnegative) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  if (size && j.size() != *size) fail(path, "expected " + std::to_string(*size) + " entries");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double x = number_at(j[i], child_path(path, i));
    if (positive && !(x > 0.0)) fail(child_path(path, i), "must be positive");
    if (nonnegative && x < 0.0) fail(child_path(path, i), "must be nonnegative");
    out.push_back(x);
  }
  return out;
}

std::vector<Complex> point_at(const Json& j, const std::string& path, int arity) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(arity)) {
    fail(path, "expected a point with " + std::to_string(arity) + " coordinates");
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_at(j[i], child_path(path, i)));
  return out;
}

std::vector<std::vector<Complex>> point_list(const Json& j, const std::string& path, int arity) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of points");
  std::vector<std::vector<Complex>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_at(j[i], child_path(path, i), arity));
  return out;
}

std::vector<std::vector<double>> radius_list(const Json& j, const std::string& path, int arity,
                                             bool positive) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of radius vectors");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number_list(j[i], child_path(path, i), static_cast<std::size_t>(arity), positive, true));
  }
  return out;
}

std::vector<double> increasing_positive(const Json& j, const std::string& path) {
  auto v = number_list(j, path, std::nullopt, true, true);
  if (v.empty()) fail(path, "must not be empty");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) fail(child_path(path, i), "values must be strictly increasing");
  }
  return v;
}

PointSet default_set(int n, double radius) {
  PointSet s;
  s.center.assign(static_cast<std::size_t>(n), Complex{});
  s.radius.assign(static_cast<std::size_t>(n), radius);
  s.from.assign(static_cast<std::size_t>(n), Complex{});
  s.to.assign(static_cast<std::size_t>(n), Complex(radius, 0.0));
  return s;
}

PointSet read_point_set(const Json& j, const std::string& path, int n, PointSet s) {
  Reader r(j, path);
  s.kind = r.string("kind", s.kind, {"polydisc", "segment", "points"});
  if (const Json* v = r.take("center")) s.center = point_at(*v, r.path("center"), n);
  if (const Json* v = r.take("radius")) {
    s.radius = number_list(*v, r.path("radius"), static_cast<std::size_t>(n), false, true);
  }
  s.radial = r.integer("radial", s.radial, 2, 4096);
  s.angular = r.integer("angular", s.angular, 2, 4096);
  if (const Json* v = r.take("from")) s.from = point_at(*v, r.path("from"), n);
  if (const Json* v = r.take("to")) s.to = point_at(*v, r.path("to"), n);
  s.count = r.integer("count", s.count, 1, 1'000'000);
  if (const Json* v = r.take("points")) s.points = point_list(*v, r.path("points"), n);
  r.finish();
  if (s.kind == "points" && s.points.empty()) fail(path + "/points", "required for kind \"points\"");
  if (s.kind != "points") s.points.clear();
  return s;
}

std::vector<double> filled(int n, double v) { return std::vector<double>(static_cast<std::size_t>(n), v); }

void check_permutation(const std::vector<int>& p, const std::string& path, int n) {
  std::vector<int> s = p;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < n; ++i) {
    if (s[static_cast<std::size_t>(i)] != i + 1) fail(path, "must list 1..n once each");
  }
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "config syntax error at line " << line << ", column " << col << " (byte " << e.byte
        << "): " << e.what();
    throw ConfigError(msg.str());
  }

  RunConfig c;
  Reader top(doc, "");
  c.arity = top.integer("arity", 1, 1, 9);
  const int n = c.arity;
  const auto nn = static_cast<std::size_t>(n);

  if (const Json* v = top.take("function")) {
    if (!v->is_string() || v->get<std::string>().empty()) fail("/function", "expected a nonempty string");
    c.function = v->get<std::string>();
  }
  c.weights.assign(nn, "1");
  if (const Json* v = top.take("weights")) {
    if (!v->is_array() || v->size() != nn) {
      fail("/weights", "expected " + std::to_string(n) + " weight expressions");
    }
    for (std::size_t i = 0; i < nn; ++i) {
      if (!(*v)[i].is_string()) fail(child_path("/weights", i), "expected a string");
      c.weights[i] = (*v)[i].get<std::string>();
    }
  }
  if (const Json* v = top.take("seed")) {
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
      fail("/seed", "expected a nonnegative integer");
    }
    c.seed = v->get<std::uint64_t>();
  }

  if (const Json* v = top.take("grid")) {
    Reader r(*v, "/grid");
    c.grid.angular = r.integer("angular", c.grid.angular, 2, 1 << 20);
    c.grid.radial = r.integer("radial", c.grid.radial, 2, 1 << 20);
    c.grid.refinement = r.integer("refinement", c.grid.refinement, 0, 64);
    if (const Json* cap = r.take("sample_cap")) {
      const long long x = integer_at(*cap, "/grid/sample_cap");
      if (x < 1) fail("/grid/sample_cap", "must be positive");
      c.grid.sample_cap = static_cast<std::size_t>(x);
    }
    r.finish();
  }

  c.z_grid = default_set(n, 10.0);
  if (const Json* v = top.take("z_grid")) c.z_grid = read_point_set(*v, "/z_grid", n, c.z_grid);

  c.points = {std::vector<Complex>(nn)};
  if (const Json* v = top.take("points")) c.points = point_list(*v, "/points", n);

  for (const auto& k : multi_indices_up_to(nn, 2)) {
    c.multi_indices.emplace_back(k.entries().begin(), k.entries().end());
  }
  if (const Json* v = top.take("multi_indices")) {
    if (!v->is_array() || v->empty()) fail("/multi_indices", "expected a nonempty array");
    c.multi_indices.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto p = child_path("/multi_indices", i);
      const Json& k = (*v)[i];
      if (!k.is_array() || k.size() != nn) fail(p, "expected " + std::to_string(n) + " entries");
      std::vector<int> entries;
      int norm = 0;
      for (std::size_t j = 0; j < nn; ++j) {
        const long long x = integer_at(k[j], child_path(p, j));
        if (x < 0 || x > kMaxFactorialNorm) fail(child_path(p, j), "must be between 0 and 20");
        entries.push_back(static_cast<int>(x));
        norm += static_cast<int>(x);
      }
      if (norm > kMaxFactorialNorm) fail(p, "order above 20 exceeds the factorial guard");
      c.multi_indices.push_back(std::move(entries));
    }
  }

  if (const Json* v = top.take("index")) {
    Reader r(*v, "/index");
    c.index.m_max = r.integer("m_max", c.index.m_max, 0, 18);
    c.index.j_max = r.integer("j_max", c.index.m_max + 4, c.index.m_max + 2, kMaxFactorialNorm);
    r.finish();
  } else {
    c.index.j_max = c.index.m_max + 4;
  }

  c.local_behavior.inner = filled(n, 0.5);
  c.local_behavior.outer = filled(n, 3.5);
  c.local_behavior.centers = default_set(n, 8.0);
  c.local_behavior.centers.kind = "segment";
  c.local_behavior.centers.to.assign(nn, Complex(8.0, 0.0));
  if (const Json* v = top.take("local_behavior")) {
    Reader r(*v, "/local_behavior");
    c.local_behavior.enabled = true;
    if (const Json* e = r.take("enabled")) {
      if (!e->is_boolean()) fail("/local_behavior/enabled", "expected true or false");
      c.local_behavior.enabled = e->get<bool>();
    }
    if (const Json* x = r.take("inner")) {
      c.local_behavior.inner = number_list(*x, "/local_behavior/inner", nn, true, true);
    }
    if (const Json* x = r.take("outer")) {
      c.local_behavior.outer = number_list(*x, "/local_behavior/outer", nn, true, true);
    }
    if (const Json* x = r.take("centers")) {
      c.local_behavior.centers = read_point_set(*x, "/local_behavior/centers", n, c.local_behavior.centers);
    }
    r.finish();
  }
  for (std::size_t j = 0; j < nn; ++j) {
    if (!(c.local_behavior.inner[j] < std::numbers::e && std::numbers::e < c.local_behavior.outer[j])) {
      fail("/local_behavior", "radii must satisfy 0 < inner < e < outer on every axis");
    }
  }

  c.rays = {filled(n, 1.0)};
  if (const Json* v = top.take("rays")) c.rays = radius_list(*v, "/rays", n, true);
  c.r_seq = {2, 4, 8, 16, 32, 64, 128};
  if (const Json* v = top.take("r_seq")) c.r_seq = increasing_positive(*v, "/r_seq");

  c.thm2.base_radius = filled(n, 1.0);
  if (const Json* v = top.take("thm2")) {
    Reader r(*v, "/thm2");
    if (const Json* x = r.take("base_radius")) {
      c.thm2.base_radius = number_list(*x, "/thm2/base_radius", nn, true, true);
    }
    c.thm2.mode = r.string("mode", c.thm2.mode, {"verbatim", "composed", "both"});
    if (const Json* x = r.take("permutations")) {
      if (!x->is_array() || x->empty()) fail("/thm2/permutations", "expected a nonempty array");
      for (std::size_t i = 0; i < x->size(); ++i) {
        const auto p = child_path("/thm2/permutations", i);
        const Json& e = (*x)[i];
        if (!e.is_array() || e.size() != nn) fail(p, "expected " + std::to_string(n) + " entries");
        std::vector<int> perm;
        for (std::size_t j = 0; j < nn; ++j) perm.push_back(static_cast<int>(integer_at(e[j], child_path(p, j))));
        check_permutation(perm, p, n);
        c.thm2.permutations.push_back(std::move(perm));
      }
    }
    r.finish();
  }

  if (const Json* v = top.take("thm3")) {
    Reader r(*v, "/thm3");
    if (const Json* x = r.take("N")) {
      const long long N = integer_at(*x, "/thm3/N");
      if (N < 0 || N > kMaxFactorialNorm) fail("/thm3/N", "must be between 0 and 20");
      c.thm3.N = static_cast<int>(N);
    }
    if (const Json* x = r.take("pivot")) {
      const long long p = integer_at(*x, "/thm3/pivot");
      if (p < 1 || p > n) fail("/thm3/pivot", "must be a variable index between 1 and n");
      c.thm3.pivot = static_cast<int>(p);
    }
    c.thm3.intervals = r.integer("intervals", c.thm3.intervals, 2, 1 << 20);
    if (c.thm3.intervals % 2 != 0) fail("/thm3/intervals", "must be even");
    r.finish();
  }

  c.classify.radius = filled(n, 1.0);
  c.classify.r_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (const Json* v = top.take("classify")) {
    Reader r(*v, "/classify");
    c.classify.which = r.string("class", c.classify.which, {"Q", "K", "both"});
    if (const Json* x = r.take("radius")) {
      c.classify.radius = number_list(*x, "/classify/radius", nn, false, true);
    }
    if (const Json* x = r.take("r_grid")) c.classify.r_grid = increasing_positive(*x, "/classify/r_grid");
    c.classify.blowup = r.number("blowup", c.classify.blowup, true);
    c.classify.growth_factor = r.number("growth_factor", c.classify.growth_factor, true);
    r.finish();
  }

  for (double a : {0.6, 1.2, 1.8, 2.4, 3.0}) {
    if (n == 1) {
      c.prop1.radii.push_back({a});
      continue;
    }
    for (double b : {0.6, 1.2, 1.8, 2.4, 3.0}) {
      std::vector<double> R = filled(n, b);
      R[0] = a;
      c.prop1.radii.push_back(std::move(R));
    }
  }
  c.prop1.domain = default_set(n, 2.0);
  // Every center costs a full disc sample per radius, so the default stays coarse.
  c.prop1.domain.radial = 2;
  c.prop1.domain.angular = 8;
  if (const Json* v = top.take("prop1")) {
    Reader r(*v, "/prop1");
    c.prop1.enabled = true;
    const Json* comps = r.take("components");
    if (!comps) fail("/prop1/components", "required");
    if (!comps->is_array() || comps->size() != nn) {
      fail("/prop1/components", "expected " + std::to_string(n) + " expressions");
    }
    for (std::size_t i = 0; i < nn; ++i) {
      if (!(*comps)[i].is_string()) fail(child_path("/prop1/components", i), "expected a string");
      c.prop1.components.push_back((*comps)[i].get<std::string>());
    }
    c.prop1.c = r.number("c", c.prop1.c, true);
    if (const Json* x = r.take("radii")) c.prop1.radii = radius_list(*x, "/prop1/radii", n, true);
    if (const Json* x = r.take("domain")) c.prop1.domain = read_point_set(*x, "/prop1/domain", n, c.prop1.domain);
    r.finish();
  }

  c.probe.center.assign(nn, Complex{});
  c.probe.r_list = {1, 2, 4, 8, 16, 32, 64};
  if (const Json* v = top.take("probe")) {
    Reader r(*v, "/probe");
    c.probe.enabled = true;
    c.probe.component = r.integer("component", c.probe.component, 1, n);
    if (const Json* x = r.take("center")) c.probe.center = point_at(*x, "/probe/center", n);
    c.probe.theta = r.number("theta", c.probe.theta, false);
    if (const Json* x = r.take("r_list")) c.probe.r_list = increasing_positive(*x, "/probe/r_list");
    c.probe.bound = r.number("bound", c.probe.bound, true);
    r.finish();
  }

  c.gap.N = {0, 1, 2, 3, 4, 5};
  c.gap.C = {0, 0.25, 0.5, 1, 2, 4};
  if (const Json* v = top.take("gap")) {
    Reader r(*v, "/gap");
    if (const Json* x = r.take("N")) {
      if (!x->is_array() || x->empty()) fail("/gap/N", "expected a nonempty array");
      c.gap.N.clear();
      for (std::size_t i = 0; i < x->size(); ++i) {
        const long long N = integer_at((*x)[i], child_path("/gap/N", i));
        if (N < 0 || N > 1'000'000) fail(child_path("/gap/N", i), "must be between 0 and 1000000");
        c.gap.N.push_back(static_cast<int>(N));
      }
    }
    if (const Json* x = r.take("C")) {
      c.gap.C = number_list(*x, "/gap/C", std::nullopt, false, true);
      if (c.gap.C.empty()) fail("/gap/C", "must not be empty");
    }
    r.finish();
  }

  c.convexity.lo = filled(n, 0.5);
  c.convexity.hi = filled(n, 4.0);
  if (const Json* v = top.take("convexity")) {
    Reader r(*v, "/convexity");
    if (const Json* x = r.take("lo")) c.convexity.lo = number_list(*x, "/convexity/lo", nn, true, true);
    if (const Json* x = r.take("hi")) c.convexity.hi = number_list(*x, "/convexity/hi", nn, true, true);
    c.convexity.points = r.integer("points", c.convexity.points, 3, 4096);
    r.finish();
  }
  for (std::size_t j = 0; j < nn; ++j) {
    if (c.convexity.lo[j] > c.convexity.hi[j]) fail("/convexity", "lo must not exceed hi");
  }

  c.sweep.factors = {0.5, 1, 2, 4};
  if (const Json* v = top.take("sweep")) {
    Reader r(*v, "/sweep");
    if (const Json* x = r.take("factors")) {
      c.sweep.factors = number_list(*x, "/sweep/factors", std::nullopt, true, true);
      if (c.sweep.factors.empty()) fail("/sweep/factors", "must not be empty");
    }
    if (const Json* x = r.take("radii")) c.sweep.radii = radius_list(*x, "/sweep/radii", n, false);
    r.finish();
  }

  if (const Json* v = top.take("tolerances")) {
    Reader r(*v, "/tolerances");
    c.tolerances.quadrature = r.number("quadrature", c.tolerances.quadrature, true);
    r.finish();
  }
  top.finish();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_config(s.str());
}

namespace {

Json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return Json::array({z.real(), z.imag()});
}

Json point_json(const std::vector<Complex>& p) {
  Json a = Json::array();
  for (Complex z : p) a.push_back(complex_json(z));
  return a;
}

Json point_set_json(const PointSet& s) {
  Json j;
  j["kind"] = s.kind;
  if (s.kind == "polydisc") {
    j["center"] = point_json(s.center);
    j["radius"] = s.radius;
    j["radial"] = s.radial;
    j["angular"] = s.angular;
  } else if (s.kind == "segment") {
    j["from"] = point_json(s.from);
    j["to"] = point_json(s.to);
    j["count"] = s.count;
  } else {
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(point_json(p));
    j["points"] = std::move(pts);
  }
  return j;
}

}  // namespace

Json to_json(const RunConfig& c) {
  Json j;
  j["arity"] = c.arity;
  if (c.function) j["function"] = *c.function;
  j["weights"] = c.weights;
  j["seed"] = c.seed;
  j["grid"] = {{"angular", c.grid.angular},
               {"radial", c.grid.radial},
               {"refinement", c.grid.refinement},
               {"sample_cap", c.grid.sample_cap}};
  j["z_grid"] = point_set_json(c.z_grid);
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_json(p));
  j["points"] = std::move(pts);
  j["multi_indices"] = c.multi_indices;
  j["index"] = {{"m_max", c.index.m_max}, {"j_max", c.index.j_max}};
  j["local_behavior"] = {{"enabled", c.local_behavior.enabled},
                         {"inner", c.local_behavior.inner},
                         {"outer", c.local_behavior.outer},
                         {"centers", point_set_json(c.local_behavior.centers)}};
  j["rays"] = c.rays;
  j["r_seq"] = c.r_seq;
  Json t2 = {{"base_radius", c.thm2.base_radius}, {"mode", c.thm2.mode}};
  if (!c.thm2.permutations.empty()) t2["permutations"] = c.thm2.permutations;
  j["thm2"] = std::move(t2);
  Json t3 = Json::object();
  if (c.thm3.N) t3["N"] = *c.thm3.N;
  if (c.thm3.pivot) t3["pivot"] = *c.thm3.pivot;
  t3["intervals"] = c.thm3.intervals;
  j["thm3"] = std::move(t3);
  j["classify"] = {{"class", c.classify.which},
                   {"radius", c.classify.radius},
                   {"r_grid", c.classify.r_grid},
                   {"blowup", c.classify.blowup},
                   {"growth_factor", c.classify.growth_factor}};
  if (c.prop1.enabled) {
    j["prop1"] = {{"components", c.prop1.components},
                  {"c", c.prop1.c},
                  {"radii", c.prop1.radii},
                  {"domain", point_set_json(c.prop1.domain)}};
  }
  if (c.probe.enabled) {
    j["probe"] = {{"component", c.probe.component},
                  {"center", point_json(c.probe.center)},
                  {"theta", c.probe.theta},
                  {"r_list", c.probe.r_list},
                  {"bound", c.probe.bound}};
  }
  j["gap"] = {{"N", c.gap.N}, {"C", c.gap.C}};
  j["convexity"] = {{"lo", c.convexity.lo}, {"hi", c.convexity.hi}, {"points", c.convexity.points}};
  Json sw = {{"factors", c.sweep.factors}};
  if (!c.sweep.radii.empty()) sw["radii"] = c.sweep.radii;
  j["sweep"] = std::move(sw);
  j["tolerances"] = {{"quadrature", c.tolerances.quadrature}};
  return j;
}

std::vector<CPoint> expand(const PointSet& set, int arity, std::size_t cap) {
  const auto n = static_cast<std::size_t>(arity);
  if (set.kind == "points") {
    std::vector<CPoint> out;
    for (const auto& p : set.points) out.emplace_back(p);
    return out;
  }
  if (set.kind == "segment") {
    std::vector<CPoint> out;
    for (int i = 0; i < set.count; ++i) {
      const double s = set.count == 1 ? 0.0 : static_cast<double>(i) / (set.count - 1);
      std::vector<Complex> z(n);
      for (std::size_t j = 0; j < n; ++j) z[j] = set.from[j] + s * (set.to[j] - set.from[j]);
      out.emplace_back(std::move(z));
    }
    return out;
  }
  GridSpec g;
  g.angular_resolution = set.angular;
  g.radial_resolution = set.radial;
  g.sample_cap = cap;
  return polydisc_samples(CPoint(set.center), PolyRadius(set.radius), g);
}

}  // namespace lindex::cli
