#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mjue/asymptotics.hpp"
#include "mjue/errors.hpp"
#include "mjue/harness.hpp"

namespace mjue {
namespace {

using nlohmann::json;

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  if (first < last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ConfigError(what + ": cannot parse number '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<int> default_n(StudyKind kind) {
  switch (kind) {
    case StudyKind::gap:
      return {25, 50, 100, 200};
    case StudyKind::asymptotics:
      return {50, 100, 200};
    case StudyKind::recurrence:
      return {40};
    default:
      return {50, 100, 200, 400};
  }
}

GridSpec default_grid(StudyKind kind) {
  switch (kind) {
    case StudyKind::density:
      return {std::vector<double>{-0.8, 0.0, 0.5}};
    case StudyKind::bulk:
      return {Linspace{-2.0, 2.0, 9}};
    case StudyKind::edge:
      return {Linspace{1.0, 10.0, 10}};
    case StudyKind::asymptotics:
      return {std::vector<double>{0.5, 1.0, 2.0, 4.0}};
    default:
      return {std::vector<double>{}};
  }
}

json grid_to_json(const GridSpec& g) {
  if (const auto* lin = std::get_if<Linspace>(&g.spec)) {
    return json{{"lo", lin->lo}, {"hi", lin->hi}, {"count", lin->count}};
  }
  return std::get<std::vector<double>>(g.spec);
}

GridSpec grid_from_json(const json& j) {
  if (j.is_string()) return GridSpec::parse(j.get<std::string>());
  if (j.is_array()) return {j.get<std::vector<double>>()};
  if (j.is_object()) {
    return {Linspace{j.at("lo").get<double>(), j.at("hi").get<double>(),
                     j.at("count").get<int>()}};
  }
  throw ConfigError("grid: expected \"lo:hi:count\", a list or {lo, hi, count}");
}

}  // namespace

std::string to_string(StudyKind kind) {
  switch (kind) {
    case StudyKind::density:
      return "density";
    case StudyKind::bulk:
      return "bulk";
    case StudyKind::edge:
      return "edge";
    case StudyKind::gap:
      return "gap";
    case StudyKind::recurrence:
      return "recurrence";
    case StudyKind::asymptotics:
      return "asympt";
  }
  return "unknown";
}

StudyKind parse_study_kind(const std::string& name) {
  for (StudyKind k : {StudyKind::density, StudyKind::bulk, StudyKind::edge, StudyKind::gap,
                      StudyKind::recurrence, StudyKind::asymptotics}) {
    if (name == to_string(k)) return k;
  }
  if (name == "asymptotics") return StudyKind::asymptotics;
  throw ConfigError("unknown study '" + name + "'");
}

std::vector<double> GridSpec::points() const {
  if (const auto* list = std::get_if<std::vector<double>>(&spec)) return *list;
  const auto& lin = std::get<Linspace>(spec);
  if (lin.count < 1) throw ConfigError("grid: count must be >= 1");
  if (lin.count == 1) return {lin.lo};
  std::vector<double> out(lin.count);
  const double step = (lin.hi - lin.lo) / (lin.count - 1);
  for (int i = 0; i < lin.count; ++i) out[i] = lin.lo + i * step;
  out.back() = lin.hi;
  return out;
}

GridSpec GridSpec::parse(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("grid: expected lo:hi:count, got '" + text + "'");
    const double count = parse_double(parts[2], "grid");
    if (count < 1 || count != std::floor(count)) {
      throw ConfigError("grid: count must be a positive integer");
    }
    return {Linspace{parse_double(parts[0], "grid"), parse_double(parts[1], "grid"),
                     static_cast<int>(count)}};
  }
  std::vector<double> pts;
  if (!text.empty()) {
    for (const auto& p : split(text, ',')) pts.push_back(parse_double(p, "grid"));
  }
  return {pts};
}

ModifiedJacobiWeight WeightSpec::build() const {
  ChebSeries series = !h.empty() && h.front() == '@' ? read_cheb_series(h.substr(1)) : builtin_h(h);
  try {
    return ModifiedJacobiWeight(alpha, beta, std::move(series));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("weight: ") + e.what());
  }
}

std::vector<int> ExperimentConfig::n_values() const { return n ? *n : default_n(study); }

std::vector<double> ExperimentConfig::grid_points() const {
  return (grid ? *grid : default_grid(study)).points();
}

std::vector<double> ExperimentConfig::s_values() const {
  return s ? *s : std::vector<double>{0.5, 2.0, 8.0};
}

void ExperimentConfig::validate() const {
  const std::vector<int> ns = n_values();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2) throw ConfigError("n values must be >= 2");
    if (i > 0 && ns[i] <= ns[i - 1]) throw ConfigError("n list must be strictly increasing");
  }
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (!(weight.alpha > -1.0 && weight.beta > -1.0)) {
    throw ConfigError("alpha and beta must exceed -1");
  }
  if (ns.empty()) return;
  const double n_min = ns.front();
  const std::vector<double> pts = grid_points();
  const double d = kRegionDelta;

  switch (study) {
    case StudyKind::density:
      for (double x : pts) {
        if (!(std::abs(x) <= 1.0 - d)) {
          throw ConfigError("density grid must lie in [-0.9, 0.9]");
        }
      }
      break;
    case StudyKind::bulk: {
      if (!(std::abs(x) <= 1.0 - d)) throw ConfigError("bulk centre must lie in [-0.9, 0.9]");
      double reach = 0.0;
      for (double u : pts) reach = std::max(reach, std::abs(u));
      if (!(std::abs(x) + reach / (n_min * arcsine_density(x)) < 1.0)) {
        throw ConfigError("bulk grid pushes shifted arguments out of (-1,1) at n = " +
                          std::to_string(ns.front()));
      }
      break;
    }
    case StudyKind::edge:
      for (double u : pts) {
        if (!(u > 0.0 && u < 4.0 * n_min * n_min)) {
          throw ConfigError("edge grid must lie in (0, 4n^2)");
        }
      }
      break;
    case StudyKind::gap:
      if (m < 4) throw ConfigError("m must be >= 4");
      for (double sv : s_values()) {
        if (!(sv > 0.0 && sv < 4.0 * n_min * n_min)) {
          throw ConfigError("gap sizes must lie in (0, 4n^2)");
        }
      }
      break;
    case StudyKind::asymptotics:
      for (double u : pts) {
        if (!(u > 0.0 && u < 2.0 * d * n_min * n_min)) {
          throw ConfigError("asymptotics u grid must lie in (0, 2 delta n^2)");
        }
      }
      break;
    case StudyKind::recurrence:
      break;
  }
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig cfg;
  try {
    if (j.contains("study")) cfg.study = parse_study_kind(j.at("study").get<std::string>());
    if (j.contains("weight")) {
      const json& w = j.at("weight");
      cfg.weight.alpha = w.value("alpha", 0.0);
      cfg.weight.beta = w.value("beta", 0.0);
      cfg.weight.h = w.value("h", std::string("one"));
    }
    if (j.contains("n")) cfg.n = j.at("n").get<std::vector<int>>();
    if (j.contains("grid")) cfg.grid = grid_from_json(j.at("grid"));
    if (j.contains("s")) cfg.s = j.at("s").get<std::vector<double>>();
    if (j.contains("m")) cfg.m = j.at("m").get<int>();
    if (j.contains("x")) cfg.x = j.at("x").get<double>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["study"] = to_string(cfg.study);
  j["weight"] = {{"alpha", cfg.weight.alpha}, {"beta", cfg.weight.beta}, {"h", cfg.weight.h}};
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.grid) j["grid"] = grid_to_json(*cfg.grid);
  if (cfg.s) j["s"] = *cfg.s;
  j["m"] = cfg.m;
  j["x"] = cfg.x;
  j["out"] = cfg.out;
  j["tol"] = cfg.tol;
  return j;
}

ExperimentConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace mjue
