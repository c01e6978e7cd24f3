#include "scangame/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace scangame {

namespace {

std::vector<double> parse_numbers(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  in.clear();
  std::string rest;
  if (!(in >> rest) && !out.empty()) return out;
  throw ConfigError(key + ": expected a list of numbers, got '" + text + "'");
}

double parse_one(const std::string& key, const std::string& text) {
  const std::vector<double> v = parse_numbers(key, text);
  if (v.size() != 1) throw ConfigError(key + ": expected a single number");
  return v[0];
}

bool parse_bool(const std::string& key, std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), ::tolower);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key + ": expected true/false");
}

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

}  // namespace

const TypeDistribution& ScenarioConfig::prior_or_throw() const {
  if (!prior) throw ConfigError("scenario has no capability prior");
  return *prior;
}

void ScenarioConfig::ensure_valid() const {
  try {
    params.ensure_valid();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }
  if (point_prior) {
    if (*point_prior < params.a || *point_prior > params.b)
      throw ConfigError("prior.point: type outside [a,b]");
  } else if (prior) {
    try {
      prior->ensure_valid_for(params);
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("prior: ") + e.what());
    }
  } else {
    throw ConfigError("scenario needs a prior (prior.point / prior.uniform / "
                      "prior.atoms / prior.pieces)");
  }

  if (sweep.size() > 2) throw ConfigError("sweep: at most two axes (F, q0)");
  for (const SweepAxis& axis : sweep) {
    const std::string key = "sweep." + axis.parameter;
    if (axis.parameter != "F" && axis.parameter != "q0")
      throw ConfigError(key + ": parameter must be F or q0");
    if (axis.steps < 1) throw ConfigError(key + ": steps must be >= 1");
    if (!(axis.hi >= axis.lo)) throw ConfigError(key + ": needs hi >= lo");
    if (axis.parameter == "F" && axis.lo < 0.0)
      throw ConfigError(key + ": F must be >= 0");
    if (axis.parameter == "q0" && (axis.lo <= 0.0 || axis.hi > 1.0))
      throw ConfigError(key + ": q0 must lie in (0,1]");
  }
  if (sweep.size() == 2 && sweep[0].parameter == sweep[1].parameter)
    throw ConfigError("sweep: duplicate axis " + sweep[0].parameter);

  for (double c : report_types) {
    const bool in_support = point_prior ? std::fabs(c - *point_prior) <= 1e-9
                                        : prior->contains(c);
    if (!in_support) {
      std::ostringstream os;
      os << "report_types: type " << c << " not in the prior support";
      throw ConfigError(os.str());
    }
  }
}

ScenarioConfig default_scenario() {
  ScenarioConfig cfg;
  cfg.params = NetworkParams{};  // field defaults encode the shipped scenario
  cfg.prior = TypeDistribution::uniform(0.039, 0.3);
  cfg.report_types = {0.039, 0.3};
  return cfg;
}

ScenarioConfig default_sweep_scenario() {
  ScenarioConfig cfg = default_scenario();
  cfg.sweep = {{"F", 0.1, 0.4, 30}, {"q0", 0.01, 0.99, 30}};
  return cfg;
}

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig cfg = default_scenario();
  cfg.report_types.clear();
  bool prior_set = false, report_set = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "line " << line_no << ": expected 'key = value'";
      throw ConfigError(os.str());
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(key + ": empty value");

    if (key == "params.U") cfg.params.U = parse_one(key, value);
    else if (key == "params.V") cfg.params.V = parse_one(key, value);
    else if (key == "params.C_S") cfg.params.C_S = parse_one(key, value);
    else if (key == "params.C_I") cfg.params.C_I = parse_one(key, value);
    else if (key == "params.F") cfg.params.F = parse_one(key, value);
    else if (key == "params.a") cfg.params.a = parse_one(key, value);
    else if (key == "params.b") cfg.params.b = parse_one(key, value);
    else if (key == "params.c") cfg.params.c = parse_one(key, value);
    else if (key == "params.q0") cfg.params.q0 = parse_one(key, value);
    else if (key == "prior.point") {
      cfg.point_prior = parse_one(key, value);
      cfg.prior.reset();
      prior_set = true;
    } else if (key == "prior.uniform") {
      const std::vector<double> v = parse_numbers(key, value);
      if (v.size() != 2) throw ConfigError(key + ": expected 'lo hi'");
      try {
        cfg.prior = TypeDistribution::uniform(v[0], v[1]);
      } catch (const std::domain_error& e) {
        throw ConfigError(key + ": " + e.what());
      }
      cfg.point_prior.reset();
      prior_set = true;
    } else if (key == "prior.atoms") {
      const std::vector<double> v = parse_numbers(key, value);
      if (v.size() < 2 || v.size() % 2 != 0)
        throw ConfigError(key + ": expected 'c1 w1 c2 w2 ...'");
      std::vector<TypeAtom> atoms;
      for (std::size_t i = 0; i < v.size(); i += 2) atoms.push_back({v[i], v[i + 1]});
      try {
        cfg.prior = TypeDistribution::atoms(std::move(atoms));
      } catch (const std::domain_error& e) {
        throw ConfigError(key + ": " + e.what());
      }
      cfg.point_prior.reset();
      prior_set = true;
    } else if (key == "prior.pieces") {
      const std::vector<double> v = parse_numbers(key, value);
      if (v.size() < 3 || v.size() % 3 != 0)
        throw ConfigError(key + ": expected 'lo1 hi1 d1 lo2 hi2 d2 ...'");
      std::vector<TypePiece> pieces;
      for (std::size_t i = 0; i < v.size(); i += 3)
        pieces.push_back({v[i], v[i + 1], v[i + 2]});
      try {
        cfg.prior = TypeDistribution::pieces(std::move(pieces));
      } catch (const std::domain_error& e) {
        throw ConfigError(key + ": " + e.what());
      }
      cfg.point_prior.reset();
      prior_set = true;
    } else if (key == "sweep.F" || key == "sweep.q0") {
      const std::vector<double> v = parse_numbers(key, value);
      if (v.size() != 3) throw ConfigError(key + ": expected 'min max steps'");
      const int steps = static_cast<int>(std::lround(v[2]));
      if (std::fabs(v[2] - steps) > 1e-9) throw ConfigError(key + ": steps must be an integer");
      cfg.sweep.push_back({key.substr(6), v[0], v[1], steps});
    } else if (key == "report_types") {
      cfg.report_types = parse_numbers(key, value);
      report_set = true;
    } else if (key == "verify") {
      cfg.verify = parse_bool(key, value);
    } else if (key == "seed") {
      const double v = parse_one(key, value);
      if (v < 0 || std::fabs(v - std::llround(v)) > 1e-9)
        throw ConfigError("seed: expected a non-negative integer");
      cfg.seed = static_cast<std::uint64_t>(std::llround(v));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  if (!prior_set) cfg.prior = TypeDistribution::uniform(0.039, 0.3);
  if (!report_set) {
    if (cfg.point_prior)
      cfg.report_types = {*cfg.point_prior};
    else
      cfg.report_types = {cfg.prior->support_lo(), cfg.prior->support_hi()};
  }
  cfg.ensure_valid();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_scenario(in);
}

}  // namespace scangame
