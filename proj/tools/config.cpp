#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ymoptics/radial.hpp"

namespace ymo::cli {

namespace {

double parse_number(const std::string& text, const std::string& where) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && (*end == ' ' || *end == '\t')) ++end;
  if (end == begin || *end != '\0' || errno == ERANGE)
    throw ConfigError("not a number for " + where + ": '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string Section::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end())
    throw ConfigError("missing key '" + key + "' in [" + name_ + "]");
  return it->second;
}

std::string Section::str(const std::string& key,
                         const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Section::num(const std::string& key) const {
  return parse_number(str(key), name_ + "." + key);
}

double Section::num(const std::string& key, double fallback) const {
  return has(key) ? num(key) : fallback;
}

long Section::integer(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const double v = num(key);
  if (v != static_cast<double>(static_cast<long>(v)))
    throw ConfigError(name_ + "." + key + " must be an integer");
  return static_cast<long>(v);
}

std::vector<double> Section::list(const std::string& key,
                                  const std::vector<double>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<double> out;
  std::stringstream ss(str(key));
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_number(trim(item), name_ + "." + key));
  return out;
}

Vec3 Section::vec(const std::string& key, const Vec3& fallback) const {
  if (!has(key)) return fallback;
  const std::vector<double> v = list(key, {});
  if (v.size() != 3)
    throw ConfigError(name_ + "." + key + " needs three components");
  return vec3(v[0], v[1], v[2]);
}

Config Config::parse(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("cannot parse config: ") + e.what());
  }
  Config cfg;
  for (const auto& [name, child] : tree) {
    if (child.empty())
      throw ConfigError("key '" + name + "' outside of any section");
    std::map<std::string, std::string> values;
    for (const auto& [key, leaf] : child) values[key] = trim(leaf.data());
    cfg.sections_[name] = Section(name, std::move(values));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Section Config::section(const std::string& name) const {
  auto it = sections_.find(name);
  return it == sections_.end() ? Section(name, {}) : it->second;
}

Section Config::require(const std::string& name) const {
  auto it = sections_.find(name);
  if (it == sections_.end())
    throw ConfigError("missing section [" + name + "]");
  return it->second;
}

ScalarField index_by_name(const std::string& name) {
  if (name == "euclidean") return euclidean_medium().index_field();
  if (name == "spherical") return spherical_medium().index_field();
  if (name == "spherical_unit")
    return spherical_medium(StereographicScale::unit).index_field();
  if (name == "hyperbolic") return hyperbolic_medium().index_field();
  if (name == "hyperbolic_unit")
    return hyperbolic_medium(HyperbolicBranch::lower, StereographicScale::unit)
        .index_field();
  if (name == "monopole") return monopole_medium().index_field();
  throw ConfigError("unknown index '" + name + "'");
}

FieldSpec field_from(const Section& s, const Overrides& o) {
  if (!s.has("name")) throw ConfigError("missing field name in [" + s.name() + "]");
  FieldSpec f;
  f.name = s.str("name");
  if (f.name == "zero") {
    f.potential = zero_potential();
  } else if (f.name == "wu_yang_monopole") {
    f.potential = wu_yang_monopole();
    f.closed_form_b = &wu_yang_magnetic;
  } else if (f.name == "power_law") {
    f.potential = ansatz_field(RadialProfile::power_law(s.num("q")));
  } else if (f.name == "linear_test") {
    // A^a_j = delta^a_j x^1
    f.potential = GaugePotential(
        [](const Vec3& x) { return identity3() * x(0); }, {},
        [](const Vec3&, int k) { return k == 0 ? identity3() : Mat3{}; });
  } else if (f.name == "conformal") {
    f.potential = conformal_family(index_by_name(s.str("index")));
  } else {
    throw ConfigError("unknown field '" + f.name + "'");
  }
  const double scale = s.num("scale", 1.0);
  if (scale != 1.0) {
    f.potential = scaled(f.potential, scale);
    f.closed_form_b.reset();
  }
  if (o.step) {
    if (!(*o.step > 0.0)) throw ConfigError("--step must be positive");
    f.potential = GaugePotential(f.potential.with_step(*o.step));
  }
  return f;
}

Dreibein dreibein_from(const Section& s, const Overrides& o) {
  const std::string name = s.str("name", "identity");
  Dreibein h;
  if (name == "identity")
    h = identity_dreibein();
  else if (name == "isotropic")
    h = isotropic_dreibein(index_by_name(s.str("index")));
  else
    throw ConfigError("unknown dreibein '" + name + "'");
  if (o.step) h = Dreibein(h.with_step(*o.step));
  return h;
}

OpticalMedium medium_from(const Section& s) {
  const std::string name = s.str("name");
  const std::string scale_name = s.str("scale", "embedding");
  StereographicScale scale;
  if (scale_name == "embedding")
    scale = StereographicScale::embedding;
  else if (scale_name == "unit")
    scale = StereographicScale::unit;
  else
    throw ConfigError("unknown medium scale '" + scale_name + "'");
  const std::string branch_name = s.str("branch", "lower");
  HyperbolicBranch branch;
  if (branch_name == "lower")
    branch = HyperbolicBranch::lower;
  else if (branch_name == "upper")
    branch = HyperbolicBranch::upper;
  else
    throw ConfigError("unknown hyperbolic branch '" + branch_name + "'");

  if (name == "euclidean") return euclidean_medium();
  if (name == "spherical") return spherical_medium(scale);
  if (name == "hyperbolic") return hyperbolic_medium(branch, scale);
  if (name == "monopole") return monopole_medium();
  throw ConfigError("unknown medium '" + name + "'");
}

ForceLaw force_law_from(const std::string& name) {
  if (name == "lorentz") return ForceLaw::lorentz;
  if (name == "geodesic") return ForceLaw::geodesic;
  throw ConfigError("unknown force law '" + name + "'");
}

SamplingSpec sampling_from(const Section& s, const Overrides& o) {
  SamplingSpec sp;
  if (s.has("seed")) {
    const std::string text = s.str("seed");
    std::size_t used = 0;
    try {
      if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
      sp.seed = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw ConfigError("sampling.seed must be a non-negative integer");
    }
    if (used != text.size())
      throw ConfigError("sampling.seed must be a non-negative integer");
  }
  if (o.seed) sp.seed = *o.seed;
  sp.count = static_cast<int>(s.integer("count", 100));
  sp.r_min = s.num("r_min", 0.5);
  sp.r_max = s.num("r_max", 5.0);
  if (sp.count <= 0) throw ConfigError("sampling.count must be positive");
  if (!(sp.r_min > 0.0) || !(sp.r_max >= sp.r_min))
    throw ConfigError("sampling radii must satisfy 0 < r_min <= r_max");
  return sp;
}

}  // namespace ymo::cli
