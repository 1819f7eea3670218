#ifndef YMOPTICS_TOOLS_CONFIG_HPP_
#define YMOPTICS_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymoptics/dynamics.hpp"
#include "ymoptics/gauge.hpp"
#include "ymoptics/optics.hpp"
#include "ymoptics/transcribe.hpp"

namespace ymo::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One INI section; keys are case-sensitive.
class Section {
 public:
  Section() = default;
  Section(std::string name, std::map<std::string, std::string> values)
      : name_(std::move(name)), values_(std::move(values)) {}

  const std::string& name() const { return name_; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string str(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback) const;
  double num(const std::string& key) const;
  double num(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  std::vector<double> list(const std::string& key,
                           const std::vector<double>& fallback) const;
  Vec3 vec(const std::string& key, const Vec3& fallback) const;

 private:
  std::string name_;
  std::map<std::string, std::string> values_;
};

class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& section) const {
    return sections_.count(section) > 0;
  }
  // Empty section when absent.
  Section section(const std::string& name) const;
  // Throws ConfigError when absent.
  Section require(const std::string& name) const;

 private:
  std::map<std::string, Section> sections_;
};

// Flags that override the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<double> step;
};

struct FieldSpec {
  std::string name;
  GaugePotential potential;
  std::optional<Mat3 (*)(const Vec3&)> closed_form_b;
};

ScalarField index_by_name(const std::string& name);
FieldSpec field_from(const Section& s, const Overrides& o);
Dreibein dreibein_from(const Section& s, const Overrides& o);
OpticalMedium medium_from(const Section& s);
ForceLaw force_law_from(const std::string& name);

struct SamplingSpec {
  std::uint64_t seed = 1;
  int count = 100;
  double r_min = 0.5;
  double r_max = 5.0;
};

SamplingSpec sampling_from(const Section& s, const Overrides& o);

}  // namespace ymo::cli

#endif  // YMOPTICS_TOOLS_CONFIG_HPP_
