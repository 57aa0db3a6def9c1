#include "splitnlc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "splitnlc/rng.hpp"
#include "splitnlc/units.hpp"

namespace splitnlc::experiments {

using nlohmann::json;

double Scenario::snr_trx_linear() const {
  return std::isinf(snr_trx_db) ? std::numeric_limits<double>::infinity()
                                : linear_from_db(snr_trx_db);
}

fiber::FiberParams Scenario::fiber_params() const {
  return {alpha_db_per_km, dispersion_ps_nm_km, gamma_1_w_km, span_length_km};
}

fiber::AmpParams Scenario::amp_params() const {
  return fiber::AmpParams::for_span_loss(fiber_params(), noise_figure_db);
}

analytic::LinkParams Scenario::link_params(int num_spans) const {
  analytic::LinkParams l;
  l.num_spans = num_spans;
  l.span_length_km = span_length_km;
  l.eta_1_w2 = linear_from_db(eta_db_1_w2);
  l.epsilon = epsilon;
  l.p_ase_w = amp_params().p_ase_w(b_ref_hz());
  return l;
}

analytic::TrxParams Scenario::trx_params() const {
  return {snr_trx_linear(), kappa_r};
}

fiber::SsfConfig Scenario::ssf_config() const {
  fiber::SsfConfig cfg;
  cfg.steps_per_span = steps_per_span;
  cfg.distribution = step_distribution == "uniform"
                         ? fiber::StepDistribution::Uniform
                         : fiber::StepDistribution::Logarithmic;
  return cfg;
}

void Scenario::validate() const {
  if (id.empty()) throw std::invalid_argument("scenario id must not be empty");
  if (engine != "analytic" && engine != "simulation" && engine != "both")
    throw std::invalid_argument("engine must be analytic, simulation or both");
  if (step_distribution != "logarithmic" && step_distribution != "uniform")
    throw std::invalid_argument("step_distribution must be logarithmic or uniform");
  if (power_dbm_min.has_value() != power_dbm_max.has_value())
    throw std::invalid_argument("power_dbm_min/max must be given together");
  if (power_dbm_min && *power_dbm_min > *power_dbm_max)
    throw std::invalid_argument("power_dbm_min above power_dbm_max");
  if (power_dbm_step <= 0.0) throw std::invalid_argument("power step must be positive");
  for (const auto& name : schemes) analytic::scheme_from_name(name);
  for (int n : span_counts)
    if (n < 1) throw std::invalid_argument("span counts must be >= 1");
  trx_params().validate();
  if (!span_counts.empty()) link_params(span_counts.front()).validate();
}

namespace {

// Single place that ties struct fields to file keys, for parse, serialize
// and override alike.
template <typename Fn>
void for_each_key(Scenario& s, Fn&& fn) {
  fn("id", s.id);
  fn("span_length_km", s.span_length_km);
  fn("alpha_db_per_km", s.alpha_db_per_km);
  fn("dispersion_ps_nm_km", s.dispersion_ps_nm_km);
  fn("gamma_1_w_km", s.gamma_1_w_km);
  fn("noise_figure_db", s.noise_figure_db);
  fn("eta_db_1_w2", s.eta_db_1_w2);
  fn("epsilon", s.epsilon);
  fn("snr_trx_db", s.snr_trx_db);
  fn("kappa_r", s.kappa_r);
  fn("num_channels", s.num_channels);
  fn("symbol_rate_gbd", s.symbol_rate_gbd);
  fn("channel_spacing_ghz", s.channel_spacing_ghz);
  fn("oversampling", s.oversampling);
  fn("modulation_order", s.modulation_order);
  fn("steps_per_span", s.steps_per_span);
  fn("step_distribution", s.step_distribution);
  fn("n_symbols", s.n_symbols);
  fn("span_counts", s.span_counts);
  fn("schemes", s.schemes);
  fn("power_dbm_min", s.power_dbm_min);
  fn("power_dbm_max", s.power_dbm_max);
  fn("power_dbm_step", s.power_dbm_step);
  fn("auto_power_halfspan_db", s.auto_power_halfspan_db);
  fn("engine", s.engine);
  fn("seed", s.seed);
  fn("mi_enabled", s.mi_enabled);
  fn("mi_samples", s.mi_samples);
}

void assign_from_json(const json& v, std::string& out) { out = v.get<std::string>(); }
void assign_from_json(const json& v, double& out) {
  if (v.is_string()) {
    const auto str = v.get<std::string>();
    if (str == "inf" || str == "infinity") {
      out = std::numeric_limits<double>::infinity();
      return;
    }
    throw std::invalid_argument("expected a number, got string: " + str);
  }
  out = v.get<double>();
}
void assign_from_json(const json& v, int& out) { out = v.get<int>(); }
void assign_from_json(const json& v, bool& out) { out = v.get<bool>(); }
void assign_from_json(const json& v, std::uint64_t& out) { out = v.get<std::uint64_t>(); }
void assign_from_json(const json& v, std::vector<int>& out) {
  out = v.get<std::vector<int>>();
}
void assign_from_json(const json& v, std::vector<std::string>& out) {
  out = v.get<std::vector<std::string>>();
}
void assign_from_json(const json& v, std::optional<double>& out) {
  if (v.is_null()) {
    out.reset();
    return;
  }
  double d;
  assign_from_json(v, d);
  out = d;
}

json to_json_value(const std::string& v) { return v; }
json to_json_value(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}
json to_json_value(int v) { return v; }
json to_json_value(bool v) { return v; }
json to_json_value(std::uint64_t v) { return v; }
json to_json_value(const std::vector<int>& v) { return v; }
json to_json_value(const std::vector<std::string>& v) { return v; }
json to_json_value(const std::optional<double>& v) {
  if (!v) return nullptr;
  return to_json_value(*v);
}

}  // namespace

std::string Scenario::to_json() const {
  json out = json::object();
  auto& self = const_cast<Scenario&>(*this);
  for_each_key(self, [&out](const char* key, auto& field) {
    out[key] = to_json_value(field);
  });
  return out.dump(2);
}

std::string Scenario::hash() const {
  const std::string text = to_json();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Scenario scenario_from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario parse error: ") + e.what());
  }
  if (!parsed.is_object())
    throw std::invalid_argument("scenario file must hold a JSON object");

  Scenario s;
  json remaining = parsed;
  for_each_key(s, [&](const char* key, auto& field) {
    auto it = remaining.find(key);
    if (it == remaining.end()) return;
    try {
      assign_from_json(*it, field);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("scenario key '") + key +
                                  "': " + e.what());
    }
    remaining.erase(it);
  });
  if (!remaining.empty()) {
    throw std::invalid_argument("unknown scenario key: " +
                                remaining.begin().key());
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

void apply_override(Scenario& s, const std::string& key_value) {
  const auto eq = key_value.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("override must be key=value: " + key_value);
  const std::string key = key_value.substr(0, eq);
  const std::string value = key_value.substr(eq + 1);

  bool applied = false;
  for_each_key(s, [&](const char* k, auto& field) {
    if (applied || key != k) return;
    json v;
    try {
      v = json::parse(value);
    } catch (const json::exception&) {
      v = value;  // bare strings allowed without quotes
    }
    try {
      assign_from_json(v, field);
    } catch (const json::exception& e) {
      throw std::invalid_argument("override '" + key + "': " + e.what());
    }
    applied = true;
  });
  if (!applied) throw std::invalid_argument("unknown scenario key: " + key);
}

}  // namespace splitnlc::experiments
