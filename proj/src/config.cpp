#include "stpursuit/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace stpursuit {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("expected a number, got '" + text + "'");
  }
  return value;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"pursuer_x", [](RunConfig& c, const std::string& v) { c.scenario.pursuer_start.x = parse_number<double>(v); }},
      {"pursuer_y", [](RunConfig& c, const std::string& v) { c.scenario.pursuer_start.y = parse_number<double>(v); }},
      {"evader_x", [](RunConfig& c, const std::string& v) { c.scenario.evader_start.x = parse_number<double>(v); }},
      {"evader_y", [](RunConfig& c, const std::string& v) { c.scenario.evader_start.y = parse_number<double>(v); }},
      {"nu", [](RunConfig& c, const std::string& v) { c.scenario.nu = parse_number<double>(v); }},
      {"epsilon", [](RunConfig& c, const std::string& v) { c.scenario.epsilon = parse_number<double>(v); }},
      {"noise", [](RunConfig& c, const std::string& v) { c.scenario.noise.kind = parse_noise_kind(v); }},
      {"gamma", [](RunConfig& c, const std::string& v) { c.scenario.noise.gamma = parse_number<double>(v); }},
      {"evader_policy", [](RunConfig& c, const std::string& v) { c.scenario.evader_policy = parse_evader_policy(v); }},
      {"trigger_mode", [](RunConfig& c, const std::string& v) { c.scenario.trigger_mode = parse_trigger_mode(v); }},
      {"memory_window", [](RunConfig& c, const std::string& v) { c.scenario.memory_window = parse_number<int>(v); }},
      {"dt", [](RunConfig& c, const std::string& v) { c.scenario.dt = parse_number<double>(v); }},
      {"rng_seed", [](RunConfig& c, const std::string& v) { c.scenario.rng_seed = parse_number<std::uint64_t>(v); }},
      {"max_time", [](RunConfig& c, const std::string& v) { c.scenario.max_time = parse_number<double>(v); }},
      {"output_dir", [](RunConfig& c, const std::string& v) { c.output_dir = v; }},
  };
  return table;
}

}  // namespace

RunConfig default_run_config() {
  RunConfig c;
  c.scenario.pursuer_start = {0.0, 0.0};
  c.scenario.evader_start = {15.0, 0.0};
  c.scenario.nu = 0.5;
  c.scenario.epsilon = 0.75;
  c.scenario.noise = {NoiseKind::uniform_disc, 0.1};
  c.scenario.evader_policy = EvaderPolicy::four_direction;
  c.scenario.trigger_mode = TriggerMode::memory;
  c.scenario.memory_window = 1;
  return c;
}

RunConfig parse_run_config(std::istream& in, const RunConfig& base) {
  RunConfig c = base;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    try {
      if (eq == std::string::npos) throw DomainError("expected key = value");
      const std::string key = trim(std::string_view(body).substr(0, eq));
      const std::string value = trim(std::string_view(body).substr(eq + 1));
      const auto it = setters().find(key);
      if (it == setters().end()) throw DomainError("unknown key '" + key + "'");
      it->second(c, value);
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "config line " << number << ": " << e.what();
      throw DomainError(msg.str());
    }
  }
  c.scenario.validate();
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  return parse_run_config(in);
}

}  // namespace stpursuit
