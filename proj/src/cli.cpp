#include "stpursuit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "stpursuit/config.hpp"
#include "stpursuit/figures.hpp"
#include "stpursuit/reachability.hpp"
#include "stpursuit/trigger_laws.hpp"

namespace stpursuit::cli {

namespace fs = std::filesystem;

namespace {

struct LawArgs {
  std::map<std::string, double> values;  // d, nu, gamma, beta, eps, d0

  double get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw DomainError("missing required parameter --" + key);
    return it->second;
  }
};

using Law = std::function<double(const LawArgs&)>;

const std::map<std::string, Law>& laws() {
  static const std::map<std::string, Law> table{
      {"phi", [](const LawArgs& a) { return phi_exact(a.get("d"), a.get("nu")); }},
      {"phi_noisy", [](const LawArgs& a) { return phi_noisy(a.get("d"), a.get("gamma"), a.get("nu")); }},
      {"phi_beta", [](const LawArgs& a) { return phi_beta(a.get("d"), a.get("beta"), a.get("nu")); }},
      {"h", [](const LawArgs& a) { return contraction_h(a.get("nu")); }},
      {"h_beta", [](const LawArgs& a) { return contraction_h_beta(a.get("beta"), a.get("nu")); }},
      {"n_max", [](const LawArgs& a) {
         return static_cast<double>(max_samples(a.get("d0"), a.get("eps"), a.get("nu")));
       }},
      {"n_max_beta", [](const LawArgs& a) {
         return static_cast<double>(max_samples_beta(a.get("d0"), a.get("eps"), a.get("beta"), a.get("nu")));
       }},
      {"beta_max", [](const LawArgs& a) { return beta_max(a.get("nu")); }},
      {"t_cap_bound", [](const LawArgs& a) { return capture_time_bound(a.get("d0"), a.get("eps"), a.get("nu")); }},
      {"q", [](const LawArgs& a) { return min_interevent(1.0, a.get("nu")); }},
      {"delta_phi_star", [](const LawArgs& a) { return delta_phi_star(a.get("nu"), a.get("gamma")); }},
  };
  return table;
}

struct Sweep {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int count = 0;
};

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  Sweep s;
  char tail = 0;
  if (eq == std::string::npos ||
      std::sscanf(text.c_str() + eq + 1, "%lf:%lf:%d%c", &s.from, &s.to, &s.count, &tail) != 3) {
    throw DomainError("--sweep expects param=a:b:n, got '" + text + "'");
  }
  s.param = text.substr(0, eq);
  if (s.count < 1) throw DomainError("--sweep needs n >= 1");
  return s;
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << body;
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

// --out, then the environment, then the config file, then the working directory.
fs::path output_dir(const std::string& flag, const RunConfig& config) {
  fs::path dir = ".";
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    dir = env;
  } else if (config.output_dir) {
    dir = *config.output_dir;
  }
  fs::create_directories(dir);
  return dir;
}

RunConfig config_from(const std::string& path) {
  return path.empty() ? default_run_config() : load_run_config(path);
}

int cmd_law(const std::string& quantity, const LawArgs& args, const std::string& sweep_text,
            std::ostream& out) {
  const auto it = laws().find(quantity);
  if (it == laws().end()) throw DomainError("unknown quantity '" + quantity + "'");
  if (sweep_text.empty()) {
    out << format_number(it->second(args)) << '\n';
    return kOk;
  }
  const Sweep sweep = parse_sweep(sweep_text);
  static const std::vector<std::string> known{"d", "nu", "gamma", "beta", "eps", "d0"};
  if (std::find(known.begin(), known.end(), sweep.param) == known.end()) {
    throw DomainError("cannot sweep unknown parameter '" + sweep.param + "'");
  }
  std::ostringstream body;  // emit nothing if any point is inadmissible
  body << sweep.param << ',' << quantity << '\n';
  LawArgs point = args;
  for (int i = 0; i < sweep.count; ++i) {
    const double x = sweep.count == 1
                         ? sweep.from
                         : sweep.from + (sweep.to - sweep.from) * i / (sweep.count - 1);
    point.values[sweep.param] = x;
    body << format_number(x) << ',' << format_number(it->second(point)) << '\n';
  }
  out << body.str();
  return kOk;
}

int cmd_figure(const std::string& id, double d0, int points, const std::string& out_flag,
               std::ostream& out) {
  const FigureTable table = figure_data(id, d0, points);
  std::ostringstream body;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    body << (i ? "," : "") << table.header[i];
  }
  body << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << format_number(row[i]);
    body << '\n';
  }
  const fs::path path = output_dir(out_flag, RunConfig{}) / (id + ".csv");
  write_file(path, body.str());
  out << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_simulate(const std::string& config_path, const std::string& out_flag, std::ostream& out,
                 std::ostream& err) {
  const RunConfig config = config_from(config_path);
  const EventLog log = stpursuit::run(config.scenario);
  const Verification v = verify(config.scenario, log);
  const fs::path dir = output_dir(out_flag, config);
  write_file(dir / "trace.csv", trace_csv(log));
  write_file(dir / "summary.json", summary_json(log, v));
  out << "wrote " << (dir / "trace.csv").string() << " and " << (dir / "summary.json").string() << '\n';
  for (const auto& msg : v.violations) err << "violation: " << msg << '\n';
  return v.violations.empty() ? kOk : kViolation;
}

int cmd_table1(const std::string& config_path, const std::string& out_flag, std::ostream& out,
               std::ostream& err) {
  const RunConfig config = config_from(config_path);
  Scenario memoryless = config.scenario;
  memoryless.trigger_mode = TriggerMode::noisy;
  Scenario memory = config.scenario;
  memory.trigger_mode = TriggerMode::memory;

  const EventLog a = stpursuit::run(memoryless);
  const EventLog b = stpursuit::run(memory);
  const fs::path path = output_dir(out_flag, config) / "table1.csv";
  write_file(path, table1_csv(a, b));
  out << "wrote " << path.string() << '\n';

  bool clean = true;
  for (const auto& [name, sc, log] : {std::tuple{"memoryless", &memoryless, &a},
                                      std::tuple{"memory", &memory, &b}}) {
    for (const auto& msg : verify(*sc, *log).violations) {
      err << "violation (" << name << "): " << msg << '\n';
      clean = false;
    }
  }
  return clean ? kOk : kViolation;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string trace_csv(const EventLog& log) {
  std::ostringstream s;
  s << "k,t_k,D_true,D_hat,phi_k\n";
  for (const auto& r : log.rows) {
    s << r.k << ',' << format_number(r.t) << ',' << format_number(r.d_true) << ','
      << format_number(r.d_hat) << ',' << format_number(r.phi) << '\n';
  }
  return s.str();
}

std::string table1_csv(const EventLog& memoryless, const EventLog& memory) {
  std::ostringstream s;
  s << "k,D_k,phi_k,phi_over_D,Dbar_k,phihat_k,phihat_over_Dbar\n";
  const std::size_t n = std::max(memoryless.rows.size(), memory.rows.size());
  auto cells = [&](const EventLog& log, std::size_t k) {
    if (k >= log.rows.size()) return std::string(",,");
    const auto& r = log.rows[k];
    return format_number(r.d_true) + ',' + format_number(r.phi) + ',' +
           format_number(r.phi / r.d_true);
  };
  for (std::size_t k = 0; k < n; ++k) {
    s << k << ',' << cells(memoryless, k) << ',' << cells(memory, k) << '\n';
  }
  return s.str();
}

std::string summary_json(const EventLog& log, const Verification& v) {
  nlohmann::ordered_json j;
  j["capture_time"] = log.capture_time ? nlohmann::ordered_json(*log.capture_time) : nullptr;
  j["samples_used"] = log.samples_used;
  j["out_of_tolerance_samples"] = log.out_of_tolerance_samples;
  j["bounds"] = {{"n_max", v.n_max}, {"t_cap_bound", v.t_cap_bound}, {"min_interevent", v.min_interevent}};
  j["violations"] = v.violations;
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-triggered pursuit-evasion engine", "stpursuit"};
  app.require_subcommand(1);

  std::string quantity;
  std::string sweep;
  LawArgs law_args;
  std::map<std::string, double> law_flags;
  auto* law = app.add_subcommand("law", "Evaluate a closed-form law");
  law->add_option("quantity", quantity, "phi, phi_noisy, phi_beta, h, h_beta, n_max, n_max_beta, "
                                        "beta_max, t_cap_bound, q, delta_phi_star")
      ->required();
  for (const char* key : {"d", "nu", "gamma", "beta", "eps", "d0"}) {
    law->add_option_function<double>(std::string("--") + key,
                                      [&law_args, key](double v) { law_args.values[key] = v; });
  }
  law->add_option("--sweep", sweep, "param=a:b:n, prints a CSV column pair");

  std::string figure_id;
  double d0 = 15.0;
  int points = 100;
  std::string out_flag;
  auto* figure = app.add_subcommand("figure", "Write curve data for fig2, fig3, fig6 or fig8");
  figure->add_option("id", figure_id)->required();
  figure->add_option("--d0", d0, "initial separation for the sample-count curves");
  figure->add_option("--points", points, "samples per curve");
  figure->add_option("--out", out_flag, "output directory");

  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario, write trace.csv and summary.json");
  auto* table1 = app.add_subcommand("table1", "Paired memoryless / memory-aware runs");
  for (auto* sub : {simulate, table1}) {
    sub->add_option("--config", config_path, "key = value scenario file");
    sub->add_option("--out", out_flag, "output directory");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (law->parsed()) return cmd_law(quantity, law_args, sweep, out);
    if (figure->parsed()) return cmd_figure(figure_id, d0, points, out_flag, out);
    if (simulate->parsed()) return cmd_simulate(config_path, out_flag, out, err);
    return cmd_table1(config_path, out_flag, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace stpursuit::cli
