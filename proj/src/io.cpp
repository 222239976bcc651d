//! \file io.cpp
//! \brief Config parsing and output writers.

#include "godrad/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace godrad {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string normalize_key(std::string_view key) {
  std::string k = trim(key);
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

double parse_number(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("invalid number '" + t + "' for " + std::string(key));
  return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || v == 0)
    throw ConfigError("invalid cell count '" + t + "' for " + std::string(key));
  return v;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view to_string(WaveSpeeds w) {
  return w == WaveSpeeds::effective ? "effective" : "plain";
}
std::string_view to_string(Reconstruction r) { return r == Reconstruction::plm ? "plm" : "pcm"; }

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv.emplace_back(std::move(key), trim(std::string_view(body).substr(eq + 1)));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_key_values(in);
}

void RunConfig::set(std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  const std::string v = trim(value);
  if (key == "problem") {
    problem = v;
  } else if (key == "ncell") {
    ncell = parse_count(key, v);
  } else if (key == "ladder") {
    ladder.clear();
    for (const auto& item : split_list(v)) ladder.push_back(parse_count(key, item));
  } else if (key == "cfl") {
    cfl = parse_number(key, v);
  } else if (key == "dt-mode") {
    dt_mode = parse_dt_mode(v);
  } else if (key == "tfinal") {
    t_final = parse_number(key, v);
  } else if (key == "outputs") {
    outputs.clear();
    for (const auto& item : split_list(v)) outputs.push_back(parse_number(key, item));
  } else if (key == "wave-speeds") {
    if (v == "effective") wave_speeds = WaveSpeeds::effective;
    else if (v == "plain") wave_speeds = WaveSpeeds::plain;
    else throw ConfigError("wave-speeds must be effective or plain");
  } else if (key == "reconstruction") {
    if (v == "plm") reconstruction = Reconstruction::plm;
    else if (v == "pcm") reconstruction = Reconstruction::pcm;
    else throw ConfigError("reconstruction must be plm or pcm");
  } else if (key == "limiting") {
    if (v == "conserved") limiting = SlopeLimiting::conserved;
    else if (v == "characteristic") limiting = SlopeLimiting::characteristic;
    else throw ConfigError("limiting must be conserved or characteristic");
  } else if (key == "bc") {
    bc = parse_boundary(v);
  } else if (key == "out-dir") {
    if (v.empty()) throw ConfigError("out-dir must not be empty");
    out_dir = v;
  } else if (key == "cc") {
    cc = parse_number(key, v);
  } else if (key == "sigma-a") {
    sigma_a = parse_number(key, v);
  } else if (key == "sigma-t") {
    sigma_t = parse_number(key, v);
  } else if (key == "f") {
    f = parse_number(key, v);
  } else if (key == "temperature") {
    temperature = parse_number(key, v);
  } else {
    throw ConfigError("unknown config key '" + std::string(raw_key) + "'");
  }
}

void RunConfig::apply(const KeyValues& kv) {
  for (const auto& [k, v] : kv) set(k, v);
}

ResolvedRun resolve(const RunConfig& cfg) {
  if (cfg.problem.empty()) throw ConfigError("no problem given");
  ResolvedRun run;
  run.spec = problem_from_name(cfg.problem);
  ProblemSpec& s = run.spec;
  if (cfg.cc) s.cc = *cfg.cc;
  if (cfg.sigma_a) s.sigma_a = *cfg.sigma_a;
  if (cfg.sigma_t) s.sigma_t = *cfg.sigma_t;
  if (cfg.f) s.f = *cfg.f;
  if (cfg.temperature) s.temperature = *cfg.temperature;
  if (cfg.bc) s.bc = *cfg.bc;
  // parameter invariants, independent of the temperature model
  PhysParams::make(s.cc, s.sigma_a, s.sigma_t, s.f,
                   MaterialTemperature::uniform_temperature(s.temperature));

  run.control = s.control;
  if (cfg.cfl) run.control.cfl = *cfg.cfl;
  if (cfg.dt_mode) run.control.mode = *cfg.dt_mode;
  if (cfg.t_final) run.control.t_final = *cfg.t_final;

  run.outputs = cfg.outputs;
  if (run.outputs.empty()) run.outputs.push_back(run.control.t_final);
  for (std::size_t k = 0; k < run.outputs.size(); ++k) {
    if (!(run.outputs[k] > 0.0) || !std::isfinite(run.outputs[k]))
      throw ConfigError("output times must be positive");
    if (k > 0 && !(run.outputs[k] > run.outputs[k - 1]))
      throw ConfigError("output times must be strictly increasing");
  }
  run.control.t_final = run.outputs.back();

  run.ladder = cfg.ladder.empty() ? s.ladder : cfg.ladder;
  run.n_cell = cfg.ncell ? *cfg.ncell : s.ladder.back();

  run.options.wave_speeds = cfg.wave_speeds;
  run.options.reconstruction.kind = cfg.reconstruction;
  run.options.reconstruction.limiting = cfg.limiting;
  run.options.bc = s.bc;

  if (s.bc == BoundaryKind::periodic && run.n_cell < 2)
    throw ConfigError("periodic boundaries need at least two cells");
  PhysParams check = PhysParams::make(s.cc, s.sigma_a, s.sigma_t, s.f,
                                      MaterialTemperature::radiation_equilibrium());
  nominal_dt(run.control, (s.x_max - s.x_min) / static_cast<double>(run.n_cell), check);
  return run;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_snapshot(std::ostream& out, const ResolvedRun& run, const GridField& grid,
                    double time) {
  const ProblemSpec& s = run.spec;
  out << "# problem = " << s.name << '\n'
      << "# time = " << format_double(time) << '\n'
      << "# ncell = " << grid.n_cell() << '\n'
      << "# x_min = " << format_double(grid.x_min()) << '\n'
      << "# x_max = " << format_double(grid.x_max()) << '\n'
      << "# cc = " << format_double(s.cc) << '\n'
      << "# sigma_a = " << format_double(s.sigma_a) << '\n'
      << "# sigma_t = " << format_double(s.sigma_t) << '\n'
      << "# f = " << format_double(s.f) << '\n'
      << "# cfl = " << format_double(run.control.cfl) << '\n'
      << "# dt_mode = " << to_string(run.control.mode) << '\n'
      << "# wave_speeds = " << to_string(run.options.wave_speeds) << '\n'
      << "# reconstruction = " << to_string(run.options.reconstruction.kind) << '\n'
      << "# bc = " << to_string(run.options.bc) << '\n';
  const auto ref = reference_on(s, grid, time);
  out << (ref ? "x,e_r,f_r,e_ref,f_ref\n" : "x,e_r,f_r\n");
  for (std::size_t i = 0; i < grid.n_cell(); ++i) {
    out << format_double(grid.cell_center(static_cast<long>(i))) << ','
        << format_double(grid[i].e_r) << ',' << format_double(grid[i].f_r);
    if (ref) out << ',' << format_double((*ref)[i].e_r) << ',' << format_double((*ref)[i].f_r);
    out << '\n';
  }
}

namespace {

std::string rate_text(const std::optional<double>& r) { return r ? format_double(*r) : ""; }

}  // namespace

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "# problem = " << report.problem << '\n'
      << "# comparison = "
      << (report.comparison == Comparison::analytic ? "analytic" : "self_similar") << '\n'
      << "# t_final = " << format_double(report.t_final) << '\n'
      << "# dt_mode = " << to_string(report.dt_mode) << '\n'
      << "n_cell,l1_e_r,rate_l1_e_r,linf_e_r,rate_linf_e_r,"
         "l1_f_r,rate_l1_f_r,linf_f_r,rate_linf_f_r\n";
  for (const auto& row : report.rows) {
    out << row.n_cell << ',' << format_double(row.norms.e_r.l1) << ','
        << rate_text(row.rates.e_l1) << ',' << format_double(row.norms.e_r.linf) << ','
        << rate_text(row.rates.e_linf) << ',' << format_double(row.norms.f_r.l1) << ','
        << rate_text(row.rates.f_l1) << ',' << format_double(row.norms.f_r.linf) << ','
        << rate_text(row.rates.f_linf) << '\n';
  }
}

void render_convergence_table(std::ostream& out, const ConvergenceReport& report) {
  auto err = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1E", v);
    return std::string(buf);
  };
  auto rate = [](const std::optional<double>& r) {
    if (!r) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", *r);
    return std::string(buf);
  };
  char line[256];
  std::snprintf(line, sizeof(line), "%7s | %9s | %4s | %10s | %4s | %9s | %4s | %10s | %4s\n",
                "N_cell", "L1(E_r)", "Rate", "Linf(E_r)", "Rate", "L1(F_r)", "Rate",
                "Linf(F_r)", "Rate");
  out << report.problem << " ("
      << (report.comparison == Comparison::analytic ? "analytic" : "self-similar")
      << " comparison, " << to_string(report.dt_mode)
      << " dt, t = " << format_double(report.t_final) << ")\n"
      << line;
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof(line),
                  "%7zu | %9s | %4s | %10s | %4s | %9s | %4s | %10s | %4s\n", row.n_cell,
                  err(row.norms.e_r.l1).c_str(), rate(row.rates.e_l1).c_str(),
                  err(row.norms.e_r.linf).c_str(), rate(row.rates.e_linf).c_str(),
                  err(row.norms.f_r.l1).c_str(), rate(row.rates.f_l1).c_str(),
                  err(row.norms.f_r.linf).c_str(), rate(row.rates.f_linf).c_str());
    out << line;
  }
}

}  // namespace godrad
