// Copyright 2026 The enwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "csv_format.hpp"
#include "enwit/enwit.hpp"

namespace enwit::cli {

void GridSpec::validate(const char* name) const {
  if (steps < 1) {
    throw InvalidArgument(std::string(name) + " grid: steps must be >= 1");
  }
  if (!(min <= max) || !std::isfinite(min) || !std::isfinite(max)) {
    throw InvalidArgument(std::string(name) + " grid: need min <= max");
  }
  if (steps > 1 && !(max > min)) {
    throw InvalidArgument(std::string(name) +
                          " grid: min == max requires steps = 1");
  }
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    out[k] = steps == 1 ? min
                        : min + (max - min) * static_cast<double>(k) /
                                    static_cast<double>(steps - 1);
  }
  if (steps > 1) out.back() = max;
  return out;
}

std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) +
                            ": expected key:value");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key.empty() || key == "config") {
      throw InvalidArgument("config line " + std::to_string(line_no) +
                            ": bad key '" + key + "'");
    }
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

namespace {

struct RunConfig {
  // model
  std::string model = "xxx";
  std::optional<double> coupling_j;
  double field_b = 0.0;
  std::size_t n_sites = 2;
  std::string boundary = "open";
  bool double_count = false;
  std::string pauli_file;
  // separability energy
  std::optional<std::string> policy;  // default: exact
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::string partition;
  // grids
  GridSpec b_grid{0.0, 0.0, 1};
  GridSpec t_grid{0.01, 4.0, 400};
  // state / measurement
  std::string state;
  std::optional<double> temperature;
  std::optional<double> energy;
  std::size_t shots = 100000;
  double z = 3.0;
  // output
  std::string output = "-";
  std::string output_dir = ".";
  int precision = 10;
  std::string config_path;
};

void add_model_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--model", c.model, "xxx | pauli-file")
      ->check(CLI::IsMember({"xxx", "pauli-file"}));
  sub->add_option("--J", c.coupling_j, "Heisenberg coupling J (> 0)");
  sub->add_option("--B", c.field_b, "Magnetic field B");
  sub->add_option("--n-sites", c.n_sites, "Chain length");
  sub->add_option("--boundary", c.boundary, "open | periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  sub->add_flag("--double-count-two-site-bond", c.double_count,
                "Two-site periodic chain: count the bond twice");
  sub->add_option("--pauli-file", c.pauli_file,
                  "Pauli-string Hamiltonian, one '<coef> <letters>' per line");
}

void add_esep_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--policy", c.policy, "exact | closed-form | fixed:<value>");
  sub->add_option("--restarts", c.restarts, "Seesaw restarts");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--partition", c.partition,
                  "Blocks such as 0,1|2 (default: one block per site)");
}

void add_precision_option(CLI::App* sub, RunConfig& c) {
  sub->add_option("--precision", c.precision, "Significant digits (6-17)")
      ->check(CLI::Range(6, 17));
}

void add_grid_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--B-min", c.b_grid.min);
  sub->add_option("--B-max", c.b_grid.max);
  sub->add_option("--B-steps", c.b_grid.steps);
  sub->add_option("--T-min", c.t_grid.min);
  sub->add_option("--T-max", c.t_grid.max);
  sub->add_option("--T-steps", c.t_grid.steps);
}

void add_state_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--state", c.state,
                  "singlet | maximally-mixed | product:i,j,... | "
                  "pure:a0,a1,... | thermal | ground")
      ->required();
  sub->add_option("--T", c.temperature, "Temperature for --state thermal");
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  std::string out = s.str();
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

struct Model {
  HermitianOperator hamiltonian;
  std::optional<XXXParams> xxx;
};

XXXParams xxx_params(const RunConfig& c) {
  if (!c.coupling_j) throw InvalidArgument("--J is required for --model xxx");
  XXXParams p;
  p.coupling_j = *c.coupling_j;
  p.field_b = c.field_b;
  p.n_sites = c.n_sites;
  p.boundary = c.boundary == "periodic" ? Boundary::kPeriodic : Boundary::kOpen;
  p.double_count_two_site_bond = c.double_count;
  p.validate();
  return p;
}

Model load_model(const RunConfig& c) {
  if (c.model == "xxx") {
    const XXXParams p = xxx_params(c);
    return {build_xxx(p), p};
  }
  if (c.pauli_file.empty()) {
    throw InvalidArgument("--model pauli-file requires --pauli-file");
  }
  std::ifstream in(c.pauli_file);
  if (!in) throw InvalidArgument("cannot open '" + c.pauli_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::vector<PauliString> terms = parse_pauli_terms(buf.str());
  if (terms.empty()) throw InvalidArgument("pauli file has no terms");
  return {build_pauli(SystemShape::qubits(terms.front().letters.size()), terms),
          std::nullopt};
}

bool model_requested(const RunConfig& c) {
  return c.coupling_j.has_value() || c.model == "pauli-file";
}

Partition partition_for(const RunConfig& c, const SystemShape& shape) {
  return c.partition.empty() ? Partition::singletons(shape.num_sites())
                             : Partition::parse(c.partition, shape.num_sites());
}

EsepPolicy policy_for(const RunConfig& c, const SystemShape& shape) {
  EsepPolicy policy = EsepPolicy::parse(c.policy.value_or("exact"));
  policy.seesaw.restarts = c.restarts;
  policy.seesaw.seed = c.seed;
  if (!c.partition.empty()) policy.partition = partition_for(c, shape);
  return policy;
}

SepEnergyReport resolve_esep(const RunConfig& c, const Model& m) {
  const EsepPolicy policy = policy_for(c, m.hamiltonian.shape());
  if (m.xxx) return policy.evaluate(*m.xxx, m.hamiltonian);
  switch (policy.kind) {
    case EsepPolicy::Kind::kExact:
      return esep_seesaw(m.hamiltonian,
                         partition_for(c, m.hamiltonian.shape()),
                         policy.seesaw);
    case EsepPolicy::Kind::kFixed:
      return esep_reference(policy.fixed_value);
    case EsepPolicy::Kind::kClosedForm:
      break;
  }
  throw InvalidArgument("--policy closed-form requires --model xxx");
}

DensityMatrix parse_state(const RunConfig& c,
                          const std::optional<Model>& model) {
  const std::string& s = c.state;
  const SystemShape default_shape =
      model ? model->hamiltonian.shape() : SystemShape::qubits(2);
  auto parse_list = [&](std::string_view body) {
    std::vector<double> out;
    std::stringstream ss{std::string(body)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidArgument("--state: bad number '" + item + "'");
      }
    }
    return out;
  };

  if (s == "singlet") {
    Vector v(4);
    v << 0.0, 1.0, -1.0, 0.0;
    return DensityMatrix::from_pure(SystemShape::qubits(2), v);
  }
  if (s == "maximally-mixed") return DensityMatrix::maximally_mixed(default_shape);
  if (s.starts_with("product:")) {
    const std::vector<double> bits = parse_list(std::string_view(s).substr(8));
    Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << bits.size()));
    std::size_t idx = 0;
    for (double b : bits) {
      if (b != 0.0 && b != 1.0) {
        throw InvalidArgument("--state product: entries must be 0 or 1");
      }
      idx = 2 * idx + static_cast<std::size_t>(b);
    }
    if (bits.empty()) throw InvalidArgument("--state product: no sites");
    v(static_cast<Eigen::Index>(idx)) = 1.0;
    return DensityMatrix::from_pure(SystemShape::qubits(bits.size()), v);
  }
  if (s.starts_with("pure:")) {
    const std::vector<double> amps = parse_list(std::string_view(s).substr(5));
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if (n < 1 || (std::size_t{1} << n) != amps.size()) {
      throw InvalidArgument("--state pure: need 2^n amplitudes");
    }
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = amps[i];
    return DensityMatrix::from_pure(SystemShape::qubits(n), v);
  }
  if (s == "thermal" || s == "ground") {
    if (!model) throw InvalidArgument("--state " + s + " needs a model (--J)");
    if (s == "ground") return ground_state(model->hamiltonian);
    if (!c.temperature) throw InvalidArgument("--state thermal needs --T");
    if (*c.temperature < 0.0) throw InvalidArgument("--T must be >= 0");
    if (*c.temperature == 0.0) return ground_state(model->hamiltonian);
    return gibbs(model->hamiltonian, *c.temperature).first;
  }
  throw InvalidArgument("unknown --state '" + s + "'");
}

std::unique_ptr<std::ostream> open_output(const std::string& path,
                                          std::ostream& fallback,
                                          std::ostream*& target) {
  if (path == "-") {
    target = &fallback;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file) throw InvalidArgument("cannot write '" + path + "'");
  target = file.get();
  return file;
}

// --- subcommands -----------------------------------------------------------

void cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const Model m = load_model(c);
  std::optional<SepEnergyReport> esep;
  if (c.policy) esep = resolve_esep(c, m);
  const SpectrumSummary s =
      summarize(m.hamiltonian,
                esep ? std::optional<double>(esep->esep) : std::nullopt);
  out << "dimension=" << m.hamiltonian.dimension() << '\n';
  out << "e_min=" << format_double(s.e_min, c.precision) << '\n';
  out << "e_max=" << format_double(s.e_max, c.precision) << '\n';
  out << "levels=" << s.levels.size() << '\n';
  for (const EnergyLevel& l : s.levels) {
    out << "level energy=" << format_double(l.energy, c.precision)
        << " degeneracy=" << l.degeneracy << '\n';
  }
  if (esep) {
    out << "esep=" << format_double(esep->esep, c.precision) << '\n';
    out << "entanglement_gap=" << format_double(*s.gap_to_esep, c.precision)
        << '\n';
  }
}

void cmd_esep(const RunConfig& c, std::ostream& out) {
  const Model m = load_model(c);
  const SepEnergyReport r = resolve_esep(c, m);
  out << "esep=" << fixed(r.esep, c.precision) << '\n';
  out << "source=" << to_string(r.source) << '\n';
  out << "restarts_used=" << r.restarts_used << '\n';
  out << "converged=" << (r.converged ? "true" : "false") << '\n';
  if (r.minimizer) {
    const ProductStateAnsatz& a = *r.minimizer;
    out << "partition=" << a.partition.to_string() << '\n';
    for (std::size_t b = 0; b < a.block_states.size(); ++b) {
      if (a.block_states[b].size() != 2) continue;
      const BlochAngles ang = bloch_angles(a.block_states[b]);
      out << "block " << b << " theta=" << fixed(ang.theta, c.precision)
          << " phi=" << fixed(ang.phi, c.precision) << '\n';
    }
  }
}

void cmd_witness(const RunConfig& c, std::ostream& out) {
  const Model m = load_model(c);
  const WitnessSpec w = make_witness(m.hamiltonian, resolve_esep(c, m));
  const int p = c.precision;
  out << "esep=" << format_double(w.esep, p) << '\n';
  out << "source=" << to_string(w.esep_source) << '\n';
  out << "e_min=" << format_double(w.e_min, p) << '\n';
  out << "e_max=" << format_double(w.e_max, p) << '\n';
  out << "A=" << format_double(w.normalizer, p) << '\n';
  out << "entanglement_gap=" << format_double(w.esep - w.e_min, p) << '\n';
  out << "esep_below_ground=" << (w.esep_below_ground ? "true" : "false")
      << '\n';
  const Eigen::VectorXd ev = eigenvalues(w.normalized());
  out << "witness_eigenvalues=";
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    out << (k ? "," : "") << format_double(ev(k), p);
  }
  out << '\n';
  std::optional<double> mean = c.energy;
  if (!mean && c.temperature) {
    mean = *c.temperature == 0.0
               ? w.e_min
               : gibbs(m.hamiltonian, *c.temperature).second.mean_energy;
  }
  if (mean) {
    const BoundReport r = robustness_lower_bound(w, *mean);
    out << "mean_energy=" << format_double(r.mean_energy, p) << '\n';
    out << "bound_raw=" << format_double(r.bound, p) << '\n';
    out << "bound_clipped=" << format_double(r.clipped(), p) << '\n';
    out << "detected=" << (r.detected ? "true" : "false") << '\n';
  }
}

void cmd_bound_sweep(const RunConfig& c, std::ostream& out) {
  if (c.model != "xxx") {
    throw InvalidArgument("bound-sweep supports --model xxx only");
  }
  c.b_grid.validate("B");
  c.t_grid.validate("T");
  if (c.t_grid.min < 0.0) throw InvalidArgument("T grid: temperatures >= 0");
  const XXXParams base = xxx_params(c);
  const EsepPolicy policy = policy_for(c, SystemShape::qubits(base.n_sites));
  const std::vector<double> temps = c.t_grid.values();
  const std::vector<double> fields = c.b_grid.values();
  const std::vector<SweepCell> rows = bound_sweep(base, policy, temps, fields);
  std::ostream* target = nullptr;
  const auto file = open_output(c.output, out, target);
  write_sweep_csv(*target, rows, c.precision);
  target->flush();
  if (!*target) throw InvalidArgument("failed writing '" + c.output + "'");
}

void cmd_robustness(const RunConfig& c, std::ostream& out) {
  std::optional<Model> model;
  if (model_requested(c) || c.state == "thermal" || c.state == "ground") {
    model = load_model(c);
  }
  const DensityMatrix rho = parse_state(c, model);
  const RobustnessCertificate cert = rg_exact_2q(rho);
  const EntanglementTest ppt = is_entangled_2q(rho);
  const int p = c.precision;
  out << "state=" << c.state << '\n';
  out << "rg_value=" << fixed(cert.rg_value, p) << '\n';
  out << "duality_gap=" << format_double(cert.duality_gap, 3) << '\n';
  out << "primal_value=" << fixed(cert.primal_value, p) << '\n';
  out << "dual_value=" << fixed(cert.dual_value, p) << '\n';
  out << "ppt_margin=" << format_double(ppt.margin, p) << '\n';
  out << "entangled=" << (ppt.entangled ? "true" : "false") << '\n';
  if (model) {
    const WitnessSpec w = make_witness(model->hamiltonian, resolve_esep(c, *model));
    const BoundReport r =
        robustness_lower_bound(w, expectation(model->hamiltonian, rho));
    out << "mean_energy=" << format_double(r.mean_energy, p) << '\n';
    out << "esep=" << format_double(r.esep, p) << '\n';
    out << "A=" << format_double(r.normalizer, p) << '\n';
    out << "bound=" << fixed(r.clipped(), p) << '\n';
    out << "bound_le_rg="
        << (r.clipped() <= cert.rg_value + cert.duality_gap + 1e-9 ? "true"
                                                                   : "false")
        << '\n';
  }
}

void cmd_measure(const RunConfig& c, std::ostream& out) {
  if (c.shots < 1) throw InvalidArgument("--shots must be >= 1");
  if (!(c.z >= 0.0)) throw InvalidArgument("--z must be >= 0");
  const Model model = load_model(c);
  const DensityMatrix rho = parse_state(c, model);
  const EnergyEstimate est = measure_energy(model.hamiltonian, rho, c.shots, c.seed);
  const WitnessSpec w = make_witness(model.hamiltonian, resolve_esep(c, model));
  const BoundInterval iv = bound_with_confidence(w, est, c.z);
  const int p = c.precision;
  out << "shots=" << est.shots << '\n';
  out << "seed=" << est.seed << '\n';
  out << "mean=" << format_double(est.mean, p) << '\n';
  out << "stderr=" << format_double(est.standard_error, p) << '\n';
  if (est.single_shot) out << "note=single shot, stderr set to 0\n";
  out << "exact_mean=" << format_double(expectation(model.hamiltonian, rho), p)
      << '\n';
  out << "esep=" << format_double(w.esep, p) << '\n';
  out << "A=" << format_double(w.normalizer, p) << '\n';
  out << "z=" << format_double(c.z, p) << '\n';
  out << "bound_lower=" << format_double(iv.lower, p) << '\n';
  out << "bound_upper=" << format_double(iv.upper, p) << '\n';
  out << "detected=" << (iv.detected ? "true" : "false") << '\n';
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<SweepCell>& rows, int digits) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path.string() + "'");
  write_sweep_csv(f, rows, digits);
  f.flush();
  if (!f) throw InvalidArgument("failed writing '" + path.string() + "'");
}

void cmd_reproduce_figure(const RunConfig& c, std::ostream& out) {
  XXXParams base;  // J = 1, k_B = 1
  const std::vector<double> temps = GridSpec{0.01, 4.0, 400}.values();
  const std::vector<double> fields = GridSpec{0.0, 2.0, 41}.values();
  const std::vector<double> zero_field = {0.0};

  const std::filesystem::path dir(c.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create '" + dir.string() + "'");

  const auto preset = bound_sweep(base, EsepPolicy::parse("fixed:-2"), temps,
                                  zero_field);
  const auto closed = bound_sweep(base, EsepPolicy::parse("closed-form"),
                                  temps, fields);
  const auto preset_path = dir / "figure1_preset_B0.csv";
  const auto closed_path = dir / "figure1_closed_form.csv";
  write_csv_file(preset_path, preset, c.precision);
  write_csv_file(closed_path, closed, c.precision);
  out << "wrote " << preset_path.string() << " (" << preset.size()
      << " rows, policy fixed:-2, B=0)\n";
  out << "wrote " << closed_path.string() << " (" << closed.size()
      << " rows, policy closed-form, B in [0, 2])\n";
}

// Inserts config-file arguments right after the subcommand name so that
// explicit flags, which come later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;
  std::vector<std::string> out;
  out.push_back(args.front());
  const std::vector<std::string> extra = config_file_args(path);
  out.insert(out.end(), extra.begin(), extra.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app{"enwit: entanglement estimates from mean-energy witnesses"};
  app.name("enwit");
  app.require_subcommand(1);

  auto make_sub = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->option_defaults()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--config", c.config_path, "key:value config file");
    return sub;
  };

  CLI::App* spectrum = make_sub("spectrum", "Spectrum summary of a Hamiltonian");
  add_model_options(spectrum, c);
  add_esep_options(spectrum, c);
  add_precision_option(spectrum, c);

  CLI::App* esep = make_sub("esep", "Separability energy");
  add_model_options(esep, c);
  add_esep_options(esep, c);
  add_precision_option(esep, c);

  CLI::App* witness = make_sub("witness", "Normalized energy witness");
  add_model_options(witness, c);
  add_esep_options(witness, c);
  add_precision_option(witness, c);
  witness->add_option("--energy", c.energy, "Measured mean energy");
  witness->add_option("--T", c.temperature, "Thermal state temperature");

  CLI::App* sweep = make_sub("bound-sweep", "Robustness bound over (B, T) grid");
  add_model_options(sweep, c);
  add_esep_options(sweep, c);
  add_grid_options(sweep, c);
  add_precision_option(sweep, c);
  sweep->add_option("--output", c.output, "CSV path ('-' for stdout)");

  CLI::App* robustness = make_sub("robustness", "Exact two-qubit robustness");
  add_model_options(robustness, c);
  add_esep_options(robustness, c);
  add_state_options(robustness, c);
  add_precision_option(robustness, c);

  CLI::App* measure = make_sub("measure", "Simulated energy measurement");
  add_model_options(measure, c);
  add_esep_options(measure, c);
  add_state_options(measure, c);
  add_precision_option(measure, c);
  measure->add_option("--shots", c.shots, "Number of shots");
  measure->add_option("--z", c.z, "Standard errors in the interval");

  CLI::App* figure = make_sub("reproduce-figure",
                              "Write the temperature/field bound CSVs");
  figure->add_option("--output-dir", c.output_dir, "Directory for CSVs");
  add_precision_option(figure, c);

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (spectrum->parsed()) cmd_spectrum(c, out);
    else if (esep->parsed()) cmd_esep(c, out);
    else if (witness->parsed()) cmd_witness(c, out);
    else if (sweep->parsed()) cmd_bound_sweep(c, out);
    else if (robustness->parsed()) cmd_robustness(c, out);
    else if (measure->parsed()) cmd_measure(c, out);
    else if (figure->parsed()) cmd_reproduce_figure(c, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitOk;
}

}  // namespace enwit::cli
