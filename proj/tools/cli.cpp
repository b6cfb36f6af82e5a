#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "rlfrac/corpus.hpp"
#include "rlfrac/decomposition.hpp"
#include "rlfrac/io.hpp"
#include "rlfrac/operators.hpp"
#include "rlfrac/sobolev.hpp"
#include "rlfrac/verify.hpp"

namespace rlfrac::cli {

namespace {

struct Options {
  // grid
  double x_min = -20.0;
  double x_max = 20.0;
  std::size_t n = 4096;
  std::uint64_t seed = 0;
  // files
  std::string input;
  std::string output;
  std::string json;
  std::string spectrum;
  // operators
  double order = 0.0;
  std::string side = "left";
  std::string method = "spectral";
  // decomposition
  double s = 0.0;
  std::string variant = "symmetric";
  double p = 1.0;
  double q = 1.0;
  // sobolev
  std::vector<double> mu = {0.0, 0.5, 1.0};
  std::optional<double> xi_lo;
  std::optional<double> xi_hi;
  // corpus
  std::string corpus_name;
  // verify
  std::vector<std::string> suites;
  std::optional<double> verify_s;
  std::vector<std::string> tolerances;
  std::string inject_fault;
};

OperatorSide parse_side(const std::string& text) {
  if (text == "left") return OperatorSide::Left;
  if (text == "right") return OperatorSide::Right;
  throw Error(ErrorCode::InvalidParameter, "side must be left or right, got '" + text + "'");
}

UniformGrid grid_of(const Options& o) { return UniformGrid::periodic(o.x_min, o.x_max, o.n); }

// Writes to the named file, or to `out` when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

int cmd_apply(const Options& o, std::ostream& out) {
  const SampledSignal a = read_signal_csv(o.input);
  const OperatorSide side = parse_side(o.side);
  SampledSignal result = SampledSignal::zeros(a.grid());
  if (o.method == "spectral") {
    result = apply_spectral(a, FracOrder(o.order), side);
  } else if (o.method == "grunwald") {
    result = apply_grunwald(a, FracOrder(o.order), side);
  } else {
    throw Error(ErrorCode::InvalidParameter, "method must be spectral or grunwald, got '" + o.method + "'");
  }
  emit(o.output, out, [&](std::ostream& s) { write_signal_csv(s, result); });
  if (!o.spectrum.empty()) write_spectrum_csv(o.spectrum, dft_forward(result));
  return kOk;
}

VariantSpec variant_of(const Options& o) { return VariantSpec(o.s, parse_variant_kind(o.variant), o.p, o.q); }

int cmd_decompose(const Options& o, std::ostream& out) {
  const VariantSpec v = variant_of(o);
  const SampledSignal f = read_signal_csv(o.input);
  const DecompositionResult r = decompose(f, v);
  if (o.output.empty() || o.output == "-") {
    // u on stdout; the JSON summary then needs its own file.
    write_signal_csv(out, r.u);
    if (!o.json.empty()) emit(o.json, out, [&](std::ostream& s) { s << to_json(r, v, "-") << '\n'; });
    return kOk;
  }
  write_signal_csv(o.output, r.u);
  emit(o.json, out, [&](std::ostream& s) { s << to_json(r, v, o.output) << '\n'; });
  return kOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  const VariantSpec v = variant_of(o);
  const SampledSignal u = read_signal_csv(o.input);
  const SampledSignal f = reconstruct(u, v);
  emit(o.output, out, [&](std::ostream& s) { write_signal_csv(s, f); });
  return kOk;
}

int cmd_norms(const Options& o, std::ostream& out) {
  const SampledSignal u = read_signal_csv(o.input);
  std::vector<std::string> rows;
  for (double mu : o.mu) {
    rows.push_back(format_double(mu) + "," + format_double(sobolev_seminorm(u, mu)) + "," +
                   format_double(sobolev_norm(u, mu)));
  }
  emit(o.output, out, [&](std::ostream& s) {
    s << "mu,seminorm,norm\n";
    for (const auto& r : rows) s << r << '\n';
  });
  return kOk;
}

int cmd_decay(const Options& o, std::ostream& out) {
  const SampledSignal u = read_signal_csv(o.input);
  auto [lo, hi] = default_decay_window(u.grid());
  if (o.xi_lo) lo = *o.xi_lo;
  if (o.xi_hi) hi = *o.xi_hi;
  const RegularityFit fit = decay_exponent(u, lo, hi);
  emit(o.output, out, [&](std::ostream& s) { s << to_json(fit) << '\n'; });
  return kOk;
}

int cmd_corpus_list(const Options& o, std::ostream& out) {
  out << "name,descriptor\n";
  for (const auto& entry : named_corpus(o.seed)) out << entry.name << ",\"" << describe(entry.descriptor) << "\"\n";
  return kOk;
}

int cmd_corpus_emit(const Options& o, std::ostream& out) {
  const SampledSignal a = sample(find_named(o.corpus_name, o.seed), grid_of(o));
  emit(o.output, out, [&](std::ostream& s) { write_signal_csv(s, a); });
  return kOk;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidParameter, "tolerance override must look like suite[.check]=value, got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidParameter, "bad tolerance value in '" + item + "'");
    }
  }
  return out;
}

std::string status(bool passed) { return passed ? "PASS" : "FAIL"; }

int cmd_verify(const Options& o, std::ostream& out) {
  RunConfig cfg;
  cfg.grid = grid_of(o);
  cfg.seed = o.seed;
  cfg.s = o.verify_s;
  cfg.suites = o.suites;
  cfg.tolerance_overrides = parse_tolerances(o.tolerances);
  if (!o.inject_fault.empty()) cfg.inject_fault = o.inject_fault;
  validate(cfg);

  const VerificationReport report = verify_all(cfg);
  for (const auto& suite : report.suites) {
    if (suite.table_header.empty()) continue;
    for (std::size_t i = 0; i < suite.table_header.size(); ++i) out << (i ? "," : "") << suite.table_header[i];
    out << '\n';
    for (const auto& row : suite.table) {
      std::string line;
      for (const auto& l : row.labels) line += (line.empty() ? "" : ",") + l;
      for (double v : row.values) line += (line.empty() ? "" : ",") + format_double(v);
      out << line << '\n';
    }
    out << '\n';
  }
  out << "suite,check,worst,comparison,tolerance,status\n";
  for (const auto& suite : report.suites) {
    for (const auto& c : suite.checks) {
      out << suite.name << ',' << c.name << ',' << format_double(c.worst) << ',' << (c.at_least ? ">=" : "<=") << ','
          << format_double(c.tolerance) << ',' << status(c.passed) << '\n';
    }
  }
  if (!o.json.empty()) emit(o.json, out, [&](std::ostream& s) { s << to_json(report) << '\n'; });
  return report.passed ? kOk : kVerificationFailed;
}

void add_grid_options(CLI::App* app, Options& o) {
  app->add_option("--x-min", o.x_min, "Window start")->capture_default_str();
  app->add_option("--x-max", o.x_max, "Window end (exclusive)")->capture_default_str();
  app->add_option("--n", o.n, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "Seed for every pseudo-random choice")->capture_default_str();
}

void add_variant_options(CLI::App* app, Options& o) {
  app->add_option("--s", o.s, "Decomposition order, |s| < 1/2")->required();
  app->add_option("--variant", o.variant, "symmetric or onesided")->capture_default_str();
  app->add_option("--p", o.p, "Weight of the integral term")->capture_default_str();
  app->add_option("--q", o.q, "Weight of the derivative term")->capture_default_str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Riemann-Liouville fractional operators and decompositions", "rlfrac"};
  app.require_subcommand(1);

  auto* apply = app.add_subcommand("apply", "Apply D^order to a signal");
  apply->add_option("--input", o.input, "Signal CSV (x,value)")->required();
  apply->add_option("--output", o.output, "Output CSV, stdout if omitted");
  apply->add_option("--order", o.order, "Order in (-1, 1); negative orders integrate")->required();
  apply->add_option("--side", o.side, "left or right")->capture_default_str();
  apply->add_option("--method", o.method, "spectral or grunwald")->capture_default_str();
  apply->add_option("--spectrum", o.spectrum, "Also write the output spectrum (xi,re,im)");

  auto* dec = app.add_subcommand("decompose", "Solve f = p D^{-s} u + q D^{+-s} u for u");
  dec->add_option("--input", o.input, "f as CSV")->required();
  dec->add_option("--output", o.output, "u as CSV, stdout if omitted");
  dec->add_option("--json", o.json, "Result summary JSON, stdout if omitted");
  add_variant_options(dec, o);

  auto* rec = app.add_subcommand("reconstruct", "Evaluate p D^{-s} u + q D^{+-s} u");
  rec->add_option("--input", o.input, "u as CSV")->required();
  rec->add_option("--output", o.output, "f as CSV, stdout if omitted");
  add_variant_options(rec, o);

  auto* norms = app.add_subcommand("norms", "Spectral Sobolev seminorms and norms");
  norms->add_option("--input", o.input, "Signal CSV")->required();
  norms->add_option("--mu", o.mu, "Orders >= 0")->capture_default_str();
  norms->add_option("--output", o.output, "CSV mu,seminorm,norm, stdout if omitted");

  auto* decay = app.add_subcommand("decay", "Fit the spectral decay exponent");
  decay->add_option("--input", o.input, "Signal CSV")->required();
  decay->add_option("--xi-lo", o.xi_lo, "Window start, default 0.1 Nyquist");
  decay->add_option("--xi-hi", o.xi_hi, "Window end, default 0.5 Nyquist");
  decay->add_option("--output", o.output, "JSON, stdout if omitted");

  auto* corpus = app.add_subcommand("corpus", "Analytic test functions");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "Print names and parameters");
  list->add_option("--seed", o.seed, "Seed for the trigonometric entries");
  auto* emit_cmd = corpus->add_subcommand("emit", "Sample a named entry");
  emit_cmd->add_option("name", o.corpus_name, "Entry name")->required();
  emit_cmd->add_option("--output", o.output, "CSV, stdout if omitted");
  add_grid_options(emit_cmd, o);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", o.suites, "Suite name (repeatable); all when omitted");
  verify->add_option("--s", o.verify_s, "Single s for the energy and cross suites");
  verify->add_option("--tol", o.tolerances, "Tolerance override suite[.check]=value (repeatable)");
  verify->add_option("--json", o.json, "Write the JSON report here");
  verify->add_option("--inject-fault", o.inject_fault)->group("");
  add_grid_options(verify, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (apply->parsed()) return cmd_apply(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (rec->parsed()) return cmd_reconstruct(o, out);
    if (norms->parsed()) return cmd_norms(o, out);
    if (decay->parsed()) return cmd_decay(o, out);
    if (list->parsed()) return cmd_corpus_list(o, out);
    if (emit_cmd->parsed()) return cmd_corpus_emit(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "ERROR " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "ERROR internal: " << e.what() << '\n';
    return kUsage;
  }
  err << "ERROR usage: no subcommand\n";
  return kUsage;
}

}  // namespace rlfrac::cli
