#include "rlfrac/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace rlfrac {

namespace {

constexpr double kSpacingTolerance = 1e-9;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": not a number: '" + std::string(field) + "'");
  }
  return value;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SampledSignal read_signal_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<double> xs;
  std::vector<double> vs;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != "x,value") {
        throw Error(ErrorCode::Parse, "expected header 'x,value', got '" + std::string(row) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected two fields");
    }
    xs.push_back(parse_number(row.substr(0, comma), line_no));
    vs.push_back(parse_number(row.substr(comma + 1), line_no));
  }
  if (!header_seen) throw Error(ErrorCode::Parse, "empty signal file");
  if (xs.size() < 2) throw Error(ErrorCode::Parse, "signal file needs at least 2 samples");

  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(dx > 0.0)) throw Error(ErrorCode::Parse, "x must be strictly increasing");
  for (std::size_t j = 1; j < xs.size(); ++j) {
    const double step = xs[j] - xs[j - 1];
    if (!(step > 0.0)) {
      throw Error(ErrorCode::Parse, "x must be strictly increasing (row " + std::to_string(j + 1) + ")");
    }
    if (std::abs(step - dx) > kSpacingTolerance * dx) {
      throw Error(ErrorCode::Parse, "x spacing is not uniform within 1e-9 (row " + std::to_string(j + 1) + ")");
    }
  }
  return SampledSignal(UniformGrid(xs.front(), dx, xs.size()), std::move(vs));
}

SampledSignal read_signal_csv(const std::string& path) {
  auto in = open_in(path);
  return read_signal_csv(in);
}

void write_signal_csv(std::ostream& out, const SampledSignal& a) {
  out << "x,value\n";
  for (std::size_t j = 0; j < a.size(); ++j) {
    out << format_double(a.grid().x(j)) << ',' << format_double(a[j]) << '\n';
  }
}

void write_signal_csv(const std::string& path, const SampledSignal& a) {
  auto out = open_out(path);
  write_signal_csv(out, a);
  finish(out, path);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& S) {
  const FrequencyBins bins = S.bins();
  out << "xi,re,im\n";
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    const cplx c = S.at(k);
    out << format_double(bins.xi(k)) << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
  }
}

void write_spectrum_csv(const std::string& path, const Spectrum& S) {
  auto out = open_out(path);
  write_spectrum_csv(out, S);
  finish(out, path);
}

}  // namespace rlfrac
