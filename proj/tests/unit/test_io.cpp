#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "expect_error.hpp"
#include "rlfrac/corpus.hpp"
#include "rlfrac/io.hpp"

using namespace rlfrac;

TEST_CASE("signal CSV round trip is lossless in the values") {
  const SampledSignal a = sample(TrigGaussian{4, 3, 1.5, false}, UniformGrid::periodic(-5.0, 5.0, 300));
  std::stringstream ss;
  write_signal_csv(ss, a);
  const SampledSignal b = read_signal_csv(ss);
  REQUIRE(b.size() == a.size());
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(b[j] == a[j]);
  CHECK(std::abs(b.grid().dx() - a.grid().dx()) <= 1e-14);
  CHECK(b.grid().x_min() == a.grid().x_min());
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "rlfrac_io_test.csv").string();
  const SampledSignal a = sample(Bump{-1.0, 1.0}, UniformGrid::periodic(-2.0, 2.0, 64));
  write_signal_csv(path, a);
  const SampledSignal b = read_signal_csv(path);
  CHECK(l2_norm(a - SampledSignal(a.grid(), std::vector<double>(b.values().begin(), b.values().end()))) == 0.0);
  std::remove(path.c_str());
  CHECK(code_of([&] { read_signal_csv(path); }) == ErrorCode::Io);
}

TEST_CASE("reader rejects malformed input") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_signal_csv(in);
  };
  CHECK(code_of([&] { parse(""); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("t,value\n0,1\n1,2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n0,1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n0,1\n1,abc\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n0,1\n1,2,3\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n0,1\n1,2\n2.001,3\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n1,1\n0,2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { parse("x,value\n0,1\n1,nan\n"); }) == ErrorCode::InvalidParameter);
  // Spacing jitter far below 1e-9 relative is accepted.
  CHECK(parse("x,value\n0,1\n0.1000000000001,2\n0.2,3\r\n\n").size() == 3);
}

TEST_CASE("spectrum CSV lists increasing frequencies") {
  const SampledSignal a = sample(Gaussian{0.0, 1.0}, UniformGrid::periodic(-4.0, 4.0, 16));
  std::stringstream ss;
  write_spectrum_csv(ss, dft_forward(a));
  std::string line;
  std::getline(ss, line);
  CHECK(line == "xi,re,im");
  double prev = -1e300;
  int rows = 0;
  while (std::getline(ss, line)) {
    const double xi = std::stod(line.substr(0, line.find(',')));
    CHECK(xi > prev);
    prev = xi;
    ++rows;
  }
  CHECK(rows == 16);
}

TEST_CASE("numbers are written with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.0) == "-2");
}
