#pragma once

#include <iosfwd>
#include <string>

#include "rlfrac/fourier.hpp"
#include "rlfrac/signal.hpp"

namespace rlfrac {

/// Formats a double with 17 significant digits.
std::string format_double(double v);

/// CSV `x,value`, strictly increasing x, uniform spacing within 1e-9 relative.
SampledSignal read_signal_csv(std::istream& in);
SampledSignal read_signal_csv(const std::string& path);

void write_signal_csv(std::ostream& out, const SampledSignal& a);
void write_signal_csv(const std::string& path, const SampledSignal& a);

/// CSV `xi,re,im` in increasing xi.
void write_spectrum_csv(std::ostream& out, const Spectrum& S);
void write_spectrum_csv(const std::string& path, const Spectrum& S);

}  // namespace rlfrac
