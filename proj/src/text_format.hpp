#pragma once

// Token helpers shared by the unitary and ensemble file readers/writers.

#include <charconv>
#include <cstdio>
#include <istream>
#include <string>
#include <string_view>

#include "mixgrover/errors.hpp"
#include "mixgrover/qcore.hpp"

namespace mixgrover::text {

inline double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

/// "re,im"
inline Amp parse_amp(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw DomainError("malformed complex entry '" + std::string(s) + "', expected re,im");
  }
  return {parse_double(s.substr(0, comma), "real part"), parse_double(s.substr(comma + 1), "imaginary part")};
}

inline std::string next_token(std::istream& in, std::string_view what) {
  std::string tok;
  if (!(in >> tok)) throw DomainError("unexpected end of input while reading " + std::string(what));
  return tok;
}

/// 17 significant digits; round-trips every double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_amp(const Amp& a) { return format_double(a.real()) + "," + format_double(a.imag()); }

}  // namespace mixgrover::text
