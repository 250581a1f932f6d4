#pragma once

#include <boost/rational.hpp>
#include <charconv>
#include <string>
#include <string_view>

#include "hamkit/error.hpp"

namespace hamkit {

using rational = boost::rational<long long>;

// Accepts "p/q", a plain integer, or a finite decimal such as "0.3".
inline rational parse_rational(std::string_view text) {
  auto to_ll = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw error("not a rational number: '" + std::string(text) + "'");
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long den = to_ll(text.substr(slash + 1));
    if (den == 0) throw error("zero denominator in '" + std::string(text) + "'");
    return rational(to_ll(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw error("too many decimals in '" + std::string(text) + "'");
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string_view whole = text.substr(0, dot);
    bool neg = whole.starts_with('-');
    long long w = whole.empty() || whole == "-" ? 0 : to_ll(whole);
    long long f = frac.empty() ? 0 : to_ll(frac);
    return rational(w * scale + (neg ? -f : f), scale);
  }
  return rational(to_ll(text));
}

inline std::string to_string(const rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hamkit
