#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace balword {

// Exact rational number on 64-bit integers, kept normalized (den > 0,
// gcd(|num|, den) = 1). Arithmetic here is limited to what the word
// machinery needs: comparisons, complements and exact floors of integer
// multiples.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  // floor(num * k / den) for k >= 0, exact in 128-bit intermediates.
  long long floor_mul(long long k) const {
    if (k < 0) throw std::invalid_argument("Rational::floor_mul: negative k");
    __int128 t = static_cast<__int128>(num) * k;
    __int128 q = t / den;
    if (t % den != 0 && t < 0) --q;
    return static_cast<long long>(q);
  }

  Rational complement() const { return Rational(den - num, den); }
  bool in_open_unit_interval() const { return num > 0 && num < den; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses a strict "p/q" fraction: digits, one slash, digits. No sign, no
// whitespace, no decimal point. Returns the raw (un-normalized) pair so
// callers can decide whether non-reduced input is an error.
inline std::pair<long long, long long> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == text.size())
    throw std::invalid_argument("expected a fraction of the form p/q, got '" +
                                std::string(text) + "'");
  auto parse_digits = [&](std::string_view part) {
    if (part.empty() || part.size() > 18)
      throw std::invalid_argument("bad fraction component '" +
                                  std::string(part) + "'");
    long long value = 0;
    for (char c : part) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad fraction component '" +
                                    std::string(part) + "'");
      value = value * 10 + (c - '0');
    }
    return value;
  };
  return {parse_digits(text.substr(0, slash)),
          parse_digits(text.substr(slash + 1))};
}

}  // namespace balword
