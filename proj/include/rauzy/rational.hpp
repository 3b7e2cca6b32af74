#pragma once

#include <gmpxx.h>

#include <string>

#include "rauzy/errors.hpp"

namespace rauzy {

// All exact arithmetic (lengths, heights, areas, ratios) runs on GMP
// rationals; doubles appear only in angle accumulation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "3", "-3", "3/4". GMP's parser is permissive about sign placement;
// canonicalize() normalizes the representation.
inline Rational rational_from_string(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

}
