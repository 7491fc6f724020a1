#pragma once

#include <gmpxx.h>

#include <string>

namespace rhv {

// Exact arithmetic throughout the library: arbitrary-precision integers and
// rationals.  GMP is the backend; these aliases are the only place that
// choice is visible.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace rhv
