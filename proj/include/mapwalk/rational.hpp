#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace mapwalk {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

// "p/q" in lowest terms; integers render without the "/1".
inline std::string to_fraction_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace mapwalk

namespace Eigen {

template <>
struct NumTraits<mapwalk::Rational> : GenericNumTraits<mapwalk::Rational> {
  typedef mapwalk::Rational Real;
  typedef mapwalk::Rational NonInteger;
  typedef mapwalk::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 80,
  };
};

template <>
struct NumTraits<mapwalk::Integer> : GenericNumTraits<mapwalk::Integer> {
  typedef mapwalk::Integer Real;
  typedef mapwalk::Rational NonInteger;
  typedef mapwalk::Integer Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 40,
  };
};

}  // namespace Eigen
