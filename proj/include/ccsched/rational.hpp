#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace ccs {

/// Exact rational number (GMP backed). Expression templates are disabled so
/// the type composes with Eigen and `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "7", "-3/4", "0.125", "1e-3". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Finite decimal expansion when one exists ("0.75", "3"), "num/den" otherwise.
std::string format_rational(const Rational& value);

/// Decimal rendering with `digits` significant digits (for CSV reports).
std::string format_significant(const Rational& value, int digits = 12);
std::string format_significant(double value, int digits = 12);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }
inline double to_double(double value) { return value; }

/// Numeric policy for the scalar types the LP layer is instantiated with.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  /// Absolute feasibility tolerance.
  static Rational feasibility() { return Rational(0); }
  /// Pivot threshold.
  static Rational pivot() { return Rational(0); }
  static Rational from(const Rational& q) { return q; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double feasibility() { return 1e-7; }
  static double pivot() { return 1e-11; }
  static double from(const Rational& q) { return to_double(q); }
};

template <class Scalar>
Scalar scalar_cast(const Rational& q) {
  return ScalarTraits<Scalar>::from(q);
}

}  // namespace ccs
