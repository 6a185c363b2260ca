#ifndef DETLAB_BIGINT_HPP
#define DETLAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace detlab {

// All derived statistics (second moments, inequality sides) are exact;
// cpp_int avoids any overflow question downstream of the counters.
using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative rational num/den, den > 0. Just enough for the
// |q N - |A|^{d^2}| / ... comparisons; not a general rational type.
struct Rational {
  BigInt num;
  BigInt den{1};

  double to_double() const {
    return num.convert_to<double>() / den.convert_to<double>();
  }
  std::string str() const { return num.str() + "/" + den.str(); }
};

inline bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) {
  return a.num * b.den <= b.num * a.den;
}
inline bool operator==(const Rational& a, const Rational& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace detlab

#endif
