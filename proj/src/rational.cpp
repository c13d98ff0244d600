#include "nildeg/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <sstream>

namespace nildeg {

std::string fraction_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string decimal_string(const Rational& r, int significant_digits) {
  using Dec = boost::multiprecision::number<
      boost::multiprecision::cpp_dec_float<40>>;
  Dec num(numerator(r).str());
  Dec den(denominator(r).str());
  std::ostringstream os;
  os.precision(significant_digits);
  os << (num / den);
  return os.str();
}

BigInt int_pow(const BigInt& base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace nildeg
