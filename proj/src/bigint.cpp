#include "hyperoct/bigint.hpp"

#include <stdexcept>

namespace hyperoct {

BigInt factorial(long m) {
  if (m < 0) {
    throw std::domain_error("factorial of negative argument " +
                            std::to_string(m));
  }
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
  return result;
}

std::string toString(const BigInt& value) { return value.get_str(); }

std::string toString(const Rational& value) {
  Rational normalized = value;
  normalized.canonicalize();
  if (normalized.get_den() == 1) return normalized.get_num().get_str();
  return normalized.get_num().get_str() + "/" + normalized.get_den().get_str();
}

Rational parseRational(const std::string& text) {
  Rational value;
  if (value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

}  // namespace hyperoct
