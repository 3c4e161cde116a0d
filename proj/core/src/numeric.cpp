#include "isob/numeric.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "isob/errors.hpp"

namespace isob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::IllegalType: return "illegal_type";
    case ErrorKind::IllegalParameter: return "illegal_parameter";
    case ErrorKind::BasisMismatch: return "basis_mismatch";
    case ErrorKind::NotIntegral: return "not_integral";
    case ErrorKind::NotDominant: return "not_dominant";
    case ErrorKind::NotAWeightOf: return "not_a_weight_of";
    case ErrorKind::OrbitTooLarge: return "orbit_too_large";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::NoRestrictionMap: return "no_restriction_map";
    case ErrorKind::NoWeightModel: return "no_weight_model";
    case ErrorKind::CountMismatch: return "count_mismatch";
    case ErrorKind::ConsistencyFault: return "consistency_fault";
    case ErrorKind::OutOfTable: return "out_of_table";
    case ErrorKind::NonPositiveVolume: return "non_positive_volume";
    case ErrorKind::EmptyProduct: return "empty_product";
  }
  return "unknown";
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  const std::string s = strip(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value))
    throw Error(ErrorKind::NotIntegral, "expected an integer, got " + to_string(value));
  const Integer& n = value.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorKind::CapExceeded, "integer out of 64-bit range");
  return n.get_si();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::CapExceeded, "64-bit overflow in integer weight arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::CapExceeded, "64-bit overflow in integer weight arithmetic");
  return out;
}

}  // namespace isob
