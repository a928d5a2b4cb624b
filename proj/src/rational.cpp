#include "zzgraded/rational.hpp"

#include <cctype>
#include <limits>

namespace zzg {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw UsageError("malformed rational: '" + std::string(text) + "'");
  } else {
    auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
        den_text[0] == '+' || !parse_integer(den_text, den))
      throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  if (den == 0) throw DivisionByZero();
  return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw UsageError("rational " + str() + " is not an integer");
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) throw UsageError("integer " + str() + " out of range");
  return n.get_si();
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1), b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace zzg
