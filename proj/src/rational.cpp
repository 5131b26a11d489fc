#include "nnto/rational.hpp"

#include <algorithm>
#include <numeric>

#include "nnto/error.hpp"

namespace nnto {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "rational multiplication");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "rational addition");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) throw Error(ErrorKind::Overflow, "rational out of range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::ParseError, "not an exact number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }

  auto read_digits = [&](std::size_t& at, std::int64_t& acc, int& count) {
    count = 0;
    while (at < text.size() && text[at] >= '0' && text[at] <= '9') {
      acc = checked_add(checked_mul(acc, 10), text[at] - '0');
      ++at;
      ++count;
    }
  };

  std::int64_t whole = 0;
  int whole_digits = 0;
  read_digits(pos, whole, whole_digits);
  if (whole_digits == 0) throw fail();

  if (pos == text.size()) return Rational(negative ? -whole : whole);

  if (text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    int den_digits = 0;
    read_digits(pos, den, den_digits);
    if (den_digits == 0 || pos != text.size()) throw fail();
    return Rational(negative ? -whole : whole, den);
  }

  if (text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    int frac_digits = 0;
    read_digits(pos, frac, frac_digits);
    if (frac_digits == 0 || pos != text.size()) throw fail();
    std::int64_t scale = 1;
    for (int i = 0; i < frac_digits; ++i) scale = checked_mul(scale, 10);
    const std::int64_t num = checked_add(checked_mul(whole, scale), frac);
    return Rational(negative ? -num : num, scale);
  }

  throw fail();
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);

  // Finite decimal iff den = 2^a 5^b.
  std::int64_t rest = den_;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  const int digits = std::max(twos, fives);
  if (rest != 1 || digits > 18) return std::to_string(num_) + "/" + std::to_string(den_);

  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  const auto int_part = static_cast<std::uint64_t>(scaled / scale);
  auto frac_part = static_cast<std::uint64_t>(scaled % scale);
  std::string frac(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac_part % 10);
    frac_part /= 10;
  }
  return (negative ? "-" : "") + std::to_string(int_part) + "." + frac;
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;  // num_ != INT64_MIN by construction
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t lhs_scale = rhs.den_ / g;
  const std::int64_t rhs_scale = den_ / g;
  *this = Rational(checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale)),
                   checked_mul(den_, lhs_scale));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t a = g1 == 0 ? num_ : num_ / g1;
  const std::int64_t d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  const std::int64_t c = g2 == 0 ? rhs.num_ : rhs.num_ / g2;
  const std::int64_t b = g2 == 0 ? den_ : den_ / g2;
  *this = Rational(checked_mul(a, c), checked_mul(b, d));
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
  return l <=> r;
}

}  // namespace nnto
