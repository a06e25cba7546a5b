#include "symbic/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace symbic {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational multiplication overflow");
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(t, text));
  return Rat(parse_int(trim(t.substr(0, slash)), text), parse_int(trim(t.substr(slash + 1)), text));
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    *this = Rat(checked_add(num_, rhs.num_), den_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t left = checked_mul(num_, rhs.den_ / g);
  const std::int64_t right = checked_mul(rhs.num_, den_ / g);
  *this = Rat(checked_add(left, right), checked_mul(den_ / g, rhs.den_));
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t a = g1 == 0 ? 0 : num_ / g1;
  const std::int64_t b = g2 == 0 ? 0 : rhs.num_ / g2;
  const std::int64_t c = g2 == 0 ? den_ : den_ / g2;
  const std::int64_t d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  *this = Rat(checked_mul(a, b), checked_mul(c, d));
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rat(rhs.den_, rhs.num_);
}

Rat Rat::operator-() const {
  Rat out;
  out.num_ = checked_mul(num_, -1);
  out.den_ = den_;
  return out;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace symbic
