// Exact arbitrary-precision rationals and the extended rational line
// used by the Stern-Brocot machinery: every fraction is kept in lowest
// terms with positive denominator, and 1/0 ("infinity") exists only as
// the distinguished ExtRational value.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horomap {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Rational make_rational(Int n, Int d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  return Rational(std::move(n), std::move(d));
}

inline Int floor_int(const Rational& x) {
  Int q = num(x) / den(x);
  if (num(x) < 0 && q * den(x) != num(x)) --q;
  return q;
}

inline Rational frac_part(const Rational& x) { return x - Rational(floor_int(x)); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

// "p/q" (or a bare integer) in lowest terms; no decimal forms.
inline std::string to_fraction_string(const Rational& x) {
  std::string s = num(x).str();
  s += '/';
  s += den(x).str();
  return s;
}

inline std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(text)));
    }
    Int n{std::string(text.substr(0, slash))};
    Int d{std::string(text.substr(slash + 1))};
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// A rational or the formal fraction 1/0, which compares above everything.
class ExtRational {
 public:
  ExtRational() : finite_(0) {}
  ExtRational(Rational value) : finite_(std::move(value)) {}
  ExtRational(int value) : finite_(value) {}
  static ExtRational infinity() {
    ExtRational e;
    e.is_infinite_ = true;
    return e;
  }

  bool is_infinite() const { return is_infinite_; }
  const Rational& value() const {
    if (is_infinite_) throw DomainError("value() on the infinite ExtRational");
    return finite_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite_ || b.is_infinite_) return a.is_infinite_ == b.is_infinite_;
    return a.finite_ == b.finite_;
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite_) return false;
    if (b.is_infinite_) return true;
    return a.finite_ < b.finite_;
  }

  std::string str() const { return is_infinite_ ? "1/0" : to_fraction_string(finite_); }

 private:
  Rational finite_;
  bool is_infinite_ = false;
};

// Mediant (a+b)/(c+d) of a/c and b/d; reduced by construction when the
// inputs are a Farey pair, and normalised in any case.
inline ExtRational farey_sum(const ExtRational& x, const ExtRational& y) {
  Int nx = x.is_infinite() ? Int(1) : num(x.value());
  Int dx = x.is_infinite() ? Int(0) : den(x.value());
  Int ny = y.is_infinite() ? Int(1) : num(y.value());
  Int dy = y.is_infinite() ? Int(0) : den(y.value());
  Int n = nx + ny, d = dx + dy;
  if (d == 0) return ExtRational::infinity();
  return ExtRational(Rational(n, d));
}

inline Rational farey_sum(const Rational& x, const Rational& y) {
  return Rational(num(x) + num(y), den(x) + den(y));
}

}  // namespace horomap
