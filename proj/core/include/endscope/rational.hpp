#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace endscope {

// Exact rational with arbitrary-precision components. Every distance,
// radius and cap in the toolkit lives here; there is no floating point
// anywhere on a decision path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "num/den", "num" or "inf"-free plain integers. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Serializes as "num/den", or "num" when the denominator is 1.
std::string format_rational(const Rational& value);

// A nonnegative rational extended with +infinity. Used for radii of
// compactness and for shortest-path distances between disconnected
// vertices.
class ExtRational {
 public:
  ExtRational() : infinite_(false), value_(0) {}
  ExtRational(Rational value) : infinite_(false), value_(std::move(value)) {}
  ExtRational(int value) : infinite_(false), value_(value) {}

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }

  const Rational& finite() const {
    if (infinite_) throw std::logic_error("finite() on infinite ExtRational");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRational(a.value_ + b.value_);
  }

  // min(d, c) with a finite cap; infinity caps to c.
  friend ExtRational min_with(const ExtRational& a, const Rational& cap) {
    if (a.infinite_ || a.value_ > cap) return ExtRational(cap);
    return a;
  }

 private:
  bool infinite_;
  Rational value_;
};

// "num/den" or "inf".
std::string format_ext(const ExtRational& value);
ExtRational parse_ext(std::string_view text);

}  // namespace endscope
