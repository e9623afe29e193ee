#pragma once

#include <compare>
#include <string>
#include <utility>

#include "qst/error.hpp"
#include "qst/qarith.hpp"

namespace qst {

/// A logarithmic quantity log(mult) carried by its exact multiplicative value.
///
/// Adding two ExactLogs multiplies their values and comparisons compare the
/// values, so identities between heights and Weil functions are decided
/// exactly. The double-valued logarithm is only produced for display.
class ExactLog {
 public:
  ExactLog() : mult_(1) {}
  explicit ExactLog(Rational mult) : mult_(std::move(mult)) {
    if (sgn(mult_) <= 0) throw DomainError("ExactLog needs a positive multiplicative value");
  }

  const Rational& mult() const noexcept { return mult_; }
  double value() const { return log_of(mult_); }

  ExactLog operator+(const ExactLog& other) const { return ExactLog(mult_ * other.mult_); }
  ExactLog operator-(const ExactLog& other) const { return ExactLog(mult_ / other.mult_); }
  ExactLog& operator+=(const ExactLog& other) {
    mult_ *= other.mult_;
    return *this;
  }
  /// k * log(mult)
  ExactLog times(long k) const { return ExactLog(pow(mult_, k)); }

  friend bool operator==(const ExactLog& a, const ExactLog& b) { return a.mult_ == b.mult_; }
  friend std::strong_ordering operator<=>(const ExactLog& a, const ExactLog& b) {
    int c = cmp(a.mult_, b.mult_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const { return qst::to_string(mult_); }

 private:
  Rational mult_;
};

}  // namespace qst
