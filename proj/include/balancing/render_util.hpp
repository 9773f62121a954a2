#pragma once

// Shared text rendering for signed sums of rational multiples of symbols.

#include <string>

#include "balancing/exact.hpp"

namespace balancing::detail {

class SumWriter {
 public:
  /// Appends coeff*symbol; a unit coefficient is written as the bare symbol.
  void term(const Rational& coeff, const std::string& symbol) {
    if (coeff.is_zero()) return;
    Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    sign(coeff.sign());
    if (mag == Rational(1)) {
      text_ += symbol;
    } else if (mag.is_integer()) {
      text_ += to_string(mag) + "*" + symbol;
    } else {
      text_ += "(" + to_string(mag) + ")*" + symbol;
    }
  }

  void constant(const Rational& c) {
    if (c.is_zero()) return;
    sign(c.sign());
    text_ += to_string(c.sign() < 0 ? -c : c);
  }

  std::string str() const { return text_.empty() ? "0" : text_; }

 private:
  void sign(int s) {
    if (text_.empty()) {
      if (s < 0) text_ += "-";
    } else {
      text_ += s < 0 ? " - " : " + ";
    }
  }

  std::string text_;
};

}  // namespace balancing::detail
