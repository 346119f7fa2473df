#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "intervals/exact.hpp"

namespace intervals {

// Polynomial with exact integer coefficients, stored ascending. The zero
// polynomial is the empty coefficient list; otherwise the leading coefficient
// is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(int c) { c_.assign(1, Int(c)); trim(); }
  IntPolynomial(Int c) { c_.push_back(std::move(c)); trim(); }
  explicit IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

  static IntPolynomial variable() { return IntPolynomial(std::vector<Int>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
  }
  const std::vector<Int>& coefficients() const { return c_; }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
  }

  IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

  IntPolynomial operator-() const {
    std::vector<Int> r = c_;
    for (Int& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
  }

  // Ascending coefficients separated by spaces, e.g. "1 1 1 1" for
  // t^3 + t^2 + t + 1. The zero polynomial prints "0".
  std::string coeff_line() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ' ';
      os << c_[i];
    }
    return os.str();
  }

  // Same coefficients as a single comma-joined token, for report lines.
  std::string coeff_token() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i];
    }
    return os.str();
  }

  std::string pretty() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Int c = coeff(i);
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = abs(c);
      if (a != 1 || i == 0) os << a;
      if (i >= 1) {
        if (a != 1) os << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace intervals
