#pragma once

#include <initializer_list>
#include <vector>

#include "rcb/rational.hpp"

namespace rcb {

/// Dense univariate polynomial over Q, coefficients low-to-high with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  /// x - root
  static RatPoly linear_root(const Rat& root);

  /// -1 stands in for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  RatPoly derivative() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& p);
  friend RatPoly operator-(const RatPoly& p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace rcb
