#pragma once

#include <string>
#include <vector>

namespace lorenz {

// A Laurent polynomial with exact 64-bit integer coefficients. Coefficient
// arithmetic is overflow-checked and throws ArithmeticOverflow rather than
// wrapping. The zero polynomial has an empty coefficient window.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long long coeff, int exp);
  static LaurentPoly constant(long long c) { return monomial(c, 0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exp() const noexcept { return min_exp_; }
  int max_exp() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  int spread() const noexcept { return is_zero() ? 0 : max_exp() - min_exp(); }
  long long coeff(int exp) const noexcept;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(int by) const;  // multiply by s^by
  bool operator==(const LaurentPoly&) const = default;

  long long at_one() const;  // sum of coefficients

  // Exact division; returns false (leaving out untouched) when rhs does not
  // divide this exactly over the integers.
  bool divide_exact(const LaurentPoly& rhs, LaurentPoly& out) const;

  // Sparse form "c·s^e" with exponents ascending, e.g. "1·s^-1 -1·s^0 1·s^1".
  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  // coefficient of s^(min_exp_ + i) at index i
  std::vector<long long> coeffs_;
  int min_exp_ = 0;
};

}  // namespace lorenz
