#include "lorenz/laurent.hpp"

#include <algorithm>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::ArithmeticOverflow, "coefficient addition overflows");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::ArithmeticOverflow, "coefficient multiplication overflows");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) {
    p.coeffs_ = {coeff};
    p.min_exp_ = exp;
  }
  return p;
}

long long LaurentPoly::coeff(int exp) const noexcept {
  const int i = exp - min_exp_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  size_t tail = coeffs_.size();
  while (tail > 0 && coeffs_[tail - 1] == 0) --tail;
  if (lead > 0 || tail < coeffs_.size()) {
    coeffs_ = std::vector<long long>(coeffs_.begin() + static_cast<ptrdiff_t>(lead),
                                     coeffs_.begin() + static_cast<ptrdiff_t>(tail));
    min_exp_ += static_cast<int>(lead);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  LaurentPoly out;
  out.min_exp_ = std::min(min_exp_, rhs.min_exp_);
  const int hi = std::max(max_exp(), rhs.max_exp());
  out.coeffs_.assign(static_cast<size_t>(hi - out.min_exp_ + 1), 0);
  for (int e = out.min_exp_; e <= hi; ++e)
    out.coeffs_[static_cast<size_t>(e - out.min_exp_)] = checked_add(coeff(e), rhs.coeff(e));
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (long long& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  LaurentPoly out;
  out.min_exp_ = min_exp_ + rhs.min_exp_;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += by;
  return out;
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (long long c : coeffs_) s = checked_add(s, c);
  return s;
}

bool LaurentPoly::divide_exact(const LaurentPoly& rhs, LaurentPoly& out) const {
  if (rhs.is_zero()) return false;
  if (is_zero()) {
    out = {};
    return true;
  }
  // long division from the top; the quotient of Laurent polynomials is
  // normalized afterwards via exponent bookkeeping
  std::vector<long long> rem = coeffs_;
  const std::vector<long long>& div = rhs.coeffs_;
  const long long lead = div.back();
  if (static_cast<int>(rem.size()) < static_cast<int>(div.size())) return false;
  std::vector<long long> quot(rem.size() - div.size() + 1, 0);
  for (size_t qi = quot.size(); qi-- > 0;) {
    const long long top = rem[qi + div.size() - 1];
    if (top % lead != 0) return false;
    const long long q = top / lead;
    quot[qi] = q;
    if (q != 0)
      for (size_t k = 0; k < div.size(); ++k)
        rem[qi + k] = checked_add(rem[qi + k], checked_mul(-q, div[k]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](long long c) { return c != 0; })) return false;
  LaurentPoly result;
  result.coeffs_ = std::move(quot);
  result.min_exp_ = min_exp_ - rhs.min_exp_;
  result.trim();
  out = std::move(result);
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = min_exp(); e <= max_exp(); ++e) {
    const long long c = coeff(e);
    if (c == 0) continue;
    if (!s.empty()) s += ' ';
    s += std::to_string(c) + "·" + var + "^" + std::to_string(e);
  }
  return s;
}

}  // namespace lorenz
