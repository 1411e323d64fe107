#include "lorenz/braid.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "lorenz/error.hpp"

namespace lorenz {

BraidData lorenz_braid(const OrbitCombinatorics& oc) {
  BraidData braid;
  braid.strands = oc.a + oc.b;
  braid.pi = oc.pi;
  braid.left_origin.assign(static_cast<size_t>(braid.strands), false);
  for (int p = 0; p < oc.a; ++p) braid.left_origin[static_cast<size_t>(p)] = true;

  // sweep: repeatedly apply the leftmost adjacent transposition that fixes an
  // inversion; strands of equal origin never swap (pi is monotone per side)
  std::vector<int> at(static_cast<size_t>(braid.strands));
  std::iota(at.begin(), at.end(), 0);  // strand id occupying each position
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int pos = 0; pos + 1 < braid.strands; ++pos) {
      const int s1 = at[static_cast<size_t>(pos)], s2 = at[static_cast<size_t>(pos + 1)];
      if (braid.pi[static_cast<size_t>(s1)] > braid.pi[static_cast<size_t>(s2)]) {
        if (braid.left_origin[static_cast<size_t>(s1)] == braid.left_origin[static_cast<size_t>(s2)])
          fail(ErrorCode::InternalError, "same-origin strands asked to cross");
        braid.word.push_back(pos + 1);
        std::swap(at[static_cast<size_t>(pos)], at[static_cast<size_t>(pos + 1)]);
        progressed = true;
        break;
      }
    }
  }
  for (int pos = 0; pos < braid.strands; ++pos)
    if (braid.pi[static_cast<size_t>(at[static_cast<size_t>(pos)])] != pos)
      fail(ErrorCode::InternalError, "sweep did not realize the permutation");
  if (braid.k() != inversion_count(braid))
    fail(ErrorCode::InternalError, "sweep emitted a non-minimal positive word");
  return braid;
}

int inversion_count(const BraidData& braid) {
  int inv = 0;
  for (size_t i = 0; i < braid.pi.size(); ++i)
    for (size_t j = i + 1; j < braid.pi.size(); ++j)
      if (braid.pi[i] > braid.pi[j]) ++inv;
  return inv;
}

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix identity(int m) {
  Matrix id(static_cast<size_t>(m), std::vector<LaurentPoly>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    id[static_cast<size_t>(i)][static_cast<size_t>(i)] = LaurentPoly::constant(1);
  return id;
}

// reduced Burau matrix of sigma_i on n strands: the identity except for the
// column i-1 (0-based p), which reads t above the diagonal, -t on it and 1
// below it (rows clipped to the square)
Matrix reduced_burau(int n, int gen) {
  const int m = n - 1;
  const int p = gen - 1;
  Matrix mat = identity(m);
  mat[static_cast<size_t>(p)][static_cast<size_t>(p)] = LaurentPoly::monomial(-1, 1);
  if (p > 0) mat[static_cast<size_t>(p - 1)][static_cast<size_t>(p)] = LaurentPoly::monomial(1, 1);
  if (p + 1 < m) mat[static_cast<size_t>(p + 1)][static_cast<size_t>(p)] = LaurentPoly::constant(1);
  return mat;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t m = a.size();
  Matrix out(m, std::vector<LaurentPoly>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

// fraction-free Bareiss elimination; divisions are exact over Z[s, 1/s]
LaurentPoly determinant(Matrix m) {
  const size_t dim = m.size();
  if (dim == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < dim; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < dim && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == dim) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < dim; ++i)
      for (size_t j = k + 1; j < dim; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        LaurentPoly q;
        if (!num.divide_exact(prev, q))
          fail(ErrorCode::InexactDivision, "Bareiss pivot division failed");
        m[i][j] = std::move(q);
      }
    prev = m[k][k];
  }
  LaurentPoly det = m[dim - 1][dim - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

LaurentPoly alexander_polynomial(const BraidData& braid) {
  const int n = braid.strands;
  if (n < 2) fail(ErrorCode::InternalError, "braid needs at least two strands");

  Matrix burau = identity(n - 1);
  for (int gen : braid.word) {
    if (gen < 1 || gen >= n) fail(ErrorCode::InternalError, "generator index out of range");
    burau = multiply(burau, reduced_burau(n, gen));
  }
  Matrix diff = std::move(burau);
  for (int i = 0; i < n - 1; ++i)
    diff[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        diff[static_cast<size_t>(i)][static_cast<size_t>(i)] - LaurentPoly::constant(1);

  const LaurentPoly det = determinant(std::move(diff));
  if (det.is_zero())
    fail(ErrorCode::MultiComponent, "closure is a link, not a knot");

  // delta = det * (s - 1) / (s^n - 1)
  const LaurentPoly num = det * (LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1));
  const LaurentPoly den = LaurentPoly::monomial(1, n) - LaurentPoly::constant(1);
  LaurentPoly delta;
  if (!num.divide_exact(den, delta))
    fail(ErrorCode::InexactDivision, "determinant not divisible by 1 + s + ... + s^(n-1)");

  // normalize: symmetric window, +1 at s = 1
  if (delta.spread() % 2 != 0)
    fail(ErrorCode::InternalError, "Alexander polynomial has odd spread");
  delta = delta.shifted(-(delta.min_exp() + delta.max_exp()) / 2);
  const long long at_one = delta.at_one();
  if (at_one == -1) delta = -delta;
  else if (at_one != 1)
    fail(ErrorCode::InternalError,
         "Alexander polynomial evaluates to " + std::to_string(at_one) + " at 1");
  return delta;
}

}  // namespace lorenz
