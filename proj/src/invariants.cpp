#include "lorenz/invariants.hpp"

#include <numeric>
#include <string>

#include "lorenz/error.hpp"

namespace lorenz {

InvariantRecord closed_form_invariants(const OrbitCombinatorics& oc) {
  const int a = oc.a, b = oc.b, t = oc.t;
  const int sum_mu = std::accumulate(oc.mu.begin(), oc.mu.end(), 0);
  const int sum_nu = std::accumulate(oc.nu.begin(), oc.nu.end(), 0);

  InvariantRecord r;
  r.grid_number = 2 * a + 2 * b - t;
  r.crossings_A = a * t - sum_mu - t * t + t * (t + 1) / 2;
  r.crossings_B = b * t - sum_nu - t * t + t * (t + 1) / 2;
  r.crossings_C = t * t;
  r.crossings_total = (a + b) * t - sum_mu - sum_nu + t;

  const int twice_u = (a + b) * (t - 1) - sum_mu - sum_nu + (t + 1);
  if (twice_u % 2 != 0)
    fail(ErrorCode::IntegralityViolation,
         "2u = " + std::to_string(twice_u) + " is odd for '" + oc.word.letters() + "'");
  r.unknotting = twice_u / 2;
  r.alexander_x_minus = r.unknotting;

  if (r.crossings_total != r.crossings_A + r.crossings_B + r.crossings_C)
    fail(ErrorCode::InternalError, "c != c_A + c_B + c_C");
  if (r.unknotting < 0)
    fail(ErrorCode::InternalError, "negative unknotting number");
  if (static_cast<long long>(r.unknotting) !=
      positive_braid_unknotting(r.crossings_total, a + b))
    fail(ErrorCode::InternalError, "u != (c - (a+b) + 1)/2");
  return r;
}

long long positive_braid_unknotting(long long crossings, long long strands) {
  const long long num = crossings - strands + 1;
  if (num % 2 != 0)
    fail(ErrorCode::IntegralityViolation,
         "k - n + 1 = " + std::to_string(num) + " is odd");
  if (num < 0)
    fail(ErrorCode::NegativeGenus, "k - n + 1 = " + std::to_string(num) + " is negative");
  return num / 2;
}

}  // namespace lorenz
