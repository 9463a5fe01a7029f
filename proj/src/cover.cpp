#include "arrange/cover.hpp"

#include "arrange/fp.hpp"

namespace arrange {

long long branched_euler(long long chi_base, int d, long long num_branch) {
  if (d < 1) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "cover degree must be >= 1");
  }
  if (num_branch < 0) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "branch component count must be >= 0");
  }
  return d * (chi_base - 2 * num_branch) + 2 * num_branch;
}

Rational casson_gordon_epsilon(long long sign_base, int d, int r,
                               long long f_square) {
  if (d < 1) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "cover degree must be >= 1");
  }
  if (r < 0 || r >= d) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "eigenspace index must lie in [0, d)");
  }
  const long long num = 2LL * r * (d - r) * f_square;
  const long long den = static_cast<long long>(d) * d;
  return Rational(sign_base) - Rational(num, den);
}

CoverInvariants two_pencil_cover_invariants(int p, int alpha, int beta,
                                            long long num_blowups) {
  if (!is_prime(p)) {
    throw ArrangementError(ArrangementError::Kind::NotPrime,
                           "cover degree p must be prime");
  }
  if (alpha < 1 || beta < 1) {
    throw ArrangementError(ArrangementError::Kind::BadParameter,
                           "pencil multiples must be >= 1");
  }
  const long long ab = static_cast<long long>(alpha) * beta;
  const long long arrangement_points = 2 + static_cast<long long>(p) * p * ab;
  if (num_blowups < arrangement_points) {
    throw ArrangementError(
        ArrangementError::Kind::BadParameter,
        "need at least " + std::to_string(arrangement_points) +
            " blow-ups to separate the two-pencil intersection points");
  }
  const long long N = num_blowups;
  const long long lines = static_cast<long long>(p) * (alpha + beta);

  CoverInvariants inv;
  inv.d = p;
  inv.chi_total = p * (3 + N - 2 * lines) + 2 * lines;
  inv.b1 = 0;
  inv.b2_plus.assign(static_cast<std::size_t>(p), 0);
  inv.b2_minus.assign(static_cast<std::size_t>(p), 0);
  inv.b2.assign(static_cast<std::size_t>(p), 0);
  inv.epsilon.assign(static_cast<std::size_t>(p), Rational(0));
  for (int r = 0; r < p; ++r) {
    long long plus, minus;
    if (r == 0) {
      plus = 1;  // the base: the plane blown up at N points
      minus = N;
    } else {
      const long long twist = 2 * ab * r * (p - r);
      plus = 2 + twist - lines;
      minus = 1 + N - twist - lines;
    }
    if (plus < 0) throw NegativeBetti(r, plus);
    if (minus < 0) throw NegativeBetti(r, minus);
    inv.b2_plus[static_cast<std::size_t>(r)] = plus;
    inv.b2_minus[static_cast<std::size_t>(r)] = minus;
    inv.b2[static_cast<std::size_t>(r)] = plus + minus;
    inv.epsilon[static_cast<std::size_t>(r)] = Rational(plus - minus);
  }
  return inv;
}

}  // namespace arrange
