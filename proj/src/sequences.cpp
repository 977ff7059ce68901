#include "sbr/sequences.hpp"

#include <stdexcept>
#include <string>

#include "sbr/error.hpp"

namespace sbr {

bool check_regular(const RationalSequence& q, Index N) {
  if (N < 1) throw std::invalid_argument("check_regular: N must be >= 1");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(N));
  for (Index i = 1; i <= N; ++i) v.push_back(q(i));
  for (Index m = 1; m <= N; ++m) {
    const Rational bm(1, m);
    for (Index n = m + 1; n <= N; ++n) {
      if ((v[m - 1] - v[n - 1]).abs() > bm + Rational(1, n)) return false;
    }
  }
  return true;
}

bool check_modulus(const RationalSequence& q, const Modulus& mu, Index I, Index N) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(N));
  for (Index i = 1; i <= N; ++i) v.push_back(q(i));
  // suffix extrema make each (i, j) pair O(1)
  std::vector<Rational> smax(v), smin(v);
  for (Index i = N - 1; i >= 1; --i) {
    smax[i - 1] = max(smax[i - 1], smax[i]);
    smin[i - 1] = min(smin[i - 1], smin[i]);
  }
  std::vector<Index> mus;
  mus.reserve(static_cast<std::size_t>(I));
  for (Index i = 1; i <= I; ++i) {
    Index mi = mu(i);
    if (mi < 1) throw std::invalid_argument("check_modulus: modulus values must be >= 1");
    mus.push_back(mi);
  }
  for (Index i = 1; i <= I; ++i) {
    if (mus[i - 1] > N) continue;  // no m in range, vacuous
    for (Index j = i; j <= I; ++j) {
      if (mus[j - 1] > N) continue;
      const Rational bound = Rational(1, i) + Rational(1, j);
      // only cross differences |q_m - q_n|, m >= mu_i, n >= mu_j
      if (smax[mus[i - 1] - 1] - smin[mus[j - 1] - 1] > bound) return false;
      if (smax[mus[j - 1] - 1] - smin[mus[i - 1] - 1] > bound) return false;
    }
  }
  return true;
}

Index compute_modulus(const RationalSequence& p, const RationalSequence& q,
                      const ConvergenceWitness& K, Index m) {
  if (m < 1) throw std::invalid_argument("compute_modulus: m must be >= 1");
  Index k = K(Rational(1, 6 * m));
  if (k < 1) k = 1;
  const Rational target = q(3 * m);
  const Rational bound(1, 2 * m);
  if ((p(k) - target).abs() > bound)
    throw ContractViolation("compute_modulus: |p(k) - q(3m)| > 1/(2m) at k = " + std::to_string(k) +
                            "; witness or sequence violates its contract");
  Index mu = k;
  for (Index n = k - 1; n >= 1; --n) {
    if ((p(n) - target).abs() > bound) break;
    mu = n;
  }
  return mu;
}

RationalSequence regularize(const RationalSequence& q, const Modulus& mu) {
  return [q, mu](Index m) { return q(mu(m)); };
}

std::vector<Int> approx_numerators(const Rational& r, Index n) {
  if (n < 1) throw std::invalid_argument("approx_numerators: n must be >= 1");
  const Rational t = r * Rational(n);
  Int lo = (t - Rational(1)).ceil();
  Int hi = (t + Rational(1)).floor();
  std::vector<Int> out;
  for (Int m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

}  // namespace sbr
