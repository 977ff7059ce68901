#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sbr/rational.hpp"

namespace sbr {

using Index = std::int64_t;

/// 1-indexed rational sequence, a deterministic oracle.
using RationalSequence = std::function<Rational(Index)>;

/// Candidate modulus of convergence: i -> mu_i >= 1.
using Modulus = std::function<Index(Index)>;

/// Convergence witness for a sequence p with limit r: K(eps) returns an
/// index k with |p_n - r| <= eps for all n >= k.
using ConvergenceWitness = std::function<Index(const Rational&)>;

/// |q(m) - q(n)| <= 1/m + 1/n for all 1 <= m, n <= N.
bool check_regular(const RationalSequence& q, Index N);

/// |q(m) - q(n)| <= 1/i + 1/j for all i, j <= I and all
/// mu_i <= m <= N, mu_j <= n <= N.  A necessary-condition check on a
/// finite prefix, not a proof.
bool check_modulus(const RationalSequence& q, const Modulus& mu, Index I, Index N);

/// Modulus extraction for a sequence p converging to the limit r of the
/// regular sequence q.  With k = K(1/(6m)), returns the smallest
/// mu <= k such that |p(n) - q(3m)| <= 1/(2m) for all mu <= n <= k.
/// The result does not depend on which valid k the witness supplies,
/// and |p(n) - r| <= 1/m for all n >= mu.
/// Throws ContractViolation when even n = k violates the scan bound
/// (an invalid witness or a non-convergent p).
Index compute_modulus(const RationalSequence& p, const RationalSequence& q,
                      const ConvergenceWitness& K, Index m);

/// m -> q(mu_m); regular whenever mu is a modulus for q.
RationalSequence regularize(const RationalSequence& q, const Modulus& mu);

/// The integers m with |r - m/n| <= 1/n, i.e. |r n - m| <= 1.
/// Always nonempty, max - min <= 2.
std::vector<Int> approx_numerators(const Rational& r, Index n);

}  // namespace sbr
