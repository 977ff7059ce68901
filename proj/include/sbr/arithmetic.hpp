#pragma once

#include "sbr/stream.hpp"

namespace sbr {

/// Digit-wise negation; exact, same start index.
SignedBitNumber negate(const SignedBitNumber& x);

/// Sum via the composed oracle k -> approx(x,k+1) + approx(y,k+1).
SignedBitNumber add(const SignedBitNumber& x, const SignedBitNumber& y);

/// Rational scaling.  Powers of two (times a sign) reindex the digit
/// stream directly; other scalars go through the oracle
/// k -> q * approx(x, k+s) with s = max(0, ceil(log2|q|) + 1).
SignedBitNumber scale(const Rational& q, const SignedBitNumber& x);

SignedBitNumber min_sb(const SignedBitNumber& x, const SignedBitNumber& y);
SignedBitNumber max_sb(const SignedBitNumber& x, const SignedBitNumber& y);

/// Product; the oracle precision is padded by the exact bound
/// 2 + max(0, ceil(log2(Bx + By + 1))) with B = 2^(1-start).
SignedBitNumber mul(const SignedBitNumber& x, const SignedBitNumber& y);

enum class Comparison { less, greater, within };

/// Three-valued order test at precision l.  `less` and `greater` are
/// certain; `within` certifies |value(x) - value(y)| <= 2^(2-l).
Comparison compare(const SignedBitNumber& x, const SignedBitNumber& y, Level l);

}  // namespace sbr
