#include "sbr/stream.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace sbr {

struct SignedBitNumber::State {
  Level start;
  std::function<Digit(Level, const Rational&)> step;
  mutable std::mutex mutex;
  mutable std::vector<Digit> digits;      // digits[j] = a_{start+j}
  mutable std::vector<Rational> midpoints;  // midpoints[j] = m_{start+j}

  // Extends the memoized prefix through index `upto`.  Serialized so the
  // stateful generator is only ever advanced by one thread at a time.
  void fill(Level upto) const {
    std::lock_guard<std::mutex> lock(mutex);
    while (start + static_cast<Level>(digits.size()) <= upto) {
      Level i = start + static_cast<Level>(digits.size());
      const Rational prev = digits.empty() ? Rational(0) : midpoints.back();
      Digit d = step(i, prev);
      digits.push_back(d);
      midpoints.push_back(prev + Rational(digit_value(d)).mul_pow2(-i));
    }
  }

  Digit digit_at(Level i) const {
    fill(i);
    std::lock_guard<std::mutex> lock(mutex);
    return digits[static_cast<std::size_t>(i - start)];
  }

  Rational midpoint_at(Level l) const {
    fill(l);
    std::lock_guard<std::mutex> lock(mutex);
    return midpoints[static_cast<std::size_t>(l - start)];
  }
};

SignedBitNumber::SignedBitNumber(std::shared_ptr<State> state) : state_(std::move(state)) {}

SignedBitNumber SignedBitNumber::from_steps(Level start, std::function<Digit(Level, const Rational&)> step) {
  auto state = std::make_shared<State>();
  state->start = start;
  state->step = std::move(step);
  return SignedBitNumber(std::move(state));
}

Level SignedBitNumber::start() const { return state_->start; }

Digit SignedBitNumber::digit(Level i) const {
  if (i < state_->start) return Digit::zero;
  return state_->digit_at(i);
}

Rational SignedBitNumber::approx(Level l) const {
  if (l < state_->start) return Rational(0);
  return state_->midpoint_at(l);
}

Node SignedBitNumber::path_node(Level l) const {
  Rational scaled = approx(l).mul_pow2(l);  // m_l 2^l, an integer by construction
  return Node(scaled.numerator() - 1, l);
}

ApproximationOracle SignedBitNumber::oracle() const {
  SignedBitNumber self = *this;
  return [self](Level k) { return self.approx(k); };
}

SignedBitNumber from_rational(const Rational& r) {
  Level n = 0;
  if (!r.is_zero()) {
    const Rational a = r.abs();
    while (a <= Rational::pow2(-(n + 1))) ++n;
    while (a > Rational::pow2(-n)) --n;
  }
  return SignedBitNumber::from_steps(n, [r](Level i, const Rational& m) {
    const Rational off = Rational::pow2(-i);
    const Rational d0 = (r - m).abs();
    const Rational dm = (r - (m - off)).abs();
    const Rational dp = (r - (m + off)).abs();
    if (d0 <= dm && d0 <= dp) return Digit::zero;
    return dm < dp ? Digit::minus : Digit::plus;
  });
}

SignedBitNumber from_oracle(const ApproximationOracle& a) {
  Level n = 0;
  while (a(n + 4).abs() > Rational::pow2(-n - 1)) --n;
  return SignedBitNumber::from_steps(n, [a](Level i, const Rational& m) {
    const Rational delta = a(i + 3) - m;
    const Rational off = Rational::pow2(-i);
    const Rational d0 = delta.abs();
    const Rational dm = (delta + off).abs();
    const Rational dp = (delta - off).abs();
    if (d0 <= dm && d0 <= dp) return Digit::zero;
    return dm < dp ? Digit::minus : Digit::plus;
  });
}

char digit_char(Digit d) {
  switch (d) {
    case Digit::minus: return '-';
    case Digit::zero: return '0';
    default: return '+';
  }
}

std::string serialize(const SignedBitNumber& x, Level depth) {
  std::string out = "start=" + std::to_string(x.start()) + "\n";
  for (Level i = x.start(); i <= depth; ++i) out += digit_char(x.digit(i));
  out += "\ndepth=" + std::to_string(depth) + "\n";
  return out;
}

}  // namespace sbr
