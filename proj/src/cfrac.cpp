#include "polygeo/cfrac.hpp"

#include <map>
#include <tuple>

namespace polygeo::cfrac {

Integer ContinuedFraction::digit(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

std::vector<Integer> ContinuedFraction::digits(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(digit(i));
  return out;
}

ContinuedFraction expand(const Quad& alpha, std::size_t max_digits) {
  if (alpha.is_rational()) throw Error(ErrorCode::BadArgs, "continued fraction expansion needs an irrational value");
  if (alpha.sign() <= 0) throw Error(ErrorCode::BadArgs, "continued fraction expansion needs alpha > 0");

  // Complete quotients x_{i+1} = 1 / (x_i - a_i); a repeated canonical state
  // marks the start of the period. a_0 always stays in the preperiod, so
  // phi reads [1; (1)] rather than [(1)].
  using State = std::tuple<Integer, Integer, Integer>;
  std::map<State, std::size_t> seen;
  std::vector<Integer> digits;
  Quad x = alpha;
  for (std::size_t i = 0; i <= max_digits; ++i) {
    State key{x.a(), x.b(), x.c()};
    if (auto it = seen.find(key); it != seen.end()) {
      ContinuedFraction cf;
      cf.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      cf.digit_bound = 0;
      for (std::size_t k = 1; k < digits.size(); ++k) cf.digit_bound = std::max(cf.digit_bound, digits[k]);
      return cf;
    }
    if (i > 0) seen.emplace(std::move(key), i);
    Integer a = x.floor();
    digits.push_back(a);
    x = (x - Quad(Rational(a))).inverse();
  }
  throw Error(ErrorCode::PeriodNotFound, "no period within " + std::to_string(max_digits) + " digits");
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  Integer p_prev = 1, q_prev = 0;  // m = -1
  Integer p_prev2 = 0, q_prev2 = 1;  // m = -2
  for (std::size_t m = 0; m < count; ++m) {
    const Integer a = cf.digit(m);
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    out.push_back({m, p, q});
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
  }
  return out;
}

Convergent convergent(const ContinuedFraction& cf, std::size_t m) { return convergents(cf, m + 1).back(); }

Quad approximation_gap(const Quad& alpha, const ContinuedFraction& cf, std::size_t m) {
  const Convergent c = convergent(cf, m);
  return abs(alpha - Quad(Rational(c.p, c.q)));
}

Quad approximation_gap(const Quad& alpha, std::size_t m) { return approximation_gap(alpha, expand(alpha), m); }

namespace {

// Denominators q_0 .. q_k with q_k > n.
std::vector<Integer> denominators_past(const Integer& n, const ContinuedFraction& cf) {
  std::vector<Integer> q;
  Integer q_prev = 0, q_prev2 = 1;
  for (std::size_t m = 0;; ++m) {
    Integer next = cf.digit(m) * q_prev + q_prev2;
    q_prev2 = std::move(q_prev);
    q_prev = next;
    q.push_back(std::move(next));
    if (q.back() > n) return q;
  }
}

}  // namespace

OstrowskiDigits ostrowski_decompose(const Integer& n, const ContinuedFraction& cf) {
  if (n < 0) throw Error(ErrorCode::BadArgs, "Ostrowski decomposition needs N >= 0");
  if (n == 0) return {0, {0}};
  const std::vector<Integer> q = denominators_past(n, cf);
  const std::size_t top = q.size() - 2;  // q[top] <= n < q[top + 1]
  OstrowskiDigits out{n, std::vector<Integer>(top + 1, 0)};
  Integer rest = n;
  for (std::size_t i = top; i >= 1; --i) {
    out.digits[i] = rest / q[i];
    rest -= out.digits[i] * q[i];
  }
  out.digits[0] = rest;  // q_0 = 1
  return out;
}

bool ostrowski_validate(const OstrowskiDigits& d, const ContinuedFraction& cf) {
  if (d.digits.empty()) return false;
  for (const Integer& b : d.digits) {
    if (b < 0) return false;
  }
  if (d.value == 0) {
    for (const Integer& b : d.digits) {
      if (b != 0) return false;
    }
    return true;
  }
  const std::size_t n = d.digits.size() - 1;
  const std::vector<Convergent> conv = convergents(cf, n + 2);
  if (!(conv[n].q <= d.value && d.value < conv[n + 1].q)) return false;
  Integer sum = 0;
  for (std::size_t i = 0; i <= n; ++i) sum += d.digits[i] * conv[i].q;
  if (sum != d.value) return false;
  if (d.digits[0] > cf.digit(1) - 1) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    const Integer bound = cf.digit(i + 1);
    if (d.digits[i] > bound) return false;
    if (d.digits[i] == bound && d.digits[i - 1] != 0) return false;
  }
  return true;
}

}  // namespace polygeo::cfrac
