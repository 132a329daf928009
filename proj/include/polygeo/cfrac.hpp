#pragma once

#include <cstddef>
#include <vector>

#include "polygeo/exact.hpp"

namespace polygeo::cfrac {

/// Eventually periodic expansion a0; a1, a2, ... of a quadratic irrational.
///
/// Digits are indexed from 0, so digit(0) = a0 = floor(alpha). The digit
/// bound counts indices >= 1 only.
struct ContinuedFraction {
  std::vector<Integer> preperiod;  // a0 .. a_{k-1}
  std::vector<Integer> period;     // repeats forever after the preperiod
  Integer digit_bound;

  Integer digit(std::size_t i) const;
  std::vector<Integer> digits(std::size_t count) const;
};

/// p_m / q_m, indexed from m = 0 with q_0 = 1.
///
/// Convergent denominators elsewhere in the literature are often counted
/// from q_1; here q_m always means the denominator of [a0; a1, ..., a_m].
struct Convergent {
  std::size_t index = 0;
  Integer p;
  Integer q;
};

/// Ostrowski digits b_0 .. b_n of N with respect to the q_i numeration,
/// where n is the unique index with q_n <= N < q_{n+1} (digits.size() = n+1).
struct OstrowskiDigits {
  Integer value;
  std::vector<Integer> digits;
};

/// Throws PeriodNotFound when no repeated complete quotient shows up within
/// max_digits steps, BadArgs when alpha is rational or not positive.
ContinuedFraction expand(const Quad& alpha, std::size_t max_digits = 4096);

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);
Convergent convergent(const ContinuedFraction& cf, std::size_t m);

/// |alpha - p_m / q_m|, exact.
Quad approximation_gap(const Quad& alpha, const ContinuedFraction& cf, std::size_t m);
Quad approximation_gap(const Quad& alpha, std::size_t m);

/// Greedy decomposition, largest denominator first. N = 0 yields digits {0}.
OstrowskiDigits ostrowski_decompose(const Integer& n, const ContinuedFraction& cf);
bool ostrowski_validate(const OstrowskiDigits& digits, const ContinuedFraction& cf);

}  // namespace polygeo::cfrac
