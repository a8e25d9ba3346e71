#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "outerstring/rational.hpp"

namespace outerstring {

/// Values whose binary size would exceed this many bits raise Error(BoundTooLarge).
inline constexpr std::size_t kMaxBoundBits = std::size_t{1} << 26;

struct FBoundTrace {
  std::vector<BigInt> beta;  // beta_0 .. beta_{k+1}
  BigInt gamma;
};

FBoundTrace f_bound_trace(const BigInt& alpha, long k, const BigInt& xi);
BigInt f_bound(const BigInt& alpha, long k, const BigInt& xi);

/// f composed 2^n+1 times starting from 2·alpha·((2^{mn+2}+2m)·xi+1), plus one.
BigInt g2_bound(const BigInt& alpha, unsigned long n, long k, const BigInt& xi);

BigInt gt_bound(unsigned long t, const BigInt& alpha, unsigned long n, long k, const BigInt& xi);

/// xi_1 = 1, xi_k = g_{k+1}(0, 0) computed with xi_{k-1}.
BigInt explicit_chi_bound(long k);

struct BoundText {
  std::string text;
  std::size_t digits = 0;
  bool scientific = false;
};

/// Plain decimal up to `plain_limit` digits, otherwise "d.ddd…e+N" with the exact digit count.
BoundText format_bound(const BigInt& value, std::size_t plain_limit = 1000000, int mantissa_digits = 20);

}  // namespace outerstring
