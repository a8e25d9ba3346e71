#include "outerstring/bounds.hpp"

#include "outerstring/errors.hpp"

namespace outerstring {

namespace {

void require_params(long k, const BigInt& xi) {
  if (k < 1) throw Error(ErrorKind::PreconditionFailure, "k must be at least 1");
  if (xi < 1) throw Error(ErrorKind::PreconditionFailure, "xi must be at least 1");
}

std::size_t bits(const BigInt& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

void check_bits(long double estimate, const char* what) {
  if (estimate > static_cast<long double>(kMaxBoundBits))
    throw Error(ErrorKind::BoundTooLarge, std::string(what) + " needs about " + std::to_string(static_cast<long double>(estimate)) +
                                              " bits, above the limit of " + std::to_string(kMaxBoundBits));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

unsigned long rounds(unsigned long n) {
  if (n >= 62) throw Error(ErrorKind::BoundTooLarge, "2^n + 1 rounds with n = " + std::to_string(n));
  return (1UL << n) + 1;
}

}  // namespace

FBoundTrace f_bound_trace(const BigInt& alpha, long k, const BigInt& xi) {
  require_params(k, xi);
  if (alpha < 0) throw Error(ErrorKind::PreconditionFailure, "alpha must be nonnegative");
  FBoundTrace out;
  out.beta.push_back(BigInt(0));
  const BigInt step = (2 * alpha + 6 * k) * xi + 2;
  for (long i = 0; i <= k; ++i) {
    BigInt next = 2 * out.beta.back() + step;
    out.beta.push_back(next);
  }
  out.gamma = pow2(static_cast<unsigned long>(k + 2)) * (out.beta.back() + 2 * xi + 1);
  return out;
}

BigInt f_bound(const BigInt& alpha, long k, const BigInt& xi) { return f_bound_trace(alpha, k, xi).gamma; }

BigInt g2_bound(const BigInt& alpha, unsigned long n, long k, const BigInt& xi) {
  require_params(k, xi);
  if (alpha < 0) throw Error(ErrorKind::PreconditionFailure, "alpha must be nonnegative");
  const unsigned long m = rounds(n);
  BigInt start(0);
  if (alpha != 0) {
    check_bits(static_cast<long double>(m) * n + 2 + bits(xi) + 2 * bits(alpha), "the starting value");
    BigInt inner = (pow2(m * n + 2) + 2 * BigInt(static_cast<unsigned long>(m))) * xi + 1;
    start = 2 * alpha * inner;
  }
  // f is affine in its argument: f(x) = a·x + b, so f^m(x) = a^m·x + b·(a^m − 1)/(a − 1)
  const BigInt b = f_bound(BigInt(0), k, xi);
  const BigInt a = f_bound(BigInt(1), k, xi) - b;
  if (f_bound(BigInt(2), k, xi) != 2 * a + b)
    throw Error(ErrorKind::InternalContradiction, "f is not affine in alpha");
  check_bits(static_cast<long double>(m) * bits(a) + bits(start) + bits(b), "the m-fold composition");
  const BigInt am = power(a, m);
  BigInt geometric = (am - 1) / (a - 1);
  BigInt result = am * start + b * geometric + 1;
  return result;
}

BigInt gt_bound(unsigned long t, const BigInt& alpha, unsigned long n, long k, const BigInt& xi) {
  if (t < 2) throw Error(ErrorKind::PreconditionFailure, "t must be at least 2");
  if (t == 2) return g2_bound(alpha, n, k, xi);
  const unsigned long m = rounds(n);
  BigInt beta = alpha;
  for (unsigned long i = 0; i < m; ++i) beta = gt_bound(t - 1, beta, n + i, k, xi);
  return beta;
}

BigInt explicit_chi_bound(long k) {
  if (k < 1) throw Error(ErrorKind::PreconditionFailure, "k must be at least 1");
  BigInt xi(1);
  for (long kappa = 2; kappa <= k; ++kappa) xi = gt_bound(static_cast<unsigned long>(kappa + 1), BigInt(0), 0, kappa, xi);
  return xi;
}

BoundText format_bound(const BigInt& value, std::size_t plain_limit, int mantissa_digits) {
  BoundText out;
  std::string digits = value.get_str(10);
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.erase(0, 1);
  out.digits = digits.size();
  if (out.digits <= plain_limit) {
    out.text = (negative ? "-" : "") + digits;
    return out;
  }
  out.scientific = true;
  const std::size_t keep = std::min<std::size_t>(digits.size(), static_cast<std::size_t>(std::max(mantissa_digits, 1)));
  std::string mantissa = digits.substr(0, 1);
  if (keep > 1) mantissa += "." + digits.substr(1, keep - 1);
  out.text = (negative ? "-" : "") + mantissa + "e+" + std::to_string(out.digits - 1);
  return out;
}

}  // namespace outerstring
