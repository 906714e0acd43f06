#pragma once

namespace roughheston {

// Two-parameter Mittag-Leffler function E_{a,b}(x) = sum_k x^k / Gamma(a k + b), real x.
//
// Relative accuracy is about 1e-12 or better on the envelope
//   x >= 0 with x^(1/a) <= 700,
//   x < 0 with a <= 1 (any magnitude; for a == 1 and b not in {1,2}, x >= -10),
//   x < 0 with a > 1 as long as the alternating series keeps 8 digits.
// Outside it an AccuracyError is thrown; invalid a, b or non-finite x give a DomainError.
double mittag_leffler(double a, double b, double x);

// 1/Gamma(z) for any real z, exactly zero at the poles.
double reciprocal_gamma(double z);

}  // namespace roughheston
