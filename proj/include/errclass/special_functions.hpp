#pragma once

namespace errclass {

// Natural log of the gamma function (Lanczos approximation, g=7).
double log_gamma(double x);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P,
// series expansion for x < a + 1 and a continued fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Complementary error function: power series for small x, Lentz
// continued fraction for large x.
double erfc(double x);

// Standard normal CDF and two-tailed p-value for a z-score.
double normal_cdf(double z);
double normal_two_tailed_p(double z);

// Upper tail of the chi-square distribution: Q(dof/2, chi2/2).
double chi_square_upper_tail(double chi_square, int dof);

}  // namespace errclass
