#pragma once

#include <cstddef>
#include <vector>

namespace protoform::stats {

double mean(const std::vector<double>& v);
// Sample standard deviation (n-1 denominator); 0 for n < 2.
double stddev(const std::vector<double>& v);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with df degrees of freedom.
double student_t_cdf(double t, double df);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  // One-sided p-value for H1: mean(a) < mean(b).
  double p = 0.5;
};

// Welch's t-test. Degenerate zero-variance inputs resolve by mean comparison.
WelchResult welch_one_sided(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace protoform::stats
