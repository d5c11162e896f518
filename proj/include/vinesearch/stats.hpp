#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

//! scalar statistical functions shared across modules
namespace vinesearch::stats {

//! standard normal density
double norm_pdf(double x);

//! standard normal cdf, erf-based
double norm_cdf(double x);

//! standard normal quantile; rational approximation plus one Newton step,
//! |norm_cdf(norm_quantile(p)) - p| <= 1e-12 on [1e-10, 1 - 1e-10]
double norm_quantile(double p);

//! Kendall's tau-b via merge-sort inversion counting, O(n log n),
//! ties handled through the standard tie corrections; 0 if degenerate
double kendall_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

//! average ranks (ties share the mean of their rank range), 1-based
Eigen::VectorXd ranks_average(const Eigen::VectorXd& x);

//! linear-interpolation quantile (type 7) of unsorted data, p in [0, 1]
double quantile_type7(std::vector<double> x, double p);

//! unbiased sample variance (divisor n - 1)
double sample_variance(const std::vector<double>& x);

//! composite Simpson rule on n_points (odd, >= 3) equally spaced points
double simpson(const std::function<double(double)>& f,
               double a,
               double b,
               int n_points);

//! Gauss-Legendre nodes and weights on [0, 1]
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_01(int n);

} // namespace vinesearch::stats
