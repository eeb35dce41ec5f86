#pragma once

#include <cstddef>
#include <functional>
#include <vector>

/// Small numerical building blocks shared across the library: a tridiagonal
/// solve, least-squares fits, adaptive quadrature, scalar minimization, and
/// monotone cubic interpolation. Everything is double precision.
namespace frontlab {

/// Solves a tridiagonal system in place (Thomas algorithm).
/// lower[i] multiplies x[i-1], diag[i] multiplies x[i], upper[i] multiplies
/// x[i+1]; lower[0] and upper[n-1] are ignored. Requires diagonal dominance
/// (no pivoting). rhs is overwritten with the solution.
void solve_tridiagonal(const std::vector<double>& lower,
                       const std::vector<double>& diag,
                       const std::vector<double>& upper,
                       std::vector<double>& rhs);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y ~ slope*x + intercept. Requires >= 2 points.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

struct LogCorrectedFit {
    double slope = 0.0;      ///< coefficient of t
    double log_coeff = 0.0;  ///< coefficient of ln|t|
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least squares y ~ slope*t + log_coeff*ln|t| + intercept.
/// Rejects samples with t = 0 (the regressor is singular there).
LogCorrectedFit fit_log_corrected(const std::vector<double>& t,
                                  const std::vector<double>& y);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol);

/// Golden-section minimization of f over [a, b]; assumes unimodality on the
/// bracket. Returns the abscissa of the minimum to absolute tolerance tol.
double minimize_golden(const std::function<double(double)>& f, double a,
                       double b, double tol);

/// Monotone cubic interpolant (Fritsch-Carlson) through strictly ordered
/// abscissae. Preserves monotone runs of the data, which makes it safe for
/// inverting monotone profiles.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::size_t segment(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  ///< node slopes after monotonicity limiting
};

/// Mean of a sample.
double mean(const std::vector<double>& v);

/// Linear-interpolated percentile, p in [0, 100]. Sorts a copy.
double percentile(std::vector<double> v, double p);

}  // namespace frontlab
