#pragma once

#include <string>
#include <utility>
#include <vector>

/// Closed-form layer for admissible decay rates and asymptotic speeds of
/// fronts in media with past/future linearization slopes mu_minus, mu_plus:
/// the admissible decay set
///   K = {(k-, k+) : 0 < k- <= sqrt(mu-), 0 < k+ <= min(k-, sqrt(mu+))}
/// parameterizes all admissible speed pairs via c_pm = k_pm + mu_pm / k_pm.
/// Everything here is pure arithmetic; nothing touches the PDE solver.
namespace frontlab {

/// Exponential tail decay rates of the front profile in the far past /
/// future. Membership in K is checked by the operations, not the type.
struct DecayPair {
    double kappa_minus = 0.0;
    double kappa_plus = 0.0;
};

/// Asymptotic past / future speeds X(t)/t as t -> -/+ infinity.
struct SpeedPair {
    double c_minus = 0.0;
    double c_plus = 0.0;
};

/// Outcome of an admissibility query. When admissible, witness realizes the
/// speeds through speeds_from_decays; kappa and min_c_plus describe the
/// binding constraint (minimal admissible future speed for this c_minus).
struct AdmissibilityResult {
    bool admissible = false;
    DecayPair witness;
    double kappa = 0.0;
    double min_c_plus = 0.0;
    std::string reason;  ///< empty when admissible, else the failed condition
};

/// The decay rate whose future speed bounds all admissible ones from below:
///   kappa = min(sqrt(mu_plus), (c_minus - sqrt(c_minus^2 - 4 mu_minus))/2).
/// Throws std::invalid_argument when c_minus < 2 sqrt(mu_minus).
double kappa_from_cminus(double c_minus, double mu_minus, double mu_plus);

/// c_pm = kappa_pm + mu_pm / kappa_pm. Throws std::invalid_argument naming
/// the violated K constraint when d is not admissible for (mu-, mu+).
SpeedPair speeds_from_decays(const DecayPair& d, double mu_minus,
                             double mu_plus);

/// A speed pair is admissible iff c_minus >= 2 sqrt(mu_minus) and
/// c_plus >= kappa + mu_plus / kappa with kappa = kappa_from_cminus(c_minus).
/// Boundary equalities count as admissible (closed conditions, with 1e-12
/// relative slack so round trips through speeds_from_decays are stable).
/// The witness takes kappa_minus as the smaller root for c_minus and
/// kappa_plus as the root of k + mu_plus/k = c_plus that is <= sqrt(mu_plus),
/// ties toward the smaller root.
AdmissibilityResult admissible(const SpeedPair& p, double mu_minus,
                               double mu_plus);

/// Whether some front has global mean speed gamma: true iff
/// mu_plus <= mu_minus and gamma >= 2 sqrt(mu_minus).
bool global_mean_admissible(double gamma, double mu_minus, double mu_plus);

/// Future speed of the equal-decay front continued across the medium switch:
///   c_plus = c_minus + 2 (mu_plus - mu_minus) / (c_minus - sqrt(c_minus^2 -
///   4 mu_minus)).
/// Coincides with speeds_from_decays at kappa_minus = kappa_plus whenever
/// that decay is admissible for the future medium. Throws when
/// c_minus < 2 sqrt(mu_minus).
double nr1_future_speed(double c_minus, double mu_minus, double mu_plus);

/// Future speed forced by a datum with exponential decay lambda:
///   c_plus = m + mu_plus / m,  m = min(lambda, sqrt(mu_plus)).
/// Throws when lambda <= 0 (such data do not produce transition fronts).
double thmdecay_future_speed(double lambda, double mu_plus);

/// Admissibility for u_t = sigma(t) u_xx + f(t,u) with diffusivity limits
/// sigma_pm: c_minus >= 2 sqrt(sigma_minus mu_minus) and c_plus >= kappa +
/// sigma_plus mu_plus / kappa with
///   kappa = min(sqrt(sigma_plus mu_plus),
///               (sigma_plus/sigma_minus)(c_minus - sqrt(c_minus^2 -
///               4 sigma_minus mu_minus))/2).
/// Implemented by mapping to the unit-diffusivity problem in the stretched
/// clocks, so sigma_pm = 1 reduces exactly to admissible(). The witness is
/// the stretched-time decay pair; kappa reports the bound above.
AdmissibilityResult sigma_admissible(const SpeedPair& p, double mu_minus,
                                     double mu_plus, double sigma_minus,
                                     double sigma_plus);

struct LabeledPolyline {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Sampled geometry of K and of the speed region for plotting and sweeps.
struct RegionSample {
    double mu_minus = 0.0;
    double mu_plus = 0.0;
    /// Closed outline of K in (kappa-, kappa+): a triangle when
    /// mu_plus >= mu_minus, a trapezoid truncated at kappa+ = sqrt(mu_plus)
    /// otherwise.
    LabeledPolyline k_boundary;
    /// Lower boundary of the admissible region in (c-, c+): the minimal
    /// future speed as a function of c-; the region extends up and right.
    LabeledPolyline c_curve;
    /// Named boundary pieces when mu_plus < mu_minus: the top edge "(BC]"
    /// (supercritical past, critical future), the corner "B" (both
    /// critical), and the right edge "(AB)" (critical past, non-minimal
    /// future). Empty otherwise.
    std::vector<LabeledPolyline> marks;
    /// Strictly interior decay pairs, resolution of them, for round-trip
    /// sweeps.
    std::vector<DecayPair> interior;
};

/// Samples K for (mu-, mu+) at the given resolution (>= 2).
RegionSample region_sample(double mu_minus, double mu_plus, int resolution);

}  // namespace frontlab
