#pragma once

#include <map>
#include <vector>

#include "frontlab/waves.hpp"

namespace frontlab {

/// One atom of a speed measure: mass at a single front speed.
struct Atom {
    double speed = 0.0;
    double mass = 0.0;
};

/// Finite nonnegative atomic measure on front speeds plus an optional mass
/// at infinity (the spatially homogeneous component). Atoms are kept sorted
/// by speed; atoms at equal speeds are merged. Total mass must be positive.
class AtomicMeasure {
public:
    AtomicMeasure(std::vector<Atom> atoms, double mass_at_infinity = 0.0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    double mass_at_infinity() const { return mass_at_infinity_; }
    double total_mass() const { return total_mass_; }

    /// Smallest / largest atom speed; throws std::logic_error when there are
    /// no atoms.
    double leftmost() const;
    double rightmost() const;

private:
    std::vector<Atom> atoms_;
    double mass_at_infinity_ = 0.0;
    double total_mass_ = 0.0;
};

struct EnvelopeBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-sided envelope for the entire solution attached to an atomic speed
/// measure, evaluated at (t, x). With c* = 2 sqrt(mu0), an atom exactly at
/// c* contributes phi_{c*}(x - c* t - c* ln(mass)) to both bounds; the
/// remaining mass M (supercritical atoms plus the mass at infinity) yields
///   lower: max of the critical term and
///          M^{-1} [sum_i m_i phi_{c_i}(x - c_i t - c_i ln M)
///                  + theta(t + ln M) mass_at_infinity],
///   upper: critical term
///          + M^{-1} [sum_i m_i e^{-lambda_{c_i}(x - c_i t - c_i ln M)}
///                    + e^{mu0 (t + ln M)} mass_at_infinity].
/// M-terms are absent when M = 0. Atom speeds below c* are rejected;
/// profiles must contain a profile for every supercritical atom speed
/// (matched within 1e-9 relative tolerance).
EnvelopeBounds umu_envelopes(const AtomicMeasure& m,
                             const std::map<double, WaveProfile>& profiles,
                             const AutonomousReaction& g, double t, double x);

/// Steepness transplant phi(phi^{-1}(anchor_value) + x) for a profile phi.
/// For a front no less steep than phi this bounds the field from below for
/// x <= 0 and from above for x >= 0. anchor_value must lie inside the
/// profile's sampled value range.
double steepness_envelope(const WaveProfile& profile, double anchor_value,
                          double x);

}  // namespace frontlab
