#pragma once

// Jump-intensity measures: absolute moments, tail functionals, and sampling
// of jumps conditioned on exceeding a truncation level.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "levywave/rng.hpp"

namespace levywave {

/// Signals a divergent moment integral. Thrown instead of returning a large
/// finite stand-in.
class InfiniteMomentError : public std::runtime_error {
public:
    explicit InfiniteMomentError(const std::string& what) : std::runtime_error(what) {}
};

/// One-sided measure alpha * z^{-1} e^{-rate z} dz on (0, inf).
struct GammaSpec {
    double shape = 1.0; // alpha
    double rate = 1.0;  // beta
};

struct DiracAtom {
    double mass = 1.0;
    double location = 1.0; // nonzero
};

/// Density samples on a symmetric grid {±z_k}, z_min > 0, linearly
/// interpolated between nodes. An optional power tail density(z_max) *
/// (|z|/z_max)^{-tail_exponent} extends each side beyond z_max; moments
/// of order p >= tail_exponent - 1 then diverge.
struct TabulatedSpec {
    std::vector<double> abscissae;   // ascending, all > 0
    std::vector<double> density_pos; // density at +abscissae[k]
    std::vector<double> density_neg; // density at -abscissae[k]
    std::optional<double> tail_exponent;
};

enum class MeasureKind { Gamma, DiracMixture, Tabulated };

class LevyMeasure {
public:
    static LevyMeasure gamma(double shape, double rate);
    static LevyMeasure dirac_mixture(std::vector<DiracAtom> atoms);
    static LevyMeasure tabulated(TabulatedSpec spec);

    MeasureKind kind() const;
    const GammaSpec& gamma_spec() const { return std::get<GammaSpec>(spec_); }
    const std::vector<DiracAtom>& atoms() const { return std::get<std::vector<DiracAtom>>(spec_); }
    const TabulatedSpec& tabulated_spec() const { return std::get<TabulatedSpec>(spec_); }

    /// m_p = integral of |z|^p against the measure. Gamma uses the closed
    /// form shape * Gamma(p) * rate^{-p} (any p > 0); mixtures use the finite
    /// sum; tabulated measures are integrated by quadrature.
    double moment(double p) const;

    /// M_p = max(m_2, m_p).
    double max_moment(double p) const;

    /// Mass of {|z| > eps}; finite for every eps > 0.
    double tail_mass(double eps) const;

    /// Signed first moment of {|z| > eps}; this is the compensator density
    /// of the truncated noise.
    double tail_mean(double eps) const;

    /// Second moment of {|z| > eps}.
    double tail_second_moment(double eps) const;

    /// sigma_eps^2 = second moment of {0 < |z| <= eps}; increases to m_2.
    double small_jump_variance(double eps) const;

    /// One draw from the measure restricted to {|z| > eps} and normalized.
    ///
    /// Gamma jumps use rejection: propose z = eps + Exponential(rate) and
    /// accept with probability eps/z (the restricted density is dominated
    /// there); the acceptance rate is eps * rate * e^{eps rate} *
    /// E1(eps rate), which stays workable for eps >= 1e-3 at moderate rates.
    double sample_jump(double eps, RandomStream& rng) const;

private:
    using Spec = std::variant<GammaSpec, std::vector<DiracAtom>, TabulatedSpec>;
    explicit LevyMeasure(Spec spec) : spec_(std::move(spec)) {}

    Spec spec_;
};

} // namespace levywave
