#pragma once

// The three closed-form energy-spread models, each of the form
// DeltaE = K * sqrt(gamma):
//
//   SymmetricResonance  K = sqrt(m_parent - E_th)        (smooth cutoff)
//   StepCutoffGut       K = sqrt(M^2 / (4 pi dm))        (step cutoff at M)
//   Localization        K = sqrt(hbar v / 2R)            (detector radius R)
//
// The localization form uses the reduced constant hbar: it is the only
// choice consistent with the model's own truncated-line-shape numbers.

#include <string>
#include <variant>

#include "pdtk/channels.hpp"
#include "pdtk/spectral.hpp"
#include "pdtk/units.hpp"

namespace pdtk {

struct SymmetricResonance {
    DecayChannel channel;
};

struct StepCutoffGut {
    PhysQuantity cutoff_mass; // M
    DecayChannel channel;
};

struct Localization {
    PhysQuantity relative_speed;     // v, 0 < v <= c
    PhysQuantity localization_radius; // R
};

using SpreadModel = std::variant<SymmetricResonance, StepCutoffGut, Localization>;

inline void validate(const SpreadModel& model) {
    if (const auto* gut = std::get_if<StepCutoffGut>(&model)) {
        if (!(gut->cutoff_mass.dim() == dims::energy))
            throw DimensionError("StepCutoffGut: cutoff mass must be an energy, got " +
                                 to_string(gut->cutoff_mass.dim()));
        if (!(gut->cutoff_mass.canonical() > 0.0))
            throw std::domain_error("StepCutoffGut: cutoff mass must be > 0");
    } else if (const auto* loc = std::get_if<Localization>(&model)) {
        if (!(loc->relative_speed.dim() == dims::speed))
            throw DimensionError("Localization: v must be a speed, got " +
                                 to_string(loc->relative_speed.dim()));
        if (!(loc->localization_radius.dim() == dims::length))
            throw DimensionError("Localization: R must be a length, got " +
                                 to_string(loc->localization_radius.dim()));
        if (!(loc->relative_speed.canonical() > 0.0) ||
            loc->relative_speed.canonical() > constants().c_cm_per_s())
            throw std::domain_error("Localization: need 0 < v <= c");
        if (!(loc->localization_radius.canonical() > 0.0))
            throw std::domain_error("Localization: R must be > 0");
    }
    // SymmetricResonance carries no extra parameters; the channel validates itself.
}

inline std::string model_name(const SpreadModel& model) {
    if (std::holds_alternative<SymmetricResonance>(model))
        return "symmetric_resonance";
    if (std::holds_alternative<StepCutoffGut>(model))
        return "step_cutoff_gut";
    return "localization";
}

// Smooth cutoff f(omega) = M^2/(M+omega)^2, in (0, 1].
inline double cutoff_smooth(const PhysQuantity& omega, const PhysQuantity& cutoff_mass) {
    if (!(omega.dim() == dims::energy) || !(cutoff_mass.dim() == dims::energy))
        throw DimensionError("cutoff_smooth: omega and M must be energies");
    if (omega.canonical() < 0.0)
        throw std::domain_error("cutoff_smooth: omega must be >= 0");
    if (!(cutoff_mass.canonical() > 0.0))
        throw std::domain_error("cutoff_smooth: M must be > 0");
    const double m = cutoff_mass.canonical();
    const double w = omega.canonical();
    return (m / (m + w)) * (m / (m + w));
}

// Step cutoff: 1 below M, 0 above, 1/2 at exactly M (a measure-zero point;
// the symmetric midpoint convention never affects an integral).
inline double cutoff_step(const PhysQuantity& omega, const PhysQuantity& cutoff_mass) {
    if (!(omega.dim() == dims::energy) || !(cutoff_mass.dim() == dims::energy))
        throw DimensionError("cutoff_step: omega and M must be energies");
    if (omega.canonical() < 0.0)
        throw std::domain_error("cutoff_step: omega must be >= 0");
    if (!(cutoff_mass.canonical() > 0.0))
        throw std::domain_error("cutoff_step: M must be > 0");
    if (omega.canonical() < cutoff_mass.canonical())
        return 1.0;
    if (omega.canonical() > cutoff_mass.canonical())
        return 0.0;
    return 0.5;
}

// DeltaE(model, gamma) in MeV.
inline PhysQuantity delta_e(const SpreadModel& model, const PhysQuantity& gamma) {
    if (!(gamma.dim() == dims::energy))
        throw DimensionError("delta_e: gamma must be an energy, got " + to_string(gamma.dim()));
    if (!(gamma.canonical() > 0.0))
        throw std::domain_error("delta_e: gamma must be > 0");
    validate(model);

    const PhysQuantity result = std::visit(
        [&gamma](const auto& m) -> PhysQuantity {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SymmetricResonance>) {
                return sqrt(mass_gap(m.channel) * gamma);
            } else if constexpr (std::is_same_v<T, StepCutoffGut>) {
                return sqrt(m.cutoff_mass * m.cutoff_mass * gamma /
                            (4.0 * kPi * mass_gap(m.channel)));
            } else {
                return sqrt(constants().hbar * m.relative_speed * gamma /
                            (2.0 * m.localization_radius));
            }
        },
        model);
    if (!(result.dim() == dims::energy)) // dimension-tag audit
        throw DimensionError("delta_e: result is not an energy: " + to_string(result.dim()));
    return result;
}

// K = DeltaE / sqrt(gamma), in MeV^(1/2); independent of gamma.
inline PhysQuantity delta_e_coefficient(const SpreadModel& model) {
    const PhysQuantity unit_gamma(1.0, dims::energy);
    return delta_e(model, unit_gamma) / sqrt(unit_gamma);
}

} // namespace pdtk
