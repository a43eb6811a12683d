#pragma once

// Dimension-safe quantities and physical constants.
//
// Canonical internal units are MeV (energy), seconds (time) and
// centimeters (length); speeds are cm/s. Energy exponents are tracked in
// half-units so that sqrt-energy coefficients (MeV^(1/2)) remain typed.

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "pdtk/errors.hpp"

namespace pdtk {

struct Dimension {
    int energy_half = 0; // exponent of MeV^(1/2)
    int time = 0;        // exponent of s
    int length = 0;      // exponent of cm

    constexpr bool operator==(const Dimension&) const = default;
};

namespace dims {
inline constexpr Dimension dimensionless{0, 0, 0};
inline constexpr Dimension energy{2, 0, 0};
inline constexpr Dimension energy_sqrt{1, 0, 0};
inline constexpr Dimension time{0, 1, 0};
inline constexpr Dimension inverse_time{0, -1, 0};
inline constexpr Dimension length{0, 0, 1};
inline constexpr Dimension speed{0, -1, 1};
inline constexpr Dimension action{2, 1, 0}; // energy x time (hbar)
} // namespace dims

constexpr Dimension operator*(Dimension a, Dimension b) {
    return {a.energy_half + b.energy_half, a.time + b.time, a.length + b.length};
}

constexpr Dimension operator/(Dimension a, Dimension b) {
    return {a.energy_half - b.energy_half, a.time - b.time, a.length - b.length};
}

inline std::string to_string(Dimension d) {
    if (d == dims::dimensionless)
        return "dimensionless";
    std::string out;
    auto append = [&out](std::string_view base, int num, int den) {
        if (num == 0)
            return;
        if (!out.empty())
            out += "*";
        out += base;
        if (num == den)
            return;
        out += "^(";
        out += std::to_string(num);
        if (den != 1) {
            out += "/";
            out += std::to_string(den);
        }
        out += ")";
    };
    append("MeV", d.energy_half, 2);
    append("s", d.time, 1);
    append("cm", d.length, 1);
    return out;
}

// A magnitude expressed in some unit of its dimension. `canonical()` is the
// value in the canonical basis; arithmetic always yields canonical results.
class PhysQuantity {
public:
    constexpr PhysQuantity() = default;

    PhysQuantity(double magnitude, Dimension dim, double unit_scale = 1.0)
        : magnitude_(magnitude), scale_(unit_scale), dim_(dim) {
        if (!std::isfinite(magnitude_) || !std::isfinite(scale_) || scale_ <= 0.0)
            throw std::domain_error("PhysQuantity: magnitude must be finite and unit scale positive");
    }

    double magnitude() const { return magnitude_; }
    double canonical() const { return magnitude_ * scale_; }
    Dimension dim() const { return dim_; }

    PhysQuantity operator-() const { return {-magnitude_, dim_, scale_}; }

private:
    double magnitude_ = 0.0;
    double scale_ = 1.0;
    Dimension dim_ = dims::dimensionless;
};

namespace detail {
inline void require_same_dim(const PhysQuantity& a, const PhysQuantity& b, const char* op) {
    if (!(a.dim() == b.dim()))
        throw DimensionError(std::string(op) + ": dimension mismatch: " + to_string(a.dim()) +
                             " vs " + to_string(b.dim()));
}
} // namespace detail

inline PhysQuantity operator+(const PhysQuantity& a, const PhysQuantity& b) {
    detail::require_same_dim(a, b, "add");
    return {a.canonical() + b.canonical(), a.dim()};
}

inline PhysQuantity operator-(const PhysQuantity& a, const PhysQuantity& b) {
    detail::require_same_dim(a, b, "subtract");
    return {a.canonical() - b.canonical(), a.dim()};
}

inline PhysQuantity operator*(const PhysQuantity& a, const PhysQuantity& b) {
    return {a.canonical() * b.canonical(), a.dim() * b.dim()};
}

inline PhysQuantity operator/(const PhysQuantity& a, const PhysQuantity& b) {
    return {a.canonical() / b.canonical(), a.dim() / b.dim()};
}

inline PhysQuantity operator*(double s, const PhysQuantity& q) {
    return {s * q.canonical(), q.dim()};
}

inline PhysQuantity operator*(const PhysQuantity& q, double s) { return s * q; }

inline PhysQuantity operator/(const PhysQuantity& q, double s) {
    return {q.canonical() / s, q.dim()};
}

inline bool operator==(const PhysQuantity& a, const PhysQuantity& b) {
    detail::require_same_dim(a, b, "compare");
    return a.canonical() == b.canonical();
}

inline bool operator<(const PhysQuantity& a, const PhysQuantity& b) {
    detail::require_same_dim(a, b, "compare");
    return a.canonical() < b.canonical();
}

inline bool operator<=(const PhysQuantity& a, const PhysQuantity& b) {
    detail::require_same_dim(a, b, "compare");
    return a.canonical() <= b.canonical();
}

inline bool operator>(const PhysQuantity& a, const PhysQuantity& b) { return b < a; }
inline bool operator>=(const PhysQuantity& a, const PhysQuantity& b) { return b <= a; }

// Square root; every exponent of the dimension must be even.
inline PhysQuantity sqrt(const PhysQuantity& q) {
    const Dimension d = q.dim();
    if (d.energy_half % 2 != 0 || d.time % 2 != 0 || d.length % 2 != 0)
        throw DimensionError("sqrt: dimension " + to_string(d) + " has no exact square root");
    if (q.canonical() < 0.0)
        throw std::domain_error("sqrt: negative quantity");
    return {std::sqrt(q.canonical()), {d.energy_half / 2, d.time / 2, d.length / 2}};
}

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

struct UnitDef {
    std::string_view name;
    Dimension dim;
    double to_canonical;
};

inline constexpr double kJulianYearSeconds = 3.15576e7;
inline constexpr double kSpeedOfLightCmPerS = 2.99792458e10;

inline constexpr std::array<UnitDef, 10> kUnits{{
    {"MeV", dims::energy, 1.0},
    {"GeV", dims::energy, 1.0e3},
    {"s", dims::time, 1.0},
    {"years", dims::time, kJulianYearSeconds},
    {"year", dims::time, kJulianYearSeconds},
    {"cm", dims::length, 1.0},
    {"m", dims::length, 100.0},
    {"cm_per_s", dims::speed, 1.0},
    {"c", dims::speed, kSpeedOfLightCmPerS},
    {"dimensionless", dims::dimensionless, 1.0},
}};

inline const UnitDef& unit(std::string_view name) {
    for (const auto& u : kUnits)
        if (u.name == name)
            return u;
    throw std::domain_error("unknown unit '" + std::string(name) + "'");
}

inline PhysQuantity quantity(double value, std::string_view unit_name) {
    const UnitDef& u = unit(unit_name);
    return {value, u.dim, u.to_canonical};
}

// Re-expresses q in the named unit. The magnitude is rescaled by the exact
// unit ratio; the physical value is unchanged.
inline PhysQuantity convert(const PhysQuantity& q, std::string_view unit_name) {
    const UnitDef& u = unit(unit_name);
    if (!(q.dim() == u.dim))
        throw DimensionError("convert: quantity has dimension " + to_string(q.dim()) +
                             ", unit '" + std::string(unit_name) + "' has dimension " +
                             to_string(u.dim));
    return {q.canonical() / u.to_canonical, u.dim, u.to_canonical};
}

inline double value_in(const PhysQuantity& q, std::string_view unit_name) {
    return convert(q, unit_name).magnitude();
}

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

// Reference data (PDG/CODATA); the Julian year is used throughout.
struct ConstantsTable {
    PhysQuantity hbar{6.58212e-22, dims::action};          // MeV s
    PhysQuantity c{kSpeedOfLightCmPerS, dims::speed};      // cm/s
    PhysQuantity year{kJulianYearSeconds, dims::time};     // s
    PhysQuantity proton_mass{938.272, dims::energy};       // MeV
    PhysQuantity pi0_mass{134.9768, dims::energy};         // MeV
    PhysQuantity electron_mass{0.51100, dims::energy};     // MeV

    double hbar_mev_s() const { return hbar.canonical(); }
    double c_cm_per_s() const { return c.canonical(); }
    double year_seconds() const { return year.canonical(); }
};

inline const ConstantsTable& constants() {
    static const ConstantsTable table{};
    return table;
}

// ---------------------------------------------------------------------------
// Width <-> lifetime
// ---------------------------------------------------------------------------

// gamma = hbar / tau, in MeV.
inline PhysQuantity width_from_lifetime(const PhysQuantity& tau) {
    if (!(tau.dim() == dims::time))
        throw DimensionError("width_from_lifetime: expected time, got " + to_string(tau.dim()));
    if (!(tau.canonical() > 0.0))
        throw std::domain_error("width_from_lifetime: lifetime must be > 0");
    return constants().hbar / tau;
}

// tau = hbar / gamma, in seconds.
inline PhysQuantity lifetime_from_width(const PhysQuantity& gamma) {
    if (!(gamma.dim() == dims::energy))
        throw DimensionError("lifetime_from_width: expected energy, got " + to_string(gamma.dim()));
    if (!(gamma.canonical() > 0.0))
        throw std::domain_error("lifetime_from_width: width must be > 0");
    return constants().hbar / gamma;
}

} // namespace pdtk
