#pragma once

// Decay-channel bookkeeping: parent and product rest masses, the threshold
// energy E_th (sum of product masses) and the mass gap parent - E_th.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pdtk/units.hpp"

namespace pdtk {

class DecayChannel {
public:
    DecayChannel(std::string name, PhysQuantity parent_mass,
                 std::vector<PhysQuantity> product_masses)
        : name_(std::move(name)), parent_mass_(parent_mass),
          product_masses_(std::move(product_masses)) {
        if (!(parent_mass_.dim() == dims::energy))
            throw DimensionError("DecayChannel: parent mass must be an energy, got " +
                                 to_string(parent_mass_.dim()));
        if (product_masses_.empty())
            throw std::domain_error("DecayChannel '" + name_ + "': needs at least one product");
        double sum = 0.0;
        for (const auto& m : product_masses_) {
            if (!(m.dim() == dims::energy))
                throw DimensionError("DecayChannel: product mass must be an energy, got " +
                                     to_string(m.dim()));
            if (m.canonical() < 0.0)
                throw std::domain_error("DecayChannel '" + name_ + "': negative product mass");
            sum += m.canonical();
        }
        if (!(parent_mass_.canonical() > sum))
            throw std::domain_error("DecayChannel '" + name_ +
                                    "': parent mass must exceed the sum of product masses");
    }

    const std::string& name() const { return name_; }
    const PhysQuantity& parent_mass() const { return parent_mass_; }
    const std::vector<PhysQuantity>& product_masses() const { return product_masses_; }

private:
    std::string name_;
    PhysQuantity parent_mass_;
    std::vector<PhysQuantity> product_masses_;
};

// E_th: sum of the product rest masses.
inline PhysQuantity threshold_energy(const DecayChannel& ch) {
    double sum = 0.0;
    for (const auto& m : ch.product_masses())
        sum += m.canonical();
    return {sum, dims::energy};
}

// parent_mass - E_th; positive by the channel invariant.
inline PhysQuantity mass_gap(const DecayChannel& ch) {
    return ch.parent_mass() - threshold_energy(ch);
}

// The built-in channel p -> pi0 e+.
inline DecayChannel proton_to_pi0_positron() {
    const ConstantsTable& k = constants();
    return DecayChannel("p->pi0,e+", k.proton_mass, {k.pi0_mass, k.electron_mass});
}

} // namespace pdtk
