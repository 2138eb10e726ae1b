#pragma once

#include <vector>

namespace mersem::opt {

// (SLA violation rate, total gCO2) for one epoch; both minimized.
struct ObjectiveVector {
    double sla_rate = 0.0;
    double co2_g = 0.0;

    bool operator==(const ObjectiveVector&) const = default;
};

struct WeightVector {
    double w_s = 0.5; // SLA weight
    double w_c = 0.5; // carbon weight; w_s + w_c = 1
};

// Min-max normalization bounds, frozen per epoch from the initial
// population's objective extremes.
struct NormBounds {
    double sla_min = 0.0, sla_max = 1.0;
    double co2_min = 0.0, co2_max = 1.0;

    double norm_sla(double v) const {
        return sla_max == sla_min ? 0.0 : (v - sla_min) / (sla_max - sla_min);
    }
    double norm_co2(double v) const {
        return co2_max == co2_min ? 0.0 : (v - co2_min) / (co2_max - co2_min);
    }
};

// True iff a is no worse in both objectives and strictly better in one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Weighted sum of min-max normalized objectives; lower is better.
double scalarize(const ObjectiveVector& obj, const WeightVector& w, const NormBounds& bounds);

// Evenly spaced weights w_s = k/(n-1), k = 0..n-1.
// Throws Error(PopulationTooSmall) for n < 2.
std::vector<WeightVector> generate_weights(int n);

} // namespace mersem::opt
