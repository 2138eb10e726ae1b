#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mersem::metrics {

// 2-D minimization front against a reference point.
struct Front {
    std::vector<std::array<double, 2>> points;
    std::array<double, 2> ref{1.0, 1.0};
};

// By default points with any coordinate beyond ref are clipped out (they
// contribute no volume); with clip=false such points raise
// Error(PointBeyondReference) inside hypervolume().
Front make_front(std::vector<std::array<double, 2>> points, std::array<double, 2> ref,
                 bool clip = true);

// Exact dominated area between the front and ref: filter dominated points,
// sort by the first coordinate, sweep the stripes.
double hypervolume(const Front& front);

struct Interval {
    double mean = 0.0;
    double half_width = 0.0;
};

// Student-t interval mean +/- t_{(1+level)/2, n-1} * s / sqrt(n).
// Throws Error(TooFewSamples) for fewer than 2 samples.
Interval confidence_interval(std::span<const double> samples, double level = 0.95);

// One run of one method-variant, already reduced over epochs.
struct RunRecord {
    std::string scenario;
    std::string variant;
    std::uint64_t seed = 0;
    double sla_rate = 0.0;
    double co2_device_g = 0.0;
    double co2_fog_g = 0.0;
    double co2_cloud_g = 0.0;
    double co2_total_g = 0.0;
    double phv = 0.0;
};

struct SummaryRow {
    std::string scenario;
    std::string variant;
    int runs = 0;
    bool ci_defined = false; // false for single-run rows (half-widths forced to 0)
    Interval sla_rate, co2_device_g, co2_fog_g, co2_cloud_g, co2_total_g, phv;
};

// Per (scenario, variant) means with 95% confidence intervals.
// Throws Error(MixedScenario) when records span scenarios.
std::vector<SummaryRow> aggregate_runs(std::span<const RunRecord> records);

} // namespace mersem::metrics
