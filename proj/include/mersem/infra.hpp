#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mersem::infra {

enum class Layer { Edge, Fog, Cloud };

const char* to_string(Layer layer);
Layer layer_from_string(const std::string& s);

struct ComputeNode {
    std::string node_id;
    Layer layer = Layer::Edge;
    int cores = 1;
    double mips_per_core = 0.0; // per-core capacity
    double mem_gb = 0.0;
    double storage_gb = 0.0;
    double p_idle_w = 0.0;
    double p_max_w = 0.0;
    std::string carbon_trace_id;
    std::optional<std::string> datacenter_id; // nullopt for edge devices
};

struct VirtualMachine {
    std::string vm_id;
    std::string host_node;
    int cores = 1;
    double mem_gb = 0.0;
};

// One precomputed device -> datacenter route. Effective bandwidth is the min
// over the traversed hops, propagation delay the sum.
struct NetworkPath {
    std::string from_device;
    std::string to_datacenter;
    double bandwidth_bps = 0.0;
    double prop_delay_s = 0.0;
};

struct CarbonTrace {
    std::string trace_id;
    // (time-of-day seconds, gCO2/kWh), sorted by time; step function over a
    // 24h day, wrapping around midnight.
    std::vector<std::pair<double, double>> samples;
    // Intensity is overridden to 0 for time-of-day in [start, end).
    std::optional<std::pair<double, double>> solar_window;
};

class Topology {
public:
    std::vector<ComputeNode> nodes;   // datacenter servers first, then edge devices
    std::vector<VirtualMachine> vms;  // datacenter VMs first, then edge slots
    std::vector<NetworkPath> paths;
    std::vector<CarbonTrace> traces;
    double epoch_length_s = 900.0;
    double sample_interval_s = 6.0;

    void rebuild_index();

    int node_index(const std::string& node_id) const; // -1 when absent
    int vm_index(const std::string& vm_id) const;
    int trace_index(const std::string& trace_id) const;
    const NetworkPath* path(const std::string& device, const std::string& datacenter) const;

    const ComputeNode& node_of_vm(const VirtualMachine& vm) const;
    std::size_t intervals_per_epoch() const;

private:
    std::unordered_map<std::string, int> node_idx_;
    std::unordered_map<std::string, int> vm_idx_;
    std::unordered_map<std::string, int> trace_idx_;
    std::unordered_map<std::string, int> path_idx_; // key "device\x1f" + dc
};

// Builds and fully validates a topology from its JSON description (schema in
// README; the bundled configs are the reference). Edge devices get one
// implicit single-queue execution slot "<node>/slot" spanning all cores.
// Throws ConfigError with code SchemaError / InvariantViolation.
Topology build_topology(const nlohmann::json& config);
Topology load_topology(const std::string& path);

// Step-function lookup of the node's trace at time-of-day (t mod 86400);
// 0 inside the solar window. Throws Error(UnknownNode).
double carbon_intensity(const Topology& topo, const std::string& node_id, double t_abs_s);

struct PathLookup {
    bool local = false;
    const NetworkPath* path = nullptr; // set iff !local
};

// Resolves the route a job's input data takes from an edge device to the VM.
// Throws Error with code UnknownDevice / UnknownVm / NoPath.
PathLookup path_for(const Topology& topo, const std::string& device, const std::string& vm_id);

} // namespace mersem::infra
