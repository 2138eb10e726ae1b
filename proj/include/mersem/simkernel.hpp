#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mersem/infra.hpp"
#include "mersem/objective.hpp"
#include "mersem/workload.hpp"

namespace mersem::sim {

using workload::Job;
using workload::JobId;

// The decision vector: exactly one VM per job of the epoch.
struct Assignment {
    std::map<JobId, std::string> vm_of;
};

struct JobOutcome {
    JobId job;
    std::string vm_id;
    double comm_s = 0.0;
    double queue_s = 0.0;
    double exec_s = 0.0;
    double latency_s = 0.0; // comm + queue + exec
    bool sla_violated = false;
};

struct EpochOutcome {
    std::vector<JobOutcome> jobs; // sorted by job id
    // Per-node utilization per sampling interval. Timelines cover at least
    // the epoch's T intervals and extend past the epoch boundary when an
    // assigned job overruns it (overruns bill to their release epoch).
    std::map<std::string, std::vector<double>> utilization;
    std::map<std::string, double> energy_kwh;
    std::map<std::string, double> co2_g;
    double sla_rate = 0.0;
    double co2_total_g = 0.0;
    double energy_total_kwh = 0.0;
    std::array<double, 3> co2_by_layer{0.0, 0.0, 0.0}; // edge, fog, cloud
};

// Transmission + propagation delay for the job's entry-task input; 0 when the
// VM lives on the originating device.
double comm_delay(const Job& job, const infra::VirtualMachine& vm, const infra::Topology& topo);

// Critical-path time when the VM has enough cores for the DAG's parallelism,
// sequential time otherwise. Capacity is the host's per-core MIPS.
double exec_time(const Job& job, const infra::VirtualMachine& vm, const infra::ComputeNode& host);

// (P_idle + (P_max - P_idle) * u) / 3600 — the /3600 folds the hours
// conversion so that multiplying by dt/1000 yields kWh.
// Throws Error(UtilizationOutOfRange).
double node_power(const infra::ComputeNode& node, double u);

// Sums per-interval energy over the timeline. The timeline must cover at
// least expected_intervals entries (it may be longer when jobs overran the
// epoch); throws Error(TimelineLengthMismatch) otherwise.
double epoch_energy(const infra::ComputeNode& node, std::span<const double> timeline,
                    double delta_s, std::size_t expected_intervals);

// Per-node CO2 = sum over sampling intervals of interval energy times the
// node's carbon intensity at the interval midpoint; plus the system total.
// per_node_interval_kwh maps node id -> kWh per sampling interval.
// Throws Error(UnknownNode).
std::pair<std::map<std::string, double>, double>
epoch_emissions(const infra::Topology& topo,
                const std::map<std::string, std::vector<double>>& per_node_interval_kwh,
                int epoch);

opt::ObjectiveVector objective_vector(const EpochOutcome& outcome);

// Full evaluation of one assignment: per-VM FIFO queueing, latency, SLA,
// utilization timelines, energy and carbon. Deterministic.
// Throws Error(InfeasibleAssignment) naming the offending job.
EpochOutcome evaluate_assignment(const Assignment& assignment, const std::vector<Job>& jobs,
                                 const infra::Topology& topo, int epoch);

// Dense genotype: position j holds the VM index assigned to the j-th job
// (jobs sorted by JobId).
using Genotype = std::vector<std::uint32_t>;

// Prebaked per-epoch evaluation context: jobs, feasible VM sets, comm/exec
// matrices, per-interval carbon intensities and idle-power baselines. This is
// the objective oracle the optimizer walks; evaluate() and
// evaluate_detailed() share one accumulation path.
class EpochModel {
public:
    EpochModel(std::vector<Job> jobs, const infra::Topology& topo, int epoch);

    const infra::Topology& topology() const { return *topo_; }
    int epoch() const { return epoch_; }
    double epoch_start_s() const { return epoch_ * topo_->epoch_length_s; }

    std::size_t job_count() const { return jobs_.size(); }
    std::size_t vm_count() const { return topo_->vms.size(); }
    const std::vector<Job>& jobs() const { return jobs_; }

    // Feasible VM indices for job j: the origin device's slot plus every
    // fog/cloud VM with enough memory; ascending. Never empty
    // (Error(NoFeasibleVm) at construction otherwise).
    const std::vector<std::uint32_t>& feasible_vms(std::size_t j) const { return feasible_[j]; }
    bool is_feasible(std::size_t j, std::uint32_t vm) const;

    int vm_layer(std::uint32_t vm) const { return vm_layer_[vm]; } // 0 edge, 1 fog, 2 cloud
    std::array<int, 3> layer_counts(const Genotype& g) const;

    double comm_s(std::size_t j, std::uint32_t vm) const { return comm_[j * n_vms_ + vm]; }
    double exec_s(std::size_t j, std::uint32_t vm) const { return exec_[j * n_vms_ + vm]; }

    // Carbon intensity of a node at a sampling-interval midpoint (intervals
    // may extend past the epoch).
    double interval_ci(std::size_t node, std::size_t interval) const;

    opt::ObjectiveVector evaluate(const Genotype& g) const;
    EpochOutcome evaluate_detailed(const Genotype& g) const;

    Genotype to_genotype(const Assignment& a) const; // validates feasibility
    Assignment to_assignment(const Genotype& g) const;

private:
    struct JobInfo {
        double crit_mi, total_mi, entry_bits, deadline_s, mem_gb;
        int parallel_gate; // min(max_parallel_tasks, dag_width)
        int origin_node;
    };

    EpochOutcome run(const Genotype& g, bool detailed) const;
    void validate(const Genotype& g) const;

    const infra::Topology* topo_;
    int epoch_;
    std::size_t n_vms_;
    std::vector<Job> jobs_; // sorted by JobId
    std::vector<JobInfo> info_;
    std::vector<std::vector<std::uint32_t>> feasible_;
    std::vector<char> feasible_mask_; // jobs x vms
    std::vector<int> vm_layer_;
    std::vector<int> vm_host_;
    std::vector<double> comm_; // jobs x vms
    std::vector<double> exec_; // jobs x vms
    std::size_t t_epoch_;      // sampling intervals per epoch
    std::vector<double> ci_;   // nodes x t_epoch_, midpoint carbon intensity
    std::vector<double> idle_interval_kwh_; // per node
    std::vector<double> idle_epoch_co2_;    // per node
    double base_energy_kwh_ = 0.0; // all nodes idle, whole epoch
    double base_co2_g_ = 0.0;
};

} // namespace mersem::sim
