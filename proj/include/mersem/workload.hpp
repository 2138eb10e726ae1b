#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mersem::workload {

// (device index, per-device job index); orders lexicographically, which is
// the tie-break used throughout the queueing model.
struct JobId {
    int device = 0;
    int index = 0;
    auto operator<=>(const JobId&) const = default;
};

std::string to_string(const JobId& id);

struct Task {
    std::string task_id;
    double mi = 0.0; // millions of instructions
    double input_size_bits = 0.0;
    double mem_req_gb = 0.0;
    int cpu_req_cores = 1;
    std::vector<std::string> predecessors;
    // Set only by multi-entry normalization; the single case where mi == 0
    // is legal. Virtual entries are stripped again on save.
    bool virtual_entry = false;

    bool operator==(const Task&) const = default;
};

struct Job {
    JobId job_id;
    std::vector<Task> tasks;
    int max_parallel_tasks = 1;
    double deadline_s = 0.0;
    double mem_req_gb = 0.0;
    std::string origin_device;
    int release_epoch = 0;
    // Annotation from the synthetic generator ("small"/"large"); not part of
    // the trace file schema, so it is excluded from equality.
    std::string job_class;

    bool operator==(const Job& other) const;
};

struct WorkloadTrace {
    std::map<int, std::vector<Job>> epochs;

    bool operator==(const WorkloadTrace&) const = default;
    std::size_t total_jobs() const;
};

enum class JobDefectCode {
    NonPositiveField,
    DuplicateTaskId,
    DanglingPredecessor,
    CyclicDag,
    NoEntryTask,
    MultipleEntryTasks,
};

const char* to_string(JobDefectCode code);

struct JobDefect {
    JobDefectCode code;
    std::string task_id;  // offending task, when applicable
    std::string field;    // offending field, when applicable
    std::string message;
};

// Returns the first violated invariant, or nullopt when the job is valid.
// Check order: per-task/job fields, duplicate ids, dangling predecessors,
// cycles, entry count.
std::optional<JobDefect> validate_job(const Job& job);

// Max over all root-to-leaf precedence paths of the summed task MI.
// Precondition: job is valid.
double critical_path_mi(const Job& job);

// Sum of MI over all tasks. Precondition: job is valid.
double total_mi(const Job& job);

// Size of the largest level, where level(t) = longest predecessor distance
// from the entry task. Precondition: job is valid.
int dag_width(const Job& job);

// Reads a trace file (schema in README), normalizes multi-entry DAGs by
// prepending a zero-MI virtual entry task, and validates every job.
// Throws ConfigError with code ParseError / SchemaError / ValidationError.
WorkloadTrace load_workload(const std::string& path);

// Inverse of load_workload; virtual entry tasks are stripped so that
// load(save(trace)) == trace.
void save_workload(const WorkloadTrace& trace, const std::string& path);

struct ClassProfile {
    double mi_min = 1500.0, mi_max = 6000.0; // per-task MI, uniform
    double input_bits_min = 4.0e6, input_bits_max = 6.0e7;
    int depth_min = 2, depth_max = 4;   // DAG levels below the entry
    int fanout_min = 1, fanout_max = 3; // tasks per level
    double deadline_min_s = 6.0, deadline_max_s = 25.0;
    double job_mem_min_gb = 0.5, job_mem_max_gb = 4.0;
    double task_mem_min_gb = 0.1, task_mem_max_gb = 1.0;
    int cpu_req_min = 1, cpu_req_max = 2;
};

struct GeneratorProfile {
    std::string name; // "small" | "large" | "mixed"
    std::vector<std::string> devices; // origin pool, index i = JobId.device
    ClassProfile small_class;
    ClassProfile large_class;
    double mix_small = 0.5; // weight of the small class under "mixed"
};

// Large jobs scale the small-class MI by ~8x and the input size by ~4x.
ClassProfile default_small_class();
ClassProfile default_large_class();
GeneratorProfile make_profile(const std::string& name, std::vector<std::string> devices);

// Pure function of (profile, sizes, seed); every emitted job is valid and
// has exactly one entry task. Throws ConfigError(InvalidProfile).
WorkloadTrace generate_synthetic(const GeneratorProfile& profile, int jobs_per_epoch,
                                 int epochs, std::uint64_t seed);

} // namespace mersem::workload
