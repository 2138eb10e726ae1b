#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mersem/infra.hpp"
#include "mersem/objective.hpp"
#include "mersem/rlsearch.hpp"
#include "mersem/simkernel.hpp"
#include "mersem/workload.hpp"

namespace mersem::opt {

struct Individual {
    sim::Genotype genotype;
    ObjectiveVector objectives;
    WeightVector weight; // fixed per population slot
    double fitness = 0.0;
};

struct ArchiveEntry {
    sim::Genotype genotype;
    ObjectiveVector objectives;
};

// Mutually non-dominated set of evaluated solutions.
class Archive {
public:
    // Inserts unless some member dominates the candidate; drops members the
    // candidate dominates. Exact duplicates (same objectives and genotype)
    // are kept once. Returns true when inserted.
    bool insert(const sim::Genotype& g, const ObjectiveVector& obj);

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<ArchiveEntry> entries_;
};

enum class BudgetKind { Generations, Wallclock };

struct MersemParams {
    int population = 20;
    BudgetKind budget = BudgetKind::Generations;
    int generations = 30;
    double wallclock_s = 5.0;  // per epoch, when budget == Wallclock
    double ls_fraction = 0.30; // share of the population refined per generation
    double genetic_rate = 1.0; // probability each offspring slot is filled
    int offspring_count = 0;   // 0 -> population size
    double mutation_rate = -1.0; // <0 -> 1/|jobs|
    rl::SearchParams rl;
    bool epsilon_global_decay = false; // decay epsilon across the whole run
                                       // instead of per local-search call
};

// n feasible assignments drawn uniformly per job over its feasible VM set,
// each paired with one weight from generate_weights(n). Objectives/fitness
// are left for the caller to evaluate.
std::vector<Individual> init_population(const sim::EpochModel& model, int n, std::uint64_t seed);

// Uniform crossover; parents must cover the same job set.
sim::Genotype crossover(const sim::Genotype& p1, const sim::Genotype& p2, Rng& rng);

// Each gene independently redrawn with probability per_gene_rate, uniformly
// over its feasible set (possibly unchanged).
sim::Genotype mutate(const sim::Genotype& g, double per_gene_rate, const sim::EpochModel& model,
                     Rng& rng);

struct Offspring {
    sim::Genotype genotype;
    ObjectiveVector objectives;
};

// For each offspring: archive insertion by dominance, then replacement of the
// population slot whose weight scalarizes the offspring best, iff strictly
// better than the incumbent under that weight.
void dominance_update(std::vector<Individual>& population, const std::vector<Offspring>& offspring,
                      Archive& archive, const NormBounds& bounds);

struct GenerationStats {
    int epoch = 0;
    int generation = 0; // 0 = after initialization
    std::vector<ObjectiveVector> archive_objectives;
};

using GenerationObserver = std::function<void(const GenerationStats&)>;

struct NamedSolution {
    std::string tag; // "sla" | "carbon" | "balanced"
    ObjectiveVector objectives;
    sim::EpochOutcome outcome;
};

struct EpochReport {
    int epoch = 0;
    std::vector<ArchiveEntry> archive;
    NormBounds bounds;
    std::vector<NamedSolution> named; // sla, carbon, balanced
    int generations_run = 0;
};

struct RunResult {
    std::vector<EpochReport> epochs;
    rl::QTable qtable; // shared across the whole run
};

// Algorithm main loop, per epoch: initialize and evaluate the population,
// freeze normalization bounds, then per generation refine the top fraction
// with RL-guided local search, breed offspring by tournament + crossover +
// mutation, and fold everything into the population/archive by dominance.
// Emits the final archive and the SLA/carbon/balanced picks per epoch.
// Deterministic for a fixed (trace, topology, params, seed).
RunResult run_mersem(const workload::WorkloadTrace& trace, const infra::Topology& topo,
                     const MersemParams& params, std::uint64_t seed,
                     const GenerationObserver& observer = {});

} // namespace mersem::opt
