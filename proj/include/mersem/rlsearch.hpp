#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mersem/objective.hpp"
#include "mersem/rng.hpp"
#include "mersem/simkernel.hpp"

namespace mersem::rl {

// The five perturbation strengths: fraction of jobs reassigned per step.
inline constexpr std::array<double, 5> kReassignFraction{0.02, 0.05, 0.08, 0.10, 0.15};
inline constexpr int kActionCount = 5;

// Discretized solution context.
struct StateKey {
    std::uint8_t fitness_bin = 0; // 10 bins over [0,1]
    std::uint8_t tod_bin = 0;     // 4 six-hour bins
    std::uint8_t sla_bin = 0;     // 10 bins, normalized
    std::uint8_t carbon_bin = 0;  // 10 bins, normalized
    std::uint8_t edge_bin = 0;    // 5 bins over [0, jobs]
    std::uint8_t fog_bin = 0;
    std::uint8_t cloud_bin = 0;
    std::uint8_t jobs_bin = 0;

    auto operator<=>(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept;
};

class QTable {
public:
    using Row = std::array<double, kActionCount>;

    // Zero row for unseen states.
    const Row& row(const StateKey& key) const;
    Row& row_mut(const StateKey& key);

    std::size_t size() const { return table_.size(); }
    // Deterministic (key-sorted) view, for dumps.
    std::vector<std::pair<StateKey, Row>> sorted_entries() const;

private:
    std::unordered_map<StateKey, Row, StateKeyHash> table_;
};

struct SearchParams {
    double alpha = 0.15;
    double gamma = 0.9;
    double epsilon0 = 0.4;
    double epsilon_decay = 0.95; // multiplicative, per episode
    double epsilon_floor = 0.05;
    int episodes = 10;
    int steps_per_episode = 1;
};

struct TrajectoryStep {
    StateKey state;
    int action = 0;
    double reward = 0.0;
};

StateKey encode_state(const opt::ObjectiveVector& obj, double fitness, double time_of_day_s,
                      const std::array<int, 3>& layer_counts, int job_count,
                      const opt::NormBounds& bounds);

// Epsilon-greedy; greedy ties break toward the lowest action index.
int select_action(const QTable& q, const StateKey& s, double epsilon, Rng& rng);

// Reassigns max(1, round(fraction * |jobs|)) distinct jobs, each redrawn
// uniformly from its feasible set excluding the current VM when that set has
// at least two members. Output is feasible.
sim::Genotype perturb(const sim::Genotype& g, int action, const sim::EpochModel& model, Rng& rng);

// 0.7 * tanh(fit_cur - fit_new) + 0.3 * r_dom, with r_dom = 1.0 when the new
// objectives dominate the current, -0.5 when dominated, 0.1 otherwise.
double reward(const opt::ObjectiveVector& obj_cur, const opt::ObjectiveVector& obj_new,
              double fit_cur, double fit_new);

// Monte-Carlo style end-of-episode update: discounted returns G_t computed
// backward, improvement signal I = tanh(f_start - f_local_best) added to
// every step, updates applied sequentially in trajectory order.
// Throws Error(EmptyTrajectory).
void update_qtable(QTable& q, const std::vector<TrajectoryStep>& trajectory,
                   const SearchParams& params, double f_start, double f_local_best);

struct LocalSearchResult {
    sim::Genotype genotype;
    opt::ObjectiveVector objectives;
    double fitness = 0.0;
    int evaluations = 0;
};

// Evaluates a genotype to (objectives, scalarized fitness) under the weight
// the caller fixed.
using EvalFn = std::function<std::pair<opt::ObjectiveVector, double>(const sim::Genotype&)>;

struct LocalSearchInput {
    const sim::EpochModel* model = nullptr;
    opt::NormBounds bounds;
    double time_of_day_s = 0.0;
    EvalFn evaluate;
};

// Algorithm: per episode decay epsilon, then per step encode/select/perturb/
// evaluate/reward, greedy-accept the perturbation iff its fitness is not
// worse, and update the Q-table from the episode's trajectory. Returns the
// best solution encountered; mutates the shared Q-table and the caller's
// epsilon state in place.
LocalSearchResult local_search(const sim::Genotype& start, const LocalSearchInput& in,
                               QTable& q, const SearchParams& params, double& epsilon, Rng& rng);

} // namespace mersem::rl
