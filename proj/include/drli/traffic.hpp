#pragma once

#include <limits>
#include <span>
#include <vector>

#include "drli/rng.hpp"

namespace drli {

/// One step of a load schedule: from `at_time` on, the offered load is `load`.
struct LoadStep {
    double at_time = 0.0;
    double load = 0.0;  // Erlang, packet arrivals per packet duration
};

/// Draws the next interarrival gap for a Poisson process of the given rate.
/// load == 0 yields +inf (no arrival), which is not an error.
double next_interarrival(Rng& rng, double load_erlang);

/// Uniform destination choice among the 1-hop neighbors.
int pick_destination(Rng& rng, std::span<const int> nbrs);

/// Poisson packet source for one node. Owns its random stream; the offered
/// load may change at scheduled simulated times, at which point the pending
/// interarrival draw is discarded and redrawn at the new rate.
class TrafficSource {
public:
    TrafficSource(int node, double load_erlang, std::vector<LoadStep> schedule, Rng rng);

    int node() const { return node_; }

    /// Time of the next packet arrival; +inf when no further arrival exists.
    double next_arrival_time() const { return next_time_; }

    /// Offered load in effect at the most recent arrival.
    double current_load() const { return load_; }

    /// Consumes the pending arrival and draws the next one.
    void pop_arrival();

    /// True if this source can ever generate traffic.
    bool ever_active() const;

private:
    void schedule_next(double from);

    int node_;
    double load_;
    std::vector<LoadStep> schedule_;  // strictly increasing times
    std::size_t next_step_ = 0;
    Rng rng_;
    double next_time_ = std::numeric_limits<double>::infinity();
};

}  // namespace drli
