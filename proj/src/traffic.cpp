#include "drli/traffic.hpp"

#include <stdexcept>

namespace drli {

double next_interarrival(Rng& rng, double load_erlang) {
    if (load_erlang < 0.0) {
        throw std::invalid_argument("traffic: negative load");
    }
    if (load_erlang == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return rng.exponential(load_erlang);
}

int pick_destination(Rng& rng, std::span<const int> nbrs) {
    if (nbrs.empty()) {
        throw std::invalid_argument("traffic: node has no neighbors to send to");
    }
    return nbrs[rng.uniform_int(static_cast<int>(nbrs.size()))];
}

TrafficSource::TrafficSource(int node, double load_erlang, std::vector<LoadStep> schedule,
                             Rng rng)
    : node_(node), load_(load_erlang), schedule_(std::move(schedule)), rng_(rng) {
    if (load_ < 0.0) throw std::invalid_argument("traffic: negative load");
    for (std::size_t i = 0; i < schedule_.size(); ++i) {
        if (schedule_[i].load < 0.0) throw std::invalid_argument("traffic: negative load");
        if (i > 0 && schedule_[i].at_time <= schedule_[i - 1].at_time) {
            throw std::invalid_argument("traffic: schedule times must be strictly increasing");
        }
    }
    schedule_next(0.0);
}

void TrafficSource::schedule_next(double from) {
    double cursor = from;
    for (;;) {
        double proposed = (load_ > 0.0) ? cursor + rng_.exponential(load_)
                                        : std::numeric_limits<double>::infinity();
        if (next_step_ < schedule_.size() && schedule_[next_step_].at_time <= proposed) {
            // Rate changes before the proposed arrival: discard it and redraw
            // from the switch instant (memorylessness makes this exact).
            cursor = schedule_[next_step_].at_time;
            load_ = schedule_[next_step_].load;
            ++next_step_;
            continue;
        }
        next_time_ = proposed;
        return;
    }
}

void TrafficSource::pop_arrival() {
    schedule_next(next_time_);
}

bool TrafficSource::ever_active() const {
    if (load_ > 0.0 || next_time_ != std::numeric_limits<double>::infinity()) return true;
    for (std::size_t i = next_step_; i < schedule_.size(); ++i) {
        if (schedule_[i].load > 0.0) return true;
    }
    return false;
}

}  // namespace drli
