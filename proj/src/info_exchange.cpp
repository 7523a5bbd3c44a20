#include "drli/info_exchange.hpp"

#include <stdexcept>
#include <string>

namespace drli {

PiggybackPayload::PiggybackPayload(double sender_throughput, std::span<const int> neighbor_ids,
                                   std::span<const float> rates)
    : sender_throughput_(static_cast<float>(sender_throughput)),
      count_(static_cast<std::uint8_t>(neighbor_ids.size())),
      ids_(neighbor_ids.data()) {
    for (std::size_t i = 0; i < rates.size(); ++i) rates_[i] = rates[i];
}

bool PiggybackPayload::has_report_for(int node) const {
    for (int i = 0; i < count_; ++i) {
        if (ids_[i] == node) return true;
    }
    return false;
}

double PiggybackPayload::report_for(int node) const {
    for (int i = 0; i < count_; ++i) {
        if (ids_[i] == node) return rates_[i];
    }
    throw std::invalid_argument("payload: no reverse report for node " + std::to_string(node));
}

PiggybackLedger::PiggybackLedger(int owner, std::span<const int> neighbors)
    : owner_(owner),
      neighbors_(neighbors),
      delivered_counts_(neighbors.size(), 0),
      period_rates_(neighbors.size(), 0.0f),
      heard_throughput_(neighbors.size(), 0.0),
      heard_epoch_(neighbors.size(), -1),
      own_components_(neighbors.size(), 0.0) {}

int PiggybackLedger::slot_of(int node) const {
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
        if (neighbors_[i] == node) return static_cast<int>(i);
    }
    throw std::invalid_argument("ledger: node " + std::to_string(node) +
                                " is not a neighbor of " + std::to_string(owner_));
}

void PiggybackLedger::record_reception(int sender) {
    ++delivered_counts_[slot_of(sender)];
}

PiggybackPayload PiggybackLedger::build_payload() const {
    return PiggybackPayload(own_throughput_, neighbors_, period_rates_);
}

void PiggybackLedger::ingest_payload(int from, const PiggybackPayload& payload,
                                     long now_epoch) {
    int slot = slot_of(from);
    heard_throughput_[slot] = payload.sender_throughput();
    heard_epoch_[slot] = now_epoch;
    if (payload.has_report_for(owner_)) {
        own_components_[slot] = payload.report_for(owner_);
        double sum = 0.0;
        for (double c : own_components_) sum += c;
        own_throughput_ = sum;
    }
}

void PiggybackLedger::close_period(double duration) {
    if (duration <= 0.0) {
        throw std::invalid_argument("ledger: reporting period duration must be positive");
    }
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
        period_rates_[i] = static_cast<float>(delivered_counts_[i] / duration);
        delivered_counts_[i] = 0;
    }
}

double PiggybackLedger::neighbor_throughput(int j) const {
    return heard_throughput_[slot_of(j)];
}

long PiggybackLedger::neighbor_freshness(int j) const {
    return heard_epoch_[slot_of(j)];
}

long PiggybackLedger::delivered_from(int j) const {
    return delivered_counts_[slot_of(j)];
}

double PiggybackLedger::reported_rate(int j) const {
    return period_rates_[slot_of(j)];
}

}  // namespace drli
