#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "drli/topology.hpp"

namespace drli {

/// Control fields piggybacked on a data packet: the sender's own throughput
/// plus, for each of its neighbors, the delivered-traffic rate the sender
/// measured from that neighbor over its last reporting period. Immutable
/// value copied into the packet at transmission time; lost with the packet
/// on collision.
class PiggybackPayload {
public:
    PiggybackPayload() = default;
    PiggybackPayload(double sender_throughput, std::span<const int> neighbor_ids,
                     std::span<const float> rates);

    double sender_throughput() const { return sender_throughput_; }
    int report_count() const { return count_; }

    /// Reverse report addressed to `node`, or -1-signalled absence.
    bool has_report_for(int node) const;
    double report_for(int node) const;

    int report_id(int i) const { return ids_[i]; }
    double report_rate(int i) const { return rates_[i]; }

private:
    float sender_throughput_ = 0.0f;
    std::uint8_t count_ = 0;
    const int* ids_ = nullptr;  // sender's neighbor ids (topology storage)
    std::array<float, Topology::kMaxDegree> rates_{};
};

/// Per-node view of its 1-hop neighborhood throughputs, maintained purely
/// from received packets. Entries never refer to nodes outside the owner's
/// neighborhood.
class PiggybackLedger {
public:
    PiggybackLedger(int owner, std::span<const int> neighbors);

    int owner() const { return owner_; }

    /// A non-collided packet from `sender` was received by the owner.
    void record_reception(int sender);

    /// Payload for the owner's next outgoing packet.
    PiggybackPayload build_payload() const;

    /// Ingest the payload of a delivered packet sent by `from`.
    void ingest_payload(int from, const PiggybackPayload& payload, long now_epoch);

    /// Close the owner's reporting period: converts reception counters into
    /// rates (count / duration) and resets the counters.
    void close_period(double duration);

    /// Owner's throughput as reported back by its neighbors (sum of the
    /// most recent per-direction reverse reports).
    double own_throughput() const { return own_throughput_; }

    /// Latest heard throughput of neighbor `j`; 0 until first heard.
    double neighbor_throughput(int j) const;
    long neighbor_freshness(int j) const;

    /// Current-period reception counter for neighbor `j` (diagnostics).
    long delivered_from(int j) const;
    double reported_rate(int j) const;

private:
    int slot_of(int node) const;  // throws on non-neighbor

    int owner_;
    std::span<const int> neighbors_;
    std::vector<long> delivered_counts_;     // current period, per neighbor slot
    std::vector<float> period_rates_;        // last closed period, per slot
    std::vector<double> heard_throughput_;   // s_j as broadcast by neighbors
    std::vector<long> heard_epoch_;          // freshness stamps
    std::vector<double> own_components_;     // s_{owner -> j} reported back
    double own_throughput_ = 0.0;
};

}  // namespace drli
