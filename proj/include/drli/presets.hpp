#pragma once

#include <string>
#include <vector>

#include "drli/topology.hpp"

namespace drli {

struct PresetInfo {
    std::string name;
    int node_count;
    int max_two_hop_degree;
    std::string note;
};

/// Named topologies used by the shipped experiments. The mesh* entries are
/// reconstructions: the source figures state only node count and maximum
/// two-hop degree, so representative instances with those statistics are
/// provided here.
Topology preset_topology(const std::string& name);

bool is_preset(const std::string& name);

const std::vector<PresetInfo>& preset_table();

/// The topology set used by the density/degradation studies.
std::vector<std::string> degradation_preset_names();

}  // namespace drli
