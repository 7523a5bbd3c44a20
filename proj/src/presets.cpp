#include "drli/presets.hpp"

#include <stdexcept>
#include <utility>

namespace drli {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList path(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

EdgeList cycle(int n) {
    EdgeList e = path(n);
    e.emplace_back(0, n - 1);
    return e;
}

EdgeList complete(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return e;
}

// Petersen graph: outer C5, inner pentagram, spokes. 3-regular, girth 5,
// so every node sees exactly 9 others within two hops.
EdgeList petersen() {
    return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
}

// Petersen with edges (0,1) and (7,9) subdivided by new nodes 10 and 11,
// plus the edge (10,11). Cubic, girth 5, two-hop degree 9 at every node.
EdgeList cubic12_girth5() {
    return {{1, 2},  {2, 3},  {3, 4},  {4, 0},
            {0, 5},  {1, 6},  {2, 7},  {3, 8},  {4, 9},
            {5, 7},  {9, 6},  {6, 8},  {8, 5},
            {0, 10}, {10, 1}, {7, 11}, {11, 9}, {10, 11}};
}

// Icosahedron: 5-regular, every node reaches 10 others within two hops
// (exactly one antipode is three hops away).
EdgeList icosahedron() {
    return {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},
            {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
            {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},
            {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},
            {1, 6},  {1, 7},  {2, 7},  {2, 8},  {3, 8},
            {3, 9},  {4, 9},  {4, 10}, {5, 10}, {5, 6}};
}

// K12 minus the perfect matching {(0,1),(2,3),...}; diameter 2, so every
// node reaches all 11 others within two hops.
EdgeList near_complete12() {
    EdgeList e;
    for (int i = 0; i < 12; ++i) {
        for (int j = i + 1; j < 12; ++j) {
            if (j == i + 1 && i % 2 == 0) continue;
            e.emplace_back(i, j);
        }
    }
    return e;
}

// Two hexagon rings bridged by a single edge; the bridge endpoints reach 7
// nodes within two hops, everyone else fewer.
EdgeList bridged_hexagons() {
    EdgeList e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 6; ++i) e.emplace_back(6 + i, 6 + (i + 1) % 6);
    e.emplace_back(0, 6);
    return e;
}

EdgeList preset_edges(const std::string& name, int& n) {
    if (name == "line3") { n = 3; return path(3); }
    if (name == "line4") { n = 4; return path(4); }
    if (name == "full4") { n = 4; return complete(4); }
    if (name == "mesh5_ring") { n = 5; return cycle(5); }
    if (name == "mesh5_chain") { n = 5; return path(5); }
    if (name == "mesh5_split") { n = 5; return {{0, 1}, {2, 3}, {3, 4}, {2, 4}}; }
    if (name == "mesh8_deg7") {
        n = 8;
        EdgeList e = cycle(8);
        e.emplace_back(0, 4);
        return e;
    }
    if (name == "mesh10_deg5") {
        n = 10;
        EdgeList e = path(9);
        e.emplace_back(1, 9);
        return e;
    }
    if (name == "mesh10_deg9") { n = 10; return petersen(); }
    if (name == "mesh12_deg7") { n = 12; return bridged_hexagons(); }
    if (name == "mesh12_deg9") { n = 12; return cubic12_girth5(); }
    if (name == "mesh12_deg10") { n = 12; return icosahedron(); }
    if (name == "mesh12_deg11") { n = 12; return near_complete12(); }
    throw std::invalid_argument("unknown topology preset: " + name);
}

}  // namespace

Topology preset_topology(const std::string& name) {
    int n = 0;
    EdgeList e = preset_edges(name, n);
    return Topology(n, std::move(e));
}

bool is_preset(const std::string& name) {
    try {
        int n = 0;
        preset_edges(name, n);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

const std::vector<PresetInfo>& preset_table() {
    static const std::vector<PresetInfo> table = {
        {"line3", 3, 2, "3-node chain"},
        {"line4", 4, 3, "4-node chain"},
        {"full4", 4, 3, "4-node complete graph"},
        {"mesh5_ring", 5, 4, "5-node ring"},
        {"mesh5_chain", 5, 4, "5-node chain"},
        {"mesh5_split", 5, 2,
         "pair + triangle; closest 5-node instance to the stated degree 3, "
         "which no 5-node graph attains"},
        {"mesh8_deg7", 8, 7, "8-node ring with one cross chord"},
        {"mesh10_deg5", 10, 5, "9-node chain with one branch"},
        {"mesh10_deg9", 10, 9, "Petersen graph"},
        {"mesh12_deg7", 12, 7, "two hexagons bridged by one edge"},
        {"mesh12_deg9", 12, 9, "cubic girth-5 graph"},
        {"mesh12_deg10", 12, 10, "icosahedron"},
        {"mesh12_deg11", 12, 11, "complete graph minus a perfect matching"},
    };
    return table;
}

std::vector<std::string> degradation_preset_names() {
    return {"mesh5_split", "mesh5_chain", "mesh5_ring",  "mesh10_deg5",
            "mesh12_deg7", "mesh8_deg7",  "mesh10_deg9", "mesh12_deg9",
            "mesh12_deg10", "mesh12_deg11"};
}

}  // namespace drli
