#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace dcpsim {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

// Per-sensor state. Node ids are 1-based; cluster_no == 0 means unassigned.
struct Node {
    int id = 0;
    long long energy = 0;  // integer energy units (scaled Joules)
    int cluster_no = 0;
    bool ss_flag = false;  // cluster head ("subsink")
    bool active = false;   // has data pending this tick
};

struct Cluster {
    int head = 0;                   // node id
    std::vector<int> members;       // node ids, head excluded
};

struct ClusterAssignment {
    std::map<int, Cluster> clusters;  // keyed by cluster id (1-based)
    std::vector<int> subsink;         // head node ids in election order
};

}  // namespace dcpsim
