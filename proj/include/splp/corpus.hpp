#pragma once

#include <cstdint>
#include <string>

#include "splp/graph.hpp"

namespace splp {

enum class Family {
    tree,
    cactus,
    outerplanar,
    two_tree,
    series_parallel,
    random_connected,
};

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

// Deterministic generator request.  density steers edge deletion (or edge
// addition for random_connected); the same request yields the same graph on
// every platform (see docs/generators.md for the exact draw sequences).
struct GenSpec {
    Family family = Family::series_parallel;
    int n = 1;
    uint64_t seed = 0;
    double density = 0.3;
};

Graph generate(const GenSpec& spec);

// Fixed test graphs: "petersen", "wvz", "k4", "triangle", and parameterized
// "path_<n>" / "star_<k>" (star_k = hub plus k leaves).
Graph named_graph(const std::string& name);

bool is_tree(const Graph& g);
bool is_cactus(const Graph& g);

} // namespace splp
