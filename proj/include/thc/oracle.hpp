#ifndef THC_ORACLE_HPP
#define THC_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thc/bigint.hpp"
#include "thc/tile.hpp"

namespace thc {

enum class ComponentType {
    LeftRightPath,
    SameWallPath,
    InteriorDegreeAnomaly,
    IsolatedWallVertex,
};

struct TileComponent {
    ComponentType type;
    std::vector<int> vertices;  // global ids; path order for paths
    int endpoint_a = -1, endpoint_b = -1;
};

struct CycleClassification {
    std::vector<Edge> cycle_edges;
    bool traversing = false;
    int k = 0;                                       // valid when traversing
    std::vector<std::vector<TileComponent>> tiles;   // per-tile evidence
    std::string diagnostic;                          // why not traversing
};

// Each undirected Hamiltonian cycle emitted exactly once, as the vertex
// sequence starting at vertex 0, lexicographically smaller direction.
void enumerate_hamiltonian_cycles(int vertex_count, const std::vector<Edge>& edges,
                                  const std::function<void(const std::vector<int>&)>& emit,
                                  int vertex_cap = 24);

CycleClassification classify(const TiledGraphSpec& spec, const std::vector<int>& cycle);

struct OracleCount {
    std::map<int, BigInt> traversing;  // k -> count
    BigInt total = 0;
    BigInt other = 0;
};

OracleCount oracle_count(const TiledGraphSpec& spec, int vertex_cap = 24);

}  // namespace thc

#endif
