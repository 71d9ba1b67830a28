#ifndef THC_TILE_HPP
#define THC_TILE_HPP

#include <string>
#include <utility>
#include <vector>

namespace thc {

using Edge = std::pair<int, int>;  // normalized a < b

// A connected graph with ordered, disjoint left and right wall sequences.
struct Tile {
    std::string name;
    int vertex_count = 0;
    std::vector<Edge> edges;       // normalized, sorted, unique
    std::vector<int> left_wall;    // length k_i
    std::vector<int> right_wall;   // length l_i

    int left_size() const { return static_cast<int>(left_wall.size()); }
    int right_size() const { return static_cast<int>(right_wall.size()); }
};

struct TileSequence {
    std::vector<Tile> tiles;

    std::size_t size() const { return tiles.size(); }
};

// Cyclization of a tile sequence: the explicit simple graph plus the
// provenance that maps every tile-local vertex to its global id.
struct TiledGraphSpec {
    TileSequence sequence;
    std::string graph_id;
    int vertex_count = 0;
    std::vector<Edge> edges;                        // sorted, unique
    std::vector<std::vector<int>> provenance;       // [tile][local] -> global
    std::vector<std::vector<Edge>> tile_edges;      // per tile, global edge list
    std::vector<std::vector<int>> wall_vertices;    // wall i = left wall of tile i (global)

    std::size_t tile_count() const { return sequence.size(); }
};

std::vector<Edge> normalize_edges(std::vector<Edge> edges);

// Empty result means the tile satisfies every invariant; otherwise each
// violated invariant is named.
std::vector<std::string> validate_tile(const Tile& tile);

bool compatible(const Tile& a, const Tile& b);
bool sequence_compatible(const TileSequence& seq);
bool cyclically_compatible(const TileSequence& seq);

// a (x) b: identify a.right_wall term by term with b.left_wall. Canonical
// renumbering: a's vertices keep their ids, b's non-identified vertices
// follow in their original order. Throws IncompatibleTiles, ParallelEdge.
Tile join(const Tile& a, const Tile& b);

// Throws NotCyclicallyCompatible, TooFewTiles, ParallelEdge, SelfLoop.
TiledGraphSpec cyclize(const TileSequence& seq, const std::string& graph_id = "");

int min_ws(const TiledGraphSpec& spec);

// Name-independent canonical form (vertex count, walls, edges); equal keys
// mean structurally identical tiles under the fixed numbering. Used for
// run folding and as the cache key.
std::string canonical_key(const Tile& tile);
std::string tile_hash(const Tile& tile);  // hex digest of canonical_key

}  // namespace thc

#endif
