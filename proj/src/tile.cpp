#include "thc/tile.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "thc/errors.hpp"

namespace thc {

std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<std::string> validate_tile(const Tile& tile) {
    std::vector<std::string> violations;
    const int n = tile.vertex_count;

    if (n <= 0) violations.push_back("tile has no vertices");

    auto in_range = [n](int v) { return v >= 0 && v < n; };

    for (const auto& [u, v] : tile.edges) {
        if (!in_range(u) || !in_range(v))
            violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            violations.push_back("self-loop at vertex " + std::to_string(u));
    }
    {
        auto norm = normalize_edges(tile.edges);
        if (norm.size() != tile.edges.size())
            violations.push_back("duplicate edges present");
    }

    auto check_wall = [&](const std::vector<int>& wall, const char* side) {
        std::set<int> seen;
        for (int v : wall) {
            if (!in_range(v))
                violations.push_back(std::string(side) + " wall vertex " + std::to_string(v) +
                                     " out of range");
            if (!seen.insert(v).second)
                violations.push_back(std::string(side) + " wall repeats vertex " +
                                     std::to_string(v));
        }
    };
    check_wall(tile.left_wall, "left");
    check_wall(tile.right_wall, "right");

    if (tile.left_wall.empty()) violations.push_back("left wall is empty");
    if (tile.right_wall.empty()) violations.push_back("right wall is empty");

    for (int v : tile.left_wall)
        if (std::find(tile.right_wall.begin(), tile.right_wall.end(), v) !=
            tile.right_wall.end())
            violations.push_back("walls share vertex " + std::to_string(v));

    // Connectivity over the whole vertex set.
    if (n > 0) {
        std::vector<std::vector<int>> adj(n);
        for (const auto& [u, v] : tile.edges) {
            if (in_range(u) && in_range(v) && u != v) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) violations.push_back("graph not connected");
    }

    return violations;
}

bool compatible(const Tile& a, const Tile& b) {
    return a.right_size() == b.left_size();
}

bool sequence_compatible(const TileSequence& seq) {
    for (std::size_t i = 1; i < seq.tiles.size(); ++i)
        if (!compatible(seq.tiles[i - 1], seq.tiles[i])) return false;
    return true;
}

bool cyclically_compatible(const TileSequence& seq) {
    return sequence_compatible(seq) && !seq.tiles.empty() &&
           compatible(seq.tiles.back(), seq.tiles.front());
}

Tile join(const Tile& a, const Tile& b) {
    if (!compatible(a, b))
        throw IncompatibleTiles("join: |right wall| = " + std::to_string(a.right_size()) +
                                " but |left wall| = " + std::to_string(b.left_size()));
    const int w = a.right_size();

    // Map b's vertices into the joined tile.
    std::vector<int> map_b(b.vertex_count, -1);
    for (int j = 0; j < w; ++j) map_b[b.left_wall[j]] = a.right_wall[j];
    int next = a.vertex_count;
    for (int v = 0; v < b.vertex_count; ++v)
        if (map_b[v] < 0) map_b[v] = next++;

    Tile out;
    out.name = a.name + "*" + b.name;
    out.vertex_count = next;
    out.left_wall = a.left_wall;
    out.right_wall.reserve(b.right_size());
    for (int v : b.right_wall) out.right_wall.push_back(map_b[v]);

    std::set<Edge> seen(a.edges.begin(), a.edges.end());
    out.edges = a.edges;
    for (auto [u, v] : b.edges) {
        int gu = map_b[u], gv = map_b[v];
        if (gu > gv) std::swap(gu, gv);
        if (!seen.insert({gu, gv}).second)
            throw ParallelEdge("join would duplicate edge (" + std::to_string(gu) + "," +
                               std::to_string(gv) + ")");
        out.edges.push_back({gu, gv});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

TiledGraphSpec cyclize(const TileSequence& seq, const std::string& graph_id) {
    if (seq.size() < 3)
        throw TooFewTiles("cyclization requires at least 3 tiles, got " +
                          std::to_string(seq.size()));
    if (!sequence_compatible(seq))
        throw IncompatibleTiles("tile sequence is not compatible");
    if (!compatible(seq.tiles.back(), seq.tiles.front()))
        throw NotCyclicallyCompatible(
            "final right wall size " + std::to_string(seq.tiles.back().right_size()) +
            " != initial left wall size " + std::to_string(seq.tiles.front().left_size()));

    const std::size_t m1 = seq.size();
    TiledGraphSpec spec;
    spec.sequence = seq;
    spec.graph_id = graph_id;
    spec.provenance.resize(m1);
    spec.tile_edges.resize(m1);
    spec.wall_vertices.resize(m1);

    int next = 0;
    for (std::size_t i = 0; i < m1; ++i) {
        const Tile& t = seq.tiles[i];
        auto& prov = spec.provenance[i];
        prov.assign(t.vertex_count, -1);
        if (i > 0) {
            const Tile& prev = seq.tiles[i - 1];
            for (int j = 0; j < t.left_size(); ++j)
                prov[t.left_wall[j]] = spec.provenance[i - 1][prev.right_wall[j]];
        }
        if (i == m1 - 1) {
            // Final right wall glues back onto the initial left wall.
            const Tile& first = seq.tiles.front();
            for (int j = 0; j < t.right_size(); ++j)
                prov[t.right_wall[j]] = spec.provenance[0][first.left_wall[j]];
        }
        for (int v = 0; v < t.vertex_count; ++v)
            if (prov[v] < 0) prov[v] = next++;
    }
    spec.vertex_count = next;

    std::set<Edge> seen;
    for (std::size_t i = 0; i < m1; ++i) {
        const Tile& t = seq.tiles[i];
        for (auto [u, v] : t.edges) {
            int gu = spec.provenance[i][u], gv = spec.provenance[i][v];
            if (gu == gv)
                throw SelfLoop("cyclization creates a self-loop at global vertex " +
                               std::to_string(gu));
            if (gu > gv) std::swap(gu, gv);
            if (!seen.insert({gu, gv}).second)
                throw ParallelEdge("cyclization duplicates edge (" + std::to_string(gu) + "," +
                                   std::to_string(gv) + ")");
            spec.tile_edges[i].push_back({gu, gv});
            spec.edges.push_back({gu, gv});
        }
    }
    std::sort(spec.edges.begin(), spec.edges.end());

    for (std::size_t i = 0; i < m1; ++i) {
        const Tile& t = seq.tiles[i];
        for (int v : t.left_wall) spec.wall_vertices[i].push_back(spec.provenance[i][v]);
    }
    return spec;
}

int min_ws(const TiledGraphSpec& spec) {
    int mw = spec.sequence.tiles.front().left_size();
    for (const Tile& t : spec.sequence.tiles) mw = std::min(mw, t.left_size());
    return mw;
}

std::string canonical_key(const Tile& tile) {
    std::ostringstream os;
    os << "n=" << tile.vertex_count << ";L=";
    for (int v : tile.left_wall) os << v << ",";
    os << ";R=";
    for (int v : tile.right_wall) os << v << ",";
    os << ";E=";
    for (auto [u, v] : normalize_edges(tile.edges)) os << u << "-" << v << ",";
    return os.str();
}

std::string tile_hash(const Tile& tile) {
    // FNV-1a 64-bit over the canonical form; collisions are revalidated on
    // cache load against the stored shape.
    const std::string key = canonical_key(tile);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace thc
