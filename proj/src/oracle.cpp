#include "thc/oracle.hpp"

#include <algorithm>
#include <set>

#include "thc/errors.hpp"

namespace thc {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

struct HcSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    std::vector<int> path;
    std::vector<char> visited;
    const std::function<void(const std::vector<int>&)>& emit;

    // Dead end: some unvisited vertex has fewer than 2 usable neighbors
    // (usable = unvisited, or the path endpoint / start which can still
    // absorb one incidence each).
    bool saturated() const {
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            int free = 0;
            for (int w : adj[v])
                if (!visited[w] || w == 0 || w == path.back()) ++free;
            if (free < 2) return true;
        }
        return false;
    }

    void grow() {
        int at = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (std::binary_search(adj[at].begin(), adj[at].end(), 0) && path[1] < path.back())
                emit(path);
            return;
        }
        for (int w : adj[at]) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            if (static_cast<int>(path.size()) == n || !saturated()) grow();
            path.pop_back();
            visited[w] = 0;
        }
    }
};

bool is_wall_vertex(const std::vector<int>& wall, int v) {
    return std::find(wall.begin(), wall.end(), v) != wall.end();
}

}  // namespace

void enumerate_hamiltonian_cycles(int vertex_count, const std::vector<Edge>& edges,
                                  const std::function<void(const std::vector<int>&)>& emit,
                                  int vertex_cap) {
    if (vertex_count > vertex_cap)
        throw GraphTooLarge("graph has " + std::to_string(vertex_count) +
                            " vertices, cap is " + std::to_string(vertex_cap));
    if (vertex_count < 3) return;
    auto adj = adjacency(vertex_count, edges);
    HcSearch s{adj, vertex_count, {0}, std::vector<char>(vertex_count, 0), emit};
    s.visited[0] = 1;
    s.grow();
}

CycleClassification classify(const TiledGraphSpec& spec, const std::vector<int>& cycle) {
    const int n = spec.vertex_count;
    if (static_cast<int>(cycle.size()) != n)
        throw NotAHamiltonianCycle("cycle does not span the graph");

    std::set<Edge> cycle_edges;
    std::set<Edge> graph_edges(spec.edges.begin(), spec.edges.end());
    for (int i = 0; i < n; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % n];
        if (u > v) std::swap(u, v);
        Edge e{u, v};
        if (!graph_edges.count(e)) throw NotAHamiltonianCycle("cycle uses a non-edge");
        if (!cycle_edges.insert(e).second) throw NotAHamiltonianCycle("cycle repeats an edge");
    }
    {
        std::set<int> verts(cycle.begin(), cycle.end());
        if (static_cast<int>(verts.size()) != n)
            throw NotAHamiltonianCycle("cycle repeats a vertex");
    }

    CycleClassification out;
    out.cycle_edges.assign(cycle_edges.begin(), cycle_edges.end());
    out.tiles.resize(spec.tile_count());
    out.traversing = true;

    const std::size_t m1 = spec.tile_count();
    for (std::size_t i = 0; i < m1; ++i) {
        const Tile& t = spec.sequence.tiles[i];
        const auto& left = spec.wall_vertices[i];
        const auto& right = spec.wall_vertices[(i + 1) % m1];

        // C intersect T_i: the tile's vertex set with the cycle edges it owns.
        std::vector<int> verts;
        for (int g : spec.provenance[i]) verts.push_back(g);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

        std::map<int, std::vector<int>> local_adj;
        for (int g : verts) local_adj[g];
        for (const Edge& e : spec.tile_edges[i])
            if (cycle_edges.count(e)) {
                local_adj[e.first].push_back(e.second);
                local_adj[e.second].push_back(e.first);
            }

        int lr_paths = 0;
        std::set<int> covered;
        std::set<int> seen;
        for (int g : verts) {
            if (seen.count(g)) continue;
            if (local_adj[g].empty()) {
                seen.insert(g);
                TileComponent comp;
                comp.vertices = {g};
                comp.endpoint_a = comp.endpoint_b = g;
                bool wall = is_wall_vertex(left, g) || is_wall_vertex(right, g);
                comp.type = wall ? ComponentType::IsolatedWallVertex
                                 : ComponentType::InteriorDegreeAnomaly;
                if (!wall) {
                    out.traversing = false;
                    if (out.diagnostic.empty())
                        out.diagnostic = "tile " + std::to_string(i) +
                                         ": isolated internal vertex " + std::to_string(g);
                }
                out.tiles[i].push_back(std::move(comp));
                continue;
            }
            if (local_adj[g].size() != 1) continue;  // walk components from an endpoint

            // Trace the path from this degree-1 endpoint.
            TileComponent comp;
            int prev = -1, cur = g;
            while (true) {
                comp.vertices.push_back(cur);
                seen.insert(cur);
                const auto& nb = local_adj[cur];
                int next = -1;
                for (int w : nb)
                    if (w != prev) next = w;
                if (next == -1 || nb.size() > 2) break;
                prev = cur;
                cur = next;
            }
            comp.endpoint_a = comp.vertices.front();
            comp.endpoint_b = comp.vertices.back();
            for (int v : comp.vertices) covered.insert(v);

            bool a_left = is_wall_vertex(left, comp.endpoint_a);
            bool a_right = is_wall_vertex(right, comp.endpoint_a);
            bool b_left = is_wall_vertex(left, comp.endpoint_b);
            bool b_right = is_wall_vertex(right, comp.endpoint_b);
            bool anomaly = false;
            // Degree-1 endpoints must be wall vertices; interior vertices
            // that are not wall vertices have degree 2 by construction.
            if ((!a_left && !a_right) || (!b_left && !b_right)) anomaly = true;
            if (anomaly) {
                comp.type = ComponentType::InteriorDegreeAnomaly;
                out.traversing = false;
                if (out.diagnostic.empty())
                    out.diagnostic = "tile " + std::to_string(i) +
                                     ": path endpoint off both walls";
            } else if ((a_left && b_right) || (a_right && b_left)) {
                comp.type = ComponentType::LeftRightPath;
                ++lr_paths;
            } else {
                comp.type = ComponentType::SameWallPath;
                out.traversing = false;
                if (out.diagnostic.empty())
                    out.diagnostic = "tile " + std::to_string(i) + ": same-wall path at " +
                                     std::to_string(comp.endpoint_a);
            }
            out.tiles[i].push_back(std::move(comp));
        }

        // A component that is a cycle inside one tile has no degree-1
        // vertex; it would contradict C being a single cycle spanning more
        // than this tile.
        for (int g : verts)
            if (!seen.count(g) && !local_adj[g].empty()) {
                out.traversing = false;
                if (out.diagnostic.empty())
                    out.diagnostic = "tile " + std::to_string(i) + ": cyclic component";
            }

        // Internal vertices must all be covered by the k paths.
        if (out.traversing) {
            for (int local = 0; local < t.vertex_count; ++local) {
                if (is_wall_vertex(t.left_wall, local) || is_wall_vertex(t.right_wall, local))
                    continue;
                int g = spec.provenance[i][local];
                if (!covered.count(g)) {
                    out.traversing = false;
                    if (out.diagnostic.empty())
                        out.diagnostic = "tile " + std::to_string(i) +
                                         ": internal vertex uncovered";
                    break;
                }
            }
        }

        if (i == 0) {
            out.k = lr_paths;
        } else if (out.traversing && lr_paths != out.k) {
            // The shared-wall pairing forces equal path counts; a mismatch
            // here on an otherwise traversing-shaped cycle indicates a bug.
            out.traversing = false;
            out.diagnostic = "tile " + std::to_string(i) + ": path count " +
                             std::to_string(lr_paths) + " != tile 0 count " +
                             std::to_string(out.k);
        }
    }

    if (!out.traversing) out.k = 0;
    if (out.traversing && out.k == 0) {
        out.traversing = false;
        out.diagnostic = "no left-right paths";
    }
    return out;
}

OracleCount oracle_count(const TiledGraphSpec& spec, int vertex_cap) {
    OracleCount oc;
    enumerate_hamiltonian_cycles(
        spec.vertex_count, spec.edges,
        [&](const std::vector<int>& cycle) {
            oc.total += 1;
            auto c = classify(spec, cycle);
            if (c.traversing)
                oc.traversing[c.k] += 1;
            else
                oc.other += 1;
        },
        vertex_cap);
    return oc;
}

}  // namespace thc
