#ifndef THC_TESTS_COMMON_HPP
#define THC_TESTS_COMMON_HPP

#include <filesystem>
#include <vector>

#include "thc/io.hpp"
#include "thc/path_enum.hpp"
#include "thc/tile.hpp"

namespace thc::testing {

inline std::filesystem::path fixture_dir() { return THC_FIXTURE_DIR; }

inline Tile load_tile(const std::string& name) {
    return io::load_tile_file(fixture_dir() / "tiles" / (name + ".json"));
}

inline TiledGraphSpec load_graph(const std::string& name) {
    return cyclize(io::load_graph_file(fixture_dir() / "graphs" / (name + ".json")), name);
}

inline TiledGraphSpec uniform_spec(const std::string& tile_name, int repeat) {
    TileSequence seq;
    seq.tiles.assign(repeat, load_tile(tile_name));
    return cyclize(seq, tile_name + "^" + std::to_string(repeat));
}

// Independent oracle for count_path_systems: enumerate every edge subset of
// the tile and test the path-system predicate directly. Only usable for
// small tiles; deliberately shares no code with the backtracking counter.
inline BigInt brute_count_path_systems(const EntryQuery& q) {
    const Tile& t = *q.tile;
    const int n = t.vertex_count;
    const int ne = static_cast<int>(t.edges.size());

    std::vector<int> lv, rv;
    for (int p : q.b) lv.push_back(t.left_wall[p - 1]);
    for (int p : q.c) rv.push_back(t.right_wall[p - 1]);

    std::vector<char> blocked(n, 0);
    {
        auto rem_l = indexing::remaining_positions(t.left_size(), q.b);
        for (std::size_t i = 0; i < rem_l.size(); ++i)
            if (q.d[i] == '0') blocked[t.left_wall[rem_l[i] - 1]] = 1;
        auto rem_r = indexing::remaining_positions(t.right_size(), q.c);
        for (std::size_t i = 0; i < rem_r.size(); ++i)
            if (q.e[i] == '0') blocked[t.right_wall[rem_r[i] - 1]] = 1;
    }

    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
        std::vector<std::vector<int>> adj(n);
        bool bad = false;
        for (int i = 0; i < ne && !bad; ++i)
            if (mask >> i & 1) {
                auto [u, v] = t.edges[i];
                if (blocked[u] || blocked[v]) bad = true;
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        if (bad) continue;
        for (int v = 0; v < n && !bad; ++v)
            if (adj[v].size() > 2) bad = true;
        if (bad) continue;

        // Every non-blocked vertex must lie on an edge.
        for (int v = 0; v < n && !bad; ++v)
            if (!blocked[v] && adj[v].empty()) bad = true;
        if (bad) continue;

        // Walk from each left endpoint; it must have degree 1 and reach the
        // matching right endpoint along a simple path.
        std::vector<char> seen(n, 0);
        int path_vertices = 0;
        for (std::size_t j = 0; j < lv.size() && !bad; ++j) {
            int s = lv[j];
            if (adj[s].size() != 1 || adj[rv[j]].size() != 1 || seen[s]) {
                bad = true;
                break;
            }
            int prev = -1, cur = s;
            while (true) {
                seen[cur] = 1;
                ++path_vertices;
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) next = w;
                if (next == -1) break;
                if (seen[next]) {
                    bad = true;
                    break;
                }
                prev = cur;
                cur = next;
            }
            if (!bad && cur != rv[j]) bad = true;
        }
        if (bad) continue;
        int expected = 0;
        for (int v = 0; v < n; ++v)
            if (!blocked[v]) ++expected;
        if (path_vertices == expected) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

inline BlockTransferMatrix brute_transfer_matrix(const Tile& tile, int k) {
    auto bs = indexing::enumerate_endpoint_strings(tile.left_size(), k);
    auto cs = indexing::enumerate_endpoint_strings(tile.right_size(), k);
    auto ds = indexing::enumerate_remainder_masks(tile.left_size(), k);
    auto es = indexing::enumerate_remainder_masks(tile.right_size(), k);
    auto m = make_zero_matrix(k, tile.left_size(), tile.right_size());
    for (std::size_t bi = 0; bi < bs.size(); ++bi)
        for (std::size_t di = 0; di < ds.size(); ++di)
            for (std::size_t ci = 0; ci < cs.size(); ++ci)
                for (std::size_t ei = 0; ei < es.size(); ++ei)
                    m.at(bi * ds.size() + di, ci * es.size() + ei) = brute_count_path_systems(
                        EntryQuery{&tile, k, bs[bi], cs[ci], ds[di], es[ei]});
    return m;
}

}  // namespace thc::testing

#endif
