#include "thc/path_enum.hpp"

#include <algorithm>
#include <thread>

#include "thc/errors.hpp"

namespace thc {

namespace {

struct Enumerator {
    const Tile& tile;
    std::vector<std::vector<int>> adj;
    std::vector<int> starts, targets;   // global-in-tile vertex ids per path
    std::vector<char> blocked;          // mask bit 0: must stay untouched
    std::vector<char> used;
    int uncovered;                      // non-blocked vertices not yet on a path
    std::uint64_t count = 0;

    explicit Enumerator(const EntryQuery& q) : tile(*q.tile) {
        const int n = tile.vertex_count;
        adj.resize(n);
        for (auto [u, v] : tile.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (int p : q.b) starts.push_back(tile.left_wall[p - 1]);
        for (int p : q.c) targets.push_back(tile.right_wall[p - 1]);
        blocked.assign(n, 0);
        auto mark = [&](const std::vector<int>& wall, const indexing::EndpointString& ends,
                        const indexing::RemainderMask& mask) {
            auto rem = indexing::remaining_positions(static_cast<int>(wall.size()), ends);
            for (std::size_t i = 0; i < rem.size(); ++i)
                if (mask[i] == '0') blocked[wall[rem[i] - 1]] = 1;
        };
        mark(tile.left_wall, q.b, q.d);
        mark(tile.right_wall, q.c, q.e);
        used.assign(n, 0);
        uncovered = 0;
        for (int v = 0; v < n; ++v)
            if (!blocked[v]) ++uncovered;
    }

    // Remaining free vertices must all be reachable from the frontier of
    // some unfinished path; otherwise the partial system is dead.
    bool prunable(int path, int at) const {
        const int n = tile.vertex_count;
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        auto push = [&](int v) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        };
        push(at);
        for (std::size_t j = path + 1; j < starts.size(); ++j)
            if (!used[starts[j]]) push(starts[j]);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!used[w] && !blocked[w]) push(w);
        }
        for (int v = 0; v < n; ++v)
            if (!used[v] && !blocked[v] && !seen[v]) return true;
        return false;
    }

    void extend(std::size_t path, int at) {
        if (at == targets[path]) {
            if (path + 1 == starts.size()) {
                if (uncovered == 0) ++count;
            } else {
                start_path(path + 1);
            }
            return;
        }
        for (int w : adj[at]) {
            if (used[w] || blocked[w]) continue;
            used[w] = 1;
            --uncovered;
            extend(path, w);
            used[w] = 0;
            ++uncovered;
        }
    }

    void start_path(std::size_t path) {
        const int s = starts[path];
        if (used[s] || blocked[s] || used[targets[path]] || blocked[targets[path]]) return;
        if (prunable(static_cast<int>(path) - 1, s)) return;
        used[s] = 1;
        --uncovered;
        extend(path, s);
        used[s] = 0;
        ++uncovered;
    }

    std::uint64_t run() {
        for (std::size_t j = 0; j < starts.size(); ++j)
            if (blocked[starts[j]] || blocked[targets[j]]) return 0;
        start_path(0);
        return count;
    }
};

void check_query(const EntryQuery& q) {
    if (!q.tile) throw InvalidQuery("query has no tile");
    const Tile& t = *q.tile;
    const int k = q.k;
    if (k < 1 || k > std::min(t.left_size(), t.right_size()))
        throw InvalidQuery("k out of range for tile walls");
    if (static_cast<int>(q.b.size()) != k || static_cast<int>(q.c.size()) != k)
        throw InvalidQuery("endpoint string length != k");
    if (static_cast<int>(q.d.size()) != t.left_size() - k)
        throw InvalidQuery("left mask length mismatch");
    if (static_cast<int>(q.e.size()) != t.right_size() - k)
        throw InvalidQuery("right mask length mismatch");
    try {
        indexing::rank_endpoint(t.left_size(), q.b);
        indexing::rank_endpoint(t.right_size(), q.c);
    } catch (const NotInFamily& e) {
        throw InvalidQuery(e.what());
    }
}

}  // namespace

BigInt count_path_systems(const EntryQuery& q) {
    check_query(q);
    Enumerator e(q);
    return BigInt(static_cast<unsigned long>(e.run()));
}

BlockTransferMatrix build_transfer_matrix(const Tile& tile, int k, int threads) {
    if (k < 1 || k > std::min(tile.left_size(), tile.right_size()))
        throw InvalidK("k=" + std::to_string(k) + " invalid for (" +
                       std::to_string(tile.left_size()) + "," +
                       std::to_string(tile.right_size()) + ")-tile");

    const int lw = tile.left_size(), rw = tile.right_size();
    auto bs = indexing::enumerate_endpoint_strings(lw, k);
    auto cs = indexing::enumerate_endpoint_strings(rw, k);
    auto ds = indexing::enumerate_remainder_masks(lw, k);
    auto es = indexing::enumerate_remainder_masks(rw, k);

    BlockTransferMatrix m = make_zero_matrix(k, lw, rw);

    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t row = row_begin; row < row_end; ++row) {
            const auto& b = bs[row / ds.size()];
            const auto& d = ds[row % ds.size()];
            for (std::size_t p = 0; p < cs.size(); ++p)
                for (std::size_t v = 0; v < es.size(); ++v) {
                    EntryQuery q{&tile, k, b, cs[p], d, es[v]};
                    m.at(row, p * es.size() + v) = count_path_systems(q);
                }
        }
    };

    if (threads <= 1 || m.rows < 2) {
        fill_rows(0, m.rows);
    } else {
        const std::size_t nt = std::min<std::size_t>(threads, m.rows);
        std::vector<std::thread> pool;
        const std::size_t chunk = (m.rows + nt - 1) / nt;
        for (std::size_t t = 0; t < nt; ++t) {
            std::size_t lo = t * chunk, hi = std::min(m.rows, lo + chunk);
            if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return m;
}

}  // namespace thc
