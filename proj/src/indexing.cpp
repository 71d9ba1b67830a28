#include "thc/indexing.hpp"

#include <algorithm>

#include "thc/errors.hpp"

namespace thc::indexing {

namespace {

// Number of injective r-sequences drawn from n elements: n!/(n-r)!.
std::uint64_t arrangements(int n, int r) {
    std::uint64_t v = 1;
    for (int i = 0; i < r; ++i) v *= static_cast<std::uint64_t>(n - i);
    return v;
}

void check_k(int wall_size, int k) {
    if (wall_size < 1 || k < 1 || k > wall_size)
        throw InvalidK("k must satisfy 1 <= k <= wall_size, got k=" + std::to_string(k) +
                       " wall_size=" + std::to_string(wall_size));
}

}  // namespace

std::uint64_t endpoint_count(int wall_size, int k) {
    check_k(wall_size, k);
    return arrangements(wall_size, k);
}

std::uint64_t mask_count(int wall_size, int k) {
    check_k(wall_size, k);
    return std::uint64_t{1} << (wall_size - k);
}

std::vector<EndpointString> enumerate_endpoint_strings(int wall_size, int k) {
    check_k(wall_size, k);
    std::vector<EndpointString> out;
    out.reserve(endpoint_count(wall_size, k));
    EndpointString cur;
    std::vector<bool> used(wall_size + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= wall_size; ++v) {
            if (used[v]) continue;
            used[v] = true;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<RemainderMask> enumerate_remainder_masks(int wall_size, int k) {
    check_k(wall_size, k);
    const int len = wall_size - k;
    const std::uint64_t n = std::uint64_t{1} << len;
    std::vector<RemainderMask> out;
    out.reserve(n);
    // Descending lexicographic order: all-ones first, all-zeros last.
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t v = n - 1 - i;
        RemainderMask m(len, '0');
        for (int bit = 0; bit < len; ++bit)
            if (v >> (len - 1 - bit) & 1) m[bit] = '1';
        out.push_back(std::move(m));
    }
    return out;
}

std::uint64_t rank_endpoint(int wall_size, const EndpointString& b) {
    const int k = static_cast<int>(b.size());
    check_k(wall_size, k);
    std::vector<bool> used(wall_size + 1, false);
    std::uint64_t rank = 0;
    for (int j = 0; j < k; ++j) {
        const int v = b[j];
        if (v < 1 || v > wall_size || used[v])
            throw NotInFamily("endpoint string not in family for wall size " +
                              std::to_string(wall_size));
        int smaller = 0;
        for (int w = 1; w < v; ++w)
            if (!used[w]) ++smaller;
        rank += smaller * arrangements(wall_size - j - 1, k - j - 1);
        used[v] = true;
    }
    return rank;
}

EndpointString unrank_endpoint(int wall_size, int k, std::uint64_t rank) {
    check_k(wall_size, k);
    if (rank >= endpoint_count(wall_size, k))
        throw NotInFamily("endpoint rank out of range");
    EndpointString b;
    b.reserve(k);
    std::vector<bool> used(wall_size + 1, false);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t block = arrangements(wall_size - j - 1, k - j - 1);
        std::uint64_t idx = rank / block;
        rank %= block;
        for (int v = 1; v <= wall_size; ++v) {
            if (used[v]) continue;
            if (idx == 0) {
                b.push_back(v);
                used[v] = true;
                break;
            }
            --idx;
        }
    }
    return b;
}

std::uint64_t rank_mask(const RemainderMask& m) {
    std::uint64_t value = 0;
    for (char c : m) {
        if (c != '0' && c != '1') throw NotInFamily("mask must be a binary string");
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    const std::uint64_t top = (std::uint64_t{1} << m.size()) - 1;
    return top - value;  // descending order
}

RemainderMask unrank_mask(int length, std::uint64_t rank) {
    const std::uint64_t n = std::uint64_t{1} << length;
    if (rank >= n) throw NotInFamily("mask rank out of range");
    const std::uint64_t value = n - 1 - rank;
    RemainderMask m(length, '0');
    for (int bit = 0; bit < length; ++bit)
        if (value >> (length - 1 - bit) & 1) m[bit] = '1';
    return m;
}

RemainderMask flip(const RemainderMask& m) {
    RemainderMask out = m;
    for (char& c : out) c = (c == '0') ? '1' : '0';
    return out;
}

EndpointString shift(const EndpointString& b, int z) {
    const int k = static_cast<int>(b.size());
    if (k == 0) return b;
    int r = ((z % k) + k) % k;
    EndpointString out = b;
    std::rotate(out.begin(), out.begin() + (k - r), out.end());
    return out;
}

std::vector<int> remaining_positions(int wall_size, const EndpointString& b) {
    std::vector<bool> used(wall_size + 1, false);
    for (int v : b) used[v] = true;
    std::vector<int> out;
    for (int v = 1; v <= wall_size; ++v)
        if (!used[v]) out.push_back(v);
    return out;
}

}  // namespace thc::indexing
