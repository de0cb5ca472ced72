#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace szp
{
    /// Vertex subsets of graphs and hypergraphs on at most 32 vertices.
    using VertexMask = std::uint32_t;

    inline constexpr int max_vertices = 32;

    constexpr auto bit(int v) -> VertexMask
    {
        return VertexMask{1} << v;
    }

    constexpr auto full_mask(int n) -> VertexMask
    {
        return n >= max_vertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    }

    constexpr auto popcount(VertexMask m) -> int
    {
        return std::popcount(m);
    }

    constexpr auto lowest(VertexMask m) -> int
    {
        return std::countr_zero(m);
    }

    constexpr auto contains(VertexMask m, int v) -> bool
    {
        return (m >> v) & 1u;
    }

    template <typename F>
    constexpr void for_each_bit(VertexMask m, F && f)
    {
        while (m) {
            int v = lowest(m);
            m &= m - 1;
            f(v);
        }
    }

    inline auto bits_of(VertexMask m) -> std::vector<int>
    {
        std::vector<int> result;
        for_each_bit(m, [&](int v) { result.push_back(v); });
        return result;
    }

    constexpr auto binomial(int n, int k) -> long long
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        long long r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    /// Calls f on every k-subset of universe, in colexicographic order.
    template <typename F>
    void for_each_subset_of_size(VertexMask universe, int k, F && f)
    {
        auto elements = bits_of(universe);
        int n = static_cast<int>(elements.size());
        if (k > n || k < 0)
            return;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            VertexMask s = 0;
            for (int i : idx)
                s |= bit(elements[i]);
            f(s);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                return;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
}
