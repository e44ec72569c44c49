#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace rsbm {

// splitmix64 step; used to derive independent child streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded generator. Streams are mt19937_64 (bit-reproducible per the C++
// standard) keyed by splitmix64(seed, stream_id). Bounded draws use
// rejection sampling instead of std::uniform_int_distribution, whose output
// is implementation-defined; this keeps emitted graphs byte-identical for a
// given seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s ^= stream_id * 0x9e3779b97f4a7c15ULL;
        std::uint64_t b = splitmix64(s);
        return Rng(a ^ (b << 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // uniform in [-1, 1)
    double symmetric_unit() {
        return 2.0 * (static_cast<double>(engine_() >> 11) * 0x1.0p-53) - 1.0;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // uniform k-subset of {0,...,m-1}, returned sorted
    std::vector<int> sample_subset(int m, int k) {
        std::vector<int> pool(m);
        for (int i = 0; i < m; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(m - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rsbm
