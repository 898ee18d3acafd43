#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace planpref {

// Deterministic random source. xoshiro256++ seeded through SplitMix64, with
// the distribution helpers written out by hand so that a seed produces the
// same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    // Independent stream derived from a base seed and up to two salts.
    // Used for per-epoch shuffles, per-tree bootstraps, per-trial seeds.
    static Rng derive(std::uint64_t seed, std::uint64_t salt_a, std::uint64_t salt_b = 0) {
        std::uint64_t x = seed;
        std::uint64_t mix = splitmix64(x) ^ (salt_a * 0x9e3779b97f4a7c15ULL);
        mix ^= splitmix64(mix) + (salt_b * 0xbf58476d1ce4e5b9ULL);
        return Rng(mix);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller. The pair's second value is discarded to keep the state
    // a pure function of the draw count.
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
        return mean + stddev * z;
    }

    // Standard Gumbel(0,1); argmax of utilities plus scaled Gumbel noise is a
    // softmax draw over those utilities.
    double gumbel() {
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return -std::log(-std::log(u));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        shuffle(idx);
        return idx;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace planpref
