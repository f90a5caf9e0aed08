#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace altkg {

/// splitmix64.  Used everywhere randomness is needed so that every stream is
/// reproducible bit-for-bit across platforms (the std:: distributions are
/// implementation-defined, which would make seeds non-portable).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Modulo bias is irrelevant at the sizes used here (n << 2^64),
        // but do the standard rejection anyway; it costs nothing.
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    int int_in(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }

    /// Standard normal via Box-Muller (portable, unlike std::normal_distribution).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = uniform(); } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Derive an independent substream for (seed, index) pairs.  Trial i of a
/// sampling run uses derive_stream(seed, i), which makes results independent
/// of how trials are distributed over workers.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next();
    return mix.next();
}

/// Uniform point on the unit sphere S^m in R^{m+1} (normalized gaussians).
inline std::vector<double> sample_sphere_point(SplitMix64& rng, int m) {
    std::vector<double> x(size_t(m) + 1);
    while (true) {
        double norm2 = 0.0;
        for (auto& c : x) {
            c = rng.gaussian();
            norm2 += c * c;
        }
        if (norm2 > 1e-24) {
            double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : x) c *= inv;
            return x;
        }
    }
}

} // namespace altkg
