#include "altkg/gale.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "altkg/errors.hpp"
#include "altkg/rng.hpp"

namespace altkg {

namespace {

constexpr int kGalePointCap = 20;
constexpr int kGaleDimCap = 12;
constexpr long long kNormalCoeffCap = 1'000'000;
constexpr int kDegenerateRedrawCap = 10000;
constexpr size_t kFailureListCap = 16;

void check_caps(int n, int m) {
    if (n < 1 || n > kGalePointCap)
        throw CapacityError("moment-curve configurations support 1.." + std::to_string(kGalePointCap) +
                            " points (got " + std::to_string(n) + ")");
    if (m < 0 || m > kGaleDimCap)
        throw CapacityError("moment-curve configurations support sphere dimension 0.." +
                            std::to_string(kGaleDimCap) + " (got " + std::to_string(m) + ")");
}

void check_direction(const GaleConfiguration& z, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != z.m + 1)
        throw InputError("direction dimension does not match the sphere dimension");
    double norm2 = 0.0;
    for (double c : x) norm2 += c * c;
    if (std::abs(norm2 - 1.0) > 1e-6)
        throw InputError("direction must be a unit vector");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

} // namespace

GaleConfiguration gale_points(int n, int m, const LinearOrder& sigma) {
    if (sigma.size() != n)
        throw InputError("ordering length " + std::to_string(sigma.size()) +
                         " does not match the requested point count " + std::to_string(n));
    if (n < 1) throw InputError("point count must be positive");
    if (m < 0 || m > n - 1)
        throw InputError("sphere dimension m must satisfy 0 <= m <= n-1 (got m=" +
                         std::to_string(m) + ", n=" + std::to_string(n) + ")");
    check_caps(n, m);
    GaleConfiguration cfg;
    cfg.m = m;
    cfg.ident = sigma;
    cfg.points.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<double> p(static_cast<size_t>(m) + 1);
        double power = 1.0, norm2 = 0.0;
        for (int j = 0; j <= m; ++j) {
            p[static_cast<size_t>(j)] = power;
            norm2 += power * power;
            power *= double(i);
        }
        double scale = (i % 2 == 0 ? 1.0 : -1.0) / std::sqrt(norm2);
        for (auto& c : p) c *= scale;
        double check = 0.0;
        for (double c : p) check += c * c;
        if (std::abs(check - 1.0) > 1e-12)
            throw std::logic_error("internal error: moment-curve point is not unit norm");
        cfg.points.push_back(std::move(p));
    }
    if (m >= 1) {
        // Distinctness holds because the curve directions differ and the
        // leading coordinate carries the sign; confirm numerically.
        for (size_t a = 0; a < cfg.points.size(); ++a)
            for (size_t b = a + 1; b < cfg.points.size(); ++b) {
                double d2 = 0.0;
                for (size_t j = 0; j < cfg.points[a].size(); ++j) {
                    double d = cfg.points[a][j] - cfg.points[b][j];
                    d2 += d * d;
                }
                if (d2 < 1e-18)
                    throw std::logic_error("internal error: moment-curve points collide");
            }
    }
    return cfg;
}

HemisphereSplit hemisphere_split(const GaleConfiguration& z, const std::vector<double>& x,
                                 double eps) {
    check_direction(z, x);
    HemisphereSplit split;
    for (int i = 0; i < z.size(); ++i) {
        double d = dot(z.points[static_cast<size_t>(i)], x);
        if (std::abs(d) <= eps) return split;  // DEGENERATE
        if (d > 0) split.pair.plus.push_back(z.ident.at(i));
        else split.pair.minus.push_back(z.ident.at(i));
    }
    std::sort(split.pair.plus.begin(), split.pair.plus.end());
    std::sort(split.pair.minus.begin(), split.pair.minus.end());
    split.status = SplitStatus::OK;
    return split;
}

int unflipped_sign_changes(const GaleConfiguration& z, const std::vector<double>& x, double eps) {
    check_direction(z, x);
    int changes = 0, last = 0;
    for (int i = 0; i < z.size(); ++i) {
        double d = dot(z.points[static_cast<size_t>(i)], x);
        if (std::abs(d) <= eps) return -1;
        // Point index i is 1-based in the (-1)^i flip.
        int sign = (d > 0 ? 1 : -1) * ((i + 1) % 2 == 0 ? 1 : -1);
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes;
}

GaleSampleReport verify_gale(const GaleConfiguration& z, const SignedProperty& property,
                             std::uint64_t trials, std::uint64_t seed) {
    // Ground positions of the identified vertices, fixed once so each trial
    // builds its masks directly.
    std::unordered_map<Vertex, int> pos;
    const auto& ground = property.ground();
    if (ground.size() > 63)
        throw CapacityError("signed-property ground sets are capped at 63 vertices here");
    for (size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);
    std::vector<Mask> point_bit(static_cast<size_t>(z.size()));
    for (int i = 0; i < z.size(); ++i) {
        auto it = pos.find(z.ident.at(i));
        if (it == pos.end())
            throw InputError("configuration vertex " + std::to_string(z.ident.at(i)) +
                             " is not in the property ground set");
        point_bit[static_cast<size_t>(i)] = bit(it->second);
    }

    GaleSampleReport report;
    report.seed = seed;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_stream(seed, t));
        bool decided = false;
        for (int redraw = 0; redraw <= kDegenerateRedrawCap && !decided; ++redraw) {
            std::vector<double> x = sample_sphere_point(rng, z.m);
            Mask plus = 0, minus = 0;
            bool degenerate = false;
            for (int i = 0; i < z.size() && !degenerate; ++i) {
                double d = dot(z.points[static_cast<size_t>(i)], x);
                if (std::abs(d) <= 1e-9) degenerate = true;
                else if (d > 0) plus |= point_bit[static_cast<size_t>(i)];
                else minus |= point_bit[static_cast<size_t>(i)];
            }
            if (degenerate) {
                ++report.resamples;
                continue;
            }
            decided = true;
            if (!property.contains(plus, minus)) {
                ++report.failures;
                if (report.first_failure < 0) report.first_failure = static_cast<std::int64_t>(t);
                if (report.failing_directions.size() < kFailureListCap)
                    report.failing_directions.push_back(x);
            }
        }
        if (!decided) {
            ++report.failures;
            if (report.first_failure < 0) report.first_failure = static_cast<std::int64_t>(t);
        }
    }
    return report;
}

int moment_curve_sign_changes(int n, int m, const std::vector<long long>& normal) {
    check_caps(n, m);
    if (static_cast<int>(normal.size()) != m + 1)
        throw InputError("hyperplane normal must have m+1 coordinates");
    for (long long c : normal)
        if (c < -kNormalCoeffCap || c > kNormalCoeffCap)
            throw InputError("hyperplane coordinates are capped at |c| <= " +
                             std::to_string(kNormalCoeffCap));
    int changes = 0, last = 0;
    for (int i = 1; i <= n; ++i) {
        __int128 value = 0, power = 1;
        for (int j = 0; j <= m; ++j) {
            value += static_cast<__int128>(normal[static_cast<size_t>(j)]) * power;
            power *= i;
        }
        int sign = value > 0 ? 1 : (value < 0 ? -1 : 0);
        if (sign != 0) {
            if (last != 0 && sign != last) ++changes;
            last = sign;
        }
    }
    return changes;
}

GaleSampleReport verify_moment_hyperplanes(int n, int m, std::uint64_t count, std::uint64_t seed) {
    check_caps(n, m);
    GaleSampleReport report;
    report.seed = seed;
    report.trials = count;
    std::vector<long long> normal(static_cast<size_t>(m) + 1);
    for (std::uint64_t t = 0; t < count; ++t) {
        SplitMix64 rng(derive_stream(seed, t));
        while (true) {
            bool all_zero = true;
            for (auto& c : normal) {
                c = static_cast<long long>(rng.below(2 * kNormalCoeffCap + 1)) - kNormalCoeffCap;
                if (c != 0) all_zero = false;
            }
            if (!all_zero) break;
            ++report.resamples;
        }
        if (moment_curve_sign_changes(n, m, normal) > m) {
            ++report.failures;
            if (report.first_failure < 0) report.first_failure = static_cast<std::int64_t>(t);
            if (report.failing_directions.size() < kFailureListCap)
                report.failing_directions.emplace_back(normal.begin(), normal.end());
        }
    }
    return report;
}

} // namespace altkg
