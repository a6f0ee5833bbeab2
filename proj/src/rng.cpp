#include "semgof/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace semgof {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

double Rng::gamma(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0) throw std::invalid_argument("Rng::gamma: parameters must be positive");
    // Marsaglia-Tsang; boost for shape < 1.
    if (shape < 1.0) {
        const double u = uniform();
        return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

std::uint64_t Rng::integer(std::uint64_t n) {
    // rejection to avoid modulo bias
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % n;
}

std::int64_t Rng::binomial(std::int64_t trials, double prob) {
    if (prob <= 0.0 || trials <= 0) return 0;
    if (prob >= 1.0) return trials;
    // Exact Bernoulli sum for small trial counts. For astronomically many
    // trials with small success probability (tuple sampling), the Poisson
    // limit is indistinguishable from the exact law.
    if (trials <= 1000000) {
        std::int64_t count = 0;
        for (std::int64_t i = 0; i < trials; ++i) {
            if (uniform() < prob) ++count;
        }
        return count;
    }
    const double mean = static_cast<double>(trials) * prob;
    const std::int64_t draw = poisson(mean);
    return draw > trials ? trials : draw;
}

std::int64_t Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 50.0) {
        double draw = std::round(mean + std::sqrt(mean) * normal());
        return draw < 0 ? 0 : static_cast<std::int64_t>(draw);
    }
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = uniform();
    while (prod > limit) {
        ++k;
        prod *= uniform();
    }
    return k;
}

}  // namespace semgof
