#pragma once

#include <cstdint>
#include <random>

namespace semgof {

/// splitmix64 mix step; used to derive independent child seeds from a master
/// seed and a stream / counter id, so parallel work is schedule-independent.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. Wraps mt19937_64 with hand-rolled normal and
/// gamma samplers so that draws depend only on (seed, call sequence), not on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    double normal();                        // standard normal (Marsaglia polar)
    double gamma(double shape, double rate);
    std::uint64_t integer(std::uint64_t n);  // uniform on {0, ..., n-1}
    std::int64_t binomial(std::int64_t trials, double prob);
    std::int64_t poisson(double mean);

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace semgof
