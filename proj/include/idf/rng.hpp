#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace idf {

// Deterministic random stream. Forecast paths, synthetic series and training
// shuffles each own an Rng derived from a root seed via derive_stream, so the
// draws of one task never depend on how work is scheduled across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    // Uniform in the open interval (0, 1); never returns 0 or 1, safe under log.
    double uniform() {
        return (static_cast<double>(bits() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    // Unbiased integer in [0, n).
    std::uint64_t bounded(std::uint64_t n);

    // Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double normal();

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from a root seed and up to three indices.
std::uint64_t derive_stream(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0);

// Fisher-Yates with explicit draws, so shuffles do not depend on the standard
// library's std::shuffle implementation.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace idf
