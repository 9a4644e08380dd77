#include "geoclique/rng.hpp"

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

// Sequential inversion; exact for modest means.
std::uint64_t poisson_inversion(Rng& rng, double mean) {
    const double u = rng.next_double();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t k = 0;
    while (u > cum) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
        if (p < 1e-300 && cum < u) return k;  // tail truncation far beyond any realistic draw
    }
    return k;
}

// Transformed rejection with squeeze (Hormann's PTRS), exact for mean >= 10.
std::uint64_t poisson_ptrs(Rng& rng, double mean) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2);
    while (true) {
        const double u = rng.next_double() - 0.5;
        const double v = rng.next_double();
        const double us = 0.5 - std::abs(u);
        const auto k = static_cast<long long>(std::floor((2 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            static_cast<double>(k) * loglam - mean - std::lgamma(static_cast<double>(k) + 1))
            return static_cast<std::uint64_t>(k);
    }
}

}  // namespace

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0)) throw invalid_input("poisson mean must be non-negative");
    if (mean == 0) return 0;
    if (mean <= 30.0) return poisson_inversion(*this, mean);
    return poisson_ptrs(*this, mean);
}

}  // namespace geoclique
