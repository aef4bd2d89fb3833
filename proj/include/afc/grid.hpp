#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "afc/errors.hpp"

namespace afc {

// Uniform frequency grid nu_i = start + i*step, i in [0, count).
// The analysis window owned by sample i is [nu_i - step/2, nu_i + step/2),
// so the grid spans count*step in total.
struct FrequencyGrid {
    double start = 0.0;
    double step = 0.0;
    std::size_t count = 0;

    FrequencyGrid() = default;
    FrequencyGrid(double start_, double step_, std::size_t count_)
        : start(start_), step(step_), count(count_) {
        if (!(step > 0.0)) throw domain_error("FrequencyGrid: step must be > 0");
        if (count < 2) throw domain_error("FrequencyGrid: count must be >= 2");
    }

    double frequency(std::size_t i) const { return start + static_cast<double>(i) * step; }
    double span() const { return static_cast<double>(count) * step; }
    double center() const { return start + 0.5 * static_cast<double>(count - 1) * step; }
    double back() const { return frequency(count - 1); }

    bool operator==(const FrequencyGrid&) const = default;
};

// Makes a grid of `periods`*`samples_per_period` points centered on `center`,
// with samples offset half a step so the span is an exact number of periods.
inline FrequencyGrid make_periodic_grid(double center, double period, std::size_t periods,
                                        std::size_t samples_per_period) {
    if (!(period > 0.0)) throw domain_error("make_periodic_grid: period must be > 0");
    if (periods == 0 || samples_per_period < 2)
        throw domain_error("make_periodic_grid: need >= 1 period and >= 2 samples per period");
    const double step = period / static_cast<double>(samples_per_period);
    const std::size_t n = periods * samples_per_period;
    const double start = center - 0.5 * static_cast<double>(n) * step + 0.5 * step;
    return {start, step, n};
}

// Dimensionless optical depth d(nu) on a uniform grid; intensity transmission
// through the medium is e^{-d}.
struct OpticalDepthSpectrum {
    FrequencyGrid grid;
    std::vector<double> depth;

    OpticalDepthSpectrum() = default;
    OpticalDepthSpectrum(FrequencyGrid grid_, std::vector<double> depth_)
        : grid(grid_), depth(std::move(depth_)) {
        if (depth.size() != grid.count)
            throw domain_error("OpticalDepthSpectrum: depth length != grid count");
        for (double v : depth)
            if (!(v >= 0.0)) throw domain_error("OpticalDepthSpectrum: negative optical depth");
    }
};

// Complex optical depth zeta(nu) = k L chi(nu); Im zeta is the optical depth,
// Re zeta its causal (Hilbert) partner.
struct ComplexSpectrum {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;

    ComplexSpectrum() = default;
    ComplexSpectrum(FrequencyGrid grid_, std::vector<std::complex<double>> values_)
        : grid(grid_), values(std::move(values_)) {
        if (values.size() != grid.count)
            throw domain_error("ComplexSpectrum: values length != grid count");
    }
};

}  // namespace afc
