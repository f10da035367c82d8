#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace tendex {

/// Uniformly indexed real-valued sequence. Positions are the implicit
/// 0-based indices 0..size()-1; timestamps, if any, are handled as opaque
/// labels by the I/O layer and never enter the numeric pipeline.
struct TimeSeries {
    std::vector<double> values;
    std::string label;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v, std::string lbl = {})
        : values(std::move(v)), label(std::move(lbl)) {}

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    const double* data() const noexcept { return values.data(); }
};

inline double max_abs(const TimeSeries& s) {
    double m = 0.0;
    for (double v : s.values) m = std::max(m, std::fabs(v));
    return m;
}

/// Enforces the TimeSeries invariants: nonempty and all-finite.
inline void validate_series(const TimeSeries& s) {
    if (s.size() == 0)
        throw Error(Status::InvalidArgument, "EmptySeries: series must have at least one sample");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.values[i]))
            throw Error(Status::InvalidArgument,
                        "NonFiniteValue: sample at index " + std::to_string(i) + " is not finite");
    }
}

} // namespace tendex
