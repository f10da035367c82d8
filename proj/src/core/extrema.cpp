#include "core/extrema.hpp"

namespace tendex {

std::vector<std::size_t> ExtremaSet::knot_positions() const {
    std::vector<std::size_t> pos;
    pos.reserve(interior.size() + 2);
    pos.push_back(0);
    for (const auto& e : interior) pos.push_back(e.pos);
    if (n > 1) pos.push_back(n - 1);
    return pos;
}

ExtremaSet find_extrema(const TimeSeries& series) {
    const auto& y = series.values;
    const std::size_t n = y.size();
    ExtremaSet out;
    out.n = n;
    if (n < 3) return out;

    std::size_t i = 0;
    while (i + 1 < n) {
        std::size_t j = i;
        while (j + 1 < n && y[j + 1] == y[i]) ++j;
        // run i..j of equal values
        if (i > 0 && j + 1 < n) {
            const double left = y[i - 1];
            const double right = y[j + 1];
            if (left < y[i] && right < y[i])
                out.interior.push_back({j, ExtremumKind::Max});
            else if (left > y[i] && right > y[i])
                out.interior.push_back({j, ExtremumKind::Min});
        }
        i = j + 1;
    }
    return out;
}

} // namespace tendex
