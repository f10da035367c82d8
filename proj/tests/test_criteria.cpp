#include <cmath>

#include "core/adf.hpp"
#include "core/criteria.hpp"
#include "core/errors.hpp"
#include "core/signals.hpp"
#include "doctest.h"
#include "support/random_series.hpp"

using namespace tendex;
using tendex::testsupport::uniform_series;

namespace {
TimeSeries make(std::initializer_list<double> v) { return TimeSeries(std::vector<double>(v)); }
} // namespace

TEST_CASE("prominence: symmetric tent") {
    CHECK(prominence(make({0, 2, 0}), 1) == 2.0);
}

TEST_CASE("prominence: asymmetric peak takes the smaller side") {
    // Max at 1 with neighboring extrema values 0 (endpoint) and 1 (the min)
    CHECK(prominence(make({0, 3, 1, 4, 0}), 1) == 2.0);
}

TEST_CASE("prominence: plateau peak measured at its rightmost sample") {
    CHECK(prominence(make({0, 1, 1, 0}), 2) == 1.0);
}

TEST_CASE("prominence: non-extremum positions are rejected") {
    CHECK_THROWS_WITH_AS(prominence(make({0, 2, 0}), 0), doctest::Contains("NotAnExtremum"),
                         Error);
    CHECK_THROWS_WITH_AS(prominence(make({0, 1, 1, 0}), 1), doctest::Contains("NotAnExtremum"),
                         Error);
}

TEST_CASE("maxep: monotone series scores zero") {
    CHECK(maxep(make({0, 1, 2, 3})) == 0.0);
}

TEST_CASE("maxep: dominated by the taller peak") {
    CHECK(maxep(make({0, 2, 0, 5, 0})) == 5.0);
}

TEST_CASE("maxep: scale equivariance") {
    const TimeSeries y = uniform_series(5, 64);
    const double m = maxep(y);
    TimeSeries scaled = y;
    for (auto& v : scaled.values) v *= -7.0;
    CHECK(maxep(scaled) == doctest::Approx(7.0 * m).epsilon(1e-12));
}

TEST_CASE("extrema difference sum equals the total variation") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        TimeSeries y = uniform_series(seed, 257);
        if (seed % 2 == 0) // quantized variant exercises plateaus
            for (auto& v : y.values) v = std::floor(v * 6.0);
        double tv = 0.0;
        for (std::size_t i = 0; i + 1 < y.size(); ++i) tv += std::fabs(y[i + 1] - y[i]);
        CHECK(extrema_difference_sum(y) == doctest::Approx(tv).epsilon(1e-10));
    }
}

TEST_CASE("stc_select: chirp picks j* = 2, stable for p* in [0.05, 0.17]") {
    const auto d = decompose(gen_chirp(), BoundaryPolicy::Free);
    for (double p_star = 0.05; p_star <= 0.17; p_star += 0.01) {
        const auto trace = stc_select(d, p_star);
        CHECK(trace.chosen == 2);
        CHECK_FALSE(trace.fallback_used);
    }
}

TEST_CASE("stc_select: trace records the scanned rotations in increasing level") {
    const auto d = decompose(gen_chirp(), BoundaryPolicy::Free);
    const auto trace = stc_select(d);
    REQUIRE(!trace.per_level.empty());
    for (std::size_t k = 0; k < trace.per_level.size(); ++k) {
        CHECK(trace.per_level[k].level == static_cast<int>(k) + 1);
        // score at level j is the ADF p-value of rotation R^{j+1}
        const double p = adf_pvalue(d.rotation(static_cast<std::size_t>(k) + 2)).p_value;
        CHECK(trace.per_level[k].score == doctest::Approx(p).epsilon(1e-12));
    }
    // scan stops at the first exceedance
    CHECK(trace.per_level.back().level == trace.chosen);
    CHECK(trace.per_level.back().score > 0.05);
    for (std::size_t k = 0; k + 1 < trace.per_level.size(); ++k)
        CHECK(trace.per_level[k].score <= 0.05);
}

TEST_CASE("stc_select: raising p* never selects a smaller level") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SdeParams params;
        params.seed = seed;
        const auto d = decompose(gen_sde(params), BoundaryPolicy::Free);
        int prev = 0;
        for (double p_star : {0.01, 0.05, 0.17, 0.5, 0.9}) {
            const int j = stc_select(d, p_star).chosen;
            CHECK(j >= prev);
            prev = j;
        }
    }
}

TEST_CASE("stc_select: depth-1 decomposition falls back to j* = 1") {
    const auto d = decompose(make({0, 2, 0}), BoundaryPolicy::Free);
    REQUIRE(d.depth() == 1);
    const auto trace = stc_select(d);
    CHECK(trace.chosen == 1);
    CHECK(trace.fallback_used);
    CHECK(trace.per_level.empty());
}

TEST_CASE("stc_select: empty decomposition is an error") {
    const auto d = decompose(make({1, 1, 1}), BoundaryPolicy::Free);
    CHECK_THROWS_WITH_AS(stc_select(d), doctest::Contains("EmptyDecomposition"), Error);
}

TEST_CASE("maxep_select: chirp picks j* = 1") {
    const auto d = decompose(gen_chirp(), BoundaryPolicy::Free);
    const auto trace = maxep_select(d);
    CHECK(trace.chosen == 1);
    // trace carries maxep(B^j) for j = 0..D
    REQUIRE(trace.per_level.size() == d.depth() + 1);
    CHECK(trace.per_level[0].score == doctest::Approx(maxep(d.input)).epsilon(1e-12));
    CHECK(trace.per_level.back().score == 0.0);
}

TEST_CASE("maxep_select: ties break toward the smallest level") {
    // hand-built decomposition with maxep values 2, 1, 0: both drops are -1
    ItdDecomposition d;
    d.input = make({0, 2, 0});
    ItdLevel l1, l2;
    l1.level = 1;
    l1.baseline = make({0, 1, 0});
    l1.rotation = make({0, 1, 0});
    l2.level = 2;
    l2.baseline = make({0, 0, 0});
    l2.rotation = make({0, 1, 0});
    d.levels = {l1, l2};
    CHECK(maxep_select(d).chosen == 0);
}

TEST_CASE("maxep_select: invariant under affine rescaling") {
    const TimeSeries y = uniform_series(3, 400);
    TimeSeries scaled = y;
    for (auto& v : scaled.values) v = 4.5 * v - 2.0;
    const auto j0 = maxep_select(decompose(y, BoundaryPolicy::Free)).chosen;
    const auto j1 = maxep_select(decompose(scaled, BoundaryPolicy::Free)).chosen;
    CHECK(j0 == j1);
}

TEST_CASE("tendency: constant input returns itself with zero residual") {
    TendencyParams params;
    const auto split = tendency(make({3, 3, 3, 3}), params);
    CHECK(split.j_star == 0);
    CHECK(split.depth == 0);
    CHECK(split.tendency.values == std::vector<double>{3, 3, 3, 3});
    CHECK(split.residual.values == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("tendency: chirp STC split is exact by construction") {
    const TimeSeries y = gen_chirp();
    TendencyParams params;
    params.criterion = Criterion::Stc;
    const auto split = tendency(y, params);
    CHECK(split.j_star == 2);
    // the residual IS the subtraction, bit-for-bit; re-adding can differ from
    // Y by at most half an ulp of the tendency's magnitude
    const double ulp_bound = 4e-16 * std::max(max_abs(split.tendency), max_abs(y));
    for (std::size_t i = 0; i < y.size(); ++i) {
        CHECK(split.residual[i] == y[i] - split.tendency[i]);
        CHECK(std::fabs(split.tendency[i] + split.residual[i] - y[i]) <= ulp_bound);
    }
}

TEST_CASE("tendency: residual telescopes the removed rotations") {
    const TimeSeries y = gen_chirp();
    TendencyParams params;
    const auto split = tendency(y, params);
    const auto d = decompose(y, BoundaryPolicy::Free);
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        double acc = 0.0;
        for (int j = 1; j <= split.j_star; ++j)
            acc += d.rotation(static_cast<std::size_t>(j))[i];
        worst = std::max(worst, std::fabs(acc - split.residual[i]));
    }
    CHECK(worst <= 1e-10 * max_abs(y));
}

TEST_CASE("tendency: noisy-sine STC residual is stationary by ADF") {
    NoisySineParams params;
    params.seed = 1;
    const TimeSeries y = gen_noisy_sine(params);
    TendencyParams tp;
    const auto split = tendency(y, tp);
    CHECK(adf_pvalue(split.residual).p_value < 0.05);
}
