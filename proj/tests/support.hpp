#pragma once

// Random valid designs for the planner property checks.

#include "cdc/schemes.hpp"

#include <random>

namespace cdc::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct GammaCase {
    Instance inst;
    GammaDesign design;
};

// K in [2..4], every L_k a multiple of K-1. Coordinates are grown at random
// while coverage and the pooled budget allow; full replication fills the rest.
inline GammaCase random_gamma(std::mt19937& rng) {
    const int K = uniform(rng, 2, 4);
    const int N = uniform(rng, K, 14);
    std::vector<int> L(K);
    for (int& l : L) l = (K - 1) * uniform(rng, 0, N / (K - 1) + 2);
    Instance inst(K, K * uniform(rng, 1, 2), N, 8 * uniform(rng, 1, 9), 64, L);

    GammaDesign d = GammaDesign::zero(K);
    const int steps = uniform(rng, 0, 3 * N);
    for (int s = 0; s < steps; ++s) {
        GammaDesign next = d;
        const int slots = K - 1 + std::max(K - 2, 0);
        const int pick = uniform(rng, 0, slots - 1);
        if (pick < K - 1) ++next.c(pick + 1);
        else ++next.r(pick - (K - 1) + 2);
        if (next.coverage() <= N && next.communication() <= inst.total_budget()) d = next;
    }
    d.c(K) += static_cast<int>(N - d.coverage());
    return {inst, d};
}

struct S16Case {
    Instance inst;
    SDesign16 design;
};

inline S16Case random_s16(std::mt19937& rng) {
    const int N = uniform(rng, 3, 20);
    Instance inst(3, 3 * uniform(rng, 1, 2), N, 8 * uniform(rng, 1, 9), 64,
                  {uniform(rng, 0, 2 * N), uniform(rng, 0, 2 * N), uniform(rng, 0, 2 * N)});
    SDesign16 d;
    auto covered = [&](const SDesign16& x) {
        int s = 0;
        for (int v : x.u) s += v;
        return s;
    };
    auto fits = [&](const SDesign16& x) {
        if (covered(x) > N) return false;
        for (NodeId k = 1; k <= 3; ++k)
            if (x.doubled_egress(k) > 2 * inst.budget(k)) return false;
        return true;
    };
    const int steps = uniform(rng, 0, 3 * N);
    for (int s = 0; s < steps; ++s) {
        SDesign16 next = d;
        const int pick = uniform(rng, 0, 11);
        if (pick < 3) {
            ++next.u[SDesign16::single_index(pick + 1)];
        } else if (pick < 9) {
            static constexpr std::array<std::array<int, 3>, 6> r{
                {{1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 3, 3}, {2, 3, 2}, {2, 3, 3}}};
            const auto& [i, j, k] = r[pick - 3];
            ++next.u[SDesign16::redundant_index(i, j, k)];
        } else {
            const NodeId k = pick - 8;
            for (NodeId j = 1; j <= 3; ++j)
                if (j != k) ++next.u[SDesign16::coded_index(k, j, k)];
        }
        if (fits(next)) d = next;
    }
    d.u[SDesign16::S123] += N - covered(d);
    return {inst, d};
}

struct DualCase {
    Instance inst;
    DualDesign design;
};

// K in [2..5]; per-group sizes y[j][p] grown at random within budgets.
inline DualCase random_dual(std::mt19937& rng) {
    const int K = uniform(rng, 2, 5);
    const int N = uniform(rng, K, K <= 3 ? 16 : 12);
    std::vector<int> L(K);
    for (int& l : L) l = uniform(rng, 0, 2 * N);
    Instance inst(K, K * uniform(rng, 1, 2), N, 8 * uniform(rng, 1, 9), 64, L);

    std::vector<std::vector<int>> y(K, std::vector<int>(K - 1, 0));
    auto files_of = [&](const std::vector<std::vector<int>>& v) {
        std::int64_t f = 0;
        for (int j = 0; j < K; ++j)
            for (int p = 1; p <= K - 1; ++p) f += binomial(K - 1, p - 1) * v[j][p - 1];
        return f;
    };
    auto fits = [&](const std::vector<std::vector<int>>& v) {
        if (files_of(v) > N) return false;
        for (int j = 0; j < K; ++j) {
            Rational e(0);
            for (int p = 1; p <= K - 1; ++p) e += Rational(K - p, p) * binomial(K - 1, p - 1) * v[j][p - 1];
            if (e > L[j]) return false;
        }
        return true;
    };
    const int steps = uniform(rng, 0, 3 * N);
    for (int s = 0; s < steps; ++s) {
        auto next = y;
        ++next[uniform(rng, 0, K - 1)][uniform(rng, 0, K - 2)];
        if (fits(next)) y = next;
    }
    return {inst, DualDesign::symmetric(K, y, static_cast<int>(N - files_of(y)))};
}

} // namespace cdc::testing
