#include "qimp/simcore/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace qimp::kernels {

namespace {

// Insert zero bits at `sorted_targets` positions: enumerates all indices
// whose target bits are zero, in increasing order.
inline std::uint64_t expand_index(std::uint64_t k, const int* sorted_targets, int m) {
    std::uint64_t idx = k;
    for (int j = 0; j < m; ++j) {
        const int t = sorted_targets[j];
        const std::uint64_t low = idx & ((std::uint64_t{1} << t) - 1);
        idx = ((idx >> t) << (t + 1)) | low;
    }
    return idx;
}

inline bool controls_pass(std::uint64_t idx, std::uint64_t ctrl_mask, std::uint64_t anti_mask) {
    return (idx & ctrl_mask) == ctrl_mask && (idx & anti_mask) == 0;
}

struct NTargetPlan {
    int m;
    std::size_t block;
    int sorted[kMaxTargets];
    std::uint64_t offsets[kMaxBlock];
};

NTargetPlan plan_targets(std::span<const int> targets) {
    NTargetPlan p;
    p.m = static_cast<int>(targets.size());
    p.block = std::size_t{1} << p.m;
    for (int j = 0; j < p.m; ++j) p.sorted[j] = targets[j];
    std::sort(p.sorted, p.sorted + p.m);
    // Gather offsets honor the caller's target order: local bit j belongs
    // to targets[j], which fixes the matrix convention.
    for (std::size_t local = 0; local < p.block; ++local) {
        std::uint64_t off = 0;
        for (int j = 0; j < p.m; ++j)
            if ((local >> j) & 1) off |= std::uint64_t{1} << targets[j];
        p.offsets[local] = off;
    }
    return p;
}

}  // namespace

// ---- serial reference kernels (kept as the testing ground truth) ----

void apply1_serial(std::vector<cdouble>& amps, const GateMatrix& g, int target,
                   std::uint64_t ctrl_mask, std::uint64_t anti_mask) {
    const std::uint64_t pairs = amps.size() >> 1;
    const std::uint64_t bit = std::uint64_t{1} << target;
    const cdouble g00 = g.entries[0], g01 = g.entries[1];
    const cdouble g10 = g.entries[2], g11 = g.entries[3];

    for (std::uint64_t k = 0; k < pairs; ++k) {
        const std::uint64_t i0 = ((k >> target) << (target + 1)) | (k & (bit - 1));
        if (!controls_pass(i0, ctrl_mask, anti_mask)) continue;
        const std::uint64_t i1 = i0 | bit;
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = g00 * a0 + g01 * a1;
        amps[i1] = g10 * a0 + g11 * a1;
    }
}

void applyn_serial(std::vector<cdouble>& amps, const GateMatrix& g, std::span<const int> targets,
                   std::uint64_t ctrl_mask, std::uint64_t anti_mask) {
    assert(g.arity == static_cast<int>(targets.size()));
    const NTargetPlan p = plan_targets(targets);
    const std::uint64_t bases = amps.size() >> p.m;

    for (std::uint64_t k = 0; k < bases; ++k) {
        const std::uint64_t base = expand_index(k, p.sorted, p.m);
        if (!controls_pass(base, ctrl_mask, anti_mask)) continue;
        cdouble in[kMaxBlock];
        for (std::size_t local = 0; local < p.block; ++local)
            in[local] = amps[base | p.offsets[local]];
        for (std::size_t r = 0; r < p.block; ++r) {
            cdouble acc{0.0, 0.0};
            for (std::size_t c = 0; c < p.block; ++c) acc += g.entries[r * p.block + c] * in[c];
            amps[base | p.offsets[r]] = acc;
        }
    }
}

double norm_sq_serial(std::span<const cdouble> amps) {
    double acc = 0.0;
    for (const cdouble& a : amps) acc += std::norm(a);
    return acc;
}

double prob_one_serial(std::span<const cdouble> amps, int qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (i & bit) acc += std::norm(amps[i]);
    return acc;
}

void collapse_serial(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool one = (i & bit) != 0;
        if (one == (kept_bit == 1))
            amps[i] *= scale;
        else
            amps[i] = cdouble{0.0, 0.0};
    }
}

// ---- OpenMP kernels ----

void apply1_omp(std::vector<cdouble>& amps, const GateMatrix& g, int target,
                std::uint64_t ctrl_mask, std::uint64_t anti_mask) {
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    const std::uint64_t bit = std::uint64_t{1} << target;
    const cdouble g00 = g.entries[0], g01 = g.entries[1];
    const cdouble g10 = g.entries[2], g11 = g.entries[3];

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < pairs; ++k) {
        const std::uint64_t uk = static_cast<std::uint64_t>(k);
        const std::uint64_t i0 = ((uk >> target) << (target + 1)) | (uk & (bit - 1));
        if (!controls_pass(i0, ctrl_mask, anti_mask)) continue;
        const std::uint64_t i1 = i0 | bit;
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = g00 * a0 + g01 * a1;
        amps[i1] = g10 * a0 + g11 * a1;
    }
}

void applyn_omp(std::vector<cdouble>& amps, const GateMatrix& g, std::span<const int> targets,
                std::uint64_t ctrl_mask, std::uint64_t anti_mask) {
    assert(g.arity == static_cast<int>(targets.size()));
    const NTargetPlan p = plan_targets(targets);
    const std::int64_t bases = static_cast<std::int64_t>(amps.size() >> p.m);

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < bases; ++k) {
        const std::uint64_t base = expand_index(static_cast<std::uint64_t>(k), p.sorted, p.m);
        if (!controls_pass(base, ctrl_mask, anti_mask)) continue;
        cdouble in[kMaxBlock];
        for (std::size_t local = 0; local < p.block; ++local)
            in[local] = amps[base | p.offsets[local]];
        for (std::size_t r = 0; r < p.block; ++r) {
            cdouble acc{0.0, 0.0};
            for (std::size_t c = 0; c < p.block; ++c) acc += g.entries[r * p.block + c] * in[c];
            amps[base | p.offsets[r]] = acc;
        }
    }
}

double norm_sq_omp(std::span<const cdouble> amps) {
    double acc = 0.0;
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) acc += std::norm(amps[i]);
    return acc;
}

double prob_one_omp(std::span<const cdouble> amps, int qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double acc = 0.0;
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        if (static_cast<std::uint64_t>(i) & bit) acc += std::norm(amps[i]);
    return acc;
}

void collapse_omp(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const bool one = (static_cast<std::uint64_t>(i) & bit) != 0;
        if (one == (kept_bit == 1))
            amps[i] *= scale;
        else
            amps[i] = cdouble{0.0, 0.0};
    }
}

// ---- dispatch ----

namespace {
inline bool go_parallel(std::size_t dim, Policy policy) {
    switch (policy) {
        case Policy::Serial: return false;
        case Policy::Parallel: return true;
        case Policy::Auto: return dim >= kParallelCutoff;
    }
    return false;
}
}  // namespace

void apply(std::vector<cdouble>& amps, const GateMatrix& g, std::span<const int> targets,
           std::uint64_t ctrl_mask, std::uint64_t anti_mask, Policy policy) {
    const bool par = go_parallel(amps.size(), policy);
    if (targets.size() == 1) {
        par ? apply1_omp(amps, g, targets[0], ctrl_mask, anti_mask)
            : apply1_serial(amps, g, targets[0], ctrl_mask, anti_mask);
    } else {
        par ? applyn_omp(amps, g, targets, ctrl_mask, anti_mask)
            : applyn_serial(amps, g, targets, ctrl_mask, anti_mask);
    }
}

double norm_sq(std::span<const cdouble> amps, Policy policy) {
    return go_parallel(amps.size(), policy) ? norm_sq_omp(amps) : norm_sq_serial(amps);
}

double prob_one(std::span<const cdouble> amps, int qubit, Policy policy) {
    return go_parallel(amps.size(), policy) ? prob_one_omp(amps, qubit)
                                            : prob_one_serial(amps, qubit);
}

void collapse(std::vector<cdouble>& amps, int qubit, int kept_bit, double scale, Policy policy) {
    go_parallel(amps.size(), policy) ? collapse_omp(amps, qubit, kept_bit, scale)
                                     : collapse_serial(amps, qubit, kept_bit, scale);
}

}  // namespace qimp::kernels
