#include "rooflens/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rooflens {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 1.0)) {
        throw Error(ErrorKind::InvalidAlpha, "alpha must be >= 1");
    }
}

void require_intensity(double intensity) {
    if (!(intensity > 0.0)) {
        throw Error(ErrorKind::ZeroIntensity, "intensity must be > 0");
    }
}

const char* kOpenBound = "open bound: stored value is the supremum";

} // namespace

const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::ExactUnoverlapped: return "exact un-overlapped";
        case BoundKind::KernelCeiling:     return "kernel ceiling";
        case BoundKind::TensorCoreCeiling: return "tensor-core ceiling";
        case BoundKind::WorkloadCeiling:   return "workload ceiling";
    }
    return "?";
}

void TimeBreakdown::validate() const {
    if (t_cmp < 0.0 || t_mem < 0.0 || t_others < 0.0) {
        throw Error(ErrorKind::ValidationError, "time components must be >= 0");
    }
    if (t_cmp == 0.0 && t_mem == 0.0 && t_others == 0.0) {
        throw Error(ErrorKind::ValidationError, "time breakdown is all zero");
    }
}

double mem_cmp_ratio(double balance, double intensity) {
    require_intensity(intensity);
    return balance / intensity;
}

double overlapped_total(const TimeBreakdown& tb) {
    tb.validate();
    return std::max({tb.t_cmp, tb.t_mem, tb.t_others});
}

double unoverlapped_speedup(const TimeBreakdown& tb, double alpha) {
    tb.validate();
    require_alpha(alpha);
    if (tb.t_cmp == 0.0) return 1.0;   // nothing to accelerate
    return (tb.t_cmp + tb.t_mem + tb.t_others) /
           (tb.t_cmp / alpha + tb.t_mem + tb.t_others);
}

SpeedupBound unoverlapped_bound(const TimeBreakdown& tb, double alpha) {
    SpeedupBound b;
    b.value = unoverlapped_speedup(tb, alpha);
    b.kind = BoundKind::ExactUnoverlapped;
    b.assumptions = {"fully un-overlapped", "exact speedup for this breakdown"};
    return b;
}

SpeedupBound kernel_speedup_ceiling(double alpha, double balance, double intensity) {
    require_alpha(alpha);
    require_intensity(intensity);
    SpeedupBound b;
    b.value = 1.0 + (alpha - 1.0) / (1.0 + alpha * (balance / intensity));
    b.kind = BoundKind::KernelCeiling;
    b.assumptions = {"fully un-overlapped", "T_others >= 0",
                     "T_mem = T_cmp * B/I (throughput-bound)", kOpenBound};
    if (intensity >= balance) {
        b.warnings.push_back("intensity >= machine balance: kernel is not "
                             "memory-bound, ceiling is not meaningful");
    }
    return b;
}

SpeedupBound tensor_core_ceiling(double alpha) {
    require_alpha(alpha);
    SpeedupBound b;
    // 1 + (a-1)/(1+a), not the algebraically equal 2 - 2/(1+a): at alpha = 2
    // this form lands exactly on 4/3 in double precision.
    b.value = 1.0 + (alpha - 1.0) / (1.0 + alpha);
    b.kind = BoundKind::TensorCoreCeiling;
    b.assumptions = {"fully un-overlapped", "memory-bound premise: T_cmp -> T_mem",
                     kOpenBound};
    return b;
}

SpeedupBound workload_ceiling(double intensity, double balance) {
    require_intensity(intensity);
    if (!(balance > 0.0)) {
        throw Error(ErrorKind::ZeroBalance, "balance must be > 0");
    }
    SpeedupBound b;
    b.value = 1.0 + intensity / balance;
    b.kind = BoundKind::WorkloadCeiling;
    b.assumptions = {"alpha -> infinity", "fully un-overlapped", kOpenBound};
    return b;
}

std::uint64_t min_temporal_depth(double balance, double single_step_intensity) {
    require_intensity(single_step_intensity);
    if (balance < single_step_intensity) return 1;

    const double quotient = balance / single_step_intensity;
    if (!std::isfinite(quotient) || quotient >= 1e18) {
        throw Error(ErrorKind::InvalidRange, "balance/intensity ratio too large");
    }
    // Start from the division estimate, then settle onto the exact boundary of
    // the multiplication predicate so oracle scans agree bit-for-bit.
    std::uint64_t t = static_cast<std::uint64_t>(std::floor(quotient)) + 1;
    while (t > 1 && static_cast<double>(t - 1) * single_step_intensity > balance) --t;
    while (static_cast<double>(t) * single_step_intensity <= balance) ++t;
    return t;
}

double tc_scale_trick_throughput(double peak_tc, std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) {
        throw Error(ErrorKind::InvalidCount, "engine dimensions must be >= 1");
    }
    if (!(peak_tc > 0.0)) {
        throw Error(ErrorKind::ValidationError, "peak_tc must be > 0");
    }
    return peak_tc / static_cast<double>(std::max(m, n));
}

} // namespace rooflens
