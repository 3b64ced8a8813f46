#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rooflens/error.hpp"

namespace rooflens {

// ---------------------------------------------------------------------------
// Overlap models and speedup ceilings
//
// The question answered here: given a matrix engine that runs the compute
// phase alpha times faster, how much can total runtime improve? Two extreme
// execution models bracket reality — memory and compute either fully hide
// each other or fully serialize.
// ---------------------------------------------------------------------------

struct TimeBreakdown {
    double t_cmp = 0.0;      // seconds
    double t_mem = 0.0;
    double t_others = 0.0;

    // Non-negative, not all three zero; throws ValidationError.
    void validate() const;
};

enum class BoundKind {
    ExactUnoverlapped,   // computed from a concrete breakdown
    KernelCeiling,       // closed form at this kernel's intensity
    TensorCoreCeiling,   // kernel-independent limit for the memory-bound regime
    WorkloadCeiling,     // alpha -> infinity limit
};

const char* to_string(BoundKind kind);

// An upper bound on speedup. Bounds are open ("speedup < value"); the stored
// value is the supremum, so measured speedups compare with <= plus tolerance.
struct SpeedupBound {
    double value = 1.0;
    BoundKind kind = BoundKind::ExactUnoverlapped;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;
};

// T_mem / T_cmp = B / I for throughput-bound kernels; > 1 means memory-bound.
double mem_cmp_ratio(double balance, double intensity);

// Fully overlapped total: max of the components. For memory-bound breakdowns
// the result is independent of t_cmp, so compute acceleration changes nothing.
double overlapped_total(const TimeBreakdown& tb);

// Fully un-overlapped speedup from accelerating compute by alpha >= 1:
// (t_cmp + t_mem + t_others) / (t_cmp/alpha + t_mem + t_others), in [1, alpha].
double unoverlapped_speedup(const TimeBreakdown& tb, double alpha);

// unoverlapped_speedup wrapped as a reportable bound.
SpeedupBound unoverlapped_bound(const TimeBreakdown& tb, double alpha);

// Per-kernel ceiling 1 + (alpha-1)/(1 + alpha*B/I). Warns (does not error)
// when I >= B, where the memory-bound premise fails.
SpeedupBound kernel_speedup_ceiling(double alpha, double balance, double intensity);

// Memory-bound limit 1 + (alpha-1)/(1+alpha), strictly < 2 for finite alpha.
SpeedupBound tensor_core_ceiling(double alpha);

// alpha -> infinity limit 1 + I/B.
SpeedupBound workload_ceiling(double intensity, double balance);

// Smallest integer t with t * single_step_intensity > balance (strict): the
// temporal-blocking depth at which a stencil stops being memory-bound.
std::uint64_t min_temporal_depth(double balance, double single_step_intensity);

// Effective throughput of running SCALE as an m-by-n matrix-engine GEMM:
// only 1/max(m,n) of the engine's capacity does useful work.
double tc_scale_trick_throughput(double peak_tc, std::uint64_t m, std::uint64_t n);

} // namespace rooflens
