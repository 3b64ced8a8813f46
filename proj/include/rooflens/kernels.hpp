#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rooflens/hardware.hpp"

namespace rooflens {

// ---------------------------------------------------------------------------
// Exact rational intensity
//
// Work and traffic are integer counts, so every intensity is a rational
// number; doubles appear only at the reporting boundary.
// ---------------------------------------------------------------------------

struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Ratio of(std::uint64_t num, std::uint64_t den);   // reduced by gcd
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Ratio&) const = default;
};

// ---------------------------------------------------------------------------
// Kernel characterization: work W (flops), traffic Q (bytes), I = W/Q
// ---------------------------------------------------------------------------

struct KernelCharacterization {
    std::string kernel_name;
    std::uint64_t work_flops = 0;
    std::uint64_t traffic_bytes = 1;
    std::map<std::string, double> parameters;   // inputs echoed for reporting

    double intensity() const {
        return static_cast<double>(work_flops) / static_cast<double>(traffic_bytes);
    }
    Ratio intensity_ratio() const { return Ratio::of(work_flops, traffic_bytes); }
};

struct SparseMatrixStats {
    std::uint64_t rows = 1;
    std::uint64_t cols = 1;
    std::uint64_t nnz = 1;

    // rows, cols >= 1 and 1 <= nnz <= rows*cols; throws ValidationError.
    void validate() const;
};

// Metadata traffic of a sparse format beyond the dense values: index entries
// (coordinate information) and packed-value entries, each with a byte width.
struct SparseMetadataTraffic {
    std::uint64_t index_entry_count = 0;
    std::uint64_t index_entry_bytes = 0;    // one of {0,1,2,4,8}
    std::uint64_t packed_entry_count = 0;
    std::uint64_t packed_entry_bytes = 0;   // one of {0,1,2,4,8}

    void validate() const;
};

struct StencilShape {
    std::string name;
    int dimensionality = 2;        // 2 or 3
    std::uint64_t point_count = 1; // |S|
};

// Presets: 2d5pt, 2d9pt, 2d13pt, 2d49pt, 3d7pt, 3d27pt. Throws
// ValidationError for unknown names.
const StencilShape& stencil_preset(std::string_view name);
const std::vector<StencilShape>& stencil_presets();

inline constexpr std::uint64_t kDefaultIndexBytes = 4;   // 32-bit indices

// ---------------------------------------------------------------------------
// Kernel models (ideal traffic: each input loaded once, each output stored
// once). All counts exact; throws InvalidCount on zero-sized inputs.
// ---------------------------------------------------------------------------

// STREAM SCALE a_i = q*b_i: 1 flop, one load + one store per element.
// I = 1/(2*D); the scalar q is a broadcast and contributes no traffic.
KernelCharacterization scale_model(std::uint64_t n_elements, Precision precision);

// Dense y = A*x with A m-by-n: W = 2mn, Q = (mn + m + n)*D.
KernelCharacterization gemv_model(std::uint64_t m, std::uint64_t n, Precision precision);

// Sparse y = A*x with explicit metadata traffic:
// W = 2*nnz, Q = (nnz + m + n)*D + index_count*index_bytes + packed_count*packed_bytes.
KernelCharacterization spmv_generic_model(const SparseMatrixStats& stats,
                                          const SparseMetadataTraffic& meta,
                                          Precision precision);

// CSR specialization: column index per nonzero plus m+1 row pointers.
// Q = (nnz + m + n)*D + (nnz + m + 1)*index_bytes. index_bytes in {2,4,8}.
KernelCharacterization spmv_csr_model(const SparseMatrixStats& stats,
                                      std::uint64_t index_bytes, Precision precision);

// Iterative stencil, per grid point, with t timesteps fused per sweep:
// W = t*2*|S|, Q = 2*D, so I = t*|S|/D (the factor 2 cancels exactly).
KernelCharacterization stencil_model(const StencilShape& shape, Precision precision,
                                     std::uint64_t temporal_depth);

} // namespace rooflens
