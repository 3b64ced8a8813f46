#include "rooflens/kernels.hpp"

#include <limits>
#include <numeric>

namespace rooflens {

namespace {

using u128 = unsigned __int128;

// Counts are exact; refuse silently-wrapped arithmetic.
std::uint64_t narrow(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::InvalidRange, std::string(what) + " overflows 64-bit count");
    }
    return static_cast<std::uint64_t>(v);
}

void require_byte_width(std::uint64_t bytes, bool allow_zero, const char* what) {
    if (bytes == 0 && allow_zero) return;
    if (bytes == 1 || bytes == 2 || bytes == 4 || bytes == 8) return;
    throw Error(ErrorKind::InvalidIndexSize,
                std::string(what) + " must be one of {" + (allow_zero ? "0," : "") +
                    "1,2,4,8}, got " + std::to_string(bytes));
}

} // namespace

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = std::gcd(num, den);
    if (g == 0) return {num, den};
    return {num / g, den / g};
}

void SparseMatrixStats::validate() const {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::ValidationError, "matrix dimensions must be >= 1");
    }
    if (nnz == 0) {
        throw Error(ErrorKind::ValidationError, "nnz must be >= 1");
    }
    if (u128(nnz) > u128(rows) * u128(cols)) {
        throw Error(ErrorKind::ValidationError,
                    "nnz " + std::to_string(nnz) + " exceeds rows*cols");
    }
}

void SparseMetadataTraffic::validate() const {
    require_byte_width(index_entry_bytes, true, "index_entry_bytes");
    require_byte_width(packed_entry_bytes, true, "packed_entry_bytes");
}

const std::vector<StencilShape>& stencil_presets() {
    static const std::vector<StencilShape> presets = {
        {"2d5pt", 2, 5},   {"2d9pt", 2, 9},   {"2d13pt", 2, 13},
        {"2d49pt", 2, 49}, {"3d7pt", 3, 7},   {"3d27pt", 3, 27},
    };
    return presets;
}

const StencilShape& stencil_preset(std::string_view name) {
    for (const auto& s : stencil_presets()) {
        if (s.name == name) return s;
    }
    throw Error(ErrorKind::ValidationError,
                "unknown stencil preset '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

KernelCharacterization scale_model(std::uint64_t n_elements, Precision precision) {
    if (n_elements == 0) {
        throw Error(ErrorKind::InvalidCount, "scale: n_elements must be >= 1");
    }
    const std::uint64_t d = element_bytes(precision);
    KernelCharacterization k;
    k.kernel_name = "scale";
    k.work_flops = n_elements;
    k.traffic_bytes = narrow(u128(n_elements) * 2 * d, "scale traffic");
    k.parameters = {{"n", static_cast<double>(n_elements)},
                    {"element_bytes", static_cast<double>(d)}};
    return k;
}

KernelCharacterization gemv_model(std::uint64_t m, std::uint64_t n, Precision precision) {
    if (m == 0 || n == 0) {
        throw Error(ErrorKind::InvalidCount, "gemv: m and n must be >= 1");
    }
    const std::uint64_t d = element_bytes(precision);
    KernelCharacterization k;
    k.kernel_name = "gemv";
    k.work_flops = narrow(u128(m) * u128(n) * 2, "gemv work");
    k.traffic_bytes = narrow((u128(m) * u128(n) + m + n) * d, "gemv traffic");
    k.parameters = {{"m", static_cast<double>(m)},
                    {"n", static_cast<double>(n)},
                    {"element_bytes", static_cast<double>(d)}};
    return k;
}

KernelCharacterization spmv_generic_model(const SparseMatrixStats& stats,
                                          const SparseMetadataTraffic& meta,
                                          Precision precision) {
    stats.validate();
    meta.validate();
    const std::uint64_t d = element_bytes(precision);
    KernelCharacterization k;
    k.kernel_name = "spmv";
    k.work_flops = narrow(u128(stats.nnz) * 2, "spmv work");
    k.traffic_bytes = narrow((u128(stats.nnz) + stats.rows + stats.cols) * d +
                                 u128(meta.index_entry_count) * meta.index_entry_bytes +
                                 u128(meta.packed_entry_count) * meta.packed_entry_bytes,
                             "spmv traffic");
    k.parameters = {{"m", static_cast<double>(stats.rows)},
                    {"n", static_cast<double>(stats.cols)},
                    {"nnz", static_cast<double>(stats.nnz)},
                    {"element_bytes", static_cast<double>(d)}};
    return k;
}

KernelCharacterization spmv_csr_model(const SparseMatrixStats& stats,
                                      std::uint64_t index_bytes, Precision precision) {
    stats.validate();
    require_byte_width(index_bytes, false, "csr index_bytes");
    // nnz column indices plus m+1 row pointers
    SparseMetadataTraffic meta;
    meta.index_entry_count = narrow(u128(stats.nnz) + stats.rows + 1, "csr index count");
    meta.index_entry_bytes = index_bytes;
    KernelCharacterization k = spmv_generic_model(stats, meta, precision);
    k.kernel_name = "spmv-csr";
    k.parameters["index_bytes"] = static_cast<double>(index_bytes);
    return k;
}

KernelCharacterization stencil_model(const StencilShape& shape, Precision precision,
                                     std::uint64_t temporal_depth) {
    if (temporal_depth == 0) {
        throw Error(ErrorKind::InvalidCount, "stencil: temporal depth must be >= 1");
    }
    if (shape.point_count == 0) {
        throw Error(ErrorKind::InvalidCount, "stencil: point count must be >= 1");
    }
    const std::uint64_t d = element_bytes(precision);
    KernelCharacterization k;
    k.kernel_name = shape.name.empty() ? "stencil" : shape.name;
    // per grid point: t fused timesteps, one load of u and one store of v
    k.work_flops = narrow(u128(temporal_depth) * 2 * shape.point_count, "stencil work");
    k.traffic_bytes = 2 * d;
    k.parameters = {{"points", static_cast<double>(shape.point_count)},
                    {"t", static_cast<double>(temporal_depth)},
                    {"element_bytes", static_cast<double>(d)}};
    return k;
}

} // namespace rooflens
