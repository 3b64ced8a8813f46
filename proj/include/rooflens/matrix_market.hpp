#pragma once

#include <iosfwd>
#include <string>

#include "rooflens/bounds.hpp"
#include "rooflens/kernels.hpp"
#include "rooflens/roofline.hpp"

namespace rooflens {

// ---------------------------------------------------------------------------
// Matrix Market ingestion (stats only)
//
// Reads just enough of an .mtx file to feed the SpMV intensity formulas:
// dimensions and the expanded nonzero count. Values are validated but never
// stored, so memory stays O(1) regardless of nnz.
// ---------------------------------------------------------------------------

struct MatrixMarketHeader {
    enum class Object { Matrix };
    enum class Format { Coordinate, Array };
    enum class Field { Real, Integer, Pattern, Complex };
    enum class Symmetry { General, Symmetric, SkewSymmetric, Hermitian };

    Object object = Object::Matrix;
    Format format = Format::Coordinate;
    Field field = Field::Real;
    Symmetry symmetry = Symmetry::General;
};

// Parses a "%%MatrixMarket object format field symmetry" banner line
// (tokens case-insensitive). Throws BadBanner.
MatrixMarketHeader parse_banner(const std::string& line);

// Streaming count of a coordinate-format file. Symmetric/skew/hermitian
// storage is expanded (off-diagonal entries count twice — SpMV touches the
// full matrix); explicit zeros still occupy CSR slots and are counted.
SparseMatrixStats parse_stats(std::istream& in);
SparseMatrixStats parse_stats_file(const std::string& path);

// ---------------------------------------------------------------------------
// Per-matrix roofline analysis
// ---------------------------------------------------------------------------

struct MatrixAnalysis {
    std::string matrix_name;
    SparseMatrixStats stats;
    KernelCharacterization kernel;       // CSR model, FP64 by default
    Boundedness boundedness;             // vs. the CUDA-core balance
    SpeedupBound kernel_ceiling;         // at the spec's exact alpha
    SpeedupBound workload_ceiling;
    std::uint64_t csr_bytes = 0;         // one full sweep of values + metadata
    bool fits_in_l2 = false;
};

MatrixAnalysis stats_to_report(const SparseMatrixStats& stats, const HardwareSpec& spec,
                               Precision precision);

} // namespace rooflens
