#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rooflens/error.hpp"

namespace rooflens {

// ---------------------------------------------------------------------------
// Execution units and precisions
// ---------------------------------------------------------------------------

enum class ExecutionUnit { CudaCore, TensorCore };

enum class Precision { FP64, FP32, FP16 };

// Bytes per value: 8, 4, 2.
std::size_t element_bytes(Precision p);

const char* to_string(ExecutionUnit u);
const char* to_string(Precision p);

// "cuda_core"/"tensor_core" and "fp64"/"fp32"/"fp16" (case-insensitive).
std::optional<ExecutionUnit> unit_from_string(std::string_view s);
std::optional<Precision> precision_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Machine description
//
// Peak throughputs are flops/second, bandwidth bytes/second, cache bytes —
// SI decimal throughout (1 TFLOPS = 1e12 flops/s, 1 TB/s = 1e12 B/s,
// 1 MB = 1e6 B). Unit conversion happens only at the config boundary.
// ---------------------------------------------------------------------------

using PeakKey = std::pair<ExecutionUnit, Precision>;

struct HardwareSpec {
    std::string name;
    double memory_bandwidth = 0.0;        // bytes/second
    double l2_cache_bytes = 0.0;          // reporting only, no cache modeling
    std::map<PeakKey, double> peaks;      // flops/second per (unit, precision)

    bool has_peak(ExecutionUnit u, Precision p) const;
    double peak(ExecutionUnit u, Precision p) const;   // throws MissingPeak

    // Throws ValidationError unless: bandwidth > 0, every peak > 0, and any
    // precision with a TensorCore entry also has a CudaCore entry (otherwise
    // the speedup factor alpha is undefined).
    void validate() const;

    bool operator==(const HardwareSpec&) const = default;
};

// Machine balance: peak compute over memory bandwidth, flops per byte.
double machine_balance(const HardwareSpec& spec, ExecutionUnit unit, Precision precision);

// Tensor-core speedup factor alpha = P(TensorCore) / P(CudaCore).
double tensor_alpha(const HardwareSpec& spec, Precision precision);

// The two reference machines, immutable.
const std::vector<HardwareSpec>& builtin_specs();

// Lookup by name among the built-ins. Throws UnknownHardware.
const HardwareSpec& builtin_spec(std::string_view name);

// ---------------------------------------------------------------------------
// Config documents (JSON)
//
//   {
//     "name": "A100-80GB",
//     "memory_bandwidth_tbps": 1.94,
//     "l2_cache_mb": 40,
//     "peaks": { "fp64": { "cuda_core_tflops": 9.7,
//                          "tensor_core_tflops": 19.5 } }
//   }
//
// Unknown keys are rejected (ParseError); missing required keys are
// MissingField; invariant violations are ValidationError.
// ---------------------------------------------------------------------------

HardwareSpec load_spec(const std::string& text);
HardwareSpec load_spec_file(const std::string& path);
std::string serialize_spec(const HardwareSpec& spec);

} // namespace rooflens
