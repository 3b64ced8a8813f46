#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rooflens/hardware.hpp"

namespace rooflens {

// Strictly memory-bound below the balance point, strictly compute-bound
// above; exact equality is its own state rather than a tie-break.
enum class Boundedness { MemoryBound, ComputeBound, Balanced };

const char* to_string(Boundedness b);

struct RooflinePoint {
    double intensity = 0.0;    // flops/byte
    double attainable = 0.0;   // flops/second
    std::string ceiling_name;  // e.g. "FP64 CudaCore"
};

std::string ceiling_name(ExecutionUnit unit, Precision precision);

// Attainable performance min(P, B*I).
double attainable(const HardwareSpec& spec, ExecutionUnit unit, Precision precision,
                  double intensity);

Boundedness classify(double intensity, double balance);

// Intensity where the bandwidth arm meets the compute ceiling; numerically
// the machine balance.
double ridge_point(const HardwareSpec& spec, ExecutionUnit unit, Precision precision);

// n_points log-spaced samples over [i_min, i_max] plus the ridge point when
// it falls inside the range; sorted by intensity. Throws InvalidRange unless
// 0 < i_min < i_max and n_points >= 2.
std::vector<RooflinePoint> sample_curve(const HardwareSpec& spec, ExecutionUnit unit,
                                        Precision precision, double i_min, double i_max,
                                        std::size_t n_points);

} // namespace rooflens
