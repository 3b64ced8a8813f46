#include "rooflens/roofline.hpp"

#include <algorithm>
#include <cmath>

namespace rooflens {

const char* to_string(Boundedness b) {
    switch (b) {
        case Boundedness::MemoryBound:  return "memory-bound";
        case Boundedness::ComputeBound: return "compute-bound";
        case Boundedness::Balanced:     return "balanced";
    }
    return "?";
}

std::string ceiling_name(ExecutionUnit unit, Precision precision) {
    return std::string(to_string(precision)) + " " + to_string(unit);
}

double attainable(const HardwareSpec& spec, ExecutionUnit unit, Precision precision,
                  double intensity) {
    if (intensity < 0.0) {
        throw Error(ErrorKind::InvalidRange, "intensity must be >= 0");
    }
    const double p = spec.peak(unit, precision);
    return std::min(p, spec.memory_bandwidth * intensity);
}

Boundedness classify(double intensity, double balance) {
    if (intensity < balance) return Boundedness::MemoryBound;
    if (intensity > balance) return Boundedness::ComputeBound;
    return Boundedness::Balanced;
}

double ridge_point(const HardwareSpec& spec, ExecutionUnit unit, Precision precision) {
    return machine_balance(spec, unit, precision);
}

std::vector<RooflinePoint> sample_curve(const HardwareSpec& spec, ExecutionUnit unit,
                                        Precision precision, double i_min, double i_max,
                                        std::size_t n_points) {
    if (!(i_min > 0.0) || !(i_min < i_max)) {
        throw Error(ErrorKind::InvalidRange, "need 0 < i_min < i_max");
    }
    if (n_points < 2) {
        throw Error(ErrorKind::InvalidRange, "need n_points >= 2");
    }

    std::vector<double> intensities;
    intensities.reserve(n_points + 1);
    const double log_min = std::log(i_min);
    const double log_max = std::log(i_max);
    for (std::size_t k = 0; k < n_points; ++k) {
        if (k == 0) {
            intensities.push_back(i_min);
        } else if (k == n_points - 1) {
            intensities.push_back(i_max);
        } else {
            const double f = static_cast<double>(k) / static_cast<double>(n_points - 1);
            intensities.push_back(std::exp(log_min + f * (log_max - log_min)));
        }
    }

    const double ridge = ridge_point(spec, unit, precision);
    if (ridge >= i_min && ridge <= i_max &&
        std::find(intensities.begin(), intensities.end(), ridge) == intensities.end()) {
        intensities.insert(
            std::upper_bound(intensities.begin(), intensities.end(), ridge), ridge);
    }

    const std::string name = ceiling_name(unit, precision);
    std::vector<RooflinePoint> points;
    points.reserve(intensities.size());
    for (double i : intensities) {
        points.push_back({i, attainable(spec, unit, precision, i), name});
    }
    return points;
}

} // namespace rooflens
