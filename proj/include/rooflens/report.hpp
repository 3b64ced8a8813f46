#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rooflens/bounds.hpp"
#include "rooflens/kernels.hpp"
#include "rooflens/roofline.hpp"

namespace rooflens {

// ---------------------------------------------------------------------------
// Per-kernel, per-machine analysis: intensity, classification, and every
// applicable speedup ceiling, with a one-line verdict.
// ---------------------------------------------------------------------------

struct AnalysisReport {
    HardwareSpec machine;
    Precision precision = Precision::FP64;
    double balance = 0.0;              // the balance used for classification
    bool balance_overridden = false;
    double alpha = 1.0;                // exact peak ratio
    KernelCharacterization kernel;
    Boundedness boundedness = Boundedness::MemoryBound;
    std::vector<SpeedupBound> bounds;  // kernel, tensor-core, workload ceilings

    // stencil extras
    std::optional<double> single_step_intensity;
    std::optional<std::uint64_t> min_depth;
    std::vector<std::string> notes;

    std::string verdict;               // min applicable bound, 3 significant
};

// balance_override substitutes the classification balance without touching
// the spec (e.g. to reproduce figures quoted for measured bandwidth).
// single_step_intensity, when set, adds the temporal-blocking depth section.
AnalysisReport build_analysis(const HardwareSpec& spec, Precision precision,
                              const KernelCharacterization& kernel,
                              std::optional<double> balance_override = {},
                              std::optional<double> single_step_intensity = {});

// Text uses 4 significant digits; json/csv carry full precision.
std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);
std::string render_csv(const AnalysisReport& report);

} // namespace rooflens
