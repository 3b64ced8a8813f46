#include "rooflens/hardware.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rooflens {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Decimal unit factors used by the config schema.
constexpr double kTera = 1e12;
constexpr double kMega = 1e6;

} // namespace

std::size_t element_bytes(Precision p) {
    switch (p) {
        case Precision::FP64: return 8;
        case Precision::FP32: return 4;
        case Precision::FP16: return 2;
    }
    return 0;
}

const char* to_string(ExecutionUnit u) {
    return u == ExecutionUnit::CudaCore ? "CudaCore" : "TensorCore";
}

const char* to_string(Precision p) {
    switch (p) {
        case Precision::FP64: return "FP64";
        case Precision::FP32: return "FP32";
        case Precision::FP16: return "FP16";
    }
    return "?";
}

std::optional<ExecutionUnit> unit_from_string(std::string_view s) {
    const std::string k = lower(s);
    if (k == "cuda_core" || k == "cudacore" || k == "cuda") return ExecutionUnit::CudaCore;
    if (k == "tensor_core" || k == "tensorcore" || k == "tensor") return ExecutionUnit::TensorCore;
    return std::nullopt;
}

std::optional<Precision> precision_from_string(std::string_view s) {
    const std::string k = lower(s);
    if (k == "fp64") return Precision::FP64;
    if (k == "fp32") return Precision::FP32;
    if (k == "fp16") return Precision::FP16;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// HardwareSpec
// ---------------------------------------------------------------------------

bool HardwareSpec::has_peak(ExecutionUnit u, Precision p) const {
    return peaks.count({u, p}) != 0;
}

double HardwareSpec::peak(ExecutionUnit u, Precision p) const {
    auto it = peaks.find({u, p});
    if (it == peaks.end()) {
        throw Error(ErrorKind::MissingPeak,
                    "'" + name + "' has no " + to_string(u) + " peak at " + to_string(p));
    }
    return it->second;
}

void HardwareSpec::validate() const {
    if (name.empty()) {
        throw Error(ErrorKind::ValidationError, "spec name is empty");
    }
    if (!(memory_bandwidth > 0.0)) {
        throw Error(ErrorKind::ValidationError,
                    "'" + name + "': memory_bandwidth must be > 0");
    }
    if (l2_cache_bytes < 0.0) {
        throw Error(ErrorKind::ValidationError,
                    "'" + name + "': l2_cache_bytes must be >= 0");
    }
    if (peaks.empty()) {
        throw Error(ErrorKind::ValidationError, "'" + name + "': peaks table is empty");
    }
    for (const auto& [key, value] : peaks) {
        if (!(value > 0.0)) {
            throw Error(ErrorKind::ValidationError,
                        "'" + name + "': peak for " + to_string(key.first) + " " +
                            to_string(key.second) + " must be > 0");
        }
        // alpha must be defined wherever a tensor-core peak exists
        if (key.first == ExecutionUnit::TensorCore &&
            !has_peak(ExecutionUnit::CudaCore, key.second)) {
            throw Error(ErrorKind::ValidationError,
                        "'" + name + "': TensorCore peak at " + to_string(key.second) +
                            " has no CudaCore counterpart");
        }
    }
}

double machine_balance(const HardwareSpec& spec, ExecutionUnit unit, Precision precision) {
    return spec.peak(unit, precision) / spec.memory_bandwidth;
}

double tensor_alpha(const HardwareSpec& spec, Precision precision) {
    return spec.peak(ExecutionUnit::TensorCore, precision) /
           spec.peak(ExecutionUnit::CudaCore, precision);
}

const std::vector<HardwareSpec>& builtin_specs() {
    static const std::vector<HardwareSpec> specs = [] {
        std::vector<HardwareSpec> v;
        // Built-ins mirror the config schema arithmetic (value * unit factor)
        // so serialize/load round-trips are bit-exact.
        HardwareSpec a100;
        a100.name = "A100-80GB";
        a100.memory_bandwidth = 1.94 * kTera;
        a100.l2_cache_bytes = 40.0 * kMega;
        a100.peaks[{ExecutionUnit::CudaCore, Precision::FP64}] = 9.7 * kTera;
        a100.peaks[{ExecutionUnit::TensorCore, Precision::FP64}] = 19.5 * kTera;
        v.push_back(std::move(a100));

        HardwareSpec gh200;
        gh200.name = "GH200";
        gh200.memory_bandwidth = 4.00 * kTera;
        gh200.l2_cache_bytes = 50.0 * kMega;
        gh200.peaks[{ExecutionUnit::CudaCore, Precision::FP64}] = 34.0 * kTera;
        gh200.peaks[{ExecutionUnit::TensorCore, Precision::FP64}] = 67.0 * kTera;
        v.push_back(std::move(gh200));

        for (const auto& s : v) s.validate();
        return v;
    }();
    return specs;
}

const HardwareSpec& builtin_spec(std::string_view name) {
    for (const auto& s : builtin_specs()) {
        if (s.name == name) return s;
    }
    throw Error(ErrorKind::UnknownHardware, "no built-in spec named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Config parsing / serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

double require_positive_number(const json& j, const std::string& key) {
    if (!j.is_number()) {
        throw Error(ErrorKind::ParseError, "'" + key + "' must be a number");
    }
    return j.get<double>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end()) {
            throw Error(ErrorKind::ParseError, "unknown key '" + key + "' in " + where);
        }
    }
}

} // namespace

HardwareSpec load_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::ParseError, "spec document must be a JSON object");
    }
    reject_unknown_keys(doc, {"name", "memory_bandwidth_tbps", "l2_cache_mb", "peaks"},
                        "spec document");
    for (const char* key : {"name", "memory_bandwidth_tbps", "l2_cache_mb", "peaks"}) {
        if (!doc.contains(key)) {
            throw Error(ErrorKind::MissingField, std::string("'") + key + "' is required");
        }
    }
    if (!doc["name"].is_string()) {
        throw Error(ErrorKind::ParseError, "'name' must be a string");
    }
    if (!doc["peaks"].is_object()) {
        throw Error(ErrorKind::ParseError, "'peaks' must be a table");
    }

    HardwareSpec spec;
    spec.name = doc["name"].get<std::string>();
    spec.memory_bandwidth =
        require_positive_number(doc["memory_bandwidth_tbps"], "memory_bandwidth_tbps") * kTera;
    spec.l2_cache_bytes = require_positive_number(doc["l2_cache_mb"], "l2_cache_mb") * kMega;

    for (const auto& [prec_key, entries] : doc["peaks"].items()) {
        const auto precision = precision_from_string(prec_key);
        if (!precision) {
            throw Error(ErrorKind::ParseError, "unknown precision '" + prec_key + "' in peaks");
        }
        if (!entries.is_object()) {
            throw Error(ErrorKind::ParseError, "peaks." + prec_key + " must be a table");
        }
        reject_unknown_keys(entries, {"cuda_core_tflops", "tensor_core_tflops"},
                            "peaks." + prec_key);
        if (entries.contains("cuda_core_tflops")) {
            spec.peaks[{ExecutionUnit::CudaCore, *precision}] =
                require_positive_number(entries["cuda_core_tflops"],
                                        "peaks." + prec_key + ".cuda_core_tflops") * kTera;
        }
        if (entries.contains("tensor_core_tflops")) {
            spec.peaks[{ExecutionUnit::TensorCore, *precision}] =
                require_positive_number(entries["tensor_core_tflops"],
                                        "peaks." + prec_key + ".tensor_core_tflops") * kTera;
        }
    }

    spec.validate();
    return spec;
}

HardwareSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open spec file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_spec(buffer.str());
}

std::string serialize_spec(const HardwareSpec& spec) {
    json peaks = json::object();
    for (const auto& [key, value] : spec.peaks) {
        const std::string prec = lower(to_string(key.second));
        const char* field = key.first == ExecutionUnit::CudaCore ? "cuda_core_tflops"
                                                                 : "tensor_core_tflops";
        peaks[prec][field] = value / kTera;
    }
    json doc = {
        {"name", spec.name},
        {"memory_bandwidth_tbps", spec.memory_bandwidth / kTera},
        {"l2_cache_mb", spec.l2_cache_bytes / kMega},
        {"peaks", peaks},
    };
    return doc.dump(2) + "\n";
}

} // namespace rooflens
