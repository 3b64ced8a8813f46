#include "rooflens/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <vector>

namespace rooflens {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

// Next line that carries data: comments (%) and blank lines skipped.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '%' || is_blank(line)) continue;
        return true;
    }
    return false;
}

std::uint64_t parse_index(std::string_view token, std::uint64_t limit, const char* axis,
                          std::uint64_t entry_no) {
    errno = 0;
    char* end = nullptr;
    const std::string buf(token);
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE) {
        throw Error(ErrorKind::MalformedEntry,
                    "entry " + std::to_string(entry_no) + ": bad " + axis + " index '" +
                        buf + "'");
    }
    if (v < 1 || static_cast<std::uint64_t>(v) > limit) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "entry " + std::to_string(entry_no) + ": " + axis + " index " +
                        std::to_string(v) + " outside [1, " + std::to_string(limit) + "]");
    }
    return static_cast<std::uint64_t>(v);
}

void parse_value(std::string_view token, std::uint64_t entry_no) {
    errno = 0;
    char* end = nullptr;
    const std::string buf(token);
    (void)std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) {
        throw Error(ErrorKind::MalformedEntry,
                    "entry " + std::to_string(entry_no) + ": bad value '" + buf + "'");
    }
}

std::uint64_t parse_count(std::string_view token, const char* what) {
    errno = 0;
    char* end = nullptr;
    const std::string buf(token);
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE || v < 0) {
        throw Error(ErrorKind::MalformedEntry,
                    std::string("bad ") + what + " '" + buf + "' in size line");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

MatrixMarketHeader parse_banner(const std::string& line) {
    const auto tokens = split_ws(line);
    if (tokens.size() < 5 || lower(tokens[0]) != "%%matrixmarket") {
        throw Error(ErrorKind::BadBanner, "expected '%%MatrixMarket object format field symmetry'");
    }

    MatrixMarketHeader h;
    const std::string object = lower(tokens[1]);
    if (object != "matrix") {
        throw Error(ErrorKind::BadBanner, "unsupported object '" + object + "'");
    }

    const std::string format = lower(tokens[2]);
    if (format == "coordinate") h.format = MatrixMarketHeader::Format::Coordinate;
    else if (format == "array") h.format = MatrixMarketHeader::Format::Array;
    else throw Error(ErrorKind::BadBanner, "unknown format '" + format + "'");

    const std::string field = lower(tokens[3]);
    if (field == "real") h.field = MatrixMarketHeader::Field::Real;
    else if (field == "integer") h.field = MatrixMarketHeader::Field::Integer;
    else if (field == "pattern") h.field = MatrixMarketHeader::Field::Pattern;
    else if (field == "complex") h.field = MatrixMarketHeader::Field::Complex;
    else throw Error(ErrorKind::BadBanner, "unknown field '" + field + "'");

    const std::string symmetry = lower(tokens[4]);
    if (symmetry == "general") h.symmetry = MatrixMarketHeader::Symmetry::General;
    else if (symmetry == "symmetric") h.symmetry = MatrixMarketHeader::Symmetry::Symmetric;
    else if (symmetry == "skew-symmetric") h.symmetry = MatrixMarketHeader::Symmetry::SkewSymmetric;
    else if (symmetry == "hermitian") h.symmetry = MatrixMarketHeader::Symmetry::Hermitian;
    else throw Error(ErrorKind::BadBanner, "unknown symmetry '" + symmetry + "'");

    return h;
}

SparseMatrixStats parse_stats(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::BadBanner, "empty stream");
    }
    const MatrixMarketHeader header = parse_banner(line);
    if (header.format == MatrixMarketHeader::Format::Array) {
        throw Error(ErrorKind::UnsupportedFormat, "array format carries no nnz; coordinate only");
    }

    if (!next_data_line(in, line)) {
        throw Error(ErrorKind::TruncatedFile, "missing size line");
    }
    const auto size_tokens = split_ws(line);
    if (size_tokens.size() != 3) {
        throw Error(ErrorKind::MalformedEntry, "size line must be 'rows cols nnz'");
    }
    const std::uint64_t rows = parse_count(size_tokens[0], "row count");
    const std::uint64_t cols = parse_count(size_tokens[1], "column count");
    const std::uint64_t declared = parse_count(size_tokens[2], "entry count");

    std::size_t expected_tokens = 3;
    if (header.field == MatrixMarketHeader::Field::Pattern) expected_tokens = 2;
    if (header.field == MatrixMarketHeader::Field::Complex) expected_tokens = 4;
    const bool expanded = header.symmetry != MatrixMarketHeader::Symmetry::General;
    const bool skew = header.symmetry == MatrixMarketHeader::Symmetry::SkewSymmetric;

    std::uint64_t nnz = 0;
    for (std::uint64_t e = 1; e <= declared; ++e) {
        if (!next_data_line(in, line)) {
            throw Error(ErrorKind::TruncatedFile,
                        "declared " + std::to_string(declared) + " entries, found " +
                            std::to_string(e - 1));
        }
        const auto tokens = split_ws(line);
        if (tokens.size() != expected_tokens) {
            throw Error(ErrorKind::MalformedEntry,
                        "entry " + std::to_string(e) + ": expected " +
                            std::to_string(expected_tokens) + " tokens, got " +
                            std::to_string(tokens.size()));
        }
        const std::uint64_t i = parse_index(tokens[0], rows, "row", e);
        const std::uint64_t j = parse_index(tokens[1], cols, "column", e);
        for (std::size_t v = 2; v < expected_tokens; ++v) parse_value(tokens[v], e);

        if (!expanded) {
            nnz += 1;
        } else if (i == j) {
            if (skew) {
                throw Error(ErrorKind::MalformedEntry,
                            "entry " + std::to_string(e) +
                                ": skew-symmetric matrices have zero diagonal");
            }
            nnz += 1;
        } else {
            nnz += 2;   // the stored entry and its mirror
        }
    }

    if (next_data_line(in, line)) {
        throw Error(ErrorKind::MalformedEntry, "more entries than the declared " +
                                                   std::to_string(declared));
    }

    SparseMatrixStats stats{rows, cols, nnz};
    stats.validate();
    return stats;
}

SparseMatrixStats parse_stats_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    }
    return parse_stats(in);
}

MatrixAnalysis stats_to_report(const SparseMatrixStats& stats, const HardwareSpec& spec,
                               Precision precision) {
    MatrixAnalysis a;
    a.stats = stats;
    a.kernel = spmv_csr_model(stats, kDefaultIndexBytes, precision);
    const double balance = machine_balance(spec, ExecutionUnit::CudaCore, precision);
    a.boundedness = classify(a.kernel.intensity(), balance);
    a.kernel_ceiling =
        kernel_speedup_ceiling(tensor_alpha(spec, precision), balance, a.kernel.intensity());
    a.workload_ceiling = workload_ceiling(a.kernel.intensity(), balance);
    a.csr_bytes = a.kernel.traffic_bytes;
    a.fits_in_l2 = static_cast<double>(a.csr_bytes) <= spec.l2_cache_bytes;
    return a;
}

} // namespace rooflens
