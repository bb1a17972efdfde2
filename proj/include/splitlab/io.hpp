#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splitlab/meanfield.hpp"
#include "splitlab/scanner.hpp"
#include "splitlab/split.hpp"

namespace splitlab {

// Shortest decimal form that round-trips the value ("inf"/"nan" as words).
std::string format_double(double v);

// Seed flag syntax: decimal or 0x-prefixed hex. Throws std::invalid_argument
// on anything else (including overflow).
std::uint64_t parse_seed(const std::string& s);

// Writes via a temp file in the target directory plus rename, so an
// interrupted process never leaves a truncated file at the final path.
// Throws std::runtime_error on I/O failure.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// CSV renderings of the result types, headers included.
std::string trajectory_csv(const ModelTrajectory& t);
std::string split_trace_csv(const std::vector<TracePoint>& trace);
std::string scan_csv(const std::vector<ScanEntry>& entries, const ModelParams& p);

}  // namespace splitlab
