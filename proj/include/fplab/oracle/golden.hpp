#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fplab::oracle {

/// A constant produced by an exhaustive oracle and kept under version control.
struct GoldenEntry {
  std::string name;
  std::int64_t value = 0;
  std::string oracle;
  std::string params;
};

/// Recomputes every golden value from the brute-force oracles, sorted by name.
std::vector<GoldenEntry> compute_goldens();

/// Throws Error(InvalidArgument) on unreadable or malformed files.
std::vector<GoldenEntry> read_golden_file(const std::string& path);
void write_golden_file(const std::string& path, const std::vector<GoldenEntry>& entries);

/// Human-readable differences (missing, extra, changed entries); empty when equal.
std::vector<std::string> diff_goldens(const std::vector<GoldenEntry>& computed,
                                      const std::vector<GoldenEntry>& stored);

/// Looks up a stored value by name; throws InvalidArgument when absent.
std::int64_t golden_value(const std::vector<GoldenEntry>& entries, const std::string& name);

}  // namespace fplab::oracle
