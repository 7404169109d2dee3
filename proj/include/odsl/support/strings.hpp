#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace odsl::strings {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);

// Shortest decimal rendering that round-trips: 1.0 -> "1", 0.2 -> "0.2".
std::string number_to_string(double value);

// Levenshtein edit distance.
std::size_t edit_distance(std::string_view a, std::string_view b);

// FNV-1a, used for the offline embedder and cache keys. Stable across
// platforms, unlike std::hash.
std::uint64_t fnv1a64(std::string_view s);

std::string json_escape(std::string_view s);

}  // namespace odsl::strings
