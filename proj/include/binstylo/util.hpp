#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace binstylo {

// Shortest round-trip decimal form of a double. Used everywhere a float is
// written to a text artifact so that reruns are byte-identical.
std::string format_double(double v);

// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 1469598103934665603ull);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Runs fn(i) for i in [0, n) on up to `jobs` threads, statically chunked.
// Workers may only write to per-index slots, so the result is independent
// of the job count.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

int default_jobs();

std::vector<std::string> split_ws(std::string_view text);

} // namespace binstylo
