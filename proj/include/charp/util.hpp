#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace charp {

enum class TriState { yes, no, unknown };

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// FNV-1a over bytes; stable across runs, used for report digests.
std::uint64_t fnv1a(const std::string& data);
std::string to_hex(std::uint64_t v);

// Worker cap: CHARP_LAB_THREADS if set, else hardware concurrency, clamped to [1, 16].
std::size_t thread_budget();

// Index-ordered parallel map; falls back to a serial loop when the budget is 1
// or n is small. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace charp
