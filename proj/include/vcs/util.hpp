#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcs {

/// File and parse failures; the CLI maps this to its I/O exit code.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed matrices that do not satisfy the scheme conditions.
struct SchemeError : std::runtime_error {
  explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
};

std::uint64_t fnv1a64(const std::string& data);
std::string to_hex(std::uint64_t value);

/// Worker count: VCS_THREADS env override, else hardware concurrency.
int default_thread_count();

/// Runs fn(i) for i in [0, count). Work items must be independent; output is
/// deterministic regardless of the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Calls fn once per k-subset of {0..n-1}, in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace vcs
