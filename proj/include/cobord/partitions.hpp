#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cobord {

using Partition = std::vector<int>;

/// Partitions of n as non-increasing tuples, in ascending lexicographic order:
/// (1,1,1) < (2,1) < (3). The empty partition is the only partition of 0.
std::vector<Partition> partitions(int n);

/// p(n); zero for negative n.
std::int64_t partition_count(int n);

/// Number of partitions of n into parts drawn from `parts`.
std::int64_t restricted_partition_count(int n, const std::vector<int>& parts);

/// "1,1,2": parts joined in ascending order.
std::string partition_key(const Partition& p);

/// Parses "2,1,1" in any order into a non-increasing partition.
Partition parse_partition(const std::string& text);

}  // namespace cobord
