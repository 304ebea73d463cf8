#pragma once

#include "lclab/poly.hpp"
#include "lclab/report.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lclab {

/// A partition: weakly decreasing positive parts.
using Partition = std::vector<unsigned>;
/// Sorted (descending) hook lengths of a partition, one per cell.
using HookMultiset = std::vector<unsigned>;

/// Streams the partitions of n in descending lexicographic order, from (n)
/// down to (1, ..., 1), in constant amortized time per partition. n = 0
/// yields the empty partition once.
///
///   PartitionStream s(5);
///   do { use(s.parts()); } while (s.next());
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n);

  std::span<const unsigned> parts() const { return {parts_.data(), count_}; }
  /// Advances to the next partition; false once the stream is exhausted.
  bool next();

 private:
  std::vector<unsigned> parts_;
  std::size_t count_ = 0;
  std::size_t last_big_ = 0;  // index of the last part > 1
};

/// Calls fn on every partition of n.
void for_each_partition(unsigned n, const std::function<void(std::span<const unsigned>)>& fn);

std::vector<Partition> partitions_of(unsigned n);

Partition conjugate(std::span<const unsigned> parts);

/// Hook of cell (i, j) is (lambda_i - j) + (lambda'_j - i) + 1.
HookMultiset hook_lengths(std::span<const unsigned> parts);

/// Q_n(x) = sum over partitions of n of prod over hooks h of (h^2 + x)/h^2.
/// jobs > 1 splits the partition stream round-robin across worker threads.
Poly nekrasov_okounkov_poly(unsigned n, unsigned jobs = 1);

/// For n <= n_max, compares Q_n(x) with P_n^{sigma,id}(x + 1).
CheckReport check_no_identity(unsigned n_max, unsigned jobs = 1);

}  // namespace lclab
