// Copyright 2026 The oBAKE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OBAKE_PARAMS_HPP
#define OBAKE_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace obake {

/// Shared protocol parameter set. Both roles must agree on every field;
/// none of it is negotiated on the wire.
///
/// Feature-vector components live in Z_{2^k} with k = component_bits.
/// Each dimension i is partitioned into cells of width w_i = 2 * thresholds[i];
/// thresholds must be powers of two below 2^(k-1) so that w_i divides 2^k and
/// the partition stays uniform under modular wrap.
struct ProtocolParams {
  std::uint32_t dim = 0;                 ///< vector dimension d (>= 1)
  std::uint32_t component_bits = 0;      ///< k, one of {8, 16, 32}
  std::vector<std::uint32_t> thresholds; ///< per-dimension threshold t_i

  std::uint32_t nonce_len_global = 0;    ///< bytes of the global nonce, d*k/8
  std::uint32_t nonce_len_blind = 0;     ///< bytes of the blinding nonce, d*k/8
  std::uint32_t verifier_len = 16;       ///< truncated MAC length for verifiers
  std::uint32_t tag_len = 32;            ///< MAC length for the confirmation tag
  std::uint32_t key_len = 32;            ///< derived key length
  std::uint32_t max_rounds = 16;         ///< availability bound on the query loop
  std::uint32_t max_queries_per_round = 8;

  /// Builds a parameter set with the given geometry and default lengths,
  /// validating every invariant. Throws ParameterError on violation.
  static ProtocolParams make(std::uint32_t dim, std::uint32_t component_bits,
                             std::vector<std::uint32_t> thresholds);

  /// Same, with one threshold applied to every dimension.
  static ProtocolParams make(std::uint32_t dim, std::uint32_t component_bits,
                             std::uint32_t uniform_threshold);

  /// Throws ParameterError unless every invariant holds.
  void validate() const;

  std::uint32_t component_bytes() const { return component_bits / 8; }
  std::uint32_t component_mask() const;

  /// Cell width w_i = 2 * t_i.
  std::uint32_t cell_width(std::size_t i) const { return 2 * thresholds[i]; }

  /// Number of cells along dimension i: 2^k / w_i.
  std::uint64_t cell_count(std::size_t i) const;

  bool operator==(const ProtocolParams&) const = default;
};

}  // namespace obake

#endif  // OBAKE_PARAMS_HPP
