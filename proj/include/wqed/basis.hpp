// Copyright 2026 the wqed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "wqed/core.hpp"

namespace wqed {

using Occupation = std::vector<std::uint8_t>;

namespace detail {

struct OccupationHash {
  std::size_t operator()(const Occupation& occ) const noexcept {
    // FNV-1a over the site occupations.
    std::uint64_t h = 1469598103934665603ull;
    for (auto n : occ) {
      h ^= n;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Occupation-number basis of `n_sites` sites with local dimension
/// `local_dim`, truncated to total excitation number <= `max_excitation`.
/// States are ordered by total excitation, then lexicographically, so the
/// enumeration is identical across runs.  The all-ground state has index 0.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int local_dim, int max_excitation)
      : n_sites_(n_sites), local_dim_(local_dim), max_excitation_(max_excitation) {
    require(n_sites >= 1, "SectorBasis: n_sites must be >= 1");
    require(local_dim >= 2, "SectorBasis: local_dim must be >= 2");
    require(max_excitation >= 0 && max_excitation <= n_sites * (local_dim - 1),
            "SectorBasis: max_excitation out of bounds");
    Occupation occ(static_cast<std::size_t>(n_sites), 0);
    for (int total = 0; total <= max_excitation; ++total) {
      enumerate_sector(occ, 0, total);
    }
    index_.reserve(states_.size());
    for (std::size_t k = 0; k < states_.size(); ++k) {
      index_.emplace(states_[k], static_cast<int>(k));
    }
  }

  int n_sites() const { return n_sites_; }
  int local_dim() const { return local_dim_; }
  int max_excitation() const { return max_excitation_; }
  int dimension() const { return static_cast<int>(states_.size()); }

  const std::vector<Occupation>& states() const { return states_; }
  const Occupation& state(int k) const { return states_[static_cast<std::size_t>(k)]; }

  /// Ordinal of an occupation vector, or -1 if it lies outside the sector.
  int index_of(const Occupation& occ) const {
    auto it = index_.find(occ);
    return it == index_.end() ? -1 : it->second;
  }

  int total_excitation(int k) const {
    const auto& occ = state(k);
    return std::accumulate(occ.begin(), occ.end(), 0);
  }

  /// Number of basis states with total excitation == m.
  int sector_dimension(int m) const {
    int count = 0;
    for (const auto& occ : states_) {
      if (std::accumulate(occ.begin(), occ.end(), 0) == m) ++count;
    }
    return count;
  }

  /// Index range [first, last) of the total-excitation-m sector
  /// (contiguous by construction).
  std::pair<int, int> sector_range(int m) const {
    int first = -1, last = -1;
    for (int k = 0; k < dimension(); ++k) {
      if (total_excitation(k) == m) {
        if (first < 0) first = k;
        last = k + 1;
      }
    }
    if (first < 0) return {0, 0};
    return {first, last};
  }

 private:
  void enumerate_sector(Occupation& occ, int site, int remaining) {
    if (site == n_sites_) {
      if (remaining == 0) states_.push_back(occ);
      return;
    }
    const int max_here = std::min(remaining, local_dim_ - 1);
    for (int n = 0; n <= max_here; ++n) {
      occ[static_cast<std::size_t>(site)] = static_cast<std::uint8_t>(n);
      enumerate_sector(occ, site + 1, remaining - n);
    }
    occ[static_cast<std::size_t>(site)] = 0;
  }

  int n_sites_;
  int local_dim_;
  int max_excitation_;
  std::vector<Occupation> states_;
  std::unordered_map<Occupation, int, detail::OccupationHash> index_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

inline BasisPtr enumerate_basis(int n_sites, int local_dim, int max_excitation) {
  return std::make_shared<SectorBasis>(n_sites, local_dim, max_excitation);
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace wqed
