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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wqed/hamiltonian.hpp"
#include "wqed/operators.hpp"

namespace wqed {

/// Bisection of the chain into the M storing qubits (set_a) and the rest.
struct Partition {
  std::vector<int> set_a;  // 1-based
  std::vector<int> set_b;

  static Partition first_m(int n, int m) {
    require(m >= 1 && m <= n, "Partition: need 1 <= M <= N");
    Partition p;
    for (int j = 1; j <= m; ++j) p.set_a.push_back(j);
    for (int j = m + 1; j <= n; ++j) p.set_b.push_back(j);
    return p;
  }

  static Partition of_sites(int n, std::vector<int> sites_a) {
    require(!sites_a.empty(), "Partition: set_a must be nonempty");
    std::sort(sites_a.begin(), sites_a.end());
    Partition p;
    p.set_a = std::move(sites_a);
    for (int j = 1; j <= n; ++j) {
      if (!std::binary_search(p.set_a.begin(), p.set_a.end(), j)) p.set_b.push_back(j);
    }
    require(p.set_a.size() + p.set_b.size() == static_cast<std::size_t>(n) &&
                p.set_a.front() >= 1 && p.set_a.back() <= n,
            "Partition: set_a must be distinct sites within the chain");
    return p;
  }

  int m() const { return static_cast<int>(set_a.size()); }
};

namespace detail {

inline std::vector<Complex> partition_weights(const std::vector<int>& sites, bool alternating) {
  const double norm = 1.0 / std::sqrt(static_cast<double>(sites.size()));
  std::vector<Complex> w(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double sign = (alternating && ((sites[i] - 1) % 2 == 1)) ? -1.0 : 1.0;
    w[i] = sign * norm;
  }
  return w;
}

}  // namespace detail

/// Collective raising operator of one partition block; with `alternating`
/// the weights pick up alternating signs along the chain (half-wavelength
/// mirror configuration).
inline OperatorMatrix partition_raising(const BasisPtr& basis, const std::vector<int>& sites,
                                        bool alternating = false) {
  return collective_lowering(basis, sites, detail::partition_weights(sites, alternating)).adjoint();
}

/// Symmetric M-excitation Dicke state: uniform superposition of all C(N,M)
/// singly-occupied configurations.
inline StateVector symmetric_state(int n, int m, const BasisPtr& basis) {
  require(m >= 1 && m <= n, "symmetric_state: need 1 <= M <= N");
  require(basis->n_sites() == n, "symmetric_state: basis size mismatch");
  require(basis->max_excitation() >= m, "symmetric_state: excitation cap below M");
  DenseVector amp = DenseVector::Zero(basis->dimension());
  int count = 0;
  for (int k = 0; k < basis->dimension(); ++k) {
    const auto& occ = basis->state(k);
    int total = 0;
    bool hardcore = true;
    for (auto nq : occ) {
      total += nq;
      if (nq > 1) hardcore = false;
    }
    if (total == m && hardcore) {
      amp(k) = 1.0;
      ++count;
    }
  }
  amp /= std::sqrt(static_cast<double>(count));
  return {basis, amp};
}

/// M-excitation dark state at mirror spacing for the given partition:
///   sqrt((N-2M+1)!(N-2M)! / ((N-M+1)!(N-M)!)) *
///   sum_k (-1)^k C(N-M-k, M-k) [sqrt(M) S1d]^(M-k) [sqrt(N-M) S2d]^k |G>.
/// `alternating` selects the half-wavelength sign convention.
inline StateVector dark_state(int n, int m, const Partition& partition, const BasisPtr& basis,
                              bool alternating = false) {
  require(2 * m <= n, "dark_state: no dark state for 2M > N");
  require(partition.m() == m, "dark_state: partition size must equal M");
  require(basis->n_sites() == n, "dark_state: basis size mismatch");
  require(basis->max_excitation() >= m, "dark_state: excitation cap below M");

  // sqrt of the factorial ratio, computed as a running product.
  double ratio = 1.0;
  for (int i = n - 2 * m + 2; i <= n - m + 1; ++i) ratio /= i;
  for (int i = n - 2 * m + 1; i <= n - m; ++i) ratio /= i;
  const double prefactor = std::sqrt(ratio);

  const OperatorMatrix s1d = partition_raising(basis, partition.set_a, alternating);
  const OperatorMatrix s2d = partition_raising(basis, partition.set_b, alternating);
  const double w1 = std::sqrt(static_cast<double>(m));
  const double w2 = std::sqrt(static_cast<double>(n - m));

  std::vector<PolynomialTerm> terms;
  for (int k = 0; k <= m; ++k) {
    PolynomialTerm term;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    term.coefficient = prefactor * sign * binomial(n - m - k, m - k) *
                       std::pow(w1, m - k) * std::pow(w2, k);
    for (int i = 0; i < m - k; ++i) term.factors.push_back(s1d);
    for (int i = 0; i < k; ++i) term.factors.push_back(s2d);
    terms.push_back(std::move(term));
  }
  auto [state, prenorm] = state_from_polynomial(basis, terms);
  (void)prenorm;  // the closed form is already normalized; tests assert prenorm == 1
  return state;
}

inline StateVector dark_state(int n, int m, const BasisPtr& basis) {
  return dark_state(n, m, Partition::first_m(n, m), basis);
}

/// Dark state for two coupling groups (set_a at gamma_1, set_b at gamma_2),
/// mirror spacing.  M = 1 matches the closed form; M = 2 solves the
/// collective null condition (its uniform limit is the Eq.-7-type state).
inline StateVector dark_state_nonuniform(int n, int m, double gamma_1, double gamma_2,
                                         const BasisPtr& basis) {
  require(gamma_1 > 0.0 && gamma_2 > 0.0, "dark_state_nonuniform: rates must be > 0");
  require(m == 1 || m == 2, "dark_state_nonuniform: only M = 1 or 2 supported");
  require(2 * m <= n, "dark_state_nonuniform: no dark state for 2M > N");
  const Partition partition = Partition::first_m(n, m);
  const OperatorMatrix s1d = partition_raising(basis, partition.set_a);
  const OperatorMatrix s2d = partition_raising(basis, partition.set_b);

  std::vector<PolynomialTerm> terms;
  if (m == 1) {
    const double norm = std::sqrt(gamma_1 + (n - 1) * gamma_2);
    terms.push_back({std::sqrt((n - 1) * gamma_2) / norm, {s1d}});
    terms.push_back({-std::sqrt(gamma_1) / norm, {s2d}});
  } else {
    // Null-space coefficients of the two-group collective decay operator.
    const double a = std::sqrt(gamma_2 / gamma_1);
    const double c = -std::sqrt(2.0) / std::sqrt(static_cast<double>(n - 2));
    const double b = std::sqrt(gamma_1 / gamma_2) / (n - 3);
    terms.push_back({a, {s1d, s1d}});
    terms.push_back({c, {s1d, s2d}});
    terms.push_back({b, {s2d, s2d}});
  }
  return state_from_polynomial(basis, terms).first.normalized();
}

/// Two-excitation collective states of N bosonic (transmon) emitters:
/// the fully symmetric state and the dark state built as the square of the
/// single-excitation dark mode.  Requires local_dim >= 3 and cap >= 2.
inline std::pair<StateVector, StateVector> transmon_dark_states(int n, const BasisPtr& basis) {
  require(basis->local_dim() >= 3,
          "transmon_dark_states: basis must have local_dim >= 3");
  require(basis->max_excitation() >= 2, "transmon_dark_states: excitation cap below 2");
  require(basis->n_sites() == n && n >= 2, "transmon_dark_states: need N >= 2 sites");

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const OperatorMatrix a_total_d =
      collective_lowering(basis, all, std::vector<Complex>(all.size(), Complex(1.0))).adjoint();
  const OperatorMatrix a1d = site_raising(basis, 1);
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) rest[static_cast<std::size_t>(i)] = i + 2;
  const OperatorMatrix s2d = symmetric_lowering(basis, rest).adjoint();

  const StateVector phi_s = state_from_polynomial(basis, {{1.0, {a_total_d, a_total_d}}}).first;
  const OperatorMatrix dark_mode =
      a1d.scaled(std::sqrt(static_cast<double>(n - 1))) - s2d;
  const StateVector phi_d = state_from_polynomial(basis, {{1.0, {dark_mode, dark_mode}}}).first;
  return {phi_s, phi_d};
}

/// Per-site excited-state population of a pure state.
inline std::vector<double> population_profile(const StateVector& state) {
  const auto& basis = *state.basis;
  std::vector<double> pop(static_cast<std::size_t>(basis.n_sites()), 0.0);
  for (int k = 0; k < basis.dimension(); ++k) {
    const double w = std::norm(state.amplitudes(k));
    if (w == 0.0) continue;
    const auto& occ = basis.state(k);
    for (int j = 0; j < basis.n_sites(); ++j) {
      pop[static_cast<std::size_t>(j)] += w * occ[static_cast<std::size_t>(j)];
    }
  }
  return pop;
}

/// Closed-form scalar prediction, for cross-checking numerically built states.
struct AnalyticPrediction {
  std::string name;
  double value;
  std::string description;
};

/// Closed-form values for chain size N and excitation number M.  When the
/// two coupling rates are given, the non-uniform-coupling values are
/// included as well.
inline std::vector<AnalyticPrediction> analytic_predictions(int n, int m, double gamma_1 = 0.0,
                                                            double gamma_2 = 0.0) {
  require(2 * m <= n, "analytic_predictions: no dark state for 2M > N");
  std::vector<AnalyticPrediction> out;
  const double frac = static_cast<double>(n - 2 * m + 1) / (n - 2 * m + 2);
  out.push_back({"population_fraction_per_excitation", frac,
                 "excited population in set_a divided by M"});
  out.push_back({"set_a_population", m * frac,
                 "total excited population stored in set_a (used by checks)"});
  out.push_back({"dark_degeneracy", binomial(n, m) - binomial(n, m - 1),
                 "number of zero-decay states in the M-excitation sector"});
  out.push_back({"symmetric_decay_rate", static_cast<double>(m) * (n - m + 1),
                 "decay rate of the symmetric Dicke state, units gamma_1d"});
  if (m >= 1) {
    out.push_back({"intermediate_bright_rate", static_cast<double>(m - 1) * (n - m),
                   "decay rate of the (N/2-1)-spin bright manifold, units gamma_1d"});
  }
  out.push_back({"ground_to_symmetric_overlap", std::sqrt(1.0 / n),
                 "single-site drive matrix element to the bright state, per Omega"});
  out.push_back({"ground_to_dark_overlap", std::sqrt(1.0 - 1.0 / n),
                 "single-site drive matrix element to the dark state, per Omega"});
  if (n >= 4) {
    out.push_back({"dark_ladder_drive_strength",
                   std::sqrt(static_cast<double>(n - 3) / n) *
                       (1.0 + 1.0 / std::sqrt(static_cast<double>(n - 1) * (n - 2))),
                   "second-site drive element between the one- and two-excitation dark states"});
  }
  out.push_back({"dark_state_mutual_overlap", 1.0 / (n - 1),
                 "overlap of single-excitation dark states anchored at opposite ends"});
  out.push_back({"transmon_first_site_population", 2.0 * (n - 1) / n,
                 "mean occupation of the first transmon in the bosonic dark state"});
  if (gamma_1 > 0.0 && gamma_2 > 0.0) {
    out.push_back({"nonuniform_first_qubit_population",
                   (n - 1) * gamma_2 / (gamma_1 + (n - 1) * gamma_2),
                   "first-qubit population of the two-rate single-excitation dark state"});
  }
  return out;
}

}  // namespace wqed
