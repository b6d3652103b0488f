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

#include <cmath>
#include <utility>
#include <vector>

#include "wqed/basis.hpp"
#include "wqed/core.hpp"

namespace wqed {

/// Complex linear map on a SectorBasis, kept sparse; densify on demand.
struct OperatorMatrix {
  BasisPtr basis;
  SparseCMatrix mat;

  OperatorMatrix() = default;
  OperatorMatrix(BasisPtr b, SparseCMatrix m) : basis(std::move(b)), mat(std::move(m)) {}

  DenseMatrix dense() const { return DenseMatrix(mat); }

  OperatorMatrix adjoint() const {
    return {basis, SparseCMatrix(mat.adjoint())};
  }

  OperatorMatrix operator*(const OperatorMatrix& rhs) const {
    return {basis, SparseCMatrix(mat * rhs.mat)};
  }

  OperatorMatrix operator+(const OperatorMatrix& rhs) const {
    return {basis, SparseCMatrix(mat + rhs.mat)};
  }

  OperatorMatrix operator-(const OperatorMatrix& rhs) const {
    return {basis, SparseCMatrix(mat - rhs.mat)};
  }

  OperatorMatrix scaled(Complex c) const { return {basis, SparseCMatrix(c * mat)}; }
};

/// Complex amplitude per basis state.
struct StateVector {
  BasisPtr basis;
  DenseVector amplitudes;

  double norm() const { return amplitudes.norm(); }

  StateVector normalized() const {
    const double n = norm();
    require(n > 0.0, "StateVector: cannot normalize the zero vector");
    StateVector out{basis, amplitudes / n};
    return out;
  }
};

inline void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  require(a && b && a->n_sites() == b->n_sites() && a->local_dim() == b->local_dim() &&
              a->max_excitation() == b->max_excitation(),
          "operands live on different bases");
}

inline StateVector apply(const OperatorMatrix& op, const StateVector& psi) {
  require_same_basis(op.basis, psi.basis);
  return {psi.basis, op.mat * psi.amplitudes};
}

inline Complex inner(const StateVector& a, const StateVector& b) {
  return a.amplitudes.dot(b.amplitudes);
}

inline StateVector ground_state(const BasisPtr& basis) {
  DenseVector amp = DenseVector::Zero(basis->dimension());
  amp(0) = 1.0;
  return {basis, amp};
}

inline StateVector basis_state(const BasisPtr& basis, const Occupation& occ) {
  const int k = basis->index_of(occ);
  require(k >= 0, "basis_state: occupation vector outside the sector");
  DenseVector amp = DenseVector::Zero(basis->dimension());
  amp(k) = 1.0;
  return {basis, amp};
}

/// Lowering operator at `site` (1-based).  Matrix element sqrt(n_site)
/// between a state and its one-quantum-removed partner; reduces to the
/// qubit sigma operator for local_dim = 2.
inline OperatorMatrix site_lowering(const BasisPtr& basis, int site) {
  require(site >= 1 && site <= basis->n_sites(), "site_lowering: site out of range");
  const int j = site - 1;
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < basis->dimension(); ++k) {
    const auto& occ = basis->state(k);
    const int n = occ[static_cast<std::size_t>(j)];
    if (n == 0) continue;
    Occupation target = occ;
    target[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(n - 1);
    const int row = basis->index_of(target);
    // Lowering never leaves the sector: the target always exists.
    trips.emplace_back(row, k, std::sqrt(static_cast<double>(n)));
  }
  SparseCMatrix m(basis->dimension(), basis->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return {basis, std::move(m)};
}

/// Raising operator at `site`: adjoint of the lowering operator.  Targets
/// above the excitation cap are projected out by the sector truncation.
inline OperatorMatrix site_raising(const BasisPtr& basis, int site) {
  return site_lowering(basis, site).adjoint();
}

/// Number operator at `site` (diagonal).
inline OperatorMatrix number_operator(const BasisPtr& basis, int site) {
  require(site >= 1 && site <= basis->n_sites(), "number_operator: site out of range");
  const int j = site - 1;
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < basis->dimension(); ++k) {
    const int n = basis->state(k)[static_cast<std::size_t>(j)];
    if (n > 0) trips.emplace_back(k, k, static_cast<double>(n));
  }
  SparseCMatrix m(basis->dimension(), basis->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return {basis, std::move(m)};
}

/// Diagonal operator summing the number operators of `sites` (1-based).
inline OperatorMatrix number_operator_on(const BasisPtr& basis, const std::vector<int>& sites) {
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < basis->dimension(); ++k) {
    double total = 0.0;
    for (int site : sites) {
      require(site >= 1 && site <= basis->n_sites(), "number_operator_on: site out of range");
      total += basis->state(k)[static_cast<std::size_t>(site - 1)];
    }
    if (total != 0.0) trips.emplace_back(k, k, total);
  }
  SparseCMatrix m(basis->dimension(), basis->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return {basis, std::move(m)};
}

inline OperatorMatrix total_number_operator(const BasisPtr& basis) {
  std::vector<int> all(static_cast<std::size_t>(basis->n_sites()));
  for (int i = 0; i < basis->n_sites(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return number_operator_on(basis, all);
}

/// Weighted sum of site lowering operators, sum_j w_j sigma_j.
inline OperatorMatrix collective_lowering(const BasisPtr& basis, const std::vector<int>& sites,
                                          const std::vector<Complex>& weights) {
  require(!sites.empty(), "collective_lowering: empty site set");
  require(sites.size() == weights.size(), "collective_lowering: sites/weights size mismatch");
  for (const auto& w : weights) {
    require(std::isfinite(w.real()) && std::isfinite(w.imag()),
            "collective_lowering: weights must be finite");
  }
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < basis->dimension(); ++k) {
    const auto& occ = basis->state(k);
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const int site = sites[s];
      require(site >= 1 && site <= basis->n_sites(), "collective_lowering: site out of range");
      const int n = occ[static_cast<std::size_t>(site - 1)];
      if (n == 0) continue;
      Occupation target = occ;
      target[static_cast<std::size_t>(site - 1)] = static_cast<std::uint8_t>(n - 1);
      trips.emplace_back(basis->index_of(target), k,
                         weights[s] * std::sqrt(static_cast<double>(n)));
    }
  }
  SparseCMatrix m(basis->dimension(), basis->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return {basis, std::move(m)};
}

/// Uniform-weight collective lowering over `sites`, weights 1/sqrt(K).
inline OperatorMatrix symmetric_lowering(const BasisPtr& basis, const std::vector<int>& sites) {
  const double w = 1.0 / std::sqrt(static_cast<double>(sites.size()));
  return collective_lowering(basis, sites, std::vector<Complex>(sites.size(), Complex(w)));
}

/// One term of a creation-operator polynomial: coefficient times an ordered
/// product of raising-type operators applied right to left.
struct PolynomialTerm {
  Complex coefficient;
  std::vector<OperatorMatrix> factors;
};

/// Applies sum_k c_k prod(factors_k) to the ground state and normalizes.
/// Returns the state and the pre-normalization norm.
inline std::pair<StateVector, double> state_from_polynomial(const BasisPtr& basis,
                                                            const std::vector<PolynomialTerm>& terms) {
  DenseVector acc = DenseVector::Zero(basis->dimension());
  for (const auto& term : terms) {
    DenseVector v = ground_state(basis).amplitudes;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      require_same_basis(it->basis, basis);
      v = it->mat * v;
    }
    acc += term.coefficient * v;
  }
  const double prenorm = acc.norm();
  if (prenorm <= 1e-14) {
    throw ValidationError("state_from_polynomial: polynomial annihilates the ground state");
  }
  return {StateVector{basis, acc / prenorm}, prenorm};
}

}  // namespace wqed
