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

#include <catch2/catch_amalgamated.hpp>

#include "wqed/basis.hpp"
#include "wqed/operators.hpp"

using namespace wqed;

TEST_CASE("basis dimensions match binomial counts") {
  CHECK(enumerate_basis(2, 2, 2)->dimension() == 4);
  CHECK(enumerate_basis(8, 2, 2)->dimension() == 37);
  CHECK(enumerate_basis(16, 2, 3)->dimension() == 697);
}

TEST_CASE("basis rejects invalid bounds") {
  CHECK_THROWS_AS(enumerate_basis(0, 2, 1), ValidationError);
  CHECK_THROWS_AS(enumerate_basis(4, 1, 1), ValidationError);
  CHECK_THROWS_AS(enumerate_basis(4, 2, 5), ValidationError);
  CHECK_THROWS_AS(enumerate_basis(4, 2, -1), ValidationError);
}

TEST_CASE("basis ordering is deterministic and index round-trips") {
  auto a = enumerate_basis(5, 3, 4);
  auto b = enumerate_basis(5, 3, 4);
  REQUIRE(a->dimension() == b->dimension());
  for (int k = 0; k < a->dimension(); ++k) {
    CHECK(a->state(k) == b->state(k));
    CHECK(a->index_of(a->state(k)) == k);
  }
  // Sorted by total excitation, then lexicographically.
  for (int k = 1; k < a->dimension(); ++k) {
    const int t_prev = a->total_excitation(k - 1);
    const int t_here = a->total_excitation(k);
    CHECK(t_prev <= t_here);
    if (t_prev == t_here) CHECK(a->state(k - 1) < a->state(k));
  }
}

TEST_CASE("basis states are unique") {
  auto basis = enumerate_basis(6, 2, 3);
  for (int k = 0; k < basis->dimension(); ++k) {
    for (int l = k + 1; l < basis->dimension(); ++l) {
      REQUIRE(basis->state(k) != basis->state(l));
    }
  }
}

TEST_CASE("site lowering on a single qubit") {
  auto basis = enumerate_basis(1, 2, 1);
  auto sigma = site_lowering(basis, 1);
  auto e = basis_state(basis, {1});
  auto g = basis_state(basis, {0});
  CHECK((apply(sigma, e).amplitudes - g.amplitudes).norm() == 0.0);
  CHECK(apply(sigma, g).norm() == 0.0);
}

TEST_CASE("site lowering carries bosonic matrix elements") {
  auto basis = enumerate_basis(1, 3, 2);
  auto a = site_lowering(basis, 1);
  auto two = basis_state(basis, {2});
  auto one = basis_state(basis, {1});
  auto lowered = apply(a, two);
  CHECK_THAT(lowered.norm(), Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-15));
  CHECK_THAT(std::abs(inner(one, lowered)), Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-15));
}

TEST_CASE("number operator counts excitation at a site") {
  auto basis = enumerate_basis(3, 2, 2);
  auto e12 = basis_state(basis, {1, 1, 0});
  auto n1 = number_operator(basis, 1);
  CHECK_THAT(inner(e12, apply(n1, e12)).real(), Catch::Matchers::WithinAbs(1.0, 1e-15));
}

TEST_CASE("operators reject out-of-range sites") {
  auto basis = enumerate_basis(3, 2, 2);
  CHECK_THROWS_AS(site_lowering(basis, 0), ValidationError);
  CHECK_THROWS_AS(site_lowering(basis, 4), ValidationError);
  CHECK_THROWS_AS(collective_lowering(basis, {}, {}), ValidationError);
}

TEST_CASE("hardcore constraint: qubit lowering squares to zero") {
  auto basis = enumerate_basis(4, 2, 3);
  for (int site = 1; site <= 4; ++site) {
    auto s = site_lowering(basis, site);
    CHECK(SparseCMatrix(s.mat * s.mat).norm() == 0.0);
  }
}

TEST_CASE("lowering operators at distinct sites commute") {
  auto basis = enumerate_basis(4, 3, 3);
  auto s1 = site_lowering(basis, 1);
  auto s3 = site_lowering(basis, 3);
  SparseCMatrix comm = SparseCMatrix(s1.mat * s3.mat) - SparseCMatrix(s3.mat * s1.mat);
  CHECK(comm.norm() == 0.0);
}

TEST_CASE("bosonic collective mode satisfies [S, S^dag] = 1 away from truncation") {
  const int n = 3, local_dim = 4, cap = 4;
  auto basis = enumerate_basis(n, local_dim, cap);
  auto s = symmetric_lowering(basis, {1, 2, 3});
  DenseMatrix comm = (s.mat * s.adjoint().mat - s.adjoint().mat * s.mat).toDense();
  for (int k = 0; k < basis->dimension(); ++k) {
    const auto& occ = basis->state(k);
    const int total = basis->total_excitation(k);
    bool below = total < cap;
    for (auto nq : occ) below = below && (nq < local_dim - 2);
    if (!below) continue;
    DenseVector v = DenseVector::Zero(basis->dimension());
    v(k) = 1.0;
    CHECK((comm * v - v).norm() < 1e-13);
  }
}

TEST_CASE("collective lowering acts symmetrically on two qubits") {
  auto basis = enumerate_basis(2, 2, 2);
  auto s = symmetric_lowering(basis, {1, 2});
  auto ee = basis_state(basis, {1, 1});
  auto sym = apply(s, ee);
  auto expected = (basis_state(basis, {0, 1}).amplitudes + basis_state(basis, {1, 0}).amplitudes) /
                  std::sqrt(2.0);
  CHECK((sym.amplitudes - expected).norm() < 1e-15);
}

TEST_CASE("uniform collective operators resolve the ground state") {
  auto basis = enumerate_basis(6, 2, 2);
  auto s2 = symmetric_lowering(basis, {3, 4, 5, 6});
  auto g = ground_state(basis);
  auto back = apply(s2, apply(s2.adjoint(), g));
  CHECK((back.amplitudes - g.amplitudes).norm() < 1e-14);
}

TEST_CASE("alternating weights annihilate the symmetric one-excitation state") {
  auto basis = enumerate_basis(2, 2, 1);
  auto alt = collective_lowering(basis, {1, 2},
                                 {Complex(1.0 / std::sqrt(2.0)), Complex(-1.0 / std::sqrt(2.0))});
  DenseVector sym = (basis_state(basis, {1, 0}).amplitudes + basis_state(basis, {0, 1}).amplitudes) /
                    std::sqrt(2.0);
  CHECK((alt.mat * sym).norm() < 1e-15);
}

TEST_CASE("state polynomials build excited states") {
  auto basis = enumerate_basis(3, 2, 2);
  auto s1d = site_raising(basis, 1);
  auto [e1, prenorm] = state_from_polynomial(basis, {{1.0, {s1d}}});
  CHECK_THAT(prenorm, Catch::Matchers::WithinAbs(1.0, 1e-14));
  CHECK_THAT(std::abs(inner(e1, basis_state(basis, {1, 0, 0}))),
             Catch::Matchers::WithinAbs(1.0, 1e-14));
}

TEST_CASE("squared two-site collective raising gives the doubly excited pair") {
  auto basis = enumerate_basis(2, 2, 2);
  auto s1d = symmetric_lowering(basis, {1, 2}).adjoint();
  auto [state, prenorm] = state_from_polynomial(basis, {{1.0, {s1d, s1d}}});
  CHECK_THAT(prenorm, Catch::Matchers::WithinAbs(1.0, 1e-14));
  CHECK_THAT(std::abs(inner(state, basis_state(basis, {1, 1}))),
             Catch::Matchers::WithinAbs(1.0, 1e-14));
}

TEST_CASE("degenerate polynomials are rejected") {
  auto basis = enumerate_basis(2, 2, 2);
  auto s1d = site_raising(basis, 1);
  CHECK_THROWS_AS(state_from_polynomial(basis, {{1.0, {s1d}}, {-1.0, {s1d}}}), ValidationError);
}
