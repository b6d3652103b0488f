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
#include <vector>

#include "wqed/core.hpp"

namespace wqed {

/// Physical description of the qubit chain.  All rates are expressed in
/// units of the first qubit's waveguide decay rate, distances in units of
/// the guided-mode wavelength and times in inverse rate units.
struct ChainGeometry {
  std::vector<double> positions;   // x_m in wavelength units
  std::vector<double> gamma_1d;    // per-qubit waveguide decay rate
  std::vector<double> detunings;   // per-qubit static detuning from omega_0
  double gamma_nr = 0.0;           // non-radiative decay
  double gamma_dep = 0.0;          // pure dephasing
  double anharmonicity = 0.0;      // on-site interaction U (0 for qubits)

  int n_sites() const { return static_cast<int>(positions.size()); }

  void validate() const {
    require(!positions.empty(), "geometry: at least one qubit required");
    require(gamma_1d.size() == positions.size(), "geometry: gamma_1d size mismatch");
    require(detunings.size() == positions.size(), "geometry: detunings size mismatch");
    for (double x : positions) require(std::isfinite(x), "geometry: positions must be finite");
    for (double g : gamma_1d) require(g >= 0.0, "geometry: gamma_1d must be >= 0");
    require(gamma_nr >= 0.0, "geometry: gamma_nr must be >= 0");
    require(gamma_dep >= 0.0, "geometry: gamma_dep must be >= 0");
  }
};

/// Regular chain of N qubits with lattice constant `spacing` (wavelengths)
/// and uniform coupling `gamma`.
inline ChainGeometry regular_chain(int n, double spacing, double gamma = 1.0) {
  require(n >= 1, "regular_chain: n must be >= 1");
  ChainGeometry g;
  g.positions.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) g.positions[static_cast<std::size_t>(m)] = m * spacing;
  g.gamma_1d.assign(static_cast<std::size_t>(n), gamma);
  g.detunings.assign(static_cast<std::size_t>(n), 0.0);
  return g;
}

/// sin/cos of 2*pi*u with exact values at quarter-integer u, so mirror
/// configurations carry no floating-point phase noise.
inline std::pair<double, double> sincos_2pi(double u) {
  const double q = 4.0 * u;
  const double qr = std::round(q);
  if (std::abs(q - qr) < 1e-12) {
    const int r = static_cast<int>(std::llround(qr)) & 3;
    const int rr = r < 0 ? r + 4 : r;
    static constexpr double sin_table[4] = {0.0, 1.0, 0.0, -1.0};
    static constexpr double cos_table[4] = {1.0, 0.0, -1.0, 0.0};
    return {sin_table[rr], cos_table[rr]};
  }
  return {std::sin(2.0 * pi * u), std::cos(2.0 * pi * u)};
}

/// Waveguide-mediated coupling matrices: J (coherent) and Gamma (dissipative).
struct CouplingMatrices {
  RealMatrix J;
  RealMatrix Gamma;
};

/// J_mn = sqrt(G_m G_n) sin(k|x_m - x_n|)/2, Gamma_mn = sqrt(G_m G_n) cos(k|x_m - x_n|),
/// with k x = 2*pi*x in wavelength units.
inline CouplingMatrices coupling_matrices(const ChainGeometry& geo) {
  geo.validate();
  const int n = geo.n_sites();
  CouplingMatrices out;
  out.J = RealMatrix::Zero(n, n);
  out.Gamma = RealMatrix::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = m; k < n; ++k) {
      const double root = std::sqrt(geo.gamma_1d[static_cast<std::size_t>(m)] *
                                    geo.gamma_1d[static_cast<std::size_t>(k)]);
      const double dist = std::abs(geo.positions[static_cast<std::size_t>(m)] -
                                   geo.positions[static_cast<std::size_t>(k)]);
      const auto [s, c] = sincos_2pi(dist);
      const double j = (m == k) ? 0.0 : root * s / 2.0;
      const double g = root * c;
      out.J(m, k) = j;
      out.J(k, m) = j;
      out.Gamma(m, k) = g;
      out.Gamma(k, m) = g;
    }
  }
  return out;
}

}  // namespace wqed
