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

#include "wqed/geometry.hpp"
#include "wqed/operators.hpp"

namespace wqed {

/// Time-dependent drive description.  `local` drives address the sites in
/// `targets`; `waveguide` drives address every site symmetrically and add
/// the probe detuning term while the pulse is active.
struct DrivePulse {
  enum class Kind { local, waveguide };
  enum class Envelope { rectangular, gaussian };

  Kind kind = Kind::local;
  Envelope envelope = Envelope::rectangular;
  std::vector<int> targets;  // 1-based; ignored for waveguide kind
  double amplitude = 0.0;    // rectangular amplitude or gaussian peak
  double t_on = 0.0;         // rectangular window start
  double t_off = 0.0;        // rectangular window end
  double center = 0.0;       // gaussian center t0
  double fwhm = 0.0;         // gaussian full width at half maximum
  double detuning = 0.0;     // probe detuning (waveguide) or carrier offset (local)

  void validate(int n_sites) const {
    require(amplitude >= 0.0, "pulse: amplitude must be >= 0");
    if (envelope == Envelope::rectangular) {
      require(t_off > t_on, "pulse: t_off must exceed t_on");
    } else {
      require(fwhm > 0.0, "pulse: fwhm must be > 0");
    }
    if (kind == Kind::local) {
      require(!targets.empty(), "pulse: local drive needs target sites");
      for (int s : targets)
        require(s >= 1 && s <= n_sites, "pulse: target site out of range");
    }
  }

  double value(double t) const {
    if (envelope == Envelope::rectangular) {
      return (t >= t_on && t < t_off) ? amplitude : 0.0;
    }
    const double x = (t - center) / fwhm;
    return amplitude * std::exp(-4.0 * std::log(2.0) * x * x);
  }

  bool active(double t) const {
    if (envelope == Envelope::rectangular) return t >= t_on && t < t_off;
    return true;  // gaussian support is unbounded
  }

  /// Integrated pulse area; for gaussians amplitude * fwhm * sqrt(pi/(4 ln 2)).
  double area() const {
    if (envelope == Envelope::rectangular) return amplitude * (t_off - t_on);
    return amplitude * fwhm * std::sqrt(pi / (4.0 * std::log(2.0)));
  }

  std::vector<int> effective_targets(int n_sites) const {
    if (kind == Kind::waveguide) {
      std::vector<int> all(static_cast<std::size_t>(n_sites));
      for (int i = 0; i < n_sites; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      return all;
    }
    return targets;
  }
};

/// Non-Hermitian effective Hamiltonian on the sector basis:
///   sum_{m,n} (J_mn - i Gamma_mn / 2) b_m^dag b_n
///   + sum_m (Delta_m - i (gamma_nr + 2 gamma_dep)/2) b_m^dag b_m
///   - (U/2) sum_m n_m (n_m - 1)
/// Block-diagonal in total excitation number.
inline OperatorMatrix effective_hamiltonian(const ChainGeometry& geo, const BasisPtr& basis) {
  require(geo.n_sites() == basis->n_sites(),
          "effective_hamiltonian: geometry and basis site counts differ");
  const auto cm = coupling_matrices(geo);
  const int n = geo.n_sites();
  const Complex damping = -imag_unit * (geo.gamma_nr + 2.0 * geo.gamma_dep) / 2.0;

  std::vector<Eigen::Triplet<Complex>> trips;
  for (int k = 0; k < basis->dimension(); ++k) {
    const auto& occ = basis->state(k);
    // Diagonal: detuning, local damping, anharmonicity, coupling diagonal.
    Complex diag = 0.0;
    for (int m = 0; m < n; ++m) {
      const double nm = occ[static_cast<std::size_t>(m)];
      if (nm == 0.0) continue;
      diag += nm * (geo.detunings[static_cast<std::size_t>(m)] + damping);
      diag += nm * Complex(cm.J(m, m), -cm.Gamma(m, m) / 2.0);
      diag -= 0.5 * geo.anharmonicity * nm * (nm - 1.0);
    }
    if (diag != Complex(0.0)) trips.emplace_back(k, k, diag);
    // Hopping: b_m^dag b_n for m != n, n occupied.
    for (int src = 0; src < n; ++src) {
      const int n_src = occ[static_cast<std::size_t>(src)];
      if (n_src == 0) continue;
      for (int dst = 0; dst < n; ++dst) {
        if (dst == src) continue;
        const int n_dst = occ[static_cast<std::size_t>(dst)];
        if (n_dst + 1 >= basis->local_dim()) continue;
        Occupation target = occ;
        target[static_cast<std::size_t>(src)] = static_cast<std::uint8_t>(n_src - 1);
        target[static_cast<std::size_t>(dst)] = static_cast<std::uint8_t>(n_dst + 1);
        const int row = basis->index_of(target);
        // Excitation-conserving, so the target is always inside the sector.
        const double amp = std::sqrt(static_cast<double>(n_src) * (n_dst + 1.0));
        trips.emplace_back(row, k, Complex(cm.J(dst, src), -cm.Gamma(dst, src) / 2.0) * amp);
      }
    }
  }
  SparseCMatrix m(basis->dimension(), basis->dimension());
  m.setFromTriplets(trips.begin(), trips.end());
  return {basis, std::move(m)};
}

/// Hermitian drive generator at time t.  Local kind:
/// Omega(t) sum_targets (b^dag + b); waveguide kind adds the probe detuning
/// term Delta_wg sum_j n_j while the pulse is active.
inline OperatorMatrix drive_generator(const DrivePulse& pulse, const ChainGeometry& geo,
                                      const BasisPtr& basis, double t) {
  pulse.validate(geo.n_sites());
  require(geo.n_sites() == basis->n_sites(),
          "drive_generator: geometry and basis site counts differ");
  const auto targets = pulse.effective_targets(geo.n_sites());
  SparseCMatrix x(basis->dimension(), basis->dimension());
  for (int site : targets) {
    const auto low = site_lowering(basis, site).mat;
    x += low;
    x += SparseCMatrix(low.adjoint());
  }
  SparseCMatrix result = pulse.value(t) * x;
  if (pulse.kind == DrivePulse::Kind::waveguide && pulse.active(t) && pulse.detuning != 0.0) {
    result += SparseCMatrix(pulse.detuning * total_number_operator(basis).mat);
  }
  return {basis, std::move(result)};
}

}  // namespace wqed
