#pragma once

// Complex multi-component fields sampled on a periodic 4D momentum lattice.
// Mode assignment is centered: axis index i maps to k = i for i < N/2 and
// k = i - N for i >= N/2, giving q_mu = spacing_mu * k.  Position samples
// live on the conjugate lattice x_mu = j * dx_mu with dx_mu = 2pi/(N dq_mu).
//
// The transform convention follows Phi(x) = sum_q Phi(q) e^{-i q.x} / Nsites
// with the Minkowski phase q.x = q0 x0 - q1 x1 - q2 x2 - q3 x3.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "conecalc/cone_geometry.hpp"
#include "conecalc/errors.hpp"

namespace conecalc {

struct LatticeGeometry {
  std::array<int, 4> dims{8, 8, 8, 8};
  std::array<double, 4> spacing{0.5, 0.5, 0.5, 0.5};  // dq per axis, units of M
  double M = 1.0;
  int components = 1;

  std::size_t num_sites() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2] * dims[3];
  }
  void validate() const;
  bool same_lattice(const LatticeGeometry& other) const;
};

class MomentumLatticeField {
 public:
  MomentumLatticeField() = default;
  explicit MomentumLatticeField(const LatticeGeometry& geom);

  const LatticeGeometry& geometry() const { return geom_; }
  int components() const { return geom_.components; }
  std::size_t num_sites() const { return geom_.num_sites(); }

  std::complex<double>& at(std::size_t site, int comp = 0) {
    return values_[site * geom_.components + comp];
  }
  const std::complex<double>& at(std::size_t site, int comp = 0) const {
    return values_[site * geom_.components + comp];
  }

  std::vector<std::complex<double>>& values() { return values_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  // Centered discrete momentum of a site and its cached Minkowski square.
  FourMomentum mode_q(std::size_t site) const;
  double mode_q2(std::size_t site) const { return mode_q2_[site]; }

  std::array<int, 4> site_coords(std::size_t site) const;
  std::size_t site_index(const std::array<int, 4>& coords) const;
  // Centered mode indices k_mu in [-N/2, N/2) for a site.
  std::array<int, 4> mode_indices(std::size_t site) const;

  double max_abs() const;
  void check_finite() const;  // throws Error on NaN/Inf

 private:
  LatticeGeometry geom_;
  std::vector<std::complex<double>> values_;
  std::vector<double> mode_q2_;
};

// Position of a site on the conjugate lattice, x_mu = j_mu * 2pi/(N_mu dq_mu).
FourMomentum lattice_position(const LatticeGeometry& geom,
                              const std::array<int, 4>& coords);

// Momentum -> position transform (e^{-iqx} convention, 1/Nsites
// normalization) and its exact inverse.
MomentumLatticeField to_position(const MomentumLatticeField& f);
MomentumLatticeField to_momentum(const MomentumLatticeField& f);

// Deterministic pseudo-random complex field, components in [-1,1]^2.
MomentumLatticeField random_field(const LatticeGeometry& geom, std::uint64_t seed);

}  // namespace conecalc
