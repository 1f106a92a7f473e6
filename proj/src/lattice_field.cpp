#include "conecalc/lattice_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace conecalc {

void LatticeGeometry::validate() const {
  for (int mu = 0; mu < 4; ++mu) {
    if (dims[mu] < 2 || dims[mu] % 2 != 0)
      throw MalformedInput("lattice dims must be even and >= 2");
    if (!(spacing[mu] > 0.0)) throw MalformedInput("lattice spacing must be > 0");
  }
  if (!(M > 0.0)) throw NonPositiveScale("lattice M must be > 0");
  if (components < 1) throw MalformedInput("components must be >= 1");
}

bool LatticeGeometry::same_lattice(const LatticeGeometry& other) const {
  return dims == other.dims && spacing == other.spacing && M == other.M;
}

MomentumLatticeField::MomentumLatticeField(const LatticeGeometry& geom) : geom_(geom) {
  geom_.validate();
  values_.assign(geom_.num_sites() * geom_.components, {0.0, 0.0});
  mode_q2_.resize(geom_.num_sites());
  for (std::size_t s = 0; s < geom_.num_sites(); ++s)
    mode_q2_[s] = minkowski_square(mode_q(s));
}

std::array<int, 4> MomentumLatticeField::site_coords(std::size_t site) const {
  std::array<int, 4> c;
  c[3] = static_cast<int>(site % geom_.dims[3]);
  site /= geom_.dims[3];
  c[2] = static_cast<int>(site % geom_.dims[2]);
  site /= geom_.dims[2];
  c[1] = static_cast<int>(site % geom_.dims[1]);
  c[0] = static_cast<int>(site / geom_.dims[1]);
  return c;
}

std::size_t MomentumLatticeField::site_index(const std::array<int, 4>& c) const {
  return ((static_cast<std::size_t>(c[0]) * geom_.dims[1] + c[1]) * geom_.dims[2] +
          c[2]) *
             geom_.dims[3] +
         c[3];
}

std::array<int, 4> MomentumLatticeField::mode_indices(std::size_t site) const {
  std::array<int, 4> c = site_coords(site);
  for (int mu = 0; mu < 4; ++mu)
    if (c[mu] >= geom_.dims[mu] / 2) c[mu] -= geom_.dims[mu];
  return c;
}

FourMomentum MomentumLatticeField::mode_q(std::size_t site) const {
  const std::array<int, 4> k = mode_indices(site);
  FourMomentum q;
  for (int mu = 0; mu < 4; ++mu) q[mu] = geom_.spacing[mu] * k[mu];
  return q;
}

double MomentumLatticeField::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

void MomentumLatticeField::check_finite() const {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error("field contains NaN/Inf");
}

FourMomentum lattice_position(const LatticeGeometry& geom,
                              const std::array<int, 4>& coords) {
  FourMomentum x;
  for (int mu = 0; mu < 4; ++mu) {
    const double dx = 2.0 * std::numbers::pi / (geom.dims[mu] * geom.spacing[mu]);
    x[mu] = coords[mu] * dx;
  }
  return x;
}

namespace {

// DFT along one axis: out[j] = sum_k in[k] exp(sign * 2pi i k j / N).
// The Minkowski phase e^{-iqx} makes axis 0 carry the opposite sign from
// the spatial axes, so the caller passes a per-axis sign.
void dft_axis(std::vector<std::complex<double>>& vals, const LatticeGeometry& g,
              int axis, int sign) {
  const int N = g.dims[axis];
  const int C = g.components;
  std::vector<std::complex<double>> tw(N);
  for (int m = 0; m < N; ++m) {
    const double ang = sign * 2.0 * std::numbers::pi * m / N;
    tw[m] = {std::cos(ang), std::sin(ang)};
  }
  // strides in units of complex values
  std::size_t stride = C;
  for (int mu = 3; mu > axis; --mu) stride *= g.dims[mu];

  std::vector<std::complex<double>> line(N), out(N);
  const std::size_t total = g.num_sites() * C;
  const std::size_t block = stride * N;  // one axis-span
  for (std::size_t base = 0; base < total; base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (int k = 0; k < N; ++k) line[k] = vals[base + off + k * stride];
      for (int j = 0; j < N; ++j) {
        std::complex<double> acc{0.0, 0.0};
        int idx = 0;
        for (int k = 0; k < N; ++k) {
          acc += line[k] * tw[idx];
          idx += j;
          if (idx >= N) idx -= N;
        }
        out[j] = acc;
      }
      for (int j = 0; j < N; ++j) vals[base + off + j * stride] = out[j];
    }
  }
}

MomentumLatticeField transform(const MomentumLatticeField& f, bool forward) {
  MomentumLatticeField r = f;
  // forward (momentum -> position): phase e^{-i q.x} = e^{-i q0 x0 + i q.x}
  static const int spatial_sign[4] = {-1, 1, 1, 1};
  for (int axis = 0; axis < 4; ++axis)
    dft_axis(r.values(), f.geometry(), axis, forward ? spatial_sign[axis]
                                                     : -spatial_sign[axis]);
  if (forward) {
    const double norm = 1.0 / static_cast<double>(f.num_sites());
    for (auto& v : r.values()) v *= norm;
  }
  return r;
}

}  // namespace

MomentumLatticeField to_position(const MomentumLatticeField& f) {
  return transform(f, true);
}

MomentumLatticeField to_momentum(const MomentumLatticeField& f) {
  return transform(f, false);
}

MomentumLatticeField random_field(const LatticeGeometry& geom, std::uint64_t seed) {
  MomentumLatticeField f(geom);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto& v : f.values()) v = {dist(rng), dist(rng)};
  return f;
}

}  // namespace conecalc
