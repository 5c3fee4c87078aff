#pragma once

#include <array>
#include <vector>

#include "fmfire/field.hpp"
#include "fmfire/tensor.hpp"

namespace fmfire {

// Domain aliases. FireMask holds -1 (burned) / +1 (unburned); ArrivalTimeMap
// holds hours since ignition with kNever for unreached cells.
using FireMask = Field<double>;
using ArrivalTimeMap = Field<double>;
using TerrainField = Field<double>;

/// Anderson fuel categories 1..13 plus 0 for no fuel.
using FuelGrid = Field<int>;

inline constexpr int kFuelCategories = 14;

struct WeatherFields {
  Field<double> u;     // zonal wind, m/s east-positive
  Field<double> v;     // meridional wind, m/s north-positive
  Field<double> rh;    // relative humidity, percent
  Field<double> temp;  // temperature, degrees F
};

/// 20-channel conditioning stack in fixed order:
/// [fire_mask, u, v, rh, temp, terrain, fuel_0 .. fuel_13].
struct ConditioningTensor {
  static constexpr int kChannels = 6 + kFuelCategories;
  GridSpec spec;
  Tensor3<double> channels;  // c == kChannels
};

enum class InterpMode { Bilinear, Nearest };

/// One-hot expansion of fuel categories; channel k is 1 where category == k.
std::array<Field<double>, kFuelCategories> one_hot_fuel(const FuelGrid& fuel);

/// Stacks mask, weather, terrain and one-hot fuel into the fixed 20-channel
/// order. All inputs must share one GridSpec.
ConditioningTensor assemble_conditioning(const FireMask& mask,
                                         const WeatherFields& wx,
                                         const TerrainField& terrain,
                                         const FuelGrid& fuel);

/// Rotates a field by `angle_deg` counterclockwise (east/north plane) about
/// the grid center. Cells that sample outside the source are set to `fill`.
template <class Scalar>
Field<Scalar> rotate_field(const Field<Scalar>& f, double angle_deg,
                           Scalar fill, InterpMode mode);

/// Rotates an arrival-time map: bilinear where all four sample corners are
/// finite, nearest-corner otherwise so kNever regions keep sharp boundaries.
/// Out-of-domain cells fill with kNever.
ArrivalTimeMap rotate_arrival(const ArrivalTimeMap& tau, double angle_deg);

/// Rotates wind spatially (bilinear) and rotates the vector components back
/// onto the fixed east/north axes: u' = u cos - v sin, v' = u sin + v cos.
std::pair<Field<double>, Field<double>> rotate_wind(const Field<double>& u,
                                                    const Field<double>& v,
                                                    double angle_deg);

/// Bilinear resampling on normalized coordinates; corners map to corners.
Field<double> bilinear_resample(const Field<double>& f, const GridSpec& target);

/// Crops a (target.height x target.width) window with origin (row0, col0).
template <class Scalar>
Field<Scalar> crop(const Field<Scalar>& f, int row0, int col0,
                   const GridSpec& target);

int count_burned(const FireMask& mask);

// --- template definitions -------------------------------------------------

namespace detail {

// Inverse-map source coordinates (row, col) of output cell (r, c) under a CCW
// rotation by `rad` about the grid center. Plane coords: x = col (east),
// y = cy - row (north), so row 0 stays the northernmost row.
struct RotMap {
  double cx, cy, cos_t, sin_t;
  RotMap(const GridSpec& spec, double rad)
      : cx(0.5 * (spec.width - 1)),
        cy(0.5 * (spec.height - 1)),
        cos_t(std::cos(rad)),
        sin_t(std::sin(rad)) {}
  void source(int r, int c, double& src_r, double& src_c) const {
    const double x = c - cx;
    const double y = cy - r;
    const double xs = cos_t * x + sin_t * y;
    const double ys = -sin_t * x + cos_t * y;
    src_c = cx + xs;
    src_r = cy - ys;
  }
};

}  // namespace detail

template <class Scalar>
Field<Scalar> rotate_field(const Field<Scalar>& f, double angle_deg,
                           Scalar fill, InterpMode mode) {
  if (!std::isfinite(angle_deg)) throw DataError("rotation angle must be finite");
  const int h = f.height(), w = f.width();
  const double rad = angle_deg * (3.14159265358979323846 / 180.0);
  const detail::RotMap map(f.spec(), rad);
  Field<Scalar> out(f.spec(), fill);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double sr, sc;
      map.source(r, c, sr, sc);
      if (mode == InterpMode::Nearest) {
        const long ir = std::lround(sr), ic = std::lround(sc);
        if (ir < 0 || ir >= h || ic < 0 || ic >= w) continue;
        out.at(r, c) = f.at(static_cast<int>(ir), static_cast<int>(ic));
      } else {
        if (sr < 0.0 || sr > h - 1 || sc < 0.0 || sc > w - 1) continue;
        int r0 = static_cast<int>(std::floor(sr));
        int c0 = static_cast<int>(std::floor(sc));
        if (r0 == h - 1) --r0;
        if (c0 == w - 1) --c0;
        if (h == 1) r0 = 0;
        if (w == 1) c0 = 0;
        const double fr = sr - r0, fc = sc - c0;
        const int r1 = (h == 1) ? r0 : r0 + 1, c1 = (w == 1) ? c0 : c0 + 1;
        const double v00 = static_cast<double>(f.at(r0, c0));
        const double v01 = static_cast<double>(f.at(r0, c1));
        const double v10 = static_cast<double>(f.at(r1, c0));
        const double v11 = static_cast<double>(f.at(r1, c1));
        const double top = v00 * (1.0 - fc) + v01 * fc;
        const double bot = v10 * (1.0 - fc) + v11 * fc;
        out.at(r, c) = static_cast<Scalar>(top * (1.0 - fr) + bot * fr);
      }
    }
  }
  return out;
}

template <class Scalar>
Field<Scalar> crop(const Field<Scalar>& f, int row0, int col0,
                   const GridSpec& target) {
  if (row0 < 0 || col0 < 0 || row0 + target.height > f.height() ||
      col0 + target.width > f.width())
    throw DataError("crop window outside source field");
  Field<Scalar> out(target);
  out.values() = f.values().block(row0, col0, target.height, target.width);
  return out;
}

}  // namespace fmfire
