#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>

#include "fmfire/core.hpp"

namespace fmfire {

/// Uniform raster geometry. Row 0 is the northernmost row, column 0 the
/// westernmost column; east is +x and north is +y in all vector math.
struct GridSpec {
  int width = 0;    // cells, east-west
  int height = 0;   // cells, north-south
  double cell_size = 25.0;  // meters

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  std::int64_t cells() const {
    return static_cast<std::int64_t>(width) * height;
  }
};

/// Throws unless the spec is usable as a simulation/patch grid.
inline void validate_sim_grid(const GridSpec& spec) {
  if (spec.width < 8 || spec.height < 8)
    throw DataError("grid must be at least 8x8 cells");
  if (!(spec.cell_size > 0.0)) throw DataError("cell_size must be positive");
}

/// Dense per-cell scalar field on a GridSpec, row-major.
template <class Scalar>
class Field {
 public:
  using Array =
      Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Field() = default;
  explicit Field(const GridSpec& spec)
      : spec_(spec), v_(Array::Zero(spec.height, spec.width)) {}
  Field(const GridSpec& spec, Scalar fill)
      : spec_(spec), v_(Array::Constant(spec.height, spec.width, fill)) {}
  Field(const GridSpec& spec, Array values)
      : spec_(spec), v_(std::move(values)) {
    if (v_.rows() != spec_.height || v_.cols() != spec_.width)
      throw DataError("field values do not match grid spec");
  }

  const GridSpec& spec() const { return spec_; }
  int width() const { return spec_.width; }
  int height() const { return spec_.height; }

  Scalar& at(int row, int col) { return v_(row, col); }
  Scalar at(int row, int col) const { return v_(row, col); }

  Array& values() { return v_; }
  const Array& values() const { return v_; }

  template <class Other>
  Field<Other> cast() const {
    return Field<Other>(spec_, v_.template cast<Other>());
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_ && (a.v_ == b.v_).all();
  }

 private:
  GridSpec spec_;
  Array v_;
};

using ScalarField = Field<double>;

/// Mean of the outermost ring of cells; the neutral fill used when rotating
/// weather and terrain fields.
template <class Scalar>
double border_mean(const Field<Scalar>& f) {
  const int h = f.height(), w = f.width();
  double sum = 0.0;
  std::int64_t n = 0;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      if (r == 0 || r == h - 1 || c == 0 || c == w - 1) {
        sum += static_cast<double>(f.at(r, c));
        ++n;
      }
  return sum / static_cast<double>(n);
}

}  // namespace fmfire
