#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "fmfire/core.hpp"

namespace fmfire {

/// Channel-major (c, h, w) dense tensor used for conditioning stacks and
/// network feature maps. data[(c*h + y)*w + x].
template <class Scalar>
struct Tensor3 {
  using Vector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  int c = 0, h = 0, w = 0;
  Vector data;

  Tensor3() = default;
  Tensor3(int c_, int h_, int w_)
      : c(c_), h(h_), w(w_), data(Vector::Zero(std::int64_t(c_) * h_ * w_)) {}

  std::int64_t size() const { return data.size(); }
  std::int64_t plane() const { return std::int64_t(h) * w; }

  Scalar& at(int ch, int row, int col) {
    return data[(std::int64_t(ch) * h + row) * w + col];
  }
  Scalar at(int ch, int row, int col) const {
    return data[(std::int64_t(ch) * h + row) * w + col];
  }

  /// View of one channel as a (h*w) vector.
  auto channel(int ch) { return data.segment(std::int64_t(ch) * plane(), plane()); }
  auto channel(int ch) const {
    return data.segment(std::int64_t(ch) * plane(), plane());
  }

  template <class Other>
  Tensor3<Other> cast() const {
    Tensor3<Other> out;
    out.c = c;
    out.h = h;
    out.w = w;
    out.data = data.template cast<Other>();
    return out;
  }
};

}  // namespace fmfire
