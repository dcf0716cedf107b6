#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dim/core/errors.hpp"

namespace dim {

// Dense row-major tensor. Shapes are small, data is contiguous.
template <typename T>
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<T> v;

  Tensor() = default;
  explicit Tensor(std::vector<int64_t> s) : shape(std::move(s)) {
    v.assign(static_cast<size_t>(numel_of(shape)), T(0));
  }
  Tensor(std::vector<int64_t> s, std::vector<T> data)
      : shape(std::move(s)), v(std::move(data)) {
    if (static_cast<int64_t>(v.size()) != numel_of(shape))
      throw ValidationError("tensor data size does not match shape");
  }

  static int64_t numel_of(const std::vector<int64_t>& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
  }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int ndim() const { return static_cast<int>(shape.size()); }
  int64_t dim(int i) const { return shape[static_cast<size_t>(i)]; }

  T* data() { return v.data(); }
  const T* data() const { return v.data(); }

  T& at(int64_t i) { return v[static_cast<size_t>(i)]; }
  const T& at(int64_t i) const { return v[static_cast<size_t>(i)]; }

  void fill(T x) { std::fill(v.begin(), v.end(), x); }
  void zero() { fill(T(0)); }

  Tensor reshaped(std::vector<int64_t> s) const {
    if (numel_of(s) != numel())
      throw ValidationError("reshape changes element count");
    Tensor out = *this;
    out.shape = std::move(s);
    return out;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape.size(); ++i)
      os << shape[i] << (i + 1 < shape.size() ? ", " : "");
    os << ")";
    return os.str();
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
    return out;
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  T max_abs() const {
    T m = 0;
    for (T x : v) m = std::max(m, static_cast<T>(std::abs(x)));
    return m;
  }

  bool all_finite() const {
    for (T x : v)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

template <typename T>
T max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  assert(a.numel() == b.numel());
  T m = 0;
  for (int64_t i = 0; i < a.numel(); ++i)
    m = std::max(m, static_cast<T>(std::abs(a.at(i) - b.at(i))));
  return m;
}

}  // namespace dim
