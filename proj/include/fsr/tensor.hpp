#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fsr/common.hpp"

namespace fsr {

// Dense row-major tensor. Feature maps use NCHW order.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, Scalar fill);
  Tensor(std::vector<int> shape, std::vector<Scalar> data);

  static Tensor scalar(Scalar v) { return Tensor({1}, v); }

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Scalar* data() { return data_.data(); }
  const Scalar* data() const { return data_.data(); }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  Scalar operator[](std::size_t i) const { return data_[i]; }

  // NCHW accessors.
  Scalar& at(int n, int c, int h, int w) {
    return data_[idx4(n, c, h, w)];
  }
  Scalar at(int n, int c, int h, int w) const {
    return data_[idx4(n, c, h, w)];
  }
  std::size_t idx4(int n, int c, int h, int w) const {
    return ((static_cast<std::size_t>(n) * shape_[1] + c) * shape_[2] + h) *
               shape_[3] +
           w;
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const;

  void fill(Scalar v);
  void zero() { fill(0.0); }

  Tensor reshaped(std::vector<int> shape) const;

  // Elementwise helpers used across the codebase.
  void add_(const Tensor& o);               // this += o
  void axpy_(Scalar a, const Tensor& o);    // this += a * o
  void scale_(Scalar a);                    // this *= a

  Scalar min() const;
  Scalar max() const;
  Scalar mean() const;
  Scalar abs_max() const;

  static std::string shape_str(const std::vector<int>& shape);
  std::string shape_str() const { return shape_str(shape_); }

  static std::size_t numel(const std::vector<int>& shape);

 private:
  std::vector<int> shape_;
  std::vector<Scalar> data_;
};

}  // namespace fsr
