#include "fsr/tensor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fsr {

std::size_t Tensor::numel(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int d : shape) {
    FSR_CHECK(d >= 0, "negative tensor dimension ", d);
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

Tensor::Tensor(std::vector<int> shape)
    : shape_(std::move(shape)), data_(numel(shape_), 0.0) {}

Tensor::Tensor(std::vector<int> shape, Scalar fill)
    : shape_(std::move(shape)), data_(numel(shape_), fill) {}

Tensor::Tensor(std::vector<int> shape, std::vector<Scalar> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  FSR_CHECK(data_.size() == numel(shape_), "tensor data size ", data_.size(),
            " does not match shape ", shape_str());
}

bool Tensor::all_finite() const {
  for (Scalar v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

void Tensor::fill(Scalar v) { std::fill(data_.begin(), data_.end(), v); }

Tensor Tensor::reshaped(std::vector<int> shape) const {
  FSR_CHECK(numel(shape) == size(), "reshape ", shape_str(), " -> ",
            shape_str(shape), " changes element count");
  Tensor out;
  out.shape_ = std::move(shape);
  out.data_ = data_;
  return out;
}

void Tensor::add_(const Tensor& o) {
  FSR_CHECK(same_shape(o), "shape mismatch in add_: ", shape_str(), " vs ",
            o.shape_str());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
}

void Tensor::axpy_(Scalar a, const Tensor& o) {
  FSR_CHECK(same_shape(o), "shape mismatch in axpy_: ", shape_str(), " vs ",
            o.shape_str());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * o.data_[i];
}

void Tensor::scale_(Scalar a) {
  for (Scalar& v : data_) v *= a;
}

Scalar Tensor::min() const {
  Scalar m = std::numeric_limits<Scalar>::infinity();
  for (Scalar v : data_) m = std::min(m, v);
  return m;
}

Scalar Tensor::max() const {
  Scalar m = -std::numeric_limits<Scalar>::infinity();
  for (Scalar v : data_) m = std::max(m, v);
  return m;
}

Scalar Tensor::mean() const {
  if (data_.empty()) return 0.0;
  Scalar s = 0.0;
  for (Scalar v : data_) s += v;
  return s / static_cast<Scalar>(data_.size());
}

Scalar Tensor::abs_max() const {
  Scalar m = 0.0;
  for (Scalar v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::string Tensor::shape_str(const std::vector<int>& shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape[i]);
  }
  s += "]";
  return s;
}

}  // namespace fsr
