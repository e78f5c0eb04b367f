// include/voxsan/gan/tensor.h

// Copyright 2026 The voxsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOXSAN_GAN_TENSOR_H_
#define VOXSAN_GAN_TENSOR_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace voxsan::gan {

// Batch x channels x time, time fastest.
template <typename T>
struct Tensor {
  int n = 0;
  int c = 0;
  int t = 0;
  std::vector<T> v;

  Tensor() = default;
  Tensor(int batch, int channels, int time, T fill = T(0))
      : n(batch), c(channels), t(time),
        v(static_cast<std::size_t>(batch) * channels * time, fill) {}

  std::size_t size() const { return v.size(); }
  bool SameShape(const Tensor &o) const {
    return n == o.n && c == o.c && t == o.t;
  }
  T *channel(int b, int ch) {
    return v.data() + (static_cast<std::size_t>(b) * c + ch) * t;
  }
  const T *channel(int b, int ch) const {
    return v.data() + (static_cast<std::size_t>(b) * c + ch) * t;
  }
  T &at(int b, int ch, int tau) { return channel(b, ch)[tau]; }
  T at(int b, int ch, int tau) const { return channel(b, ch)[tau]; }
};

// Named slices of one flat parameter vector.
struct ParamSlot {
  std::string name;
  std::vector<int> shape;
  std::size_t offset = 0;
  std::size_t size = 0;
};

class ParamLayout {
 public:
  std::size_t Add(const std::string &name, std::vector<int> shape);
  const std::vector<ParamSlot> &slots() const { return slots_; }
  std::size_t total() const { return total_; }

 private:
  std::vector<ParamSlot> slots_;
  std::size_t total_ = 0;
};

// 1-D convolution along time; odd kernels padded by kernel / 2 with zeros.
struct ConvShape {
  int in = 0;
  int out = 0;
  int kernel = 3;
  int stride = 1;

  int pad() const { return kernel / 2; }
  int OutLength(int length) const {
    return (length + 2 * pad() - kernel) / stride + 1;
  }
  std::size_t weight_count() const {
    return static_cast<std::size_t>(out) * in * kernel;
  }
};

// weight is out x in x kernel; bias has `out` entries.
template <typename T>
Tensor<T> ConvForward(const ConvShape &shape, const T *weight, const T *bias,
                      const Tensor<T> &x);

// Accumulates into weight_grad / bias_grad when non-null and returns the
// input gradient when `input_grad` is non-null.
template <typename T>
void ConvBackward(const ConvShape &shape, const T *weight, const Tensor<T> &x,
                  const Tensor<T> &grad_out, T *weight_grad, T *bias_grad,
                  Tensor<T> *input_grad);

// Gated linear unit over channels: first half times sigmoid(second half).
template <typename T>
Tensor<T> GluForward(const Tensor<T> &x);
template <typename T>
Tensor<T> GluBackward(const Tensor<T> &x, const Tensor<T> &grad_out);

// Nearest-neighbour doubling in time.
template <typename T>
Tensor<T> UpsampleForward(const Tensor<T> &x);
template <typename T>
Tensor<T> UpsampleBackward(const Tensor<T> &grad_out);

template <typename T>
void AddInPlace(Tensor<T> &a, const Tensor<T> &b);

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_TENSOR_H_
