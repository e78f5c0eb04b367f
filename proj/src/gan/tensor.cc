// src/gan/tensor.cc

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

#include "voxsan/gan/tensor.h"

#include <algorithm>
#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan::gan {

std::size_t ParamLayout::Add(const std::string &name, std::vector<int> shape) {
  std::size_t size = 1;
  for (int d : shape) size *= static_cast<std::size_t>(d);
  slots_.push_back({name, std::move(shape), total_, size});
  total_ += size;
  return slots_.back().offset;
}

namespace {

// Input index range [lo, hi) of kernel tap k that stays inside the signal
// for outputs tau in [0, out_len).
inline void TapRange(int k, int pad, int stride, int in_len, int out_len,
                     int *lo, int *hi) {
  // need 0 <= tau * stride + k - pad < in_len
  const int shift = k - pad;
  int first = shift >= 0 ? 0 : (-shift + stride - 1) / stride;
  int last = (in_len - 1 - shift) >= 0 ? (in_len - 1 - shift) / stride + 1 : 0;
  *lo = std::min(first, out_len);
  *hi = std::clamp(last, *lo, out_len);
}

template <typename T>
T Sigmoid(T x) {
  return x >= T(0) ? T(1) / (T(1) + std::exp(-x))
                   : std::exp(x) / (T(1) + std::exp(x));
}

}  // namespace

template <typename T>
Tensor<T> ConvForward(const ConvShape &shape, const T *weight, const T *bias,
                      const Tensor<T> &x) {
  if (x.c != shape.in)
    throw Error(ErrorCode::kShapeMismatch,
                "conv expects " + std::to_string(shape.in) + " channels, got " +
                    std::to_string(x.c));
  const int out_len = shape.OutLength(x.t);
  if (out_len < 1)
    throw Error(ErrorCode::kShapeMismatch, "segment too short for conv");
  Tensor<T> y(x.n, shape.out, out_len);
  const int k_size = shape.kernel, s = shape.stride, pad = shape.pad();
  for (int b = 0; b < x.n; ++b) {
    for (int o = 0; o < shape.out; ++o) {
      T *dst = y.channel(b, o);
      std::fill(dst, dst + out_len, bias[o]);
      for (int i = 0; i < shape.in; ++i) {
        const T *src = x.channel(b, i);
        const T *w = weight + (static_cast<std::size_t>(o) * shape.in + i) * k_size;
        for (int k = 0; k < k_size; ++k) {
          int lo, hi;
          TapRange(k, pad, s, x.t, out_len, &lo, &hi);
          const T wk = w[k];
          const T *base = src + k - pad;
          if (s == 1) {
            for (int tau = lo; tau < hi; ++tau) dst[tau] += wk * base[tau];
          } else {
            for (int tau = lo; tau < hi; ++tau) dst[tau] += wk * base[tau * s];
          }
        }
      }
    }
  }
  return y;
}

template <typename T>
void ConvBackward(const ConvShape &shape, const T *weight, const Tensor<T> &x,
                  const Tensor<T> &grad_out, T *weight_grad, T *bias_grad,
                  Tensor<T> *input_grad) {
  const int out_len = grad_out.t;
  const int k_size = shape.kernel, s = shape.stride, pad = shape.pad();
  if (input_grad) *input_grad = Tensor<T>(x.n, x.c, x.t);
  for (int b = 0; b < x.n; ++b) {
    for (int o = 0; o < shape.out; ++o) {
      const T *g = grad_out.channel(b, o);
      if (bias_grad) {
        T acc = T(0);
        for (int tau = 0; tau < out_len; ++tau) acc += g[tau];
        bias_grad[o] += acc;
      }
      for (int i = 0; i < shape.in; ++i) {
        const T *src = x.channel(b, i);
        const std::size_t w_off =
            (static_cast<std::size_t>(o) * shape.in + i) * k_size;
        T *dx = input_grad ? input_grad->channel(b, i) : nullptr;
        for (int k = 0; k < k_size; ++k) {
          int lo, hi;
          TapRange(k, pad, s, x.t, out_len, &lo, &hi);
          const int shift = k - pad;
          if (weight_grad) {
            T acc = T(0);
            for (int tau = lo; tau < hi; ++tau)
              acc += g[tau] * src[tau * s + shift];
            weight_grad[w_off + k] += acc;
          }
          if (dx) {
            const T wk = weight[w_off + k];
            for (int tau = lo; tau < hi; ++tau) dx[tau * s + shift] += wk * g[tau];
          }
        }
      }
    }
  }
}

template <typename T>
Tensor<T> GluForward(const Tensor<T> &x) {
  const int half = x.c / 2;
  Tensor<T> y(x.n, half, x.t);
  for (int b = 0; b < x.n; ++b)
    for (int ch = 0; ch < half; ++ch) {
      const T *a = x.channel(b, ch);
      const T *g = x.channel(b, ch + half);
      T *dst = y.channel(b, ch);
      for (int tau = 0; tau < x.t; ++tau) dst[tau] = a[tau] * Sigmoid(g[tau]);
    }
  return y;
}

template <typename T>
Tensor<T> GluBackward(const Tensor<T> &x, const Tensor<T> &grad_out) {
  const int half = x.c / 2;
  Tensor<T> dx(x.n, x.c, x.t);
  for (int b = 0; b < x.n; ++b)
    for (int ch = 0; ch < half; ++ch) {
      const T *a = x.channel(b, ch);
      const T *g = x.channel(b, ch + half);
      const T *go = grad_out.channel(b, ch);
      T *da = dx.channel(b, ch);
      T *dg = dx.channel(b, ch + half);
      for (int tau = 0; tau < x.t; ++tau) {
        const T sg = Sigmoid(g[tau]);
        da[tau] = go[tau] * sg;
        dg[tau] = go[tau] * a[tau] * sg * (T(1) - sg);
      }
    }
  return dx;
}

template <typename T>
Tensor<T> UpsampleForward(const Tensor<T> &x) {
  Tensor<T> y(x.n, x.c, 2 * x.t);
  for (int b = 0; b < x.n; ++b)
    for (int ch = 0; ch < x.c; ++ch) {
      const T *src = x.channel(b, ch);
      T *dst = y.channel(b, ch);
      for (int tau = 0; tau < x.t; ++tau) dst[2 * tau] = dst[2 * tau + 1] = src[tau];
    }
  return y;
}

template <typename T>
Tensor<T> UpsampleBackward(const Tensor<T> &grad_out) {
  Tensor<T> dx(grad_out.n, grad_out.c, grad_out.t / 2);
  for (int b = 0; b < dx.n; ++b)
    for (int ch = 0; ch < dx.c; ++ch) {
      const T *go = grad_out.channel(b, ch);
      T *dst = dx.channel(b, ch);
      for (int tau = 0; tau < dx.t; ++tau) dst[tau] = go[2 * tau] + go[2 * tau + 1];
    }
  return dx;
}

template <typename T>
void AddInPlace(Tensor<T> &a, const Tensor<T> &b) {
  if (!a.SameShape(b))
    throw Error(ErrorCode::kShapeMismatch, "tensor shapes differ in add");
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
}

#define VOXSAN_INSTANTIATE(T)                                                \
  template Tensor<T> ConvForward(const ConvShape &, const T *, const T *,   \
                                 const Tensor<T> &);                        \
  template void ConvBackward(const ConvShape &, const T *, const Tensor<T> &, \
                             const Tensor<T> &, T *, T *, Tensor<T> *);     \
  template Tensor<T> GluForward(const Tensor<T> &);                         \
  template Tensor<T> GluBackward(const Tensor<T> &, const Tensor<T> &);     \
  template Tensor<T> UpsampleForward(const Tensor<T> &);                    \
  template Tensor<T> UpsampleBackward(const Tensor<T> &);                   \
  template void AddInPlace(Tensor<T> &, const Tensor<T> &);

VOXSAN_INSTANTIATE(float)
VOXSAN_INSTANTIATE(double)
#undef VOXSAN_INSTANTIATE

}  // namespace voxsan::gan
