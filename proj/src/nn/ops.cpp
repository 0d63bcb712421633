// Copyright 2026 The Socgan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "socgan/nn/ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace socgan::ops {

namespace {

using Data = std::shared_ptr<TensorData>;

void require_defined(const Tensor& t, const char* op) {
  if (!t.defined()) {
    throw std::invalid_argument(std::string(op) + ": undefined tensor operand");
  }
}

[[noreturn]] void shape_error(const char* op, const Tensor& a, const Tensor& b) {
  throw std::invalid_argument(std::string(op) + ": shape mismatch " + a.shape_str() +
                              " vs " + b.shape_str());
}

/// Marks the output as gradient-carrying and records `fn` when a tape is
/// active and some input needs gradients.
void finish(const std::vector<Tensor>& inputs, Tensor& out, std::function<void()> fn) {
  bool need = false;
  for (const Tensor& t : inputs) need = need || t.requires_grad();
  out.set_requires_grad(need);
  Tape* tape = Tape::active();
  if (!need || tape == nullptr) return;
  std::vector<Data> ptrs;
  ptrs.reserve(inputs.size());
  for (const Tensor& t : inputs) ptrs.push_back(t.ptr());
  tape->record(ptrs, out.ptr(), std::move(fn));
}

enum class Broadcast { kNone, kRow };  // kRow: b is [1, n] repeated over rows

Broadcast binary_mode(const char* op, const Tensor& a, const Tensor& b) {
  if (a.rows() == b.rows() && a.cols() == b.cols()) return Broadcast::kNone;
  if (b.rows() == 1 && b.cols() == a.cols()) return Broadcast::kRow;
  shape_error(op, a, b);
}

/// Shared forward/backward skeleton for add and sub.
Tensor add_like(const char* op, const Tensor& a, const Tensor& b, double sign) {
  require_defined(a, op);
  require_defined(b, op);
  const Broadcast mode = binary_mode(op, a, b);
  const int64_t m = a.rows();
  const int64_t n = a.cols();
  Tensor out = Tensor::zeros(m, n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < n; ++j) {
      const double bv = mode == Broadcast::kRow ? pb[j] : pb[i * n + j];
      po[i * n + j] = pa[i * n + j] + sign * bv;
    }
  }
  finish({a, b}, out, [ad = a.ptr(), bd = b.ptr(), od = out.ptr(), mode, sign]() {
    if (od->grad.empty()) return;
    const int64_t m = ad->rows;
    const int64_t n = ad->cols;
    const double* g = od->grad.data();
    if (ad->requires_grad) {
      ad->ensure_grad();
      for (int64_t e = 0; e < m * n; ++e) ad->grad[e] += g[e];
    }
    if (bd->requires_grad) {
      bd->ensure_grad();
      if (mode == Broadcast::kRow) {
        for (int64_t i = 0; i < m; ++i) {
          for (int64_t j = 0; j < n; ++j) bd->grad[j] += sign * g[i * n + j];
        }
      } else {
        for (int64_t e = 0; e < m * n; ++e) bd->grad[e] += sign * g[e];
      }
    }
  });
  return out;
}

double sigmoid_scalar(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
  require_defined(a, "matmul");
  require_defined(b, "matmul");
  if (a.cols() != b.rows()) shape_error("matmul", a, b);
  const int64_t m = a.rows();
  const int64_t k = a.cols();
  const int64_t n = b.cols();
  Tensor out = Tensor::zeros(m, n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t p = 0; p < k; ++p) {
      const double av = pa[i * k + p];
      if (av == 0.0) continue;
      const double* brow = pb + p * n;
      double* orow = po + i * n;
      for (int64_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  finish({a, b}, out, [ad = a.ptr(), bd = b.ptr(), od = out.ptr()]() {
    if (od->grad.empty()) return;
    const int64_t m = ad->rows;
    const int64_t k = ad->cols;
    const int64_t n = bd->cols;
    const double* g = od->grad.data();
    if (ad->requires_grad) {
      ad->ensure_grad();
      // dA = dC * B^T
      for (int64_t i = 0; i < m; ++i) {
        for (int64_t p = 0; p < k; ++p) {
          double acc = 0.0;
          const double* grow = g + i * n;
          const double* brow = bd->values.data() + p * n;
          for (int64_t j = 0; j < n; ++j) acc += grow[j] * brow[j];
          ad->grad[i * k + p] += acc;
        }
      }
    }
    if (bd->requires_grad) {
      bd->ensure_grad();
      // dB = A^T * dC
      for (int64_t i = 0; i < m; ++i) {
        const double* arow = ad->values.data() + i * k;
        const double* grow = g + i * n;
        for (int64_t p = 0; p < k; ++p) {
          const double av = arow[p];
          if (av == 0.0) continue;
          double* brow = bd->grad.data() + p * n;
          for (int64_t j = 0; j < n; ++j) brow[j] += av * grow[j];
        }
      }
    }
  });
  return out;
}

Tensor add(const Tensor& a, const Tensor& b) { return add_like("add", a, b, 1.0); }
Tensor sub(const Tensor& a, const Tensor& b) { return add_like("sub", a, b, -1.0); }

Tensor mul(const Tensor& a, const Tensor& b) {
  require_defined(a, "mul");
  require_defined(b, "mul");
  const Broadcast mode = binary_mode("mul", a, b);
  const int64_t m = a.rows();
  const int64_t n = a.cols();
  Tensor out = Tensor::zeros(m, n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < n; ++j) {
      const double bv = mode == Broadcast::kRow ? pb[j] : pb[i * n + j];
      po[i * n + j] = pa[i * n + j] * bv;
    }
  }
  finish({a, b}, out, [ad = a.ptr(), bd = b.ptr(), od = out.ptr(), mode]() {
    if (od->grad.empty()) return;
    const int64_t m = ad->rows;
    const int64_t n = ad->cols;
    const double* g = od->grad.data();
    if (ad->requires_grad) {
      ad->ensure_grad();
      for (int64_t i = 0; i < m; ++i) {
        for (int64_t j = 0; j < n; ++j) {
          const double bv =
              mode == Broadcast::kRow ? bd->values[j] : bd->values[i * n + j];
          ad->grad[i * n + j] += g[i * n + j] * bv;
        }
      }
    }
    if (bd->requires_grad) {
      bd->ensure_grad();
      if (mode == Broadcast::kRow) {
        for (int64_t i = 0; i < m; ++i) {
          for (int64_t j = 0; j < n; ++j) {
            bd->grad[j] += g[i * n + j] * ad->values[i * n + j];
          }
        }
      } else {
        for (int64_t e = 0; e < m * n; ++e) bd->grad[e] += g[e] * ad->values[e];
      }
    }
  });
  return out;
}

Tensor scale(const Tensor& a, double s) {
  require_defined(a, "scale");
  Tensor out = Tensor::zeros(a.rows(), a.cols());
  for (int64_t e = 0; e < a.numel(); ++e) out.data()[e] = s * a.data()[e];
  finish({a}, out, [ad = a.ptr(), od = out.ptr(), s]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    for (size_t e = 0; e < od->grad.size(); ++e) ad->grad[e] += s * od->grad[e];
  });
  return out;
}

Tensor tanh(const Tensor& a) {
  require_defined(a, "tanh");
  Tensor out = Tensor::zeros(a.rows(), a.cols());
  for (int64_t e = 0; e < a.numel(); ++e) out.data()[e] = std::tanh(a.data()[e]);
  finish({a}, out, [ad = a.ptr(), od = out.ptr()]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    for (size_t e = 0; e < od->grad.size(); ++e) {
      const double y = od->values[e];
      ad->grad[e] += (1.0 - y * y) * od->grad[e];
    }
  });
  return out;
}

Tensor sigmoid(const Tensor& a) {
  require_defined(a, "sigmoid");
  Tensor out = Tensor::zeros(a.rows(), a.cols());
  for (int64_t e = 0; e < a.numel(); ++e) out.data()[e] = sigmoid_scalar(a.data()[e]);
  finish({a}, out, [ad = a.ptr(), od = out.ptr()]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    for (size_t e = 0; e < od->grad.size(); ++e) {
      const double y = od->values[e];
      ad->grad[e] += y * (1.0 - y) * od->grad[e];
    }
  });
  return out;
}

Tensor concat_cols(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_cols: no inputs");
  int64_t cols = 0;
  const int64_t m = parts.front().rows();
  for (const Tensor& t : parts) {
    require_defined(t, "concat_cols");
    if (t.rows() != m) shape_error("concat_cols", parts.front(), t);
    cols += t.cols();
  }
  Tensor out = Tensor::zeros(m, cols);
  int64_t off = 0;
  for (const Tensor& t : parts) {
    for (int64_t i = 0; i < m; ++i) {
      for (int64_t j = 0; j < t.cols(); ++j) {
        out.data()[i * cols + off + j] = t.data()[i * t.cols() + j];
      }
    }
    off += t.cols();
  }
  std::vector<Data> ptrs;
  for (const Tensor& t : parts) ptrs.push_back(t.ptr());
  finish(parts, out, [ptrs, od = out.ptr()]() {
    if (od->grad.empty()) return;
    const int64_t cols = od->cols;
    int64_t off = 0;
    for (const Data& pd : ptrs) {
      if (pd->requires_grad) {
        pd->ensure_grad();
        for (int64_t i = 0; i < pd->rows; ++i) {
          for (int64_t j = 0; j < pd->cols; ++j) {
            pd->grad[i * pd->cols + j] += od->grad[i * cols + off + j];
          }
        }
      }
      off += pd->cols;
    }
  });
  return out;
}

Tensor stack_rows(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw std::invalid_argument("stack_rows: no inputs");
  int64_t rows = 0;
  const int64_t n = parts.front().cols();
  for (const Tensor& t : parts) {
    require_defined(t, "stack_rows");
    if (t.cols() != n) shape_error("stack_rows", parts.front(), t);
    rows += t.rows();
  }
  Tensor out = Tensor::zeros(rows, n);
  int64_t off = 0;
  for (const Tensor& t : parts) {
    for (int64_t e = 0; e < t.numel(); ++e) out.data()[off * n + e] = t.data()[e];
    off += t.rows();
  }
  std::vector<Data> ptrs;
  for (const Tensor& t : parts) ptrs.push_back(t.ptr());
  finish(parts, out, [ptrs, od = out.ptr()]() {
    if (od->grad.empty()) return;
    const int64_t n = od->cols;
    int64_t off = 0;
    for (const Data& pd : ptrs) {
      if (pd->requires_grad) {
        pd->ensure_grad();
        for (int64_t e = 0; e < pd->numel(); ++e) pd->grad[e] += od->grad[off * n + e];
      }
      off += pd->rows;
    }
  });
  return out;
}

Tensor slice_cols(const Tensor& a, int64_t start, int64_t len) {
  require_defined(a, "slice_cols");
  if (start < 0 || len < 1 || start + len > a.cols()) {
    throw std::invalid_argument("slice_cols: range [" + std::to_string(start) + "," +
                                std::to_string(start + len) + ") outside " +
                                a.shape_str());
  }
  const int64_t m = a.rows();
  const int64_t n = a.cols();
  Tensor out = Tensor::zeros(m, len);
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < len; ++j) out.data()[i * len + j] = a.data()[i * n + start + j];
  }
  finish({a}, out, [ad = a.ptr(), od = out.ptr(), start, len]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    const int64_t n = ad->cols;
    for (int64_t i = 0; i < od->rows; ++i) {
      for (int64_t j = 0; j < len; ++j) {
        ad->grad[i * n + start + j] += od->grad[i * len + j];
      }
    }
  });
  return out;
}

Tensor row(const Tensor& a, int64_t r) {
  require_defined(a, "row");
  if (r < 0 || r >= a.rows()) {
    throw std::invalid_argument("row: index " + std::to_string(r) + " outside " +
                                a.shape_str());
  }
  const int64_t n = a.cols();
  Tensor out = Tensor::zeros(1, n);
  for (int64_t j = 0; j < n; ++j) out.data()[j] = a.data()[r * n + j];
  finish({a}, out, [ad = a.ptr(), od = out.ptr(), r]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    const int64_t n = ad->cols;
    for (int64_t j = 0; j < n; ++j) ad->grad[r * n + j] += od->grad[j];
  });
  return out;
}

Tensor sum_axis(const Tensor& a, int axis) {
  require_defined(a, "sum_axis");
  if (axis != 0 && axis != 1) {
    throw std::invalid_argument("sum_axis: axis must be 0 or 1");
  }
  const int64_t m = a.rows();
  const int64_t n = a.cols();
  Tensor out = axis == 0 ? Tensor::zeros(1, n) : Tensor::zeros(m, 1);
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < n; ++j) {
      out.data()[axis == 0 ? j : i] += a.data()[i * n + j];
    }
  }
  finish({a}, out, [ad = a.ptr(), od = out.ptr(), axis]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    const int64_t m = ad->rows;
    const int64_t n = ad->cols;
    for (int64_t i = 0; i < m; ++i) {
      for (int64_t j = 0; j < n; ++j) {
        ad->grad[i * n + j] += od->grad[axis == 0 ? j : i];
      }
    }
  });
  return out;
}

Tensor sum_all(const Tensor& a) {
  require_defined(a, "sum_all");
  double total = 0.0;
  for (int64_t e = 0; e < a.numel(); ++e) total += a.data()[e];
  Tensor out = Tensor::scalar(total);
  finish({a}, out, [ad = a.ptr(), od = out.ptr()]() {
    if (od->grad.empty() || !ad->requires_grad) return;
    ad->ensure_grad();
    const double g = od->grad[0];
    for (double& v : ad->grad) v += g;
  });
  return out;
}

Tensor mse_loss(const Tensor& pred, const Tensor& target) {
  require_defined(pred, "mse_loss");
  require_defined(target, "mse_loss");
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) {
    shape_error("mse_loss", pred, target);
  }
  const int64_t count = pred.numel();
  double total = 0.0;
  for (int64_t e = 0; e < count; ++e) {
    const double d = pred.data()[e] - target.data()[e];
    total += d * d;
  }
  Tensor out = Tensor::scalar(total / static_cast<double>(count));
  finish({pred, target}, out, [pd = pred.ptr(), td = target.ptr(), od = out.ptr()]() {
    if (od->grad.empty()) return;
    const double g = od->grad[0];
    const double inv = 2.0 / static_cast<double>(pd->numel());
    if (pd->requires_grad) pd->ensure_grad();
    if (td->requires_grad) td->ensure_grad();
    for (size_t e = 0; e < pd->values.size(); ++e) {
      const double d = g * inv * (pd->values[e] - td->values[e]);
      if (pd->requires_grad) pd->grad[e] += d;
      if (td->requires_grad) td->grad[e] -= d;
    }
  });
  return out;
}

Tensor bce_loss(const Tensor& score, const Tensor& label) {
  require_defined(score, "bce_loss");
  require_defined(label, "bce_loss");
  if (score.rows() != label.rows() || score.cols() != label.cols()) {
    shape_error("bce_loss", score, label);
  }
  constexpr double kLo = 1e-7;
  constexpr double kHi = 1.0 - 1e-7;
  const int64_t count = score.numel();
  double total = 0.0;
  for (int64_t e = 0; e < count; ++e) {
    const double s = std::min(std::max(score.data()[e], kLo), kHi);
    const double y = label.data()[e];
    total -= y * std::log(s) + (1.0 - y) * std::log(1.0 - s);
  }
  Tensor out = Tensor::scalar(total / static_cast<double>(count));
  finish({score, label}, out, [sd = score.ptr(), ld = label.ptr(), od = out.ptr()]() {
    if (od->grad.empty() || !sd->requires_grad) return;
    sd->ensure_grad();
    const double g = od->grad[0];
    const double inv = 1.0 / static_cast<double>(sd->numel());
    for (size_t e = 0; e < sd->values.size(); ++e) {
      const double raw = sd->values[e];
      if (raw < kLo || raw > kHi) continue;  // clamped region, zero slope
      const double y = ld->values[e];
      sd->grad[e] += g * inv * (raw - y) / (raw * (1.0 - raw));
    }
  });
  return out;
}

Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b) {
  return add(matmul(x, w), b);
}

}  // namespace socgan::ops
