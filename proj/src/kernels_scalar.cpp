#include "rgg/kernels.hpp"

#include <cstring>

namespace rgg::kern {
namespace {

// i-k-j loop order: for each output element the k-sum is accumulated in
// ascending k. The AVX2 variant vectorizes over j and keeps this order.
void mm_nn_scalar(double* c, const double* a, const double* b, int m, int k,
                  int n, bool acc) {
  if (!acc) std::memset(c, 0, sizeof(double) * static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* crow = c + static_cast<std::size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = arow[p];
      const double* brow = b + static_cast<std::size_t>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void add_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void mul_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_scalar(double* out, const double* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * s;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void relu_scalar(double* out, const double* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > 0.0 ? a[i] : 0.0;
}

void relu_grad_acc_scalar(double* out, const double* g, const double* a,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0.0) out[i] += g[i];
}

}  // namespace

const Backend scalar_backend = {
    "scalar",     mm_nn_scalar, add_scalar,  sub_scalar,
    mul_scalar,   scale_scalar, axpy_scalar, relu_scalar,
    relu_grad_acc_scalar,
};

}  // namespace rgg::kern
