#pragma once
// Dispatched numeric kernels: a scalar reference implementation plus an AVX2
// variant selected at runtime. Both paths produce bit-identical results (same
// accumulation order, no FMA contraction), so the dispatch choice never
// changes model output.

#include <cstddef>

namespace rgg::kern {

struct Backend {
  const char* name;

  // c (m x n) = a (m x k) * b (k x n), row-major; accumulates when acc.
  void (*mm_nn)(double* c, const double* a, const double* b, int m, int k,
                int n, bool acc);

  // elementwise over n values
  void (*add)(double* out, const double* a, const double* b, std::size_t n);
  void (*sub)(double* out, const double* a, const double* b, std::size_t n);
  void (*mul)(double* out, const double* a, const double* b, std::size_t n);
  void (*scale)(double* out, const double* a, double s, std::size_t n);
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
  void (*relu)(double* out, const double* a, std::size_t n);
  // out += g where a > 0 (backward of relu)
  void (*relu_grad_acc)(double* out, const double* g, const double* a,
                        std::size_t n);
};

extern const Backend scalar_backend;
#if defined(__x86_64__) || defined(_M_X64)
extern const Backend avx2_backend;
#endif

bool avx2_supported();

// Active backend. Resolved once on first use: AVX2 when the CPU supports it,
// scalar otherwise; RGG_BACKEND=scalar|avx2 overrides.
const Backend& active();

// Force a backend by name ("scalar", "avx2", "auto"). Throws on unknown name
// or unsupported CPU. Intended for tests and benchmarks.
void set_backend(const char* name);

}  // namespace rgg::kern
