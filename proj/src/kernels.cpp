#include "rgg/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace rgg::kern {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Backend* resolve(const char* name) {
  const std::string s = name ? name : "auto";
  if (s == "scalar") return &scalar_backend;
#if defined(__x86_64__) || defined(_M_X64)
  if (s == "avx2") {
    if (!avx2_supported())
      throw std::runtime_error("kernels: avx2 not supported on this CPU");
    return &avx2_backend;
  }
  if (s == "auto") return avx2_supported() ? &avx2_backend : &scalar_backend;
#else
  if (s == "avx2")
    throw std::runtime_error("kernels: avx2 backend not built for this arch");
  if (s == "auto") return &scalar_backend;
#endif
  throw std::runtime_error("kernels: unknown backend '" + s + "'");
}

const Backend*& active_ptr() {
  static const Backend* ptr = resolve(std::getenv("RGG_BACKEND"));
  return ptr;
}

}  // namespace

const Backend& active() { return *active_ptr(); }

void set_backend(const char* name) { active_ptr() = resolve(name); }

}  // namespace rgg::kern
