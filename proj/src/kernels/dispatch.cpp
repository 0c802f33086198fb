#include "curvkit/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace curvkit::kernels {
namespace {

const Table* detect() {
  if (const char* env = std::getenv("CURVKIT_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return &scalar_table();
    if (want == "avx2") {
      if (const Table* t = avx2_table_or_null()) return t;
    }
  }
  if (const Table* t = avx2_table_or_null()) return t;
  return &scalar_table();
}

std::atomic<const Table*> g_override{nullptr};

}  // namespace

const Table& active() {
  if (const Table* t = g_override.load(std::memory_order_relaxed)) return *t;
  static const Table* detected = detect();
  return *detected;
}

bool set_active(std::string_view name) {
  if (name == "scalar") {
    g_override.store(&scalar_table(), std::memory_order_relaxed);
    return true;
  }
  if (name == "avx2") {
    if (const Table* t = avx2_table_or_null()) {
      g_override.store(t, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  return false;
}

void reset_active() { g_override.store(nullptr, std::memory_order_relaxed); }

}  // namespace curvkit::kernels
