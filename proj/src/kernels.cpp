#include "domino/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace domino::kern {

#ifdef DOMINO_HAVE_AVX2_BUILD
const Kernels& avx2_kernels();
bool avx2_supported();
#endif

namespace {

bool avx2_available() {
#ifdef DOMINO_HAVE_AVX2_BUILD
  return avx2_supported();
#else
  return false;
#endif
}

const Kernels* by_name(const char* name) {
  if (std::strcmp(name, "scalar") == 0) return &scalar_kernels();
#ifdef DOMINO_HAVE_AVX2_BUILD
  if (std::strcmp(name, "avx2") == 0 && avx2_supported()) return &avx2_kernels();
#endif
  return nullptr;
}

const Kernels* pick_default() {
  if (const char* env = std::getenv("DOMINO_KERNELS")) {
    if (const Kernels* k = by_name(env)) return k;
  }
#ifdef DOMINO_HAVE_AVX2_BUILD
  if (avx2_supported()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

const Kernels*& active_ptr() {
  static const Kernels* p = pick_default();
  return p;
}

}  // namespace

const Kernels& active() { return *active_ptr(); }

bool select(const std::string& name) {
  if (const Kernels* k = by_name(name.c_str())) {
    active_ptr() = k;
    return true;
  }
  return false;
}

std::vector<std::string> available() {
  std::vector<std::string> names = {"scalar"};
  if (avx2_available()) names.emplace_back("avx2");
  return names;
}

}  // namespace domino::kern
