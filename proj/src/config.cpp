#include "config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace convsolve {

namespace {

constexpr Index kDefaultCap = 4096;

Index initial_cap() {
  const char* env = std::getenv("CONVSOLVE_SIZE_CAP");
  if (env == nullptr) return kDefaultCap;
  try {
    const long long parsed = std::stoll(env);
    if (parsed >= 1) return static_cast<Index>(parsed);
  } catch (...) {
  }
  return kDefaultCap;
}

std::atomic<Index>& cap_storage() {
  static std::atomic<Index> cap{initial_cap()};
  return cap;
}

}  // namespace

Index size_cap() { return cap_storage().load(); }

void set_size_cap(Index cap) { cap_storage().store(cap < 1 ? kDefaultCap : cap); }

}  // namespace convsolve
