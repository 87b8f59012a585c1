#pragma once

#include <cstdint>

namespace sscs {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// produce identical results; the serial one exists for testing and
/// benchmarking.
enum class Exec { serial, parallel };

/// Applies the SSCS_THREADS environment variable (if set) to the OpenMP
/// runtime. Returns the thread count in effect.
int configure_threads_from_env();

/// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix_seed(master ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace sscs
