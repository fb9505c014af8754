#pragma once

#include <complex>
#include <cstdint>

namespace normlab {

// Counter-based stream on top of the SplitMix64 finalizer. The draw at a
// given (seed, counter) is a pure function of those two integers, so streams
// reproduce bit-for-bit across platforms and can be split without sharing.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Standard normal via Box-Muller; consumes two draws.
  double normal() noexcept;

  /// Circular complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal() noexcept;

  /// Uniformly distributed point on the unit circle.
  std::complex<double> phase() noexcept;

  /// Independent stream for task `index`; does not advance this stream.
  RandomStream child(std::uint64_t index) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

}  // namespace normlab
