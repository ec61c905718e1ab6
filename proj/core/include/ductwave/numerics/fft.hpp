#pragma once

#include <span>
#include <vector>

#include "ductwave/types.hpp"

namespace ductwave {

/// Complex FFT of fixed size backed by FFTW. Plans are cached internally;
/// executing on distinct buffers is thread safe.
///
/// Conventions: forward() returns series coefficients
///   c_m = (1/n) sum_j f_j exp(-2 pi i j m / n),
/// inverse() reconstructs f_j = sum_m c_m exp(+2 pi i j m / n).
class Fft {
 public:
  explicit Fft(int n);

  int size() const { return n_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  /// forward() on a real signal.
  void forwardReal(std::span<const double> in, std::span<Complex> out) const;
  /// Real part of inverse(); imaginary part is discarded.
  void inverseToReal(std::span<const Complex> in, std::span<double> out) const;

 private:
  int n_;
};

/// Signed wavenumber index for bin m of an n-point transform: m, or m - n
/// for bins above the Nyquist fold.
int fftFrequencyIndex(int m, int n);

}  // namespace ductwave
