#include "ductwave/numerics/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ductwave {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex& planMutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plansFor(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(planMutex());
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Complex> a(n), b(n);
    PlanPair p;
    p.forward = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                  reinterpret_cast<fftw_complex*>(b.data()),
                                  FFTW_BACKWARD, FFTW_ESTIMATE);
    it = cache.emplace(n, p).first;
  }
  return it->second;
}

}  // namespace

Fft::Fft(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Fft: size must be positive");
  plansFor(n);  // warm the plan cache
}

void Fft::forward(std::span<const Complex> in, std::span<Complex> out) const {
  if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_)
    throw std::invalid_argument("Fft::forward: size mismatch");
  std::vector<Complex> tmp(in.begin(), in.end());
  fftw_execute_dft(plansFor(n_).forward,
                   reinterpret_cast<fftw_complex*>(tmp.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / n_;
  for (auto& v : out) v *= scale;
}

void Fft::inverse(std::span<const Complex> in, std::span<Complex> out) const {
  if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_)
    throw std::invalid_argument("Fft::inverse: size mismatch");
  std::vector<Complex> tmp(in.begin(), in.end());
  fftw_execute_dft(plansFor(n_).backward,
                   reinterpret_cast<fftw_complex*>(tmp.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void Fft::forwardReal(std::span<const double> in, std::span<Complex> out) const {
  std::vector<Complex> tmp(n_);
  for (int i = 0; i < n_; ++i) tmp[i] = Complex{in[i], 0.0};
  forward(tmp, out);
}

void Fft::inverseToReal(std::span<const Complex> in, std::span<double> out) const {
  std::vector<Complex> tmp(n_);
  inverse(in, tmp);
  for (int i = 0; i < n_; ++i) out[i] = tmp[i].real();
}

int fftFrequencyIndex(int m, int n) { return m <= n / 2 ? m : m - n; }

}  // namespace ductwave
