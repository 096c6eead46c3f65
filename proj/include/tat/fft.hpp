#ifndef TAT_FFT_HPP
#define TAT_FFT_HPP

#include <complex>
#include <vector>

namespace tat {

// Thin wrappers over FFTW (double precision, FFTW_ESTIMATE plans so results
// and timing are reproducible). Data is row-major [iy][ix] for the 2D case;
// n0 counts rows (slow index), n1 columns (fast index). Unnormalized
// forward/backward convention: ifft(fft(v)) == n * v.
void fft_1d(std::vector<std::complex<double>>& v, bool inverse);
void fft_2d(std::vector<std::complex<double>>& v, int n0, int n1, bool inverse);

// Signed FFT bin index: k for k < n/2, k - n otherwise.
inline int fft_signed_index(int k, int n) { return k < (n + 1) / 2 ? k : k - n; }

} // namespace tat

#endif
