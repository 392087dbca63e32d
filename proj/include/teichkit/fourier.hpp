#pragma once

#include <span>
#include <vector>

#include "teichkit/series.hpp"

namespace teichkit {

// s(r e^{i theta_j}) for theta_j = 2 pi j / samples, j = 0..samples-1.
std::vector<Complex> ring_values(const Series& s, double r, int samples);

// Least-squares fit of a degree-out_degree polynomial to values given on the
// ring |z| = r at equispaced angles: the discrete Fourier projection.
// Requires samples > out_degree.
Series ring_fit(std::span<const Complex> values, double r, int out_degree);

// Unnormalized DFT: X_k = sum_n x_n e^{-2 pi i n k / N} (inverse flips the sign
// and divides by N).
void dft(std::vector<Complex>& x, bool inverse);

} // namespace teichkit
