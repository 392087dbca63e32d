#include "teichkit/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

#include "teichkit/errors.hpp"

namespace teichkit {

void dft(std::vector<Complex>& x, bool inverse) {
    Eigen::FFT<double> fft;
    std::vector<Complex> out(x.size());
    if (inverse)
        fft.inv(out, x);
    else
        fft.fwd(out, x);
    x = std::move(out);
}

std::vector<Complex> ring_values(const Series& s, double r, int samples) {
    if (samples < 1) throw PreconditionError("ring_values: samples < 1");
    std::vector<Complex> buf(static_cast<size_t>(samples), Complex{});
    double rk = 1.0;
    for (int k = 0; k <= s.degree(); ++k) {
        buf[static_cast<size_t>(k % samples)] += s.coeff(k) * rk;
        rk *= r;
    }
    dft(buf, /*inverse=*/true);  // values_j = (1/N) sum ...; rescale below
    for (auto& v : buf) v *= static_cast<double>(samples);
    return buf;
}

Series ring_fit(std::span<const Complex> values, double r, int out_degree) {
    const int n = static_cast<int>(values.size());
    if (n <= out_degree) throw PreconditionError("ring_fit: not enough samples");
    std::vector<Complex> buf(values.begin(), values.end());
    dft(buf, /*inverse=*/false);
    std::vector<Complex> c(static_cast<size_t>(out_degree) + 1);
    double rk = 1.0;
    for (int k = 0; k <= out_degree; ++k) {
        c[static_cast<size_t>(k)] = buf[static_cast<size_t>(k)] / (static_cast<double>(n) * rk);
        rk *= r;
    }
    return Series(std::move(c));
}

} // namespace teichkit
