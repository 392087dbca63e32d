#pragma once

#include <complex>
#include <span>
#include <vector>

namespace teichkit {

using Complex = std::complex<double>;

// Truncated power series c[0] + c[1] z + ... + c[degree] z^degree.
// Immutable value type; all arithmetic returns new series.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

    static Series zero(int degree);
    static Series constant(Complex value);
    static Series identity();                  // z
    static Series monomial(int k, Complex a);  // a z^k

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool empty() const noexcept { return c_.empty(); }
    Complex coeff(int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Complex{};
    }
    void set_coeff(int k, Complex v);
    std::span<const Complex> coeffs() const noexcept { return c_; }

    Series truncated(int deg) const;  // cut or zero-pad to the given degree
    Series derivative() const;
    Series antiderivative() const;    // primitive vanishing at 0
    Complex eval(Complex z) const;    // Horner

    double max_abs_coeff() const;
    double l1() const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(Complex s);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Complex s, Series a) { return a *= s; }
    friend Series operator*(Series a, Complex s) { return a *= s; }

private:
    std::vector<Complex> c_;
};

// Product truncated to out_degree.
Series mul(const Series& a, const Series& b, int out_degree);

// Quotient num/den truncated to out_degree; requires den(0) != 0
// (throws PreconditionError when |den(0)| <= pivot_tol).
Series div(const Series& num, const Series& den, int out_degree,
           double pivot_tol = 1e-12);

// exp of a series with vanishing constant term.
Series exp_series(const Series& s, int out_degree);

// Integer power, exponent >= 0.
Series pow_series(const Series& s, int exponent, int out_degree);

// outer(inner(z)) truncated to out_degree; requires inner(0) = 0.
Series compose_poly(const Series& outer, const Series& inner, int out_degree);

// max_k |a_k - b_k| over 0..upto (whole common range when upto < 0).
double coeff_distance(const Series& a, const Series& b, int upto = -1);

} // namespace teichkit
