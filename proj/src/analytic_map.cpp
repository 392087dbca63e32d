#include "teichkit/analytic_map.hpp"

#include <algorithm>
#include <cmath>

#include "teichkit/errors.hpp"
#include "teichkit/fourier.hpp"

namespace teichkit {

AnalyticMap AnalyticMap::identity() { return polynomial(Series::identity()); }

AnalyticMap AnalyticMap::scaling(Complex s) { return polynomial(Series({Complex{}, s})); }

AnalyticMap AnalyticMap::polynomial(Series p) {
    AnalyticMap m;
    m.kind_ = Kind::polynomial;
    m.p_ = std::move(p);
    return m;
}

AnalyticMap AnalyticMap::moebius(Complex a, Complex b, Complex c, Complex d) {
    if (std::abs(a * d - b * c) <= 1e-15)
        throw PreconditionError("AnalyticMap::moebius: vanishing determinant");
    AnalyticMap m;
    m.kind_ = Kind::moebius;
    m.a_ = a; m.b_ = b; m.c_ = c; m.d_ = d;
    return m;
}

const Series& AnalyticMap::poly() const {
    if (kind_ != Kind::polynomial) throw PreconditionError("AnalyticMap: not a polynomial");
    return p_;
}

Complex AnalyticMap::eval(Complex w) const {
    if (kind_ == Kind::polynomial) return p_.eval(w);
    return (a_ * w + b_) / (c_ * w + d_);
}

Complex AnalyticMap::derivative(Complex w, int order) const {
    if (order < 1) throw PreconditionError("AnalyticMap::derivative: order < 1");
    if (kind_ == Kind::polynomial) {
        Series d = p_;
        for (int k = 0; k < order; ++k) d = d.derivative();
        return d.eval(w);
    }
    // h^(k)(w) = (-1)^(k-1) k! c^(k-1) (ad - bc) / (cw + d)^(k+1)
    const Complex det = a_ * d_ - b_ * c_;
    const Complex den = c_ * w + d_;
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) fact *= k;
    Complex num = det * fact;
    for (int k = 1; k < order; ++k) num *= -c_;
    Complex denp = den;
    for (int k = 0; k < order; ++k) denp *= den;
    return num / denp;
}

double AnalyticMap::analytic_radius() const {
    if (kind_ == Kind::polynomial || std::abs(c_) == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::abs(d_ / c_);
}

bool AnalyticMap::fixes_origin(double tol) const {
    return std::abs(eval(Complex{})) <= tol;
}

namespace {

// Sample fn(f(z)) on |z| = 1 and recover the Taylor coefficients by discrete
// Fourier projection.
template <typename Fn>
Series refit_composed(Fn&& fn, const Series& f, int out_degree) {
    const int samples = std::max(4 * (out_degree + 1), 256);
    std::vector<Complex> w = ring_values(f, 1.0, samples);
    for (auto& v : w) v = fn(v);
    return ring_fit(w, 1.0, out_degree);
}

} // namespace

Series AnalyticMap::composed(const Series& f, int out_degree) const {
    if (kind_ == Kind::polynomial) {
        if (std::abs(f.coeff(0)) != 0.0) {
            // General polynomial-in-polynomial Horner; truncation stays exact
            // in the f(0)=0 case handled by compose_poly.
            return refit_composed([this](Complex w) { return eval(w); }, f, out_degree);
        }
        return compose_poly(p_, f, out_degree);
    }
    return refit_composed([this](Complex w) { return eval(w); }, f, out_degree);
}

Series AnalyticMap::derivative_composed(const Series& f, int order, int out_degree) const {
    if (kind_ == Kind::polynomial && std::abs(f.coeff(0)) == 0.0) {
        Series d = p_;
        for (int k = 0; k < order; ++k) d = d.derivative();
        return compose_poly(d, f, out_degree);
    }
    return refit_composed([this, order](Complex w) { return derivative(w, order); }, f,
                          out_degree);
}

AnalyticMap AnalyticMap::after(const AnalyticMap& inner) const {
    if (kind_ == Kind::moebius && inner.kind_ == Kind::moebius) {
        return moebius(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                       c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
    }
    if (kind_ == Kind::polynomial && inner.kind_ == Kind::polynomial) {
        // Full-degree composition; no truncation.
        const Series& in = inner.p_;
        const int out_deg = std::max(p_.degree() * std::max(in.degree(), 0), 0);
        Series acc = Series::constant(p_.coeff(p_.degree()));
        for (int k = p_.degree() - 1; k >= 0; --k) {
            acc = mul(acc, in, out_deg);
            acc.set_coeff(0, acc.coeff(0) + p_.coeff(k));
        }
        return polynomial(acc);
    }
    throw PreconditionError("AnalyticMap::after: mixed polynomial/moebius composition");
}

} // namespace teichkit
