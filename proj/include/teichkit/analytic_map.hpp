#pragma once

#include <limits>

#include "teichkit/series.hpp"

namespace teichkit {

// A one-variable analytic map used as a left-composition factor h. Two
// concrete shapes cover everything this library needs: polynomials (exact
// coefficient composition) and Moebius transformations (az+b)/(cz+d)
// (closed-form derivatives of every order, pole-aware sampling).
class AnalyticMap {
public:
    enum class Kind { polynomial, moebius };

    static AnalyticMap identity();
    static AnalyticMap scaling(Complex s);
    static AnalyticMap polynomial(Series p);
    static AnalyticMap moebius(Complex a, Complex b, Complex c, Complex d);

    Kind kind() const noexcept { return kind_; }
    bool is_polynomial() const noexcept { return kind_ == Kind::polynomial; }
    const Series& poly() const;
    // Moebius entries (a, b, c, d); only valid for moebius kind.
    Complex ma() const { return a_; }
    Complex mb() const { return b_; }
    Complex mc() const { return c_; }
    Complex md() const { return d_; }

    Complex eval(Complex w) const;
    // order >= 1 pointwise derivative.
    Complex derivative(Complex w, int order) const;

    // Radius of the largest disk about 0 on which the map is analytic
    // (infinity for polynomials and affine maps).
    double analytic_radius() const;
    bool fixes_origin(double tol = 1e-13) const;

    // Series of h(f(z)) to out_degree. Polynomial h composes exactly at the
    // coefficient level; otherwise h(f) is sampled on |z| = 1 and refit by
    // discrete Fourier projection (f must map the closed disk inside the
    // domain of h; callers enforce that).
    Series composed(const Series& f, int out_degree) const;

    // Series of h^(order)(f(z)) to out_degree, order >= 1.
    Series derivative_composed(const Series& f, int order, int out_degree) const;

    // this ∘ inner. Supported for polynomial∘polynomial and moebius∘moebius.
    AnalyticMap after(const AnalyticMap& inner) const;

private:
    AnalyticMap() = default;

    Kind kind_ = Kind::polynomial;
    Series p_;                      // polynomial kind
    Complex a_{1}, b_{0}, c_{0}, d_{1};  // moebius kind
};

} // namespace teichkit
