#include "teichkit/series.hpp"

#include <algorithm>
#include <cmath>

#include "teichkit/errors.hpp"

namespace teichkit {

Series Series::zero(int degree) {
    return Series(std::vector<Complex>(static_cast<size_t>(degree) + 1, Complex{}));
}

Series Series::constant(Complex value) { return Series({value}); }

Series Series::identity() { return Series({Complex{}, Complex{1.0}}); }

Series Series::monomial(int k, Complex a) {
    std::vector<Complex> c(static_cast<size_t>(k) + 1, Complex{});
    c.back() = a;
    return Series(std::move(c));
}

void Series::set_coeff(int k, Complex v) {
    if (k < 0) throw PreconditionError("Series::set_coeff: negative index");
    if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(k) + 1, Complex{});
    c_[static_cast<size_t>(k)] = v;
}

Series Series::truncated(int deg) const {
    std::vector<Complex> c(static_cast<size_t>(deg) + 1, Complex{});
    const size_t n = std::min(c.size(), c_.size());
    std::copy(c_.begin(), c_.begin() + static_cast<long>(n), c.begin());
    return Series(std::move(c));
}

Series Series::derivative() const {
    if (c_.size() <= 1) return Series({Complex{}});
    std::vector<Complex> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Series(std::move(d));
}

Series Series::antiderivative() const {
    std::vector<Complex> a(c_.size() + 1, Complex{});
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Series(std::move(a));
}

Complex Series::eval(Complex z) const {
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Series::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
}

double Series::l1() const {
    double s = 0.0;
    for (const auto& c : c_) s += std::abs(c);
    return s;
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex{});
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex{});
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Series& Series::operator*=(Complex s) {
    for (auto& c : c_) c *= s;
    return *this;
}

Series mul(const Series& a, const Series& b, int out_degree) {
    std::vector<Complex> r(static_cast<size_t>(out_degree) + 1, Complex{});
    const int da = std::min(a.degree(), out_degree);
    for (int i = 0; i <= da; ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex{}) continue;
        const int jmax = std::min(b.degree(), out_degree - i);
        for (int j = 0; j <= jmax; ++j) r[static_cast<size_t>(i + j)] += ai * b.coeff(j);
    }
    return Series(std::move(r));
}

Series div(const Series& num, const Series& den, int out_degree, double pivot_tol) {
    const Complex d0 = den.coeff(0);
    if (std::abs(d0) <= pivot_tol)
        throw PreconditionError("series division: denominator vanishes at 0");
    std::vector<Complex> q(static_cast<size_t>(out_degree) + 1, Complex{});
    for (int k = 0; k <= out_degree; ++k) {
        Complex s = num.coeff(k);
        for (int j = 1; j <= k; ++j) s -= den.coeff(j) * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = s / d0;
    }
    return Series(std::move(q));
}

Series exp_series(const Series& s, int out_degree) {
    if (std::abs(s.coeff(0)) != 0.0)
        throw PreconditionError("exp_series: constant term must vanish");
    std::vector<Complex> e(static_cast<size_t>(out_degree) + 1, Complex{});
    e[0] = 1.0;
    for (int k = 1; k <= out_degree; ++k) {
        Complex acc{};
        for (int j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * s.coeff(j) * e[static_cast<size_t>(k - j)];
        e[static_cast<size_t>(k)] = acc / static_cast<double>(k);
    }
    return Series(std::move(e));
}

Series pow_series(const Series& s, int exponent, int out_degree) {
    if (exponent < 0) throw PreconditionError("pow_series: negative exponent");
    Series r = Series::constant(1.0).truncated(out_degree);
    Series base = s;
    int e = exponent;
    while (e > 0) {
        if (e & 1) r = mul(r, base, out_degree);
        base = mul(base, base, out_degree);
        e >>= 1;
    }
    return r;
}

Series compose_poly(const Series& outer, const Series& inner, int out_degree) {
    if (std::abs(inner.coeff(0)) != 0.0)
        throw PreconditionError("compose_poly: inner series must vanish at 0");
    // Horner in the outer coefficients; each step is one truncated product.
    Series acc = Series::constant(outer.coeff(outer.degree()));
    for (int k = outer.degree() - 1; k >= 0; --k) {
        acc = mul(acc, inner, out_degree);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc.truncated(out_degree);
}

double coeff_distance(const Series& a, const Series& b, int upto) {
    const int hi = upto >= 0 ? upto : std::max(a.degree(), b.degree());
    double m = 0.0;
    for (int k = 0; k <= hi; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

} // namespace teichkit
