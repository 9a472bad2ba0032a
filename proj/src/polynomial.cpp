#include "descartes/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace descartes {

namespace {

void trim(std::vector<Scalar>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coef_(std::move(coefficients)) {
    trim(coef_);
}

Polynomial Polynomial::constant(Scalar c) {
    std::vector<Scalar> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<Scalar> coeffs;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) coeffs.push_back(Scalar::parse(token));
    return Polynomial(std::move(coeffs));
}

Scalar Polynomial::coefficient(std::size_t i) const {
    return i < coef_.size() ? coef_[i] : Scalar(0);
}

const Scalar& Polynomial::leading() const {
    if (coef_.empty()) throw std::invalid_argument("polynomial: zero polynomial has no leading coefficient");
    return coef_.back();
}

Scalar Polynomial::evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Polynomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (i) out += ' ';
        out += coef_[i].str();
    }
    return out;
}

Polynomial mul_linear(const Polynomial& g, const Scalar& c) {
    if (g.is_zero()) throw std::invalid_argument("mul_linear: zero polynomial");
    const auto& b = g.coefficients();
    const std::size_t n = b.size();  // result has n+1 coefficients
    std::vector<Scalar> a(n + 1);
    a[0] = c * b[0];
    for (std::size_t k = 1; k < n; ++k) a[k] = c * b[k] - b[k - 1];
    a[n] = -b[n - 1];
    return Polynomial(std::move(a));
}

DivLinearResult div_linear(const Polynomial& f, const Scalar& c) {
    if (f.is_zero()) throw std::invalid_argument("div_linear: zero polynomial");
    const auto& a = f.coefficients();
    const std::size_t n = a.size() - 1;
    if (n == 0) return {Polynomial::zero(), a[0]};
    // a_k = c*b_k - b_{k-1} for 0 < k < n and a_n = -b_{n-1}, solved top-down;
    // the remainder a_0 - c*b_0 equals f(c).
    std::vector<Scalar> b(n);
    b[n - 1] = -a[n];
    for (std::size_t k = n - 1; k > 0; --k) b[k - 1] = c * b[k] - a[k];
    Scalar remainder = a[0] - c * b[0];
    return {Polynomial(std::move(b)), std::move(remainder)};
}

Polynomial scale_argument(const Polynomial& f, const Scalar& c) {
    if (c.sign() != Sign::positive)
        throw std::invalid_argument("scale_argument: scale must be positive");
    std::vector<Scalar> out(f.coefficients());
    Scalar power(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        power *= c;
        out[i] *= power;
    }
    return Polynomial(std::move(out));
}

std::vector<Scalar> partial_sum_transform(const std::vector<Scalar>& a) {
    if (a.size() < 2) throw std::invalid_argument("partial_sum_transform: need at least two entries");
    if (a.back().is_zero()) throw std::invalid_argument("partial_sum_transform: last entry must be nonzero");
    std::vector<Scalar> b(a.size() - 1);
    Scalar sum(0);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        sum += a[k];
        b[k] = sum;
    }
    if (sum + a.back() != Scalar(0))
        throw std::invalid_argument("partial_sum_transform: entries must sum to zero");
    return b;
}

Polynomial derivative(const Polynomial& f) {
    const auto& a = f.coefficients();
    if (a.size() <= 1) return Polynomial::zero();
    std::vector<Scalar> d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = Scalar(static_cast<long>(i)) * a[i];
    return Polynomial(std::move(d));
}

DivModResult divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (f.degree() < g.degree()) return {Polynomial::zero(), f};
    std::vector<Scalar> rem(f.coefficients());
    const auto& d = g.coefficients();
    const std::size_t dn = d.size() - 1;
    std::vector<Scalar> quot(rem.size() - dn);
    for (std::size_t k = rem.size() - dn; k-- > 0;) {
        Scalar q = rem[dn + k] / d[dn];
        quot[k] = q;
        if (!q.is_zero())
            for (std::size_t j = 0; j <= dn; ++j) rem[j + k] -= q * d[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    const Scalar& lead = f.leading();
    std::vector<Scalar> out(f.coefficients());
    for (auto& c : out) c /= lead;
    return Polynomial(std::move(out));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    auto [quotient, remainder] = divmod(f, g);
    if (!remainder.is_zero()) throw std::invalid_argument("exact_divide: division is not exact");
    return quotient;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd: both polynomials are zero");
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        // monic remainders keep the coefficient growth of rational Euclid in check
        b = r.is_zero() ? Polynomial::zero() : monic(r);
    }
    return monic(a);
}

Scalar cauchy_bound(const Polynomial& f) {
    if (f.degree() < 1) throw std::invalid_argument("cauchy_bound: degree must be at least 1");
    const auto& a = f.coefficients();
    const Scalar lead = abs(a.back());
    Scalar max(0);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Scalar q = abs(a[i]) / lead;
        if (q > max) max = std::move(q);
    }
    return Scalar(1) + max;
}

Polynomial compose_affine(const Polynomial& f, const Scalar& shift, const Scalar& scale) {
    if (scale.is_zero()) throw std::invalid_argument("compose_affine: zero scale");
    // Horner with the linear polynomial (shift + scale*x) as the argument.
    std::vector<Scalar> acc;
    const auto& a = f.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        std::vector<Scalar> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += shift * acc[i];
            next[i + 1] += scale * acc[i];
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

}  // namespace descartes
