#ifndef DESCARTES_POLYNOMIAL_HPP
#define DESCARTES_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "descartes/scalar.hpp"

namespace descartes {

/// Dense univariate polynomial over Scalar, coefficients in ascending order
/// (index i holds the coefficient of x^i). The coefficient vector is trimmed
/// at construction so that either it is empty (the zero polynomial) or its
/// last entry is nonzero; degree is therefore structural.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Scalar> coefficients);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Scalar c);

    /// Parses a whitespace-separated ascending coefficient list, e.g.
    /// "6 -11 6 -1". An empty list denotes the zero polynomial.
    static Polynomial parse(std::string_view text);

    bool is_zero() const { return coef_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    const std::vector<Scalar>& coefficients() const { return coef_; }

    /// Coefficient of x^i; zero beyond the degree.
    Scalar coefficient(std::size_t i) const;

    /// Leading coefficient; throws for the zero polynomial.
    const Scalar& leading() const;

    /// Exact value at x by Horner accumulation.
    Scalar evaluate(const Scalar& x) const;

    /// Ascending coefficient list, entries in Scalar text form.
    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

private:
    std::vector<Scalar> coef_;
};

/// (c - x) * g. The product coefficients satisfy a_k = c*b_k - b_{k-1}.
/// Throws for zero g.
Polynomial mul_linear(const Polynomial& g, const Scalar& c);

struct DivLinearResult {
    Polynomial quotient;
    Scalar remainder;  // equals f(c); zero iff (c - x) divides f exactly
};

/// Synthetic division by (c - x): f = (c - x) * quotient + remainder.
/// Throws for zero f.
DivLinearResult div_linear(const Polynomial& f, const Scalar& c);

/// Coefficient scaling a_i -> a_i * c^i, i.e. x -> c*x in the argument.
/// Requires c > 0 (the per-coefficient signs are preserved only then).
Polynomial scale_argument(const Polynomial& f, const Scalar& c);

/// Prefix sums b_k = a_0 + ... + a_k for k < n. Requires length >= 2,
/// a_n != 0 and total sum zero; the result is exactly the coefficient list
/// g with (1 - x) * g == a.
std::vector<Scalar> partial_sum_transform(const std::vector<Scalar>& a);

Polynomial derivative(const Polynomial& f);

/// Monic greatest common divisor by exact Euclidean remainders.
/// Throws when both inputs are zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// B = 1 + max_{i<n} |a_i| / |a_n|; every root r satisfies |r| < B.
/// Requires degree >= 1.
Scalar cauchy_bound(const Polynomial& f);

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Exact polynomial long division, divisor nonzero.
DivModResult divmod(const Polynomial& f, const Polynomial& g);

/// f scaled so the leading coefficient is 1. Throws for zero f.
Polynomial monic(const Polynomial& f);

/// f / g when the division is exact; throws otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// f(shift + scale*x), computed by Horner over polynomials. scale != 0.
Polynomial compose_affine(const Polynomial& f, const Scalar& shift, const Scalar& scale);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace descartes

#endif
