#ifndef DESCARTES_SCALAR_HPP
#define DESCARTES_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace descartes {

/// Three-valued sign of an exact scalar.
enum class Sign : int {
    negative = -1,
    zero = 0,
    positive = 1,
};

/// Sign of a product: sign(x)*sign(y) == sign(x*y).
constexpr Sign sign_product(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr Sign sign_negate(Sign a) {
    return static_cast<Sign>(-static_cast<int>(a));
}

char sign_char(Sign s);  // '+', '0' or '-'

/// Exact rational scalar. Always held in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) == 1. All arithmetic is exact; there is no
/// floating conversion anywhere in the interface. Only field operations and
/// order comparisons are used by the rest of the library, so any ordered
/// field could back this type; the shipped instantiation is the rationals
/// with unbounded integers.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, n/1
    Scalar(long n, long d);
    Scalar(mpz_class n, mpz_class d);

    /// Accepts "p", "+p", "-p", "p/q" with optionally signed parts.
    /// Rejects zero denominators and any other token shape.
    static Scalar parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Sign sign() const { return static_cast<Sign>(sgn(v_)); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// make_scalar(6, 4) == 3/2; make_scalar(3, -6) == -1/2. Throws on d == 0.
inline Scalar make_scalar(long n, long d) { return Scalar(n, d); }

inline Sign sign_of(const Scalar& x) { return x.sign(); }

/// Exact total-order comparison: -1, 0 or +1.
int compare(const Scalar& x, const Scalar& y);

Scalar abs(const Scalar& x);

/// Largest integer <= x, as a Scalar with denominator 1.
Scalar floor(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);
std::ostream& operator<<(std::ostream& os, Sign s);

}  // namespace descartes

#endif
