#include "descartes/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace descartes {

char sign_char(Sign s) {
    switch (s) {
        case Sign::negative: return '-';
        case Sign::zero: return '0';
        case Sign::positive: return '+';
    }
    return '?';
}

Scalar::Scalar(long n, long d) {
    if (d == 0) throw std::invalid_argument("scalar: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Scalar::Scalar(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw std::invalid_argument("scalar: zero denominator");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();
}

namespace {

// [+-]?digits; returns false on any other shape
bool scan_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!scan_integer(num_part))
        throw std::invalid_argument("scalar: cannot parse '" + std::string(text) + "'");
    mpz_class num(std::string(num_part), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        if (!scan_integer(den_part))
            throw std::invalid_argument("scalar: cannot parse '" + std::string(text) + "'");
        den = mpz_class(std::string(den_part), 10);
        if (sgn(den) == 0)
            throw std::invalid_argument("scalar: zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(std::move(num), std::move(den));
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.v_ = -v_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    v_ += o.v_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    v_ -= o.v_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    v_ *= o.v_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::invalid_argument("scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

int compare(const Scalar& x, const Scalar& y) {
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

Scalar abs(const Scalar& x) { return x.sign() == Sign::negative ? -x : x; }

Scalar floor(const Scalar& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return Scalar(std::move(q), mpz_class(1));
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

std::ostream& operator<<(std::ostream& os, Sign s) { return os << sign_char(s); }

}  // namespace descartes
