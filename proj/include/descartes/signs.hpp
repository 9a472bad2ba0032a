#ifndef DESCARTES_SIGNS_HPP
#define DESCARTES_SIGNS_HPP

#include <vector>

#include "descartes/polynomial.hpp"
#include "descartes/scalar.hpp"

namespace descartes {

using SignSequence = std::vector<Sign>;

SignSequence signs_of(const std::vector<Scalar>& a);

/// Number of index pairs (p, q) with p < q, a_p * a_q < 0 and a_i = 0 for
/// all p < i < q, counted by direct pair enumeration. This is the defining
/// form and serves as the oracle for sc_scan.
int sc_literal(const std::vector<Scalar>& a);
int sc_literal(const SignSequence& s);

/// Same count, computed independently by dropping zero entries and counting
/// adjacent sign flips.
int sc_scan(const std::vector<Scalar>& a);
int sc_scan(const SignSequence& s);

/// sc_scan over the coefficient sequence of f; 0 for the zero polynomial.
int sc_poly(const Polynomial& f);

}  // namespace descartes

#endif
