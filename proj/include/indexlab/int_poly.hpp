#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "indexlab/integer.hpp"

namespace indexlab {

/// Dense univariate polynomial over the integers, ascending coefficients.
/// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, unsigned degree);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i (zero beyond the degree).
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Integer operator()(const Integer& x) const;
    IntPoly derivative() const;
    Integer content() const;
    IntPoly primitive_part() const;
    /// f(x + c)
    IntPoly shifted(const Integer& c) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& c, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// Divide every coefficient by c; throws InvalidInput if inexact.
    IntPoly divided_exactly(const Integer& c) const;

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Quotient and remainder by a monic divisor (exact over Z).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f,
/// by the subresultant pseudo-remainder sequence. Throws InvalidInput on
/// a zero argument.
Integer poly_resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f). Throws InvalidDegree for deg f < 1.
Integer poly_discriminant(const IntPoly& f);

/// Accepts "[c0,c1,...,cn]" (ascending) or a symbolic expression such as
/// "x^3 - 13*x + 4". Throws ParseError.
IntPoly parse_poly(std::string_view text);

}  // namespace indexlab
