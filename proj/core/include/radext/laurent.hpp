#ifndef RADEXT_LAURENT_HPP
#define RADEXT_LAURENT_HPP

#include "radext/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace radext {

/// Laurent polynomial in one variable y with exact rational coefficients.
///
/// Stored sparsely as exponent -> coefficient. No stored coefficient is ever
/// zero, so the zero polynomial is the empty map and structural equality is
/// mathematical equality.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);

    /// Sums duplicate exponents and drops zero coefficients.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& raw);
    static LaurentPoly monomial(const Rational& coeff, int exponent);
    /// The variable y.
    static LaurentPoly y() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    // degree/valuation/leading/trailing throw ZeroPolynomial on zero.
    int degree() const;
    int valuation() const;
    const Rational& leading() const;
    const Rational& trailing() const;
    Rational coeff(int exponent) const;

    /// this * y^k
    LaurentPoly shifted(int k) const;
    LaurentPoly derivative() const;

    /// Exact evaluation; EvalAtPole if y0 == 0 and valuation < 0.
    Rational eval(const Rational& y0) const;
    double eval(double y0) const;

    /// Exact quotient in the Laurent ring Q[y, 1/y]; throws InexactDivision
    /// when `divisor` does not divide, ZeroPolynomial when it is zero.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /// Coefficients of y^(-valuation) * p, lowest degree first. Multiplying
    /// by a power of y keeps the sign on y > 0.
    std::vector<Rational> cleared_coefficients() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& b) { return a *= b; }
    friend LaurentPoly operator*(const Rational& a, LaurentPoly b) { return b *= a; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, highest exponent first, e.g. "2*y^3 + 3*y^2 + y".
    std::string to_string() const;

private:
    void add_term(int exponent, const Rational& coeff);

    Terms terms_;
};

enum class LaurentOp { Add, Mul };

LaurentPoly normalize(const std::vector<std::pair<int, Rational>>& raw);
LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);
inline LaurentPoly differentiate(const LaurentPoly& p) { return p.derivative(); }
inline Rational eval(const LaurentPoly& p, const Rational& y0) { return p.eval(y0); }

} // namespace radext

#endif
