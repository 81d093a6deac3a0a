#include "radext/laurent.hpp"

#include "radext/error.hpp"

#include <cmath>
#include <sstream>

namespace radext {

LaurentPoly::LaurentPoly(const Rational& constant)
{
    add_term(0, constant);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& raw)
{
    LaurentPoly p;
    for (const auto& [exponent, coeff] : raw)
        p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent)
{
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int LaurentPoly::degree() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::valuation() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& LaurentPoly::leading() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

const Rational& LaurentPoly::trailing() const
{
    if (is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "trailing coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Rational LaurentPoly::coeff(int exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

LaurentPoly LaurentPoly::derivative() const
{
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (e != 0)
            out.terms_.emplace_hint(out.terms_.end(), e - 1, c * e);
    }
    return out;
}

Rational LaurentPoly::eval(const Rational& y0) const
{
    if (is_zero())
        return Rational(0);
    if (y0 == 0) {
        if (valuation() < 0)
            throw Error(ErrorCode::EvalAtPole, "evaluation at y = 0 with negative valuation");
        return coeff(0);
    }
    // Horner over the cleared polynomial, then restore the y^valuation factor.
    const int val = valuation();
    Rational acc(0);
    int current = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        while (current > it->first) {
            acc *= y0;
            --current;
        }
        acc += it->second;
    }
    while (current > val) {
        acc *= y0;
        --current;
    }
    return acc * pow(y0, val);
}

double LaurentPoly::eval(double y0) const
{
    double acc = 0.0;
    for (const auto& [e, c] : terms_)
        acc += c.get_d() * std::pow(y0, e);
    return acc;
}

std::vector<Rational> LaurentPoly::cleared_coefficients() const
{
    if (is_zero())
        return {};
    const int val = valuation();
    std::vector<Rational> dense(static_cast<std::size_t>(degree() - val + 1));
    for (const auto& [e, c] : terms_)
        dense[static_cast<std::size_t>(e - val)] = c;
    return dense;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const
{
    if (divisor.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    if (is_zero())
        return {};

    // divisor = y^vb * b0 with b0(0) != 0, so divisibility in the Laurent ring
    // is divisibility of the cleared numerator by b0 in Q[y].
    std::vector<Rational> rem = cleared_coefficients();
    const std::vector<Rational> den = divisor.cleared_coefficients();
    if (rem.size() < den.size())
        throw Error(ErrorCode::InexactDivision, "divisor has larger span than dividend");

    const std::size_t qlen = rem.size() - den.size() + 1;
    std::vector<Rational> quot(qlen);
    const Rational& lead = den.back();
    for (std::size_t i = qlen; i-- > 0;) {
        const Rational factor = rem[i + den.size() - 1] / lead;
        quot[i] = factor;
        if (factor == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[i + j] -= factor * den[j];
    }
    for (const auto& r : rem) {
        if (r != 0)
            throw Error(ErrorCode::InexactDivision, "nonzero remainder");
    }

    LaurentPoly out;
    const int base = valuation() - divisor.valuation();
    for (std::size_t i = 0; i < qlen; ++i)
        out.add_term(base + static_cast<int>(i), quot[i]);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << '*';
        os << 'y';
        if (e != 1)
            os << '^' << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
}

LaurentPoly normalize(const std::vector<std::pair<int, Rational>>& raw)
{
    return LaurentPoly::from_terms(raw);
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op)
{
    return op == LaurentOp::Add ? a + b : a * b;
}

} // namespace radext
