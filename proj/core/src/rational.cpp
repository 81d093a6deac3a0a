#include "radext/rational.hpp"

#include "radext/error.hpp"

#include <algorithm>
#include <cctype>

namespace radext {

namespace {

std::string_view trim(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

bool is_integer_literal(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    return !text.empty()
        && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view body = trim(text);
    if (body.find_first_of(".eE") != std::string_view::npos)
        throw Error(ErrorCode::FloatLiteralRefused, "'" + std::string(text) + "' is not an exact rational");

    const auto slash = body.find('/');
    const std::string_view num = trim(body.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(body.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");

    std::string num_str(num);
    if (num_str.front() == '+')
        num_str.erase(0, 1);
    Integer p(num_str, 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

int sign(const Rational& value) { return sgn(value); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& value)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rational pow(const Rational& value, int exponent)
{
    if (exponent < 0) {
        if (value == 0)
            throw Error(ErrorCode::EvalAtPole, "negative power of zero");
        return pow(Rational(1) / value, -exponent);
    }
    Rational result(1);
    Rational base = value;
    auto e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e != 0)
            base *= base;
    }
    return result;
}

Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi)
{
    if (hi && !(lo < *hi))
        throw Error(ErrorCode::InvalidInterval, "simplest_between needs lo < hi");

    if (lo < 0) {
        if (!hi || *hi > 0)
            return Rational(0);
        // (lo, hi) lies in the negatives: mirror.
        return -simplest_between(-*hi, Rational(-lo));
    }

    const Integer f = floor(lo);
    const Rational next(f + 1);
    if (!hi || next < *hi)
        return next;

    // lo and hi share the unit cell (f, f+1]; recurse on reciprocals of the
    // fractional parts (continued-fraction descent).
    const Rational lo_frac = lo - Rational(f);
    const Rational hi_frac = *hi - Rational(f);
    std::optional<Rational> inv_hi;
    if (lo_frac != 0)
        inv_hi = Rational(1) / lo_frac;
    const Rational inner = simplest_between(Rational(1) / hi_frac, inv_hi);
    return Rational(f) + Rational(1) / inner;
}

} // namespace radext
