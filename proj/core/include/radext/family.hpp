#ifndef RADEXT_FAMILY_HPP
#define RADEXT_FAMILY_HPP

#include "radext/laurent.hpp"
#include "radext/rational.hpp"
#include "radext/roots.hpp"

#include <string>
#include <variant>

namespace radext {

/// Parameters of psi(y) = y - A y^(1-n) - B y^(2-n) - C y^2 - D y^3, with n
/// the complex dimension.
struct ExtremalParams {
    Rational A;
    Rational B;
    Rational C;
    Rational D;
    int n = 2;

    friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Sign of the ambient space form: -1 hyperbolic, 0 flat, +1 projective.
enum class AmbientSign { Minus = -1, Zero = 0, Plus = 1 };

inline int value(AmbientSign eps) { return static_cast<int>(eps); }
/// InvalidArgument unless e is -1, 0 or 1.
AmbientSign ambient_sign(int e);

struct ConstHolSecCurv {
    friend bool operator==(const ConstHolSecCurv&, const ConstHolSecCurv&) = default;
};
struct KahlerEinstein {
    Rational lambda;
    friend bool operator==(const KahlerEinstein&, const KahlerEinstein&) = default;
};
struct CscK {
    Rational s;
    friend bool operator==(const CscK&, const CscK&) = default;
};
struct ExtremalProper {
    Rational gamma1;
    Rational gamma2;
    friend bool operator==(const ExtremalProper&, const ExtremalProper&) = default;
};

using MetricClass = std::variant<ConstHolSecCurv, KahlerEinstein, CscK, ExtremalProper>;

std::string tag_name(const MetricClass& cls);

/// Throws InvalidArgument when n < 1.
LaurentPoly build_psi(const ExtremalParams& p);

/// Most specific class: A=B=D=0, then B=D=0, then D=0.
MetricClass classify(const ExtremalParams& p);

struct ScalarCurvature {
    Rational gamma1;
    Rational gamma2;
    LaurentPoly s;
    LaurentPoly sigma;
};

/// s(y) = n(n-1)/y - y^(1-n) d^2/dy^2 [y^(n-1) psi], computed symbolically,
/// and sigma(y) = (n-1) psi / y + psi'. NonAffineScalar if s is not affine.
ScalarCurvature scalar_curvature(const ExtremalParams& p);

/// Parameters of the rescaled metric alpha*g: psi_alpha(y) = alpha psi(y/alpha).
/// NonPositiveScale unless alpha > 0.
ExtremalParams scale_params(const ExtremalParams& p, const Rational& alpha);

/// An end of a positivity domain.
struct Endpoint {
    enum class Kind { Zero, Infinity, ExactRoot, IsolatedRoot };
    Kind kind = Kind::Zero;
    /// The root for ExactRoot.
    Rational value;
    /// For IsolatedRoot: the open interval holding the irrational root.
    IsolatingInterval enclosure;

    static Endpoint zero() { return {}; }
    static Endpoint infinity() { return {Kind::Infinity, {}, {}}; }
    static Endpoint exact(Rational v) { return {Kind::ExactRoot, std::move(v), {}}; }
    static Endpoint isolated(IsolatingInterval iv) { return {Kind::IsolatedRoot, {}, std::move(iv)}; }

    bool is_root() const { return kind == Kind::ExactRoot || kind == Kind::IsolatedRoot; }
    double approx() const;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

std::string to_string(const Endpoint& e);

/// Maximal open interval (lo, hi) in y > 0 on which psi > 0.
struct PositivityDomain {
    Endpoint lo;
    Endpoint hi;

    /// Rational open interval inside the domain: exact where the endpoints
    /// are, and on the inner side of an isolating interval otherwise.
    Interval inner() const;
    friend bool operator==(const PositivityDomain&, const PositivityDomain&) = default;
};

std::string to_string(const PositivityDomain& d);

/// NotInteriorPoint unless y0 > 0 and psi(y0) > 0. Irrational endpoints are
/// isolated to width at most default_isolation_width().
PositivityDomain positivity_domain(const ExtremalParams& p, const Rational& y0);

} // namespace radext

#endif
