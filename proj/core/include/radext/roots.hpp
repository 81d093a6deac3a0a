#ifndef RADEXT_ROOTS_HPP
#define RADEXT_ROOTS_HPP

#include "radext/laurent.hpp"
#include "radext/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace radext {

/// Open interval (lo, hi). A missing bound is -infinity (lo) or +infinity (hi).
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    /// Throws InvalidInterval unless lo < hi.
    static Interval open(std::optional<Rational> lo, std::optional<Rational> hi);
    static Interval positive_axis() { return open(Rational(0), std::nullopt); }

    bool contains(const Rational& x) const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

/// One real root. When `exact`, lo == hi == the root. Otherwise the open
/// interval (lo, hi) holds exactly one root of the polynomial it came from.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    Rational width() const { return hi - lo; }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Default isolation width used when a root must be pinned down: 2^-20.
Rational default_isolation_width();

/// Sturm chain of the square-free part of y^(-val) * p. Counts and locates
/// the distinct real roots of p on y > 0 exactly.
class SturmSequence {
public:
    explicit SturmSequence(const LaurentPoly& p);

    /// Number of sign variations of the chain at x (zeros skipped).
    int variations(const Rational& x) const;
    int variations_at_infinity() const;
    /// Distinct roots in the open interval (a, b); an empty b is +infinity.
    int count_roots(const Rational& a, const std::optional<Rational>& b) const;
    /// Sign of the square-free part at x; same zero set as p on y != 0.
    int sign_at(const Rational& x) const;
    /// Strict upper bound on |root| (Cauchy).
    Rational root_bound() const;

    std::size_t length() const noexcept { return chain_.size(); }
    /// Degree of the square-free part.
    int squarefree_degree() const;

    /// Isolating intervals for every root in (a, b), sorted ascending; a >= 0.
    std::vector<IsolatingInterval> isolate(const Rational& a, const std::optional<Rational>& b) const;
    /// One bisection step; may turn the interval exact.
    void bisect(IsolatingInterval& iv) const;
    /// Bisect until exact or width <= `width`.
    void refine(IsolatingInterval& iv, const Rational& width) const;
    /// Detects a rational root hiding inside `iv` by testing the simplest
    /// rational in successively refined intervals down to `width`.
    void try_make_exact(IsolatingInterval& iv, const Rational& width) const;

private:
    std::vector<std::vector<Integer>> chain_;
};

/// Every positive real root of p, one isolating interval each, ascending.
/// ZeroPolynomial if p == 0.
std::vector<IsolatingInterval> isolate_positive_roots(const LaurentPoly& p);

/// Roots of p inside the open interval I (I.lo must be >= 0).
std::vector<IsolatingInterval> isolate_roots_in(const LaurentPoly& p, const Interval& interval);

struct NonnegativeOn {
    Interval interval;
    friend bool operator==(const NonnegativeOn&, const NonnegativeOn&) = default;
};

struct NegativeWitness {
    Rational point;
    Rational value;
    friend bool operator==(const NegativeWitness&, const NegativeWitness&) = default;
};

struct IdenticallyZero {
    friend bool operator==(const IdenticallyZero&, const IdenticallyZero&) = default;
};

using PositivityCertificate = std::variant<NonnegativeOn, NegativeWitness, IdenticallyZero>;

/// Exact sign verdict for p on the open interval I with I.lo >= 0.
///
/// Between consecutive distinct roots the sign is constant, so one exact
/// evaluation per gap decides it; the witness is the simplest rational of
/// the first negative gap. An unbounded right end is handled by the last gap.
PositivityCertificate certify_sign_on_interval(const LaurentPoly& p, const Interval& interval);

bool is_nonnegative(const PositivityCertificate& cert);

} // namespace radext

#endif
