#ifndef RADEXT_RESOLVABILITY_HPP
#define RADEXT_RESOLVABILITY_HPP

#include "radext/det.hpp"
#include "radext/family.hpp"
#include "radext/laurent.hpp"
#include "radext/roots.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace radext {

/// Q_1 .. Q_K for fixed parameters and ambient sign:
///   Q_1 = y,  Q_{k+1} = (eps*y - k) Q_k + Q_k' psi.
/// Immutable once built.
class QSequence {
public:
    QSequence(const ExtremalParams& params, AmbientSign eps, int K);

    /// 1-based; InvalidArgument outside 1..size().
    const LaurentPoly& operator[](int k) const;
    int size() const noexcept { return static_cast<int>(entries_.size()); }

    const ExtremalParams& params() const noexcept { return params_; }
    AmbientSign eps() const noexcept { return eps_; }
    const LaurentPoly& psi() const noexcept { return psi_; }

private:
    ExtremalParams params_;
    AmbientSign eps_;
    LaurentPoly psi_;
    std::vector<LaurentPoly> entries_;
};

/// InvalidArgument if K < 1.
QSequence q_sequence(const ExtremalParams& p, AmbientSign eps, int K);

/// One step of the recursion: Q_{k+1} from Q_k.
LaurentPoly next_q(const LaurentPoly& qk, int k, AmbientSign eps, const LaurentPoly& psi);

/// y * prod_{j=1}^{k-1} (eps*y - j)
LaurentPoly falling_product(AmbientSign eps, int k);

/// P_k through its own recursion, checked against q_sequence through
///   Q_k = y prod_{j<k}(eps y - j) + psi P_k / y^((k-2)n).
/// ReconciliationFailure if the two disagree.
LaurentPoly p_from_q(const ExtremalParams& p, AmbientSign eps, int k);

/// Right-hand side of the identity above for a given P_k.
LaurentPoly q_from_p(const ExtremalParams& p, AmbientSign eps, int k, const LaurentPoly& pk);

struct Predicted {
    int degree = 0;
    Rational coeff;
    friend bool operator==(const Predicted&, const Predicted&) = default;
};
struct Degenerate {
    friend bool operator==(const Degenerate&, const Degenerate&) = default;
};
using ExtremePrediction = std::variant<Predicted, Degenerate>;

enum class Extreme { Leading, Lower };

/// Closed-form degree and coefficient of the highest (Leading) or lowest
/// (Lower) term of Q_k^eps, n >= 2, k >= 2. The D = 0 leading form depends
/// on eps; the others do not. Degenerate when the formula's product vanishes
/// or when neither A nor B is nonzero for Lower.
/// DimensionTooSmall if n < 2, InvalidArgument if k < 2.
ExtremePrediction extremes_closed_form(const ExtremalParams& p, AmbientSign eps, int k, Extreme which);

struct ClearUpTo {
    int K = 0;
    friend bool operator==(const ClearUpTo&, const ClearUpTo&) = default;
};
struct ObstructedAt {
    int k = 0;
    Rational witness;
    Rational value;
    friend bool operator==(const ObstructedAt&, const ObstructedAt&) = default;
};
struct IdenticallyZeroFrom {
    int k = 0;
    friend bool operator==(const IdenticallyZeroFrom&, const IdenticallyZeroFrom&) = default;
};
using ObstructionVerdict = std::variant<ClearUpTo, ObstructedAt, IdenticallyZeroFrom>;

struct ObstructionReport {
    ObstructionVerdict verdict;
    Interval domain;
    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

inline bool is_obstructed(const ObstructionReport& r) { return std::holds_alternative<ObstructedAt>(r.verdict); }

/// Smallest k <= K with Q_k^eps taking a negative value on `domain`. A
/// necessary-condition test: a clear report never proves resolvability.
/// DimensionTooSmall if n < 2; DomainNotPositive unless psi > 0 on domain.
ObstructionReport obstruction_scan(const ExtremalParams& p, AmbientSign eps, const Interval& domain, int K);
/// Same scan over an already built sequence (K <= seq.size()).
ObstructionReport obstruction_scan(const QSequence& seq, const Interval& domain, int K);

/// The I x I matrix sum_{i<=alpha} binom(alpha,i) beta!/(beta-i)! Q_{alpha+beta-i}.
/// Needs seq.size() >= 2I.
LaurentMatrix dim1_matrix(const QSequence& seq, int I);

struct DetEntry {
    int I = 0;
    LaurentPoly det;
    /// Sign certificate for det on the domain.
    PositivityCertificate certificate;
};

struct DetReport {
    std::vector<DetEntry> entries;
    std::optional<int> first_violation;
    Interval domain;
};

/// Determinant test for n = 1. WrongDimension if n != 1.
DetReport det_test_dim1(const ExtremalParams& p, AmbientSign eps, int Imax, const Interval& domain);

/// True iff Q_2^eps == 0, i.e. psi = y - eps y^2.
bool detect_space_form(const ExtremalParams& p, AmbientSign eps);

/// Smallest k <= K with Q_k^eps == 0.
std::optional<int> zero_index(const ExtremalParams& p, AmbientSign eps, int K);

} // namespace radext

#endif
