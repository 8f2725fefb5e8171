#ifndef HD_RATPOLY_HPP
#define HD_RATPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hd/arith.hpp"

namespace hd {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly from_integers(const std::vector<Integer>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign_of(eval(x)); }

    RatPoly derivative() const;
    RatPoly monic() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& other) const;
    RatPoly operator-(const RatPoly& other) const;
    RatPoly operator*(const RatPoly& other) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& other) const { return coeffs_ == other.coeffs_; }

    /// Euclidean division, (quotient, remainder); divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (zero when both arguments are zero).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'): same distinct roots, all simple. p must be nonzero.
RatPoly squarefree_part(const RatPoly& p);

/// How the (squarefree) polynomial crosses zero over an isolating interval.
enum class SignChange { DownUp, UpDown };

/// Open isolating interval for one simple real root. sturm_isolate
/// always produces lo < hi with opposite polynomial signs at the
/// endpoints; other producers may return an exact rational root as a
/// degenerate interval with lo == hi.
struct RootInterval {
    Rational lo;
    Rational hi;
    SignChange change = SignChange::DownUp;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

/// Signed remainder sequence of a squarefree polynomial.
struct SturmChain {
    std::vector<RatPoly> seq;

    static SturmChain build(const RatPoly& squarefree);

    int variations_at(const Rational& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;
    /// Distinct roots in (lo, hi]; endpoints must not be roots of seq[0].
    int count_roots(const Rational& lo, const Rational& hi) const;
    int count_all_roots() const;
};

/// Isolating intervals (width <= tol, pairwise disjoint, ascending) for
/// every distinct real root of p. Multiple roots are collapsed by first
/// replacing p with its squarefree part. Rejects the zero polynomial.
/// The default tolerance resolves two-decimal approximations safely.
std::vector<RootInterval> sturm_isolate(const RatPoly& p,
                                        const Rational& tol = Rational(1, 1000000));

/// Continues bisection of an isolating interval of the squarefree p
/// (endpoint signs must differ) until its width is at most tol.
RootInterval refine_interval(const RatPoly& p, RootInterval iv, const Rational& tol);

/// Smallest integer d in [lo, hi] with x^2/2 - s*x + k negative at d,
/// i.e. strictly between the roots s +- sqrt(s^2 - 2k); nullopt when the
/// parabola never goes negative there. Decided exactly.
std::optional<Integer> first_integer_below_parabola(const Rational& s,
                                                    const Rational& k,
                                                    const Integer& lo,
                                                    const Integer& hi);

}  // namespace hd

#endif
