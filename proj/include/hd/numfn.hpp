#ifndef HD_NUMFN_HPP
#define HD_NUMFN_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "hd/arith.hpp"

namespace hd {

/// A numerical function h: Z>=0 -> Z>=0 given by an integer polynomial,
/// coefficients ascending (h(j) = a_0 + a_1 j + ... + a_n j^n).
///
/// Construction certifies membership: a_0 = h(0) > 0, positive leading
/// coefficient (degree >= 1), and h(j) >= 0 for every integer j >= 0.
/// The nonnegativity check is finite: past the Cauchy root bound
/// M = ceil(1 + max_i |a_i| / a_n) the polynomial has no real roots and
/// is positive, so checking j = 0..M decides the whole range.
class NumFn {
  public:
    /// Certifying constructor. Throws ValidationError on rejection.
    static NumFn validate(std::vector<Integer> coeffs);

    /// Non-throwing variant for sweep loops; nullopt iff invalid.
    static std::optional<NumFn> try_validate(std::vector<Integer> coeffs);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Exact value h(j); j must be >= 0.
    Integer eval(const Integer& j) const;

    /// The finite certification bound M used at construction.
    const Integer& certification_bound() const { return check_bound_; }

    /// m * h for an integer m >= 1 (still valid, by linearity).
    NumFn scaled(const Integer& m) const;

  private:
    NumFn(std::vector<Integer> coeffs, Integer check_bound)
        : coeffs_(std::move(coeffs)), check_bound_(std::move(check_bound)) {}

    std::vector<Integer> coeffs_;
    Integer check_bound_;
};

/// The alternating binomial transform
///   beta(d, k) = sum_{j=0}^{k} (-1)^(k-j) C(d-j, k-j) h(j),
/// evaluated directly from the definition. Requires 0 <= k <= d.
Integer beta_direct(const NumFn& h, const Integer& d, const Integer& k);

/// Row d of the transform for k = 0..d.
struct BetaTable {
    Integer d;
    std::vector<Integer> values;
};

/// Computes row d by the Pascal-style recurrence
///   beta(d, 0) = h(0),
///   beta(d, d) = h(d) - beta(d-1, d-1),
///   beta(d, k) = beta(d-1, k) - beta(d-1, k-1)   for 0 < k < d,
/// which agrees entrywise with beta_direct.
BetaTable beta_table(const NumFn& h, const Integer& d);

/// Elementary upper bound floor(h(1) / h(0)) for the Hilbert depth.
Integer c_bound(const NumFn& h);

struct FirstFailure {
    Integer d;
    Integer k;
    Integer beta;
};

/// Result of the Hilbert depth scan.
///
/// Invariants: 0 <= hdepth <= c_bound; every certificate entry is >= 0;
/// first_failure, when present, has d = hdepth + 1 and beta < 0, and is
/// absent exactly when hdepth == c_bound.
struct HdepthReport {
    std::vector<Integer> coeffs;
    Integer hdepth;
    Integer c_bound;
    std::optional<FirstFailure> first_failure;
    BetaTable certificate;
};

/// Largest d with beta(d, k) >= 0 for all 0 <= k <= d.
///
/// Scans rows d = 0, 1, ... upward; the set of valid d is an initial
/// segment (row d+1 valid forces row d valid via
/// beta(d,k) = beta(d+1,k) + beta(d,k-1), by induction on k), so the
/// scan stops at the first failing row. Throws CapExceededError if the
/// scan reaches cap without a failure while cap < c_bound.
HdepthReport hdepth(const NumFn& h, const Integer& cap = 1000000);

nlohmann::json to_json(const HdepthReport& report);
nlohmann::json to_json(const BetaTable& table, const std::vector<Integer>& coeffs);

}  // namespace hd

#endif
