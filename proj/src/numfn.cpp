#include "hd/numfn.hpp"

namespace hd {

namespace {

// int64 fast path for the certification loop: usable when the largest
// intermediate Horner value provably fits.
bool fits_fast_path(const std::vector<Integer>& coeffs, const Integer& bound) {
    Integer max_abs = 0;
    for (const Integer& a : coeffs) {
        Integer m = abs(a);
        if (m > max_abs) {
            max_abs = m;
        }
    }
    Integer worst = max_abs * Integer(coeffs.size());
    Integer scale = bound + 1;
    for (size_t i = 1; i < coeffs.size(); ++i) {
        worst *= scale;
    }
    return worst.fits_slong_p();
}

}  // namespace

NumFn NumFn::validate(std::vector<Integer> coeffs) {
    if (coeffs.empty()) {
        throw DomainError("NumFn: empty coefficient list");
    }
    while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) {
        coeffs.pop_back();
    }
    if (sgn(coeffs.front()) <= 0) {
        throw ValidationError(ValidationFailure::NonPositiveConstantTerm,
                              "NumFn: h(0) must be positive");
    }
    const size_t n = coeffs.size() - 1;
    if (n >= 1 && sgn(coeffs.back()) < 0) {
        throw ValidationError(ValidationFailure::NegativeLeading,
                              "NumFn: leading coefficient must be positive");
    }
    Integer bound = 0;
    if (n >= 1) {
        Integer max_abs = 0;
        for (const Integer& a : coeffs) {
            Integer m = abs(a);
            if (m > max_abs) {
                max_abs = m;
            }
        }
        bound = 1 + ceil_div(max_abs, coeffs.back());
    }

    if (n >= 1 && fits_fast_path(coeffs, bound)) {
        const long m = bound.get_si();
        std::vector<long> c(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            c[i] = coeffs[i].get_si();
        }
        for (long j = 0; j <= m; ++j) {
            long acc = 0;
            for (size_t i = c.size(); i-- > 0;) {
                acc = acc * j + c[i];
            }
            if (acc < 0) {
                throw ValidationError(ValidationFailure::NegativeValue,
                                      "NumFn: h(" + std::to_string(j) + ") < 0",
                                      Integer(j));
            }
        }
    } else {
        for (Integer j = 0; j <= bound; ++j) {
            Integer acc = 0;
            for (size_t i = coeffs.size(); i-- > 0;) {
                acc = acc * j + coeffs[i];
            }
            if (sgn(acc) < 0) {
                throw ValidationError(ValidationFailure::NegativeValue,
                                      "NumFn: h(" + j.get_str() + ") < 0", j);
            }
        }
    }
    return NumFn(std::move(coeffs), std::move(bound));
}

std::optional<NumFn> NumFn::try_validate(std::vector<Integer> coeffs) {
    try {
        return validate(std::move(coeffs));
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

Integer NumFn::eval(const Integer& j) const {
    if (sgn(j) < 0) {
        throw DomainError("NumFn::eval: negative argument");
    }
    Integer acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * j + coeffs_[i];
    }
    return acc;
}

NumFn NumFn::scaled(const Integer& m) const {
    if (sgn(m) <= 0) {
        throw DomainError("NumFn::scaled: factor must be >= 1");
    }
    std::vector<Integer> c = coeffs_;
    for (Integer& a : c) {
        a *= m;
    }
    return NumFn(std::move(c), check_bound_);
}

Integer beta_direct(const NumFn& h, const Integer& d, const Integer& k) {
    if (sgn(d) < 0 || sgn(k) < 0 || cmp(k, d) > 0) {
        throw DomainError("beta_direct: requires 0 <= k <= d");
    }
    // Walk r = k - j from 0 to k, maintaining C(d-k+r, r) incrementally.
    Integer coeff = 1;
    Integer term_sign = 1;
    Integer j = k;
    Integer acc = 0;
    for (Integer r = 0; r <= k; ++r, --j) {
        if (sgn(r) > 0) {
            coeff = coeff * (d - k + r);
            coeff /= r;
            term_sign = -term_sign;
        }
        acc += term_sign * coeff * h.eval(j);
    }
    return acc;
}

BetaTable beta_table(const NumFn& h, const Integer& d) {
    if (sgn(d) < 0) {
        throw DomainError("beta_table: negative row");
    }
    if (!d.fits_ulong_p()) {
        throw DomainError("beta_table: row too large to materialize");
    }
    const unsigned long rows = d.get_ui();
    std::vector<Integer> prev;
    std::vector<Integer> cur{h.eval(0)};
    for (unsigned long r = 1; r <= rows; ++r) {
        prev.swap(cur);
        cur.assign(r + 1, Integer(0));
        cur[0] = prev[0];
        for (unsigned long k = 1; k < r; ++k) {
            cur[k] = prev[k] - prev[k - 1];
        }
        cur[r] = h.eval(Integer(r)) - prev[r - 1];
    }
    return BetaTable{d, std::move(cur)};
}

Integer c_bound(const NumFn& h) {
    return floor_div(h.eval(1), h.eval(0));
}

HdepthReport hdepth(const NumFn& h, const Integer& cap) {
    if (sgn(cap) < 0) {
        throw DomainError("hdepth: cap must be >= 0");
    }
    const Integer c = c_bound(h);
    const Integer limit = cmp(c, cap) < 0 ? c : cap;

    std::vector<Integer> prev;
    std::vector<Integer> cur{h.eval(0)};
    Integer d = 0;
    while (true) {
        // Row d is in `cur`; find its first negative entry, if any.
        std::optional<FirstFailure> failure;
        for (size_t k = 0; k < cur.size(); ++k) {
            if (sgn(cur[k]) < 0) {
                failure = FirstFailure{d, Integer(static_cast<long>(k)), cur[k]};
                break;
            }
        }
        if (failure) {
            return HdepthReport{h.coeffs(), d - 1, c, failure,
                                BetaTable{d - 1, std::move(prev)}};
        }
        if (cmp(d, limit) >= 0) {
            break;
        }
        ++d;
        prev.swap(cur);
        const size_t r = prev.size();  // == d
        cur.assign(r + 1, Integer(0));
        cur[0] = prev[0];
        for (size_t k = 1; k < r; ++k) {
            cur[k] = prev[k] - prev[k - 1];
        }
        cur[r] = h.eval(d) - prev[r - 1];
    }
    if (cmp(limit, c) < 0) {
        throw CapExceededError(cap, c);
    }
    return HdepthReport{h.coeffs(), c, c, std::nullopt, BetaTable{c, std::move(cur)}};
}

namespace {

nlohmann::json coeffs_json(const std::vector<Integer>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Integer& a : coeffs) {
        arr.push_back(a.get_str());
    }
    return arr;
}

// Small scan indices render as JSON numbers; anything unbounded is a
// decimal string so consumers cannot truncate it.
nlohmann::json size_field(const Integer& v) {
    if (v.fits_slong_p()) {
        return nlohmann::json(v.get_si());
    }
    return nlohmann::json(v.get_str());
}

}  // namespace

nlohmann::json to_json(const HdepthReport& report) {
    nlohmann::json j;
    j["coeffs"] = coeffs_json(report.coeffs);
    j["hdepth"] = size_field(report.hdepth);
    j["c_bound"] = size_field(report.c_bound);
    if (report.first_failure) {
        j["first_failure"] = {{"d", size_field(report.first_failure->d)},
                              {"k", size_field(report.first_failure->k)},
                              {"beta", report.first_failure->beta.get_str()}};
    } else {
        j["first_failure"] = nullptr;
    }
    nlohmann::json cert = nlohmann::json::array();
    for (const Integer& v : report.certificate.values) {
        cert.push_back(v.get_str());
    }
    j["certificate"] = cert;
    return j;
}

nlohmann::json to_json(const BetaTable& table, const std::vector<Integer>& coeffs) {
    nlohmann::json j;
    j["coeffs"] = coeffs_json(coeffs);
    j["d"] = size_field(table.d);
    nlohmann::json vals = nlohmann::json::array();
    for (const Integer& v : table.values) {
        vals.push_back(v.get_str());
    }
    j["values"] = vals;
    return j;
}

}  // namespace hd
