#include "hd/arith.hpp"

#include <cctype>

namespace hd {

Integer binom(const Integer& n, const Integer& r) {
    if (sgn(n) < 0) {
        throw DomainError("binom: negative row " + n.get_str());
    }
    if (sgn(r) < 0 || cmp(r, n) > 0) {
        return 0;
    }
    Integer k = r;
    Integer other = n - r;
    if (cmp(other, k) < 0) {
        k = other;
    }
    if (!k.fits_ulong_p()) {
        throw DomainError("binom: index too large to evaluate");
    }
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return result;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) {
        throw DomainError("floor_div: division by zero");
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) {
        throw DomainError("ceil_div: division by zero");
    }
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) {
        throw DomainError("isqrt: negative argument");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational make_rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) {
        throw DomainError("make_rational: zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer floor_rat(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

Integer ceil_rat(const Rational& q) {
    return ceil_div(q.get_num(), q.get_den());
}

Ord cmp_rational_vs_surd(const Rational& q, const Rational& r, const Integer& n) {
    if (sgn(n) < 0) {
        throw DomainError("cmp_rational_vs_surd: negative radicand");
    }
    // v := r*sqrt(n); sign(v) = sign(r) unless n = 0.
    const int sq = sgn(q);
    const int sv = (sgn(n) == 0) ? 0 : sgn(r);
    if (sq != sv) {
        return sq > sv ? Ord::GT : Ord::LT;
    }
    if (sq == 0) {
        return Ord::EQ;
    }
    // Same nonzero sign: compare squares, flipping when both negative.
    Rational lhs = q * q;
    Rational rhs = r * r * Rational(n);
    const int c = cmp(lhs, rhs);
    if (c == 0) {
        return Ord::EQ;
    }
    if (sq > 0) {
        return c > 0 ? Ord::GT : Ord::LT;
    }
    return c > 0 ? Ord::LT : Ord::GT;
}

Ord cmp_rational_vs_sqrt(const Rational& q, const Rational& rad) {
    if (sgn(rad) < 0) {
        throw DomainError("cmp_rational_vs_sqrt: negative radicand");
    }
    // sqrt(u/v) = sqrt(u*v)/v with v > 0.
    const Integer& u = rad.get_num();
    const Integer& v = rad.get_den();
    return cmp_rational_vs_surd(q * Rational(v), Rational(1), u * v);
}

Integer floor_shifted_sqrt(const Integer& a, const Integer& b, const Integer& c,
                           bool plus) {
    if (sgn(b) < 0) {
        throw DomainError("floor_shifted_sqrt: negative radicand");
    }
    if (sgn(c) <= 0) {
        throw DomainError("floor_shifted_sqrt: nonpositive divisor");
    }
    const Integer s = isqrt(b);
    if (s * s == b) {
        return plus ? floor_div(a + s, c) : floor_div(a - s, c);
    }
    // sqrt(b) irrational, strictly inside (s, s+1).
    Integer lo_num = plus ? Integer(a + s) : Integer(a - s - 1);
    Integer hi_num = lo_num + 1;
    Integer m1 = floor_div(lo_num, c);
    Integer m2 = floor_div(hi_num, c);
    if (m1 == m2) {
        return m1;
    }
    // Decide whether the larger candidate is still below the true value:
    // m2 <= (a +- sqrt(b))/c  <=>  +-(a - m2*c) >= -+sqrt(b).
    if (plus) {
        // m2*c - a <= sqrt(b)?
        Ord o = cmp_rational_vs_surd(Rational(m2 * c - a), Rational(1), b);
        return o == Ord::GT ? m1 : m2;
    }
    // sqrt(b) <= a - m2*c?
    Ord o = cmp_rational_vs_surd(Rational(a - m2 * c), Rational(1), b);
    return o == Ord::LT ? m1 : m2;
}

std::string decimal_string(const Rational& q, int places) {
    if (places < 0) {
        throw DomainError("decimal_string: negative precision");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const bool neg = sgn(q) < 0;
    Integer num = abs(q.get_num());
    const Integer& den = q.get_den();
    // round(|q| * scale), half away from zero
    Integer scaled = floor_div(num * scale * 2 + den, den * 2);
    Integer ip = scaled / scale;
    Integer fp = scaled % scale;
    std::string out = neg && sgn(scaled) != 0 ? "-" : "";
    out += ip.get_str();
    if (places > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<size_t>(places) - frac.size(), '0') + frac;
    }
    return out;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) {
        throw DomainError("rational_from_string: empty input");
    }
    auto parse_int = [](const std::string& s) -> Integer {
        try {
            return Integer(s);
        } catch (const std::invalid_argument&) {
            throw DomainError("rational_from_string: bad integer '" + s + "'");
        }
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer n = parse_int(text.substr(0, slash));
        Integer d = parse_int(text.substr(slash + 1));
        return make_rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(parse_int(text));
    }
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty()) {
        throw DomainError("rational_from_string: trailing decimal point");
    }
    for (char ch : tail) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw DomainError("rational_from_string: bad fraction digits");
        }
    }
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
        neg = head[0] == '-';
        head = head.substr(1);
    }
    if (head.empty()) {
        head = "0";
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    Integer num = parse_int(head) * scale + parse_int(tail);
    if (neg) {
        num = -num;
    }
    return make_rational(num, scale);
}

}  // namespace hd
