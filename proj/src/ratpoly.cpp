#include "hd/ratpoly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hd {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

RatPoly RatPoly::from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const Integer& a : coeffs) {
        c.emplace_back(a);
    }
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

const Rational& RatPoly::coeff(size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& RatPoly::leading() const {
    if (is_zero()) {
        throw DomainError("RatPoly::leading: zero polynomial");
    }
    return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return RatPoly();
    }
    std::vector<Rational> d;
    d.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return *this * make_rational(leading().get_den(), leading().get_num());
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) {
        x = -x;
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = coeff(i) + other.coeff(i);
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& other) const {
    return *this + (-other);
}

RatPoly RatPoly::operator*(const RatPoly& other) const {
    if (is_zero() || other.is_zero()) {
        return RatPoly();
    }
    std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) {
        x *= s;
    }
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) {
        throw DomainError("RatPoly::divmod: division by zero polynomial");
    }
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) {
        return {RatPoly(), *this};
    }
    std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    const Rational& lead = divisor.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (sgn(rem[static_cast<size_t>(i)]) == 0) {
            continue;
        }
        Rational factor = rem[static_cast<size_t>(i)] / lead;
        quot[static_cast<size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(i - dd + j)] -=
                factor * divisor.coeffs_[static_cast<size_t>(j)];
        }
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::string RatPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(static_cast<size_t>(i));
        if (sgn(c) == 0) {
            continue;
        }
        if (!first) {
            out << (sgn(c) > 0 ? " + " : " - ");
        } else if (sgn(c) < 0) {
            out << "-";
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) {
            out << a.get_str();
            if (i > 0) {
                out << "*";
            }
        }
        if (i > 0) {
            out << "x";
            if (i > 1) {
                out << "^" << i;
            }
        }
        first = false;
    }
    return out.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly u = a;
    RatPoly v = b;
    while (!v.is_zero()) {
        RatPoly r = u.divmod(v).second;
        u = v;
        // Scaling the remainder monic keeps coefficient growth in check
        // without changing the gcd up to units.
        v = r.is_zero() ? r : r.monic();
    }
    return u.is_zero() ? u : u.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) {
        throw DomainError("squarefree_part: zero polynomial");
    }
    if (p.degree() <= 1) {
        return p;
    }
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        return p;
    }
    auto [q, r] = p.divmod(g);
    if (!r.is_zero()) {
        throw Error("squarefree_part: gcd does not divide input");
    }
    return q;
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

// Positive scaling so a chain member has leading coefficient +-1.
RatPoly scale_abs(const RatPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    Rational lead = abs(p.leading());
    return p * make_rational(lead.get_den(), lead.get_num());
}

// Strict upper bound on root magnitude: 1 + max |c_i / c_n|.
Rational cauchy_bound(const RatPoly& p) {
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p.coeff(static_cast<size_t>(i)) / p.leading());
        if (q > best) {
            best = q;
        }
    }
    return best + 1;
}

}  // namespace

SturmChain SturmChain::build(const RatPoly& squarefree) {
    if (squarefree.is_zero()) {
        throw DomainError("SturmChain: zero polynomial");
    }
    SturmChain chain;
    chain.seq.push_back(scale_abs(squarefree));
    if (squarefree.degree() == 0) {
        return chain;
    }
    chain.seq.push_back(scale_abs(squarefree.derivative()));
    while (chain.seq.back().degree() > 0) {
        const RatPoly& prev = chain.seq[chain.seq.size() - 2];
        RatPoly r = prev.divmod(chain.seq.back()).second;
        if (r.is_zero()) {
            // Only happens if the input was not squarefree.
            throw DomainError("SturmChain: input has a repeated root");
        }
        chain.seq.push_back(scale_abs(-r));
    }
    return chain;
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const RatPoly& p : seq) {
        signs.push_back(p.sign_at(x));
    }
    return count_variations(signs);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const RatPoly& p : seq) {
        signs.push_back(p.is_zero() ? 0 : sign_of(p.leading()));
    }
    return count_variations(signs);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const RatPoly& p : seq) {
        int s = p.is_zero() ? 0 : sign_of(p.leading());
        if (p.degree() % 2 == 1) {
            s = -s;
        }
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
    return variations_neg_inf() - variations_pos_inf();
}

namespace {

// Shrinks a symmetric window around an exact rational root m until the
// window isolates it, its endpoints are not roots, and width <= tol.
RootInterval window_around(const SturmChain& chain, const RatPoly& p,
                           const Rational& m, Rational delta, const Rational& tol) {
    if (delta * 2 > tol) {
        delta = tol / 2;
    }
    for (;;) {
        Rational lo = m - delta;
        Rational hi = m + delta;
        if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0 &&
            chain.count_roots(lo, hi) == 1) {
            SignChange change =
                p.sign_at(lo) < 0 ? SignChange::DownUp : SignChange::UpDown;
            return RootInterval{lo, hi, change};
        }
        delta /= 2;
    }
}

}  // namespace

std::vector<RootInterval> sturm_isolate(const RatPoly& p, const Rational& tol) {
    if (p.is_zero()) {
        throw DomainError("sturm_isolate: zero polynomial");
    }
    if (sgn(tol) <= 0) {
        throw DomainError("sturm_isolate: tolerance must be positive");
    }
    RatPoly sf = squarefree_part(p);
    std::vector<RootInterval> out;
    if (sf.degree() <= 0) {
        return out;
    }
    SturmChain chain = SturmChain::build(sf);
    Rational bound = cauchy_bound(sf);

    struct Span {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::deque<Span> work;
    work.push_back({-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)});

    while (!work.empty()) {
        Span span = work.front();
        work.pop_front();
        const int roots = span.vlo - span.vhi;
        if (roots == 0) {
            continue;
        }
        if (roots == 1) {
            RootInterval iv{span.lo, span.hi,
                            sf.sign_at(span.lo) < 0 ? SignChange::DownUp
                                                    : SignChange::UpDown};
            out.push_back(refine_interval(sf, iv, tol));
            continue;
        }
        Rational mid = (span.lo + span.hi) / 2;
        if (sf.sign_at(mid) == 0) {
            // Exact rational root at the split point: emit a window around
            // it and keep scanning strictly outside the window.
            RootInterval iv =
                window_around(chain, sf, mid, (span.hi - span.lo) / 4, tol);
            out.push_back(iv);
            work.push_back({span.lo, iv.lo, span.vlo, chain.variations_at(iv.lo)});
            work.push_back({iv.hi, span.hi, chain.variations_at(iv.hi), span.vhi});
            continue;
        }
        int vmid = chain.variations_at(mid);
        work.push_back({span.lo, mid, span.vlo, vmid});
        work.push_back({mid, span.hi, vmid, span.vhi});
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    // Neighbors produced by one subdivision can share the split point as a
    // closed endpoint; shrink toward the root until strictly disjoint.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].hi < out[i + 1].lo)) {
            out[i] = refine_interval(sf, out[i], out[i].width() / 2);
        }
    }
    return out;
}

std::optional<Integer> first_integer_below_parabola(const Rational& s,
                                                    const Rational& k,
                                                    const Integer& lo,
                                                    const Integer& hi) {
    Rational disc = s * s - 2 * k;
    if (sgn(disc) <= 0) {
        return std::nullopt;
    }
    // Roots are s +- sqrt(disc). Over the common denominator c = m*v with
    // s = n/m and disc = u/v, they read (a +- sqrt(b))/c for
    // a = n*v, b = m^2*u*v.
    const Integer& n = s.get_num();
    const Integer& m = s.get_den();
    const Integer& u = disc.get_num();
    const Integer& v = disc.get_den();
    Integer a = n * v;
    Integer b = m * m * u * v;
    Integer c = m * v;

    Integer d = floor_shifted_sqrt(a, b, c, false) + 1;  // smallest integer > x1
    if (cmp(d, lo) < 0) {
        d = lo;
    }
    if (cmp(d, hi) > 0) {
        return std::nullopt;
    }
    // Need d strictly below the larger root: d*c - a < sqrt(b).
    if (cmp_rational_vs_surd(Rational(d * c - a), Rational(1), b) != Ord::LT) {
        return std::nullopt;
    }
    return d;
}

RootInterval refine_interval(const RatPoly& p, RootInterval iv, const Rational& tol) {
    if (sgn(tol) <= 0) {
        throw DomainError("refine_interval: tolerance must be positive");
    }
    int slo = p.sign_at(iv.lo);
    if (slo == 0 || slo == p.sign_at(iv.hi)) {
        throw DomainError("refine_interval: endpoints do not straddle a root");
    }
    while (iv.width() > tol) {
        Rational mid = iv.midpoint();
        int smid = p.sign_at(mid);
        if (smid == 0) {
            // The root is exactly mid; keep a sign-change window around it.
            Rational delta = iv.width() / 4;
            Rational cap = tol / 4;
            if (delta > cap) {
                delta = cap;
            }
            while (p.sign_at(mid - delta) == 0 || p.sign_at(mid + delta) == 0 ||
                   p.sign_at(mid - delta) == p.sign_at(mid + delta)) {
                delta /= 2;
            }
            iv.lo = mid - delta;
            iv.hi = mid + delta;
            break;
        }
        if (smid == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv.change = p.sign_at(iv.lo) < 0 ? SignChange::DownUp : SignChange::UpDown;
    return iv;
}

}  // namespace hd
