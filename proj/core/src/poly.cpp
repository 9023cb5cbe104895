#include "hypertorsion/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "hypertorsion/numtheory.hpp"

namespace hypertorsion {

// --------------------------------------------------------------------------
// Poly basics

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const Elem& e : c_)
        if (!(e.field() == field_)) throw FieldError("Poly: coefficient from " + e.field().name() + " in " + field_.name());
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }
Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::monomial(const Elem& c, std::size_t k) {
    std::vector<Elem> v(k + 1, c.field().zero());
    v[k] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(const Field& f, std::span<const std::int64_t> c) {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (std::int64_t x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
}

Poly Poly::linear(const Elem& a) { return Poly(a.field(), {-a, a.field().one()}); }

std::size_t Poly::degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.size() - 1;
}

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

const Elem& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const Elem& e : c_) r.c_.push_back(-e);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!(field_ == o.field_)) throw FieldError("Poly: mixed fields");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!(field_ == o.field_)) throw FieldError("Poly: mixed fields");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) throw FieldError("Poly: mixed fields");
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Elem& s) {
    for (Elem& e : c_) e *= s;
    trim();
    return *this;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Elem Poly::operator()(const Elem& x0) const {
    Elem r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::string Poly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Elem& e = c_[i];
        if (e.is_zero()) continue;
        std::string cs = e.to_string();
        bool neg = false;
        if (field_.kind() == FieldKind::rationals && e.rational() < 0) {
            neg = true;
            cs = Elem(-e).to_string();
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool unit = cs == "1";
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!unit) os << cs << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Division and gcd

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.deg_or_neg() < b.deg_or_neg()) return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    const std::size_t db = b.degree();
    const Elem inv = b.leading().inverse();
    std::vector<Elem> q(r.size() - db, f.zero());
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const Elem c = r[k] * inv;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).r; }

Poly exact_div(const Poly& a, const Poly& b) {
    DivRem d = divrem(a, b);
    if (!d.r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return std::move(d.q);
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
    mpz_class c = 0;
    for (const auto& x : a) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    if (c == 0) return;
    if (a.back() < 0) c = -c;
    if (c != 1)
        for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly to_zpoly(const Poly& a) {
    mpz_class l = 1;
    for (const Elem& e : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
    ZPoly z;
    z.reserve(a.coeffs().size());
    for (const Elem& e : a.coeffs()) {
        mpz_class v = l / e.rational().get_den();
        z.push_back(v * e.rational().get_num());
    }
    make_primitive(z);
    return z;
}

// Pseudo-remainder of a by b, made primitive.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() > db && !a.empty()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        ztrim(a);
    }
    make_primitive(a);
    return a;
}

Poly gcd_rational(const Poly& a, const Poly& b) {
    ZPoly x = to_zpoly(a), y = to_zpoly(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = zprem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Elem> c;
    c.reserve(x.size());
    const Field q = a.field();
    for (const auto& v : x) c.push_back(q.from_mpz(v));
    return Poly(q, std::move(c)).monic();
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (!a.field().is_finite()) return gcd_rational(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f.one());
    while (!r1.is_zero()) {
        DivRem d = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(d.r));
        s0 = std::exchange(s1, s0 - d.q * s1);
        t0 = std::exchange(t1, t0 - d.q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// --------------------------------------------------------------------------
// Transforms

Poly derivative(const Poly& a) {
    const Field& f = a.field();
    if (a.coeffs().size() <= 1) return Poly(f);
    std::vector<Elem> d;
    d.reserve(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) d.push_back(a.coeffs()[i] * f.from_int(static_cast<std::int64_t>(i)));
    return Poly(f, std::move(d));
}

Poly shift(const Poly& a, const Elem& c) {
    const Field& f = a.field();
    const Poly xc(f, {c, f.one()});
    Poly r(f);
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) r = r * xc + Poly::constant(*it);
    return r;
}

Poly scale_arg(const Poly& a, const Elem& s) {
    if (s.is_zero()) throw std::domain_error("scale_arg: zero scale");
    std::vector<Elem> c = a.coeffs();
    Elem p = s.field().one();
    for (Elem& e : c) {
        e *= p;
        p *= s;
    }
    return Poly(a.field(), std::move(c));
}

Poly pow(const Poly& a, unsigned e) {
    Poly r = Poly::constant(a.field().one());
    Poly b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly powmod(Poly base, const mpz_class& e, const Poly& m) {
    if (e < 0) throw std::domain_error("powmod: negative exponent");
    base = base % m;
    Poly r = Poly::constant(m.field().one()) % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
    }
    return r;
}

Poly compose(const Poly& a, const Poly& b) {
    Poly r(a.field());
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) r = r * b + Poly::constant(*it);
    return r;
}

namespace {

constexpr std::uint64_t kSquarefreePrimes[] = {1000003, 1000033, 1000037};

// Over Q: squarefree modulo a prime that keeps the degree implies squarefree.
bool squarefree_mod_p(const Poly& f) {
    for (std::uint64_t p : kSquarefreePrimes) {
        const Field fp = Field::prime(p);
        std::vector<Elem> c;
        c.reserve(f.coeffs().size());
        bool ok = true;
        for (const Elem& e : f.coeffs()) {
            if (mpz_divisible_ui_p(e.rational().get_den_mpz_t(), p)) {
                ok = false;
                break;
            }
            c.push_back(fp.from_rational(e.rational()));
        }
        if (!ok || c.back().is_zero()) continue;
        const Poly fm(fp, std::move(c));
        if (gcd(fm, derivative(fm)).degree() == 0) return true;
    }
    return false;
}

} // namespace

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
    if (f.degree() == 0) return true;
    const Poly d = derivative(f);
    if (d.is_zero()) return false;
    if (!f.field().is_finite() && squarefree_mod_p(f)) return true;
    return gcd(f, d).degree() == 0;
}

std::optional<Poly> poly_sqrt(const Poly& h) {
    const Field& f = h.field();
    if (h.is_zero()) return h;
    const auto& c = h.coeffs();
    std::size_t low = 0;
    while (c[low].is_zero()) ++low;
    const std::size_t deg = h.degree();
    if (low % 2 || (deg - low) % 2) return std::nullopt;
    const auto t0 = c[low].sqrt();
    if (!t0) return std::nullopt;
    const std::size_t d = (deg - low) / 2;
    std::vector<Elem> t(low / 2 + d + 1, f.zero());
    std::vector<Elem> s(d + 1, f.zero());
    s[0] = *t0;
    const Elem inv = (*t0 + *t0).inverse();
    for (std::size_t k = 1; k <= d; ++k) {
        Elem acc = c[low + k];
        for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = acc * inv;
    }
    for (std::size_t i = 0; i <= d; ++i) t[low / 2 + i] = s[i];
    Poly r(f, std::move(t));
    if (!(r * r == h)) return std::nullopt;
    if (!r.leading().is_canonical_sign()) r = -r;
    return r;
}

Poly reverse_scale(const Poly& w, const Elem& a) {
    if (a.is_zero()) throw std::domain_error("reverse_scale: a = 0");
    if (w.is_zero() || w.coeffs().front().is_zero()) throw std::domain_error("reverse_scale: zero constant term");
    const std::size_t g = w.degree();
    const Field& f = w.field();
    std::vector<Elem> out(g + 1, f.zero());
    const Elem ainv = a.inverse();
    Elem scale = f.one();  // a^-(g-i) for i = g, g-1, ...
    for (std::size_t i = g + 1; i-- > 0;) {
        out[g - i] = w.coeffs()[i] * scale;
        scale *= ainv;
    }
    return Poly(f, std::move(out));
}

Poly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    static std::mutex mu;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const Field q = Field::rationals();
    Poly r = Poly::monomial(q.one(), n) - Poly::constant(q.one());
    for (std::uint64_t d : divisors(n))
        if (d < n) r = exact_div(r, cyclotomic(static_cast<unsigned>(d)));
    std::lock_guard lock(mu);
    cache.emplace(n, r);
    return r;
}

Poly cyclotomic(const Field& f, unsigned n) {
    const Poly c = cyclotomic(n);
    return map_coeffs(c, f, [&](const Elem& e) { return f.from_rational(e.rational()); });
}

Poly diff_power(const Elem& a1, const Elem& a2, unsigned n) {
    if (a1 == a2) throw std::invalid_argument("diff_power: a1 == a2");
    const Field& f = a1.field();
    std::vector<Elem> c(n + 1, f.zero());
    const Elem m1 = -a1, m2 = -a2;
    mpz_class b;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        c[k] = f.from_mpz(b) * (m2.pow(static_cast<std::uint64_t>(n - k)) - m1.pow(static_cast<std::uint64_t>(n - k)));
    }
    return Poly(f, std::move(c));
}

// --------------------------------------------------------------------------
// Finite-field factorization helpers

namespace {

void require_finite(const Poly& f, const char* what) {
    if (!f.field().is_finite()) throw FieldError(std::string(what) + ": finite field required");
}

} // namespace

bool is_irreducible(const Poly& f) {
    require_finite(f, "is_irreducible");
    if (f.is_zero() || f.degree() == 0) return false;
    const std::size_t n = f.degree();
    if (n == 1) return true;
    const Poly m = f.monic();
    const Poly x = Poly::x(f.field());
    const mpz_class q = f.field().order();
    std::vector<Poly> h{x};  // h[i] = x^(q^i) mod m
    for (std::size_t i = 1; i <= n; ++i) h.push_back(powmod(h.back(), q, m));
    if (!(h[n] == x % m)) return false;
    for (auto [r, e] : factor(n)) {
        if (gcd(h[n / r] - x, m).degree() != 0) return false;
    }
    return true;
}

namespace {

void split_linear(const Poly& h, std::vector<Elem>& out) {
    const std::size_t d = h.degree();
    if (d == 0) return;
    if (d == 1) {
        out.push_back(-h.coeffs()[0] / h.coeffs()[1]);
        return;
    }
    const Field& f = h.field();
    const mpz_class half = mpz_class(f.order() - 1) / 2;
    std::mt19937_64 rng(d);
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t idx = attempt < f.order() ? attempt : rng() % f.order();
        const Poly xa(f, {f.from_index(idx), f.one()});
        const Poly t = powmod(xa, half, h) - Poly::constant(f.one());
        const Poly g = gcd(t, h);
        if (g.is_zero()) continue;
        const std::size_t dg = g.degree();
        if (dg > 0 && dg < d) {
            split_linear(g, out);
            split_linear(exact_div(h, g), out);
            return;
        }
        if (attempt > 4 * f.order() + 256) throw std::logic_error("roots: splitting did not converge");
    }
}

} // namespace

std::vector<Elem> roots(const Poly& f) {
    require_finite(f, "roots");
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() == 0) return out;
    const Poly m = f.monic();
    const Poly x = Poly::x(f.field());
    const Poly xq = powmod(x, mpz_class(f.field().order()), m);
    const Poly lin = gcd(xq - x, m);
    if (lin.is_zero()) return out;
    split_linear(lin, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<unsigned> factor_degrees(const Poly& f) {
    require_finite(f, "factor_degrees");
    if (f.is_zero()) throw std::domain_error("factor_degrees of the zero polynomial");
    std::vector<unsigned> out;
    Poly rest = f.monic();
    const Poly x = Poly::x(f.field());
    const mpz_class q = f.field().order();
    Poly h = x;
    for (unsigned d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, q, rest);
        const Poly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            for (std::size_t i = 0; i < g.degree() / d; ++i) out.push_back(d);
            rest = exact_div(rest, g);
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back(static_cast<unsigned>(rest.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

unsigned splitting_degree(const Poly& f) {
    unsigned l = 1;
    for (unsigned d : factor_degrees(f)) l = std::lcm(l, d);
    return l;
}

// --------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view s, const Field& f) : s_(s), f_(f) {}

    Poly parse() {
        Poly r = expr();
        skip();
        if (pos_ < s_.size()) fail();
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why = "unexpected token") {
        std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string("end of input");
        throw ParseError(why + " '" + tok + "' at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"",
                         pos_);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
    }

    Poly expr() {
        Poly r(f_);
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        } else if (peek('+')) {
            ++pos_;
        }
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    Poly term() {
        Poly r = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r *= power();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                Poly d = power();
                if (d.is_zero() || d.degree() != 0) {
                    pos_ = at;
                    fail("division by a non-constant or zero");
                }
                r *= d.leading().inverse();
            } else if (starts_factor()) {
                r *= power();
            } else {
                return r;
            }
        }
    }

    Poly power() {
        Poly b = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            const mpz_class e = integer();
            if (!e.fits_uint_p()) fail("exponent too large");
            b = pow(b, static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer, got");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("expected operand, got");
        const char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return Poly::x(f_);
        }
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (!peek(')')) fail("expected ')', got");
            ++pos_;
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(f_.from_mpz(integer()));
        fail();
    }

    std::string_view s_;
    const Field& f_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const Field& f) { return Parser(text, f).parse(); }

} // namespace hypertorsion
