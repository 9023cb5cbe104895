#include "hypertorsion/field.hpp"

#include <array>
#include <limits>
#include <random>
#include <sstream>

#include "hypertorsion/numtheory.hpp"
#include "hypertorsion/poly.hpp"

namespace hypertorsion {

namespace detail {

struct FieldData {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;
    unsigned m = 1;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;  // ascending, monic, length m+1
    std::vector<std::uint64_t> ppow;     // p^0 .. p^m
    std::uint64_t nonresidue = 0;        // index of a quadratic non-residue
    unsigned two_adic_s = 0;             // q - 1 = 2^s * t, t odd
    std::uint64_t two_adic_t = 0;
};

} // namespace detail

namespace {

using detail::FieldData;

constexpr unsigned kMaxDegree = 62;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

void decode(const FieldData& d, std::uint64_t a, Digits& out) {
    for (unsigned i = 0; i < d.m; ++i) {
        out[i] = a % d.p;
        a /= d.p;
    }
}

std::uint64_t encode(const FieldData& d, const Digits& in) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < d.m; ++i) r += in[i] * d.ppow[i];
    return r;
}

std::uint64_t add_raw(const FieldData& d, std::uint64_t a, std::uint64_t b) {
    if (d.m == 1) {
        std::uint64_t s = a + b;
        return s >= d.p ? s - d.p : s;
    }
    std::uint64_t r = 0;
    for (unsigned i = 0; i < d.m; ++i) {
        std::uint64_t s = a % d.p + b % d.p;
        if (s >= d.p) s -= d.p;
        r += s * d.ppow[i];
        a /= d.p;
        b /= d.p;
    }
    return r;
}

std::uint64_t neg_raw(const FieldData& d, std::uint64_t a) {
    if (d.m == 1) return a == 0 ? 0 : d.p - a;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < d.m; ++i) {
        std::uint64_t c = a % d.p;
        r += (c == 0 ? 0 : d.p - c) * d.ppow[i];
        a /= d.p;
    }
    return r;
}

std::uint64_t mul_raw(const FieldData& d, std::uint64_t a, std::uint64_t b) {
    if (d.m == 1) return mulmod(a, b, d.p);
    if (a == 0 || b == 0) return 0;
    Digits x{}, y{}, prod{};
    decode(d, a, x);
    decode(d, b, y);
    const unsigned m = d.m;
    for (unsigned i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
            prod[i + j] += mulmod(x[i], y[j], d.p);
            if (prod[i + j] >= d.p) prod[i + j] -= d.p;
        }
    }
    // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for (unsigned k = 2 * m - 2; k >= m; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < m; ++j) {
            const std::uint64_t t = mulmod(c, d.modulus[j], d.p);
            prod[k - m + j] = prod[k - m + j] >= t ? prod[k - m + j] - t : prod[k - m + j] + d.p - t;
        }
    }
    return encode(d, prod);
}

std::uint64_t pow_raw(const FieldData& d, std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_raw(d, r, a);
        a = mul_raw(d, a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t minus_one(const FieldData& d) { return d.p - 1; }

std::shared_ptr<FieldData> make_finite(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus) {
    auto d = std::make_shared<FieldData>();
    d->kind = m == 1 ? FieldKind::prime : FieldKind::extension;
    d->p = p;
    d->m = m;
    d->modulus = std::move(modulus);
    d->ppow.assign(m + 1, 1);
    for (unsigned i = 1; i <= m; ++i) d->ppow[i] = d->ppow[i - 1] * p;
    d->q = d->ppow[m];
    std::uint64_t t = d->q - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    d->two_adic_s = s;
    d->two_adic_t = t;
    const std::uint64_t half = (d->q - 1) / 2;
    for (std::uint64_t z = 2; z < d->q; ++z) {
        if (pow_raw(*d, z, half) == minus_one(*d)) {
            d->nonresidue = z;
            break;
        }
    }
    return d;
}

void check_order_fits(std::uint64_t p, unsigned m) {
    if (m == 0) throw FieldError("extension degree must be >= 1");
    if (m > kMaxDegree) throw FieldError("extension degree too large");
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw FieldError("field order p^m exceeds 2^62");
    }
}

void check_prime(std::uint64_t p) {
    if (p == 2) throw FieldError("characteristic 2 is not supported");
    if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not an odd prime");
    if (p >= kMaxOrder) throw FieldError("p exceeds 2^62");
}

} // namespace

// --------------------------------------------------------------------------
// Field

Field Field::rationals() {
    static const auto q = std::make_shared<const FieldData>();
    return Field(q);
}

Field Field::prime(std::uint64_t p) {
    check_prime(p);
    return Field(make_finite(p, 1, {0, 1}));
}

Field Field::extension(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus,
                       std::uint64_t seed) {
    check_prime(p);
    check_order_fits(p, m);
    if (m == 1 && !modulus) return prime(p);

    const Field base = prime(p);
    auto as_poly = [&](const std::vector<std::uint64_t>& c) {
        std::vector<Elem> e;
        e.reserve(c.size());
        for (std::uint64_t v : c) e.push_back(base.from_index(v % p));
        return Poly(base, std::move(e));
    };

    std::vector<std::uint64_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1) throw FieldError("modulus must have m+1 coefficients");
        for (std::uint64_t c : mod)
            if (c >= p) throw FieldError("modulus coefficients must be residues mod p");
        if (mod.back() != 1) throw FieldError("modulus must be monic");
        if (!is_irreducible(as_poly(mod))) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
        std::mt19937_64 rng(seed);
        mod.assign(m + 1, 0);
        mod[m] = 1;
        for (;;) {
            for (unsigned i = 0; i < m; ++i) mod[i] = rng() % p;
            if (mod[0] == 0) continue;
            if (is_irreducible(as_poly(mod))) break;
        }
    }
    if (m == 1) {
        // A linear modulus describes GF(p) itself.
        return prime(p);
    }
    return Field(make_finite(p, m, std::move(mod)));
}

FieldKind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
unsigned Field::degree() const noexcept { return data_->m; }
std::uint64_t Field::order() const noexcept { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const noexcept { return data_->modulus; }

std::string Field::name() const {
    switch (kind()) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(data_->p) + ")";
    case FieldKind::extension: return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->m) + ")";
    }
    return "?";
}

Elem Field::zero() const { return is_finite() ? Elem(*this, std::uint64_t{0}) : Elem(*this, mpq_class(0)); }
Elem Field::one() const { return is_finite() ? Elem(*this, std::uint64_t{1}) : Elem(*this, mpq_class(1)); }

Elem Field::from_int(std::int64_t v) const {
    if (!is_finite()) return Elem(*this, mpq_class(static_cast<long>(v)));
    const auto p = static_cast<std::int64_t>(data_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Elem(*this, static_cast<std::uint64_t>(r));
}

Elem Field::from_mpz(const mpz_class& v) const {
    if (!is_finite()) return Elem(*this, mpq_class(v));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), data_->p);
    return Elem(*this, static_cast<std::uint64_t>(r.get_ui()));
}

Elem Field::from_rational(const mpq_class& v) const {
    if (!is_finite()) {
        if (v.get_den() == 0) throw std::domain_error("zero denominator");
        mpq_class c(v);
        c.canonicalize();
        return Elem(*this, std::move(c));
    }
    const Elem den = from_mpz(v.get_den());
    if (den.is_zero()) throw std::domain_error("denominator divisible by the characteristic");
    return from_mpz(v.get_num()) / den;
}

Elem Field::from_index(std::uint64_t index) const {
    if (!is_finite()) throw FieldError("from_index: rational field has no index encoding");
    if (index >= data_->q) throw FieldError("from_index: index out of range for " + name());
    return Elem(*this, index);
}

Elem Field::from_coeffs(std::span<const std::uint64_t> c) const {
    if (!is_finite()) throw FieldError("from_coeffs: rational field");
    if (c.size() > data_->m) throw FieldError("from_coeffs: too many coefficients for " + name());
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= data_->p) throw FieldError("from_coeffs: coefficient not reduced mod p");
        r += c[i] * data_->ppow[i];
    }
    return Elem(*this, r);
}

std::vector<Elem> Field::elements() const {
    if (!is_finite()) throw FieldError("elements: rational field is not enumerable");
    std::vector<Elem> out;
    out.reserve(data_->q);
    for (std::uint64_t i = 0; i < data_->q; ++i) out.push_back(Elem(*this, i));
    return out;
}

bool Field::operator==(const Field& other) const noexcept {
    if (data_ == other.data_) return true;
    return data_->kind == other.data_->kind && data_->p == other.data_->p && data_->m == other.data_->m &&
           data_->modulus == other.data_->modulus;
}

// --------------------------------------------------------------------------
// Elem

void Elem::require_same_field(const Elem& o) const {
    if (field_.data_ != o.field_.data_ && !(field_ == o.field_))
        throw FieldError("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
}

bool Elem::is_zero() const noexcept {
    if (auto* v = std::get_if<std::uint64_t>(&value_)) return *v == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Elem::is_one() const noexcept {
    if (auto* v = std::get_if<std::uint64_t>(&value_)) return *v == 1;
    return std::get<mpq_class>(value_) == 1;
}

Elem Elem::operator-() const {
    if (field_.is_finite()) return Elem(field_, neg_raw(field_.data(), raw()));
    return Elem(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Elem& Elem::operator+=(const Elem& o) {
    require_same_field(o);
    if (field_.is_finite())
        value_ = add_raw(field_.data(), raw(), o.raw());
    else
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    require_same_field(o);
    if (field_.is_finite())
        value_ = add_raw(field_.data(), raw(), neg_raw(field_.data(), o.raw()));
    else
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    return *this;
}

Elem& Elem::operator*=(const Elem& o) {
    require_same_field(o);
    if (field_.is_finite())
        value_ = mul_raw(field_.data(), raw(), o.raw());
    else
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    return *this;
}

Elem& Elem::operator/=(const Elem& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

Elem Elem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_.is_finite()) {
        const FieldData& d = field_.data();
        return Elem(field_, pow_raw(d, raw(), d.q - 2));
    }
    return Elem(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Elem Elem::pow(std::uint64_t e) const {
    if (field_.is_finite()) return Elem(field_, pow_raw(field_.data(), raw(), e));
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), std::get<mpq_class>(value_).get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), std::get<mpq_class>(value_).get_den_mpz_t(), e);
    r.canonicalize();
    return Elem(field_, r);
}

Elem Elem::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    if (field_.is_finite()) {
        if (is_zero()) return e == 0 ? field_.one() : *this;
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), field_.data().q - 1);
        return pow(static_cast<std::uint64_t>(r.get_ui()));
    }
    if (!e.fits_ulong_p()) throw std::overflow_error("rational power exponent too large");
    return pow(static_cast<std::uint64_t>(e.get_ui()));
}

Elem Elem::pow_signed(std::int64_t e) const {
    if (e >= 0) return pow(static_cast<std::uint64_t>(e));
    return inverse().pow(static_cast<std::uint64_t>(-(e + 1)) + 1);
}

std::optional<Elem> Elem::sqrt() const {
    if (is_zero()) return *this;
    if (!field_.is_finite()) {
        const mpq_class& v = std::get<mpq_class>(value_);
        if (v < 0) return std::nullopt;
        if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
        mpq_class r;
        mpz_sqrt(r.get_num_mpz_t(), v.get_num_mpz_t());
        mpz_sqrt(r.get_den_mpz_t(), v.get_den_mpz_t());
        r.canonicalize();
        return Elem(field_, r);
    }
    const FieldData& d = field_.data();
    const std::uint64_t a = raw();
    if (pow_raw(d, a, (d.q - 1) / 2) != 1) return std::nullopt;
    // Tonelli-Shanks over GF(q).
    unsigned mm = d.two_adic_s;
    std::uint64_t c = pow_raw(d, d.nonresidue, d.two_adic_t);
    std::uint64_t x = pow_raw(d, a, (d.two_adic_t + 1) / 2);
    std::uint64_t b = pow_raw(d, a, d.two_adic_t);
    while (b != 1) {
        unsigned i = 0;
        std::uint64_t bb = b;
        while (bb != 1) {
            bb = mul_raw(d, bb, bb);
            ++i;
        }
        std::uint64_t w = c;
        for (unsigned j = 0; j + i + 1 < mm; ++j) w = mul_raw(d, w, w);
        mm = i;
        c = mul_raw(d, w, w);
        x = mul_raw(d, x, w);
        b = mul_raw(d, b, c);
    }
    const std::uint64_t nx = neg_raw(d, x);
    return Elem(field_, std::min(x, nx));
}

bool Elem::is_canonical_sign() const {
    if (field_.is_finite()) return raw() <= neg_raw(field_.data(), raw());
    return std::get<mpq_class>(value_) >= 0;
}

std::uint64_t Elem::index() const {
    if (!field_.is_finite()) throw FieldError("index: rational element");
    return raw();
}

std::vector<std::uint64_t> Elem::coeffs() const {
    if (!field_.is_finite()) throw FieldError("coeffs: rational element");
    const FieldData& d = field_.data();
    std::vector<std::uint64_t> out(d.m);
    std::uint64_t a = raw();
    for (unsigned i = 0; i < d.m; ++i) {
        out[i] = a % d.p;
        a /= d.p;
    }
    return out;
}

const mpq_class& Elem::rational() const {
    if (field_.is_finite()) throw FieldError("rational: finite-field element");
    return std::get<mpq_class>(value_);
}

std::string Elem::to_string() const {
    switch (field_.kind()) {
    case FieldKind::rationals: return std::get<mpq_class>(value_).get_str();
    case FieldKind::prime: return std::to_string(raw());
    case FieldKind::extension: {
        std::ostringstream os;
        os << '[';
        const auto c = coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ']';
        return os.str();
    }
    }
    return "?";
}

bool operator==(const Elem& a, const Elem& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.value_ == b.value_;
}

std::strong_ordering canonical_compare(const Elem& a, const Elem& b) {
    a.require_same_field(b);
    if (a.field_.is_finite()) return a.raw() <=> b.raw();
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// --------------------------------------------------------------------------

std::vector<Elem> nth_roots_of_unity(const Field& f, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("nth_roots_of_unity: n must be >= 2");
    if (!f.is_finite()) {
        throw InsufficientField("Q contains no primitive " + std::to_string(n) +
                                    "-th roots of unity; no finite extension is available over Q",
                                0);
    }
    const std::uint64_t p = f.characteristic();
    if (n % p == 0) throw FieldError("n must be prime to the characteristic");
    const std::uint64_t q = f.order();
    if ((q - 1) % n != 0) {
        const unsigned rel = multiplicative_order_mod(q % n, n);
        const unsigned need = f.degree() * rel;
        throw InsufficientField(f.name() + " lacks the " + std::to_string(n) + "-th roots of unity; need GF(" +
                                    std::to_string(p) + "^" + std::to_string(need) + ")",
                                need);
    }
    const Factorization nf = factor(n);
    auto has_order_n = [&](const Elem& h) {
        if (!h.pow(n).is_one()) return false;
        for (auto [r, e] : nf)
            if (h.pow(n / r).is_one()) return false;
        return true;
    };
    std::optional<Elem> zeta0;
    for (std::uint64_t i = 2; i < q && !zeta0; ++i) {
        Elem h = f.from_index(i).pow((q - 1) / n);
        if (has_order_n(h)) zeta0 = h;
    }
    if (!zeta0) throw std::logic_error("nth_roots_of_unity: no primitive root found");
    // Least primitive root among the powers of zeta0.
    Elem zeta = *zeta0;
    Elem cur = *zeta0;
    for (std::uint64_t k = 2; k < n; ++k) {
        cur *= *zeta0;
        if (std::gcd(k, n) == 1 && canonical_less(cur, zeta)) zeta = cur;
    }
    std::vector<Elem> out;
    out.reserve(n - 1);
    Elem z = zeta;
    for (std::uint64_t k = 1; k < n; ++k) {
        out.push_back(z);
        z *= zeta;
    }
    return out;
}

} // namespace hypertorsion
