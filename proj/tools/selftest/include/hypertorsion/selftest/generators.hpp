#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include <hypertorsion/jacobian.hpp>

namespace hypertorsion::gen {

/// Seeded random values over a Field. Rationals are drawn as num/den with
/// |num| <= 9 and 1 <= den <= 5.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    Elem elem(const Field& f) {
        if (f.is_finite()) return f.from_index(uniform(0, f.order() - 1));
        const auto num = static_cast<std::int64_t>(uniform(0, 18)) - 9;
        const auto den = static_cast<std::int64_t>(uniform(1, 5));
        return f.from_rational(mpq_class(num, den));
    }

    Elem nonzero(const Field& f) {
        for (;;) {
            Elem e = elem(f);
            if (!e.is_zero()) return e;
        }
    }

    /// Exactly degree d.
    Poly poly(const Field& f, std::size_t d) {
        std::vector<Elem> c;
        for (std::size_t i = 0; i < d; ++i) c.push_back(elem(f));
        c.push_back(nonzero(f));
        return Poly(f, std::move(c));
    }

    /// Degree at most d, possibly zero.
    Poly poly_upto(const Field& f, std::size_t d) {
        std::vector<Elem> c;
        for (std::size_t i = 0; i <= d; ++i) c.push_back(elem(f));
        return Poly(f, std::move(c));
    }

    /// A uniformly drawn abscissa that carries a point, with a random sign.
    std::optional<AffinePoint> point(const Curve& c, int attempts = 64) {
        for (int i = 0; i < attempts; ++i) {
            auto pts = points_with_x(c, elem(c.field()));
            if (pts.empty()) continue;
            return pts[uniform(0, pts.size() - 1)];
        }
        return std::nullopt;
    }

    /// Sum of up to g random points (occasionally the identity).
    Mumford divisor(const Curve& c) {
        Mumford d = identity(c);
        const auto k = uniform(0, c.genus());
        for (std::uint64_t i = 0; i < k; ++i)
            if (auto p = point(c)) d = cantor_add(c, d, embed(c, *p));
        return d;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace hypertorsion::gen
