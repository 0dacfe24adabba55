#pragma once

// Shared helpers for the unit tests: seeded generators of exact data.

#include <random>
#include <vector>

#include "waringlab/forms.hpp"

namespace waringlab::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rational rational(long bound = 5, long max_den = 4)
    {
        Rational q(integer(-bound, bound), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(long bound = 5, long max_den = 4)
    {
        for (;;) {
            Rational q = rational(bound, max_den);
            if (sgn(q) != 0) return q;
        }
    }

    Scalar scalar(bool real) { return real ? Scalar(rational()) : Scalar(rational(), rational()); }

    std::vector<Scalar> vector(std::size_t n, bool real)
    {
        for (;;) {
            std::vector<Scalar> v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(real));
            for (const auto& s : v)
                if (!s.is_zero()) return v;
        }
    }

    HomogeneousForm form(unsigned num_vars, unsigned d, bool real)
    {
        HomogeneousForm::Terms t;
        for (auto& a : monomials(num_vars, d)) t.emplace(a, scalar(real));
        return HomogeneousForm(num_vars, d, std::move(t));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Scalar S(long re, long im = 0) { return Scalar(Rational(re), Rational(im)); }

}  // namespace waringlab::testing
