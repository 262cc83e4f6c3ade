#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "toric/rational.hpp"

namespace toric {

// Closed-form flow-parameter dependence: finite sums  c * l^p * exp(-q*l).
// The flow equations only ever need this family; integrals and the
// linear-decay ODE stay inside it.
class CoeffFn {
public:
    CoeffFn() = default;
    static CoeffFn constant(const Rational& c) {
        CoeffFn f;
        f.add_term(0, 0, c);
        return f;
    }
    static CoeffFn term(int p, int q, const Rational& c) {
        CoeffFn f;
        f.add_term(p, q, c);
        return f;
    }

    void add_term(int p, int q, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(q, p);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    CoeffFn& operator+=(const CoeffFn& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, c);
        return *this;
    }
    friend CoeffFn operator+(CoeffFn a, const CoeffFn& b) { return a += b; }

    CoeffFn& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, c] : terms_) c *= q;
        return *this;
    }
    friend CoeffFn operator*(CoeffFn a, const Rational& q) { return a *= q; }

    friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
        CoeffFn out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
        return out;
    }

    bool operator==(const CoeffFn& o) const { return terms_ == o.terms_; }

    // Integral from 0 to l of each term; exact, valid for any sign of q.
    CoeffFn integrate() const {
        CoeffFn out;
        for (const auto& [key, c] : terms_) out += integrate_term(key.second, key.first, c);
        return out;
    }

    // Solution of T'(l) = -a*T(l) + this(l), T(0) = t0, for a >= 0.
    CoeffFn solve_decay(int a, const Rational& t0 = Rational(0)) const {
        CoeffFn out;
        if (t0 != 0) out.add_term(0, a, t0);
        for (const auto& [key, c] : terms_) {
            const int q = key.first, p = key.second;
            if (q == a) {
                out.add_term(p + 1, a, c / (p + 1));
            } else {
                // e^{-al} * integral_0^l t^p e^{-(q-a)t} dt
                CoeffFn inner = integrate_term(p, q - a, c);
                for (const auto& [k2, c2] : inner.terms_)
                    out.add_term(k2.second, k2.first + a, c2);
            }
        }
        return out;
    }

    // Limit l -> infinity; nullopt if divergent.
    std::optional<Rational> limit_inf() const {
        Rational out(0);
        for (const auto& [key, c] : terms_) {
            const int q = key.first, p = key.second;
            if (q > 0) continue;
            if (q < 0 || p > 0) return std::nullopt;
            out += c;
        }
        return out;
    }

    Rational value_at_zero() const {
        Rational out(0);
        for (const auto& [key, c] : terms_)
            if (key.second == 0) out += c;
        return out;
    }

    bool decays_to_zero() const {
        for (const auto& [key, c] : terms_) {
            (void)c;
            if (key.first <= 0) return false;
        }
        return true;
    }

    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

private:
    // integral_0^l t^p e^{-q t} dt
    static CoeffFn integrate_term(int p, int q, const Rational& c) {
        CoeffFn out;
        if (q == 0) {
            out.add_term(p + 1, 0, c / (p + 1));
            return out;
        }
        Rational qp(q);
        Rational fact(1);
        for (int j = 2; j <= p; ++j) fact *= j;  // p!
        Rational lead = fact;
        for (int j = 0; j <= p; ++j) lead /= qp;  // p!/q^(p+1)
        out.add_term(0, 0, c * lead);
        for (int j = 0; j <= p; ++j) {
            Rational numer = fact;
            for (int m = 2; m <= j; ++m) numer /= m;  // p!/j!
            Rational denom(1);
            for (int m = 0; m < p + 1 - j; ++m) denom *= qp;
            out.add_term(j, q, -c * numer / denom);
        }
        return out;
    }

    // key = (q, p) -> coefficient
    std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace toric
