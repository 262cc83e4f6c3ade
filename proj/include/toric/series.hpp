#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Truncated power series over Q: c[0] + c[1] x + ... + c[K] x^K, ops mod x^(K+1).
// Used for perturbative expansions in lambda (small field) or 1/lambda (large field).
class RSeries {
public:
    RSeries() : c_(1) {}
    explicit RSeries(int max_order) : c_(max_order + 1) {}
    RSeries(int max_order, const Rational& constant) : c_(max_order + 1) { c_[0] = constant; }

    static RSeries one(int max_order) { return RSeries(max_order, Rational(1)); }
    static RSeries monomial(int max_order, int power, const Rational& coeff) {
        RSeries s(max_order);
        if (power <= max_order) s.c_[power] = coeff;
        return s;
    }

    int max_order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[k]; }
    Rational& operator[](int k) { return c_[k]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // Lowest nonzero power, or max_order()+1 if identically zero.
    int leading_order() const {
        for (int k = 0; k <= max_order(); ++k)
            if (c_[k] != 0) return k;
        return max_order() + 1;
    }

    RSeries& operator+=(const RSeries& o) {
        assert(o.max_order() == max_order());
        for (int k = 0; k <= max_order(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    RSeries& operator-=(const RSeries& o) {
        assert(o.max_order() == max_order());
        for (int k = 0; k <= max_order(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    RSeries& operator*=(const Rational& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }

    friend RSeries operator+(RSeries a, const RSeries& b) { return a += b; }
    friend RSeries operator-(RSeries a, const RSeries& b) { return a -= b; }
    friend RSeries operator*(RSeries a, const Rational& q) { return a *= q; }
    friend RSeries operator*(const Rational& q, RSeries a) { return a *= q; }

    friend RSeries operator*(const RSeries& a, const RSeries& b) {
        assert(a.max_order() == b.max_order());
        const int K = a.max_order();
        RSeries out(K);
        for (int i = 0; i <= K; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= K; ++j) {
                if (b.c_[j] == 0) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }

    bool operator==(const RSeries& o) const { return c_ == o.c_; }

    // log(s) for s with constant term 1.
    RSeries log() const {
        if (c_[0] != 1) throw std::invalid_argument("RSeries::log needs constant term 1");
        const int K = max_order();
        RSeries u = *this;
        u.c_[0] = 0;
        RSeries out(K), power = u;
        Rational sign(1);
        for (int m = 1; m <= K; ++m) {
            out += power * (sign / m);
            if (m < K) power = power * u;
            sign = -sign;
        }
        return out;
    }

    // exp(s) for s with constant term 0.
    RSeries exp() const {
        if (c_[0] != 0) throw std::invalid_argument("RSeries::exp needs constant term 0");
        const int K = max_order();
        RSeries out = one(K), power = one(K);
        Rational fact(1);
        for (int m = 1; m <= K; ++m) {
            power = power * (*this);
            fact *= m;
            out += power * (1 / fact);
        }
        return out;
    }

    // sqrt(s) for s with constant term 1.
    RSeries sqrt() const {
        if (c_[0] != 1) throw std::invalid_argument("RSeries::sqrt needs constant term 1");
        const int K = max_order();
        RSeries t = one(K);
        for (int k = 1; k <= K; ++k) {
            Rational acc = c_[k];
            for (int j = 1; j < k; ++j) acc -= t.c_[j] * t.c_[k - j];
            t.c_[k] = acc / 2;
        }
        return t;
    }

    // 1/s for s with nonzero constant term.
    RSeries inverse() const {
        if (c_[0] == 0) throw std::invalid_argument("RSeries::inverse needs nonzero constant");
        const int K = max_order();
        RSeries t(K);
        t.c_[0] = 1 / c_[0];
        for (int k = 1; k <= K; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * t.c_[k - j];
            t.c_[k] = -acc / c_[0];
        }
        return t;
    }

    template <typename Real>
    Real evaluate(Real x) const {
        Real out = 0;
        for (int k = max_order(); k >= 0; --k) out = out * x + static_cast<Real>(to_double(c_[k]));
        return out;
    }

private:
    std::vector<Rational> c_;
};

}  // namespace toric
