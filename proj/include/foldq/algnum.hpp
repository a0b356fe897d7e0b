#pragma once

#include "foldq/intpoly.hpp"
#include "foldq/rational.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldq {

namespace detail {

using QPoly = std::vector<Rational>;

inline int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

inline QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline QPoly qp_deriv(const QPoly& p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * int(i));
    return qp_trim(std::move(r));
}

inline Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Remainder of polynomial division, rational coefficients.
inline QPoly qp_rem(QPoly a, const QPoly& b) {
    a = qp_trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = qp_trim(std::move(a));
    }
    return a;
}

// Sturm chain sign-variation count at x.
inline int sturm_variations(const std::vector<QPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = rat_sign(qp_eval(p, x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++vars;
            prev = s;
        }
    }
    return vars;
}

} // namespace detail

/// Coefficient field context for Q(theta), theta = 2cos(pi/2n).
///
/// The minimal polynomial is derived exactly from the 4n-th cyclotomic
/// polynomial; theta is its largest real root. A rational isolating
/// interval around theta, refined on demand, drives all sign queries.
class CycContext {
public:
    static const CycContext& get(int n) {
        static std::mutex mtx;
        static std::map<int, std::unique_ptr<CycContext>> registry;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = registry.find(n);
        if (it == registry.end())
            it = registry.emplace(n, std::unique_ptr<CycContext>(new CycContext(n))).first;
        return *it->second;
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    const std::vector<BigInt>& minpoly() const { return minpoly_; }

    /// Current isolating interval [lo, hi] with p(lo) < 0 < p(hi),
    /// refined so that hi - lo <= 2^-bits.
    std::pair<Rational, Rational> theta_interval(int bits) const {
        std::lock_guard<std::mutex> lock(mtx_);
        Rational width = hi_ - lo_;
        Rational target = Rational(1, BigInt(1) << bits);
        while (hi_ - lo_ > target) {
            Rational mid = (lo_ + hi_) / 2;
            if (rat_sign(detail::qp_eval(minpoly_q_, mid)) < 0)
                lo_ = mid;
            else
                hi_ = mid;
        }
        return {lo_, hi_};
    }

    static int start_precision() {
        static int bits = [] {
            if (const char* env = std::getenv("FOLDQ_PRECISION")) {
                int v = std::atoi(env);
                if (v >= 4 && v <= 4096) return v;
            }
            return 32;
        }();
        return bits;
    }

private:
    explicit CycContext(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("CycContext: half-order n must be >= 2");
        degree_ = detail::euler_phi(4 * n) / 2;
        minpoly_ = intpoly::cos2pi_minpoly(4 * n);
        if (static_cast<int>(minpoly_.size()) != degree_ + 1 || minpoly_.back() != 1)
            throw std::logic_error("CycContext: minimal polynomial derivation failed");
        minpoly_q_.assign(minpoly_.begin(), minpoly_.end());
        isolate_largest_root();
    }

    // Sturm-based isolation of the largest real root inside (0, 2).
    void isolate_largest_root() {
        std::vector<detail::QPoly> chain{minpoly_q_, detail::qp_deriv(minpoly_q_)};
        while (chain.back().size() > 1) {
            auto r = detail::qp_rem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain.push_back(std::move(r));
        }
        auto count_above = [&](const Rational& a) {
            return detail::sturm_variations(chain, a) - detail::sturm_variations(chain, Rational(2));
        };
        Rational a = 0, b = 2;
        while (count_above(a) != 1 || rat_sign(detail::qp_eval(minpoly_q_, a)) >= 0) {
            Rational mid = (a + b) / 2;
            if (count_above(mid) >= 1)
                a = mid;
            else
                b = mid;
        }
        lo_ = a;
        hi_ = 2;
    }

    int n_;
    int degree_;
    std::vector<BigInt> minpoly_;
    detail::QPoly minpoly_q_;
    mutable std::mutex mtx_;
    mutable Rational lo_, hi_;
};

/// Exact element of Q(theta) in the power basis 1, theta, ..., theta^{d-1}.
class RealCycNumber {
public:
    RealCycNumber() : ctx_(nullptr) {}

    RealCycNumber(const CycContext& ctx, std::vector<Rational> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
        reduce();
    }

    static RealCycNumber zero(const CycContext& ctx) { return RealCycNumber(ctx, {}); }
    static RealCycNumber one(const CycContext& ctx) { return from_rational(ctx, 1); }
    static RealCycNumber theta(const CycContext& ctx) { return RealCycNumber(ctx, {Rational(0), Rational(1)}); }
    static RealCycNumber from_rational(const CycContext& ctx, Rational q) {
        return RealCycNumber(ctx, {std::move(q)});
    }
    static RealCycNumber from_int(const CycContext& ctx, i64 v) { return from_rational(ctx, Rational(v)); }

    const CycContext& ctx() const {
        if (!ctx_) throw std::logic_error("RealCycNumber: empty value");
        return *ctx_;
    }

    /// Canonical coefficients, padded to full degree d.
    std::vector<Rational> coeffs() const {
        std::vector<Rational> out(ctx().degree(), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        return out;
    }

    bool is_zero() const { return c_.empty(); }

    bool operator==(const RealCycNumber& o) const {
        check_ctx(o);
        return c_ == o.c_;
    }
    bool operator!=(const RealCycNumber& o) const { return !(*this == o); }

    RealCycNumber operator+(const RealCycNumber& o) const {
        check_ctx(o);
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RealCycNumber(*ctx_, std::move(r));
    }

    RealCycNumber operator-(const RealCycNumber& o) const {
        check_ctx(o);
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return RealCycNumber(*ctx_, std::move(r));
    }

    RealCycNumber operator-() const {
        RealCycNumber r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    RealCycNumber operator*(const RealCycNumber& o) const {
        check_ctx(o);
        if (is_zero() || o.is_zero()) return zero(*ctx_);
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RealCycNumber(*ctx_, std::move(r));
    }

    RealCycNumber operator*(const Rational& q) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= q;
        return RealCycNumber(ctx(), std::move(r));
    }

    /// Exact division; throws std::domain_error on a zero divisor.
    RealCycNumber operator/(const RealCycNumber& o) const {
        check_ctx(o);
        return *this * o.inverse();
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against the minimal polynomial.
    RealCycNumber inverse() const {
        if (is_zero()) throw std::domain_error("RealCycNumber: division by zero");
        using detail::QPoly;
        QPoly r0(ctx().minpoly().begin(), ctx().minpoly().end());
        QPoly r1(c_.begin(), c_.end());
        QPoly s0 = {}, s1 = {Rational(1)};
        while (!r1.empty() && r1.size() > 1) {
            // r0 = q*r1 + r2, carry s along
            QPoly q;
            QPoly rem = r0;
            q.assign(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rational c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] += c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                rem = detail::qp_trim(std::move(rem));
            }
            QPoly qs1(q.size() + s1.size() - 1 + (s1.empty() ? 1 : 0), Rational(0));
            if (!s1.empty())
                for (size_t i = 0; i < q.size(); ++i)
                    for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
            QPoly s2(std::max(s0.size(), qs1.size()), Rational(0));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            s0 = std::move(s1);
            s1 = detail::qp_trim(std::move(s2));
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        if (r1.empty()) throw std::logic_error("RealCycNumber: minimal polynomial not squarefree?");
        Rational unit = r1[0];
        std::vector<Rational> inv(s1.size());
        for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / unit;
        return RealCycNumber(*ctx_, std::move(inv));
    }

    /// Sign of the real value at theta = 2cos(pi/2n). Exact: zero iff the
    /// element is zero; otherwise interval evaluation against the
    /// isolating interval, refined until the sign is decided.
    int sign() const {
        if (is_zero()) return 0;
        int bits = CycContext::start_precision();
        for (;;) {
            auto [lo, hi] = ctx().theta_interval(bits);
            Rational rl = c_.back(), rh = c_.back();
            for (size_t i = c_.size() - 1; i-- > 0;) {
                // interval multiply by [lo, hi], then add coefficient
                Rational a = rl * lo, b = rl * hi, c2 = rh * lo, d2 = rh * hi;
                Rational mn = std::min(std::min(a, b), std::min(c2, d2));
                Rational mx = std::max(std::max(a, b), std::max(c2, d2));
                rl = mn + c_[i];
                rh = mx + c_[i];
            }
            if (rat_sign(rl) > 0) return 1;
            if (rat_sign(rh) < 0) return -1;
            bits *= 2;
            if (bits > (1 << 20)) throw std::logic_error("RealCycNumber::sign: refinement failed to converge");
        }
    }

    bool operator<(const RealCycNumber& o) const { return (*this - o).sign() < 0; }
    bool operator>(const RealCycNumber& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const RealCycNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const RealCycNumber& o) const { return (*this - o).sign() >= 0; }

    /// Decimal approximation accurate to ~1e-14 relative, for rendering.
    double to_double() const {
        if (is_zero()) return 0.0;
        auto [lo, hi] = ctx().theta_interval(64);
        Rational mid = (lo + hi) / 2;
        Rational v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * mid + c_[i];
        return rat_double(v);
    }

    /// Canonical text form, e.g. "-1+t^2" with t = theta.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::string term = rat_str(c_[i]);
            if (!out.empty() && term[0] != '-') out += "+";
            if (i == 0) {
                out += term;
            } else {
                if (term == "1")
                    term.clear();
                else if (term == "-1")
                    term = "-";
                out += term + "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void check_ctx(const RealCycNumber& o) const {
        if (&ctx() != &o.ctx()) throw std::invalid_argument("RealCycNumber: mixed contexts");
    }

    // Reduce modulo the (monic, integer) minimal polynomial and trim.
    void reduce() {
        const auto& mp = ctx().minpoly();
        int d = ctx().degree();
        for (size_t k = c_.size(); k-- > static_cast<size_t>(d);) {
            Rational lead = c_[k];
            if (lead == 0) continue;
            c_[k] = 0;
            for (int i = 0; i < d; ++i) c_[k - d + i] -= lead * mp[i];
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const CycContext* ctx_;
    std::vector<Rational> c_;
};

inline RealCycNumber operator*(const Rational& q, const RealCycNumber& x) { return x * q; }

/// Builds a fresh context for theta = 2cos(pi/2n).
inline const CycContext& cyc_context(int n) { return CycContext::get(n); }

/// U_i(cos pi/2n) as an exact element, via U_0 = 1, U_1 = theta,
/// U_{i+1} = theta U_i - U_{i-1}.
inline RealCycNumber chebyshev_u(const CycContext& ctx, int i) {
    if (i < 0) throw std::invalid_argument("chebyshev_u: negative index");
    RealCycNumber prev = RealCycNumber::one(ctx);
    if (i == 0) return prev;
    RealCycNumber cur = RealCycNumber::theta(ctx);
    for (int k = 1; k < i; ++k) {
        RealCycNumber next = RealCycNumber::theta(ctx) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// 2cos(k*pi/2n) as an exact element (V_k recurrence on theta).
inline RealCycNumber two_cos_multiple(const CycContext& ctx, int k) {
    if (k < 0) throw std::invalid_argument("two_cos_multiple: negative index");
    RealCycNumber prev = RealCycNumber::from_int(ctx, 2);
    if (k == 0) return prev;
    RealCycNumber cur = RealCycNumber::theta(ctx);
    for (int j = 1; j < k; ++j) {
        RealCycNumber next = RealCycNumber::theta(ctx) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline int sign_of(const RealCycNumber& x) { return x.sign(); }

/// -1 / 0 / +1 ordering of two values in the same context.
inline int compare(const RealCycNumber& a, const RealCycNumber& b) { return (a - b).sign(); }

} // namespace foldq
