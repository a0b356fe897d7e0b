#include "foldq/algnum.hpp"
#include "foldq/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace foldq;

namespace {

RealCycNumber sqrt2(const CycContext& ctx4) {
    // theta^2 - 2 at n = 4
    return RealCycNumber::theta(ctx4) * RealCycNumber::theta(ctx4) - RealCycNumber::from_int(ctx4, 2);
}

RealCycNumber random_elt(const CycContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> c(ctx.degree());
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return RealCycNumber(ctx, std::move(c));
}

} // namespace

TEST_CASE("context degrees and minimal polynomials") {
    const auto& c2 = cyc_context(2);
    CHECK(c2.degree() == 2);
    CHECK(c2.minpoly() == std::vector<BigInt>{-2, 0, 1}); // x^2 - 2

    const auto& c3 = cyc_context(3);
    CHECK(c3.degree() == 2);
    CHECK(c3.minpoly() == std::vector<BigInt>{-3, 0, 1}); // x^2 - 3

    const auto& c4 = cyc_context(4);
    CHECK(c4.degree() == 4);
    CHECK(c4.minpoly() == std::vector<BigInt>{2, 0, -4, 0, 1}); // x^4 - 4x^2 + 2

    CHECK(cyc_context(6).degree() == 4);
    CHECK(cyc_context(9).degree() == 6);
    CHECK(cyc_context(15).degree() == 8);

    CHECK_THROWS_AS(cyc_context(1), std::invalid_argument);
}

TEST_CASE("minimal polynomial identity Phi_4n(x) = x^d psi(x + 1/x)") {
    for (int n : {2, 3, 4, 5, 6, 8, 9, 15}) {
        auto phi = intpoly::cyclotomic(4 * n);
        auto psi = intpoly::cos2pi_minpoly(4 * n);
        int d = intpoly::deg(psi);
        // expand x^d * psi(x + 1/x) as a polynomial via psi(y) with y = (x^2+1)/x
        intpoly::Poly acc{BigInt(0)};
        intpoly::Poly xp{BigInt(0), BigInt(1)};          // x
        intpoly::Poly x2p1{BigInt(1), BigInt(0), BigInt(1)}; // x^2 + 1
        for (int k = d; k >= 0; --k) {
            acc = intpoly::add(intpoly::mul(acc, x2p1), {psi[k]});
            if (k > 0) acc = intpoly::mul(acc, {BigInt(0), BigInt(1)}); // pad power of x
        }
        // after the Horner loop acc = sum psi_k (x^2+1)^k x^{d-k} ... verify directly
        intpoly::Poly expect{BigInt(0)};
        for (int k = 0; k <= d; ++k) {
            intpoly::Poly term{psi[k]};
            for (int j = 0; j < k; ++j) term = intpoly::mul(term, x2p1);
            for (int j = 0; j < d - k; ++j) term = intpoly::mul(term, xp);
            expect = intpoly::add(expect, term);
        }
        CHECK(expect == phi);
    }
}

TEST_CASE("theta evaluates on the right root and minpoly(theta) = 0") {
    for (int n : {2, 3, 4, 6, 9, 15}) {
        const auto& ctx = cyc_context(n);
        RealCycNumber t = RealCycNumber::theta(ctx);
        // minpoly(theta) == 0 exactly
        RealCycNumber acc = RealCycNumber::zero(ctx);
        for (int k = ctx.degree(); k >= 0; --k) {
            acc = acc * t + RealCycNumber::from_rational(ctx, Rational(ctx.minpoly()[k]));
        }
        CHECK(acc.is_zero());
        CHECK(std::abs(t.to_double() - 2 * std::cos(M_PI / (2 * n))) < 1e-12);
    }
}

TEST_CASE("field arithmetic examples") {
    const auto& ctx = cyc_context(4);
    RealCycNumber t = RealCycNumber::theta(ctx);

    // theta^2 = 2 + sqrt(2)
    CHECK(t * t == RealCycNumber::from_int(ctx, 2) + sqrt2(ctx));

    // x / x = 1
    RealCycNumber x = t * t - RealCycNumber::from_int(ctx, 1);
    CHECK(x / x == RealCycNumber::one(ctx));

    // U_2(cos pi/8) - 1 = sqrt(2)
    CHECK(chebyshev_u(ctx, 2) - RealCycNumber::one(ctx) == sqrt2(ctx));

    CHECK_THROWS_AS(x / RealCycNumber::zero(ctx), std::domain_error);
    const auto& other = cyc_context(3);
    CHECK_THROWS_AS(x + RealCycNumber::one(other), std::invalid_argument);
}

TEST_CASE("chebyshev_u values and symmetry") {
    const auto& ctx = cyc_context(4);
    CHECK(chebyshev_u(ctx, 0) == RealCycNumber::one(ctx));
    CHECK(chebyshev_u(ctx, 1) == RealCycNumber::theta(ctx));
    CHECK(chebyshev_u(ctx, 2) == RealCycNumber::one(ctx) + sqrt2(ctx));
    CHECK(chebyshev_u(ctx, 6) == chebyshev_u(ctx, 0));
    CHECK_THROWS_AS(chebyshev_u(ctx, -1), std::invalid_argument);

    for (int n : {2, 3, 4, 6, 9}) {
        const auto& c = cyc_context(n);
        // U_i = U_{2n-2-i} on 0 <= i <= 2n-2, and U_{2n-1} = 0
        for (int i = 0; i <= 2 * n - 2; ++i) CHECK(chebyshev_u(c, i) == chebyshev_u(c, 2 * n - 2 - i));
        CHECK(chebyshev_u(c, 2 * n - 1).is_zero());
    }
}

TEST_CASE("chebyshev product rule with boundary reductions") {
    for (int n : {3, 4, 5}) {
        const auto& ctx = cyc_context(n);
        auto u_reduced = [&](int k) {
            // U_k with U_{2n-1} = 0 and U_{2n+k} = -U_{2n-2-k}
            if (k <= 2 * n - 2) return chebyshev_u(ctx, k);
            if (k == 2 * n - 1) return RealCycNumber::zero(ctx);
            return -chebyshev_u(ctx, 2 * (2 * n - 1) - k);
        };
        for (int i = 0; i <= 2 * n - 2; ++i)
            for (int j = 0; j <= i; ++j) {
                RealCycNumber sum = RealCycNumber::zero(ctx);
                for (int k = 0; k <= j; ++k) sum = sum + u_reduced(i - j + 2 * k);
                CHECK(chebyshev_u(ctx, i) * chebyshev_u(ctx, j) == sum);
            }
    }
}

TEST_CASE("sign determination") {
    const auto& ctx = cyc_context(4);
    RealCycNumber t = RealCycNumber::theta(ctx);
    CHECK(sign_of(RealCycNumber::zero(ctx)) == 0);
    CHECK(sign_of(t - RealCycNumber::one(ctx)) == 1);              // 2cos(pi/8) > 1
    CHECK(sign_of(RealCycNumber::one(ctx) - t * t) == -1);         // theta^2 > 1
    // a value extremely close to zero but nonzero: theta - 1847759/1000000
    RealCycNumber close = t - RealCycNumber::from_rational(ctx, Rational(1847759, 1000000));
    CHECK(sign_of(close) != 0);

    // total order compatibility on a sample
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        RealCycNumber a = random_elt(ctx, rng), b = random_elt(ctx, rng), c = random_elt(ctx, rng);
        CHECK(compare(a, b) == -compare(b, a));
        if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
        CHECK(((a - b).sign() == 0) == (a == b));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(42);
    for (int n : {3, 4, 9}) {
        const auto& ctx = cyc_context(n);
        for (int it = 0; it < 20; ++it) {
            RealCycNumber a = random_elt(ctx, rng), b = random_elt(ctx, rng), c = random_elt(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == RealCycNumber::one(ctx));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("matrix inverse and determinant over Q(theta)") {
    const auto& ctx = cyc_context(4);
    RealCycNumber t = RealCycNumber::theta(ctx);
    RMatrix m(2, 2, RealCycNumber::zero(ctx));
    m(0, 0) = t;
    m(0, 1) = RealCycNumber::one(ctx);
    m(1, 0) = RealCycNumber::one(ctx) - t * t;
    m(1, 1) = t * t;
    RMatrix inv = invert(m);
    RMatrix id = RMatrix::identity(2, RealCycNumber::one(ctx), RealCycNumber::zero(ctx));
    CHECK(m * inv == id);
    CHECK(det(m) == t * t * t - t * (RealCycNumber::one(ctx) - t * t));

    IMatrix a(3, 3, 0);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 0;
    a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 3;
    a(2, 0) = 0; a(2, 1) = 0; a(2, 2) = 1;
    CHECK(det(a) == 1);
    CHECK(a * invert_unimodular(a) == imat_identity(3));
}

TEST_CASE("solve_rational with kernel") {
    QMatrix A(2, 3, Rational(0));
    A(0, 0) = 1; A(0, 1) = 1; A(0, 2) = 0;
    A(1, 0) = 0; A(1, 1) = 1; A(1, 2) = 1;
    std::vector<std::vector<Rational>> ker;
    auto x = solve_rational(A, {Rational(3), Rational(2)}, &ker);
    REQUIRE(!x.empty());
    CHECK(x[0] + x[1] == 3);
    CHECK(x[1] + x[2] == 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] - ker[0][1] + 0 == ker[0][0] - ker[0][1]); // kernel vector satisfies A v = 0
    CHECK(ker[0][0] + ker[0][1] == 0);
    CHECK(ker[0][1] + ker[0][2] == 0);

    // inconsistent system
    QMatrix B(2, 1, Rational(1));
    CHECK(solve_rational(B, {Rational(1), Rational(2)}).empty());
}
