#include <doctest.h>

#include <cstdint>
#include <map>

#include "reebcert/cfrac.hpp"
#include "reebcert/errors.hpp"

using namespace reebcert;

namespace {

std::vector<Int> to_ints(std::initializer_list<int> values) {
    return std::vector<Int>(values.begin(), values.end());
}

}  // namespace

TEST_SUITE("cfrac") {

TEST_CASE("coprime pair validation") {
    CHECK_NOTHROW(CoprimePair(3, 2));
    CHECK_THROWS_AS(CoprimePair(4, 2), InputError);
    CHECK_THROWS_AS(CoprimePair(3, 3), InputError);
    CHECK_THROWS_AS(CoprimePair(2, 3), InputError);
    CHECK_THROWS_AS(CoprimePair(2, 0), InputError);
}

TEST_CASE("expansion of small pairs") {
    CHECK(neg_cfrac(CoprimePair(3, 1)).coefficients == to_ints({-3}));
    CHECK(neg_cfrac(CoprimePair(3, 2)).coefficients == to_ints({-2, -2}));
    CHECK(neg_cfrac(CoprimePair(5, 3)).coefficients == to_ints({-2, -3}));
    CHECK(neg_cfrac(CoprimePair(2, 1)).coefficients == to_ints({-2}));
}

TEST_CASE("evaluation of small expansions") {
    CHECK(eval_cfrac(to_ints({-3})) == Rational(-3, 1));
    CHECK(eval_cfrac(to_ints({-2, -2})) == Rational(-3, 2));
    CHECK(eval_cfrac(to_ints({-2, -3})) == Rational(-5, 3));
    CHECK_THROWS_AS(eval_cfrac({}), InputError);
    CHECK_THROWS_AS(eval_cfrac(to_ints({-1})), InputError);
    CHECK_THROWS_AS(eval_cfrac(to_ints({-2, 0})), InputError);
    CHECK_THROWS_AS(eval_cfrac(to_ints({-2, -1, -2})), InputError);
}

TEST_CASE("round trip for all coprime pairs up to 120") {
    for (int p = 2; p <= 120; ++p)
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            ContinuedFraction cf = neg_cfrac(CoprimePair(p, q));
            for (const Int& n : cf.coefficients) REQUIRE(n <= -2);
            REQUIRE(eval_cfrac(cf.coefficients) == Rational(-p, q));
        }
}

TEST_CASE("expansions are unique over a brute-force window") {
    // Every expansion with coefficients in [-12,-2] and length <= 6 equals
    // the Hirzebruch-Jung expansion of its own value, so no two distinct
    // expansions can represent the same fraction.
    auto hj = [](std::int64_t p, std::int64_t q) {
        std::vector<int> out;
        while (true) {
            std::int64_t a = (p + q - 1) / q;
            out.push_back(static_cast<int>(-a));
            std::int64_t r = a * q - p;
            if (r == 0) break;
            p = q;
            q = r;
        }
        return out;
    };
    std::vector<int> stack;
    std::int64_t enumerated = 0;
    auto recurse = [&](auto&& self) -> void {
        if (!stack.empty()) {
            // continuant from the right; den < 0 means the pair needs a flip
            std::int64_t num = stack.back(), den = 1;
            for (std::size_t i = stack.size() - 1; i-- > 0;) {
                std::int64_t next = stack[i] * num - den;
                den = num;
                num = next;
            }
            if (den < 0) {
                num = -num;
                den = -den;
            }
            REQUIRE(hj(-num, den) == stack);
            if (++enumerated % 509 == 0) {  // sampled library cross-check
                ContinuedFraction cf = neg_cfrac(CoprimePair(-num, den));
                REQUIRE(cf.coefficients.size() == stack.size());
                for (std::size_t i = 0; i < stack.size(); ++i)
                    REQUIRE(cf.coefficients[i] == stack[i]);
            }
        }
        if (stack.size() == 6) return;
        for (int n = -12; n <= -2; ++n) {
            stack.push_back(n);
            self(self);
            stack.pop_back();
        }
    };
    recurse(recurse);
    CHECK(enumerated == 1948716);  // 11 + 11^2 + ... + 11^6
}

TEST_CASE("q-sequence recurrences and endpoints") {
    CHECK(q_sequence(neg_cfrac(CoprimePair(3, 2))).values == to_ints({0, 1, 2, 3}));
    CHECK(q_sequence(neg_cfrac(CoprimePair(5, 3))).values == to_ints({0, 1, 3, 5}));
    CHECK(q_sequence(neg_cfrac(CoprimePair(3, 1))).values == to_ints({0, 1, 3}));

    for (int p = 2; p <= 120; ++p)
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            ContinuedFraction cf = neg_cfrac(CoprimePair(p, q));
            QSequence qs = q_sequence(cf);
            std::size_t k = cf.coefficients.size();
            REQUIRE(qs.values.size() == k + 2);
            REQUIRE(qs.values[k] == q);
            REQUIRE(qs.values[k + 1] == p);
            for (std::size_t j = 1; j <= k; ++j) {
                REQUIRE(qs.values[j] >= 1);
                REQUIRE(qs.values[j + 1] > qs.values[j]);
            }
        }
}

TEST_CASE("odd lens detection") {
    CHECK_FALSE(is_odd_lens(neg_cfrac(CoprimePair(3, 2))));
    CHECK(is_odd_lens(neg_cfrac(CoprimePair(5, 3))));
    CHECK(is_odd_lens(neg_cfrac(CoprimePair(3, 1))));
}

}  // TEST_SUITE
