#include "doctest.h"

#include <random>
#include <stdexcept>

#include "sepwords/arithmetic.hpp"
#include "test_util.hpp"

using namespace sepwords;
using arithmetic::BigInt;
using arithmetic::IndexSet;

namespace {

// Trial-division oracle for the sieve.
std::vector<int64_t> primes_by_trial_division(int64_t k) {
    std::vector<int64_t> out;
    for (int64_t n = 2; n <= k; ++n) {
        bool prime = true;
        for (int64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(n);
    }
    return out;
}

IndexSet random_index_set(std::mt19937_64& rng, int64_t n, double density) {
    std::vector<int64_t> elems;
    for (int64_t e = 1; e <= n; ++e) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) < density) elems.push_back(e);
    }
    return IndexSet(std::move(elems), n);
}

} // namespace

TEST_CASE("index set validation and text format") {
    CHECK_THROWS_AS(IndexSet({0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({6}, 5), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({2, 2}, 5), std::invalid_argument);
    const IndexSet s = IndexSet::parse("4, 1,9", 10);
    CHECK(s.elements() == std::vector<int64_t>{1, 4, 9});
    CHECK(s.to_string() == "1,4,9");
    CHECK(IndexSet::parse("", 10).empty());
    CHECK_THROWS_AS(IndexSet::parse("1,two", 10), std::invalid_argument);
    CHECK(IndexSet({1, 4}, 10).is_separated(3));
    CHECK(!IndexSet({1, 4}, 10).is_separated(4));
}

TEST_CASE("primes_up_to: examples and oracle agreement") {
    CHECK(arithmetic::primes_up_to(1).empty());
    CHECK(arithmetic::primes_up_to(10) == std::vector<int64_t>{2, 3, 5, 7});
    CHECK(arithmetic::primes_up_to(30) == primes_by_trial_division(30));
    CHECK(arithmetic::primes_up_to(1000) == primes_by_trial_division(1000));
}

TEST_CASE("ceil_cbrt") {
    CHECK(arithmetic::ceil_cbrt(1) == 1);
    CHECK(arithmetic::ceil_cbrt(8) == 2);
    CHECK(arithmetic::ceil_cbrt(9) == 3);
    CHECK(arithmetic::ceil_cbrt(27) == 3);
    CHECK(arithmetic::ceil_cbrt(1000000) == 100);
    CHECK(arithmetic::ceil_cbrt(1000001) == 101);
}

TEST_CASE("residue_profile") {
    const auto p1 = arithmetic::residue_profile(IndexSet({1, 4}, 10), 3);
    CHECK(p1.counts == std::vector<int64_t>{0, 2, 0});
    const auto p2 = arithmetic::residue_profile(IndexSet({}, 10), 5);
    CHECK(p2.counts == std::vector<int64_t>{0, 0, 0, 0, 0});
    const auto p3 = arithmetic::residue_profile(IndexSet({1, 2, 3, 4, 5, 6}, 10), 2);
    CHECK(p3.counts == std::vector<int64_t>{3, 3});
    CHECK_THROWS_AS(arithmetic::residue_profile(IndexSet({1}, 5), 0), std::invalid_argument);
}

TEST_CASE("find_separating_prime: examples") {
    const IndexSet a({2}, 10), empty({}, 10);
    auto r = arithmetic::find_separating_prime(a, empty, 2, 100);
    REQUIRE(r.has_value());
    CHECK(*r == std::pair<int64_t, int64_t>{2, 0});

    const IndexSet a2({1, 4}, 10), b2({2, 3}, 10);
    auto r2 = arithmetic::find_separating_prime(a2, b2, 2, 100);
    REQUIRE(r2.has_value());
    CHECK(*r2 == std::pair<int64_t, int64_t>{3, 0});

    CHECK(!arithmetic::find_separating_prime(a2, b2, 2, 2).has_value());
    CHECK_THROWS_AS(arithmetic::find_separating_prime(a2, a2, 2, 100), std::invalid_argument);
}

TEST_CASE("find_separating_prime returns the true minimum (exhaustive oracle)") {
    std::mt19937_64 rng(808);
    for (int iter = 0; iter < 1000; ++iter) {
        const int64_t n = 10 + static_cast<int64_t>(rng() % 50);
        const IndexSet a = random_index_set(rng, n, 0.3);
        const IndexSet b = random_index_set(rng, n, 0.3);
        if (a == b) continue;
        const auto got = arithmetic::find_separating_prime(a, b, 2, 97);
        // oracle: scan every prime and residue directly
        std::optional<std::pair<int64_t, int64_t>> expected;
        for (int64_t p : primes_by_trial_division(97)) {
            const auto pa = arithmetic::residue_profile(a, p);
            const auto pb = arithmetic::residue_profile(b, p);
            for (int64_t i = 0; i < p && !expected; ++i) {
                if (pa.counts[static_cast<size_t>(i)] != pb.counts[static_cast<size_t>(i)]) {
                    expected = {p, i};
                }
            }
            if (expected) break;
        }
        CHECK(got == expected);
    }
}

TEST_CASE("find_count_prime") {
    CHECK(arithmetic::find_count_prime(0, 1, 64) == 2);
    CHECK(arithmetic::find_count_prime(3, 5, 64) == 3);
    CHECK(arithmetic::find_count_prime(6, 10, 64) == 3);
    CHECK_THROWS_AS(arithmetic::find_count_prime(4, 4, 64), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic::find_count_prime(-1, 4, 64), std::invalid_argument);
    // difference divisible by all primes up to the cap
    CHECK(!arithmetic::find_count_prime(0, 2 * 3 * 5 * 7, 7).has_value());
}

TEST_CASE("moment: examples and 0^0 convention") {
    CHECK(arithmetic::moment(IndexSet({1, 4}, 10), 2) == 17);
    CHECK(arithmetic::moment(IndexSet({}, 10), 5) == 0);
    CHECK(arithmetic::moment(IndexSet({2, 3}, 10), 2) == 13);
    CHECK(arithmetic::moment(IndexSet({1, 4}, 10), 0) == 2); // m = 0 counts elements
    CHECK_THROWS_AS(arithmetic::moment(IndexSet({1}, 5), -1), std::invalid_argument);
    // exactness on big values: 1000^10
    const BigInt big = arithmetic::moment(IndexSet({1000}, 1000), 10);
    CHECK(big == BigInt("1000000000000000000000000000000"));
}

TEST_CASE("find_moment_witness: examples and minimality") {
    const IndexSet a({1, 4}, 10), b({2, 3}, 10);
    auto w = arithmetic::find_moment_witness(a, b, 100);
    REQUIRE(w.has_value());
    CHECK(w->exponent == 2);
    CHECK(w->moment_a == 17);
    CHECK(w->moment_b == 13);

    auto w2 = arithmetic::find_moment_witness(IndexSet({1}, 5), IndexSet({2}, 5), 100);
    REQUIRE(w2.has_value());
    CHECK(w2->exponent == 1);

    auto w3 = arithmetic::find_moment_witness(IndexSet({1, 2}, 5), IndexSet({3}, 5), 100);
    REQUIRE(w3.has_value());
    CHECK(w3->exponent == 0);

    CHECK_THROWS_AS(arithmetic::find_moment_witness(a, a, 10), std::invalid_argument);

    // minimality invariant on random pairs: all smaller exponents agree
    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 200; ++iter) {
        const int64_t n = 20 + static_cast<int64_t>(rng() % 80);
        const IndexSet ra = random_index_set(rng, n, 0.4);
        const IndexSet rb = random_index_set(rng, n, 0.4);
        if (ra == rb) continue;
        const auto rw = arithmetic::find_moment_witness(ra, rb, 500);
        REQUIRE(rw.has_value());
        CHECK(rw->moment_a != rw->moment_b);
        CHECK(rw->moment_a == arithmetic::moment(ra, rw->exponent));
        CHECK(rw->moment_b == arithmetic::moment(rb, rw->exponent));
        for (int64_t m = 0; m < rw->exponent; ++m) {
            CHECK(arithmetic::moment(ra, m) == arithmetic::moment(rb, m));
        }
    }
}

TEST_CASE("moment_to_prime: examples") {
    const IndexSet a({1, 4}, 10), b({2, 3}, 10);
    auto r = arithmetic::moment_to_prime(a, b, 2, 2, 100);
    REQUIRE(r.has_value());
    CHECK(*r == std::pair<int64_t, int64_t>{3, 0});

    auto r2 = arithmetic::moment_to_prime(IndexSet({1}, 5), IndexSet({2}, 5), 1, 2, 100);
    REQUIRE(r2.has_value());
    CHECK(*r2 == std::pair<int64_t, int64_t>{2, 0});

    CHECK_THROWS_AS(arithmetic::moment_to_prime(a, b, 1, 2, 100), std::invalid_argument);
}

TEST_CASE("residue-moment identity holds exactly") {
    std::mt19937_64 rng(515);
    const auto primes = arithmetic::primes_up_to(97);
    for (int iter = 0; iter < 1000; ++iter) {
        const int64_t n = 5 + static_cast<int64_t>(rng() % 200);
        const IndexSet a = random_index_set(rng, n, 0.35);
        const int64_t p = primes[rng() % primes.size()];
        const int64_t m = static_cast<int64_t>(rng() % 51);
        const auto profile = arithmetic::residue_profile(a, p);
        BigInt rhs = 0;
        for (int64_t i = 0; i < p; ++i) {
            BigInt pw = 1;
            for (int64_t e = 0; e < m; ++e) pw *= i;
            rhs += profile.counts[static_cast<size_t>(i)] * pw;
        }
        CHECK(arithmetic::moment(a, m) % p == rhs % p);
    }
}

TEST_CASE("two routes agree: witness then prime then profiles") {
    std::mt19937_64 rng(9090);
    for (int iter = 0; iter < 200; ++iter) {
        const int64_t n = 20 + static_cast<int64_t>(rng() % 100);
        const IndexSet a = random_index_set(rng, n, 0.3);
        const IndexSet b = random_index_set(rng, n, 0.3);
        if (a == b) continue;
        const auto w = arithmetic::find_moment_witness(a, b, 1000);
        REQUIRE(w.has_value());
        const auto pi = arithmetic::moment_to_prime(a, b, w->exponent, 2, 10000);
        REQUIRE(pi.has_value());
        const auto [p, i] = *pi;
        const auto pa = arithmetic::residue_profile(a, p);
        const auto pb = arithmetic::residue_profile(b, p);
        CHECK(pa.counts[static_cast<size_t>(i)] != pb.counts[static_cast<size_t>(i)]);
    }
}
