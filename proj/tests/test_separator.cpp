#include "doctest.h"

#include <random>
#include <stdexcept>

#include "sepwords/arithmetic.hpp"
#include "sepwords/errors.hpp"
#include "sepwords/separator.hpp"
#include "test_util.hpp"

using namespace sepwords;
using separator::Mode;
using words::BinaryString;
using test_util::naive_positions;
using test_util::random_binary_string;

namespace {

BinaryString bs(const char* text) { return BinaryString::parse(text); }

// Re-derives every quantity in a counting certificate from scratch.
void check_certificate_honesty(const separator::SeparationResult& result, const BinaryString& x,
                               const BinaryString& y) {
    const auto& cert = result.certificate;
    CHECK(cert.verified);
    if (cert.is_prefix()) {
        const auto& prefix = cert.prefix().prefix;
        CHECK(cert.states == prefix.size() + 2);
        CHECK(x.substring(1, prefix.size()) == prefix);
        CHECK(y.substring(1, prefix.size()) != prefix);
        return;
    }
    const auto& c = cert.counting();
    CHECK(cert.states == 2 * c.spec.modulus * c.spec.count_prime);
    int64_t count_a = 0, count_b = 0;
    for (int64_t j : naive_positions(x, c.spec.w)) {
        if (j % c.spec.modulus == c.spec.residue) ++count_a;
    }
    for (int64_t j : naive_positions(y, c.spec.w)) {
        if (j % c.spec.modulus == c.spec.residue) ++count_b;
    }
    CHECK(count_a == c.accepted_count);
    CHECK(count_b == c.rejected_count);
    CHECK(count_a % c.spec.count_prime == c.spec.target);
    CHECK(count_b % c.spec.count_prime != c.spec.target);
    CHECK(*words::first_difference(x, y) == c.window_k);
    CHECK(arithmetic::is_prime(c.spec.modulus) == c.modulus_is_prime);
}

} // namespace

TEST_CASE("separate: short prefix case") {
    const auto r = separator::separate(bs("0"), bs("1"), Mode::paper);
    CHECK(r.certificate.states == 3);
    CHECK(r.certificate.is_prefix());
    CHECK(separator::verify(r.dfa, bs("0"), bs("1")));
    CHECK(!separator::verify(r.dfa, bs("1"), bs("0")));
}

TEST_CASE("separate: worked counting example") {
    const auto x = bs("00010000");
    const auto y = bs("00011000");
    const auto r = separator::separate(x, y, Mode::paper);
    REQUIRE(!r.certificate.is_prefix());
    const auto& c = r.certificate.counting();
    CHECK(c.spec.w.to_string() == "0010");
    CHECK(c.window_k == 5);
    CHECK(c.spec.modulus == 5);
    CHECK(c.spec.residue == 2);
    CHECK(c.spec.count_prime == 2);
    CHECK(c.spec.target == 1);
    CHECK(r.certificate.states == 20);
    CHECK(separator::verify(r.dfa, x, y));
    check_certificate_honesty(r, x, y);
}

TEST_CASE("separate: baseline mode") {
    const auto r = separator::separate(bs("10"), bs("01"), Mode::baseline);
    REQUIRE(!r.certificate.is_prefix());
    const auto& c = r.certificate.counting();
    CHECK(c.spec.w.to_string() == "1");
    CHECK(c.spec.modulus == 2);
    CHECK(r.certificate.states == 8);
    CHECK(separator::verify(r.dfa, bs("10"), bs("01")));
    check_certificate_honesty(r, bs("10"), bs("01"));
}

TEST_CASE("separate: input validation") {
    CHECK_THROWS_AS(separator::separate(bs("01"), bs("01"), Mode::paper), std::invalid_argument);
    CHECK_THROWS_AS(separator::separate(bs("01"), bs("011"), Mode::paper), std::invalid_argument);
}

TEST_CASE("separate: exhausted prime cap aborts loudly") {
    // force the window path (k >= 2t) with an impossible prime range
    const auto x = bs("0000000010000000");
    const auto y = bs("0000000000000000");
    separator::SeparateOptions opts;
    opts.p_max = 3; // below the window length
    CHECK_THROWS_AS(separator::separate(x, y, Mode::paper, opts), ContradictionError);
}

TEST_CASE("verify") {
    const auto acceptor = separator::separate(bs("0"), bs("1"), Mode::paper).dfa;
    CHECK(separator::verify(acceptor, bs("0"), bs("1")));
    CHECK(!separator::verify(acceptor, bs("1"), bs("0")));
}

TEST_CASE("state_bound") {
    CHECK(separator::state_bound(2) == 2);
    CHECK_THROWS_AS(separator::state_bound(1), std::invalid_argument);
    int64_t prev = 0;
    for (int64_t n = 2; n <= 1 << 20; n *= 2) {
        const int64_t bound = separator::state_bound(n);
        CHECK(bound >= prev);
        prev = bound;
    }
    // K scales the bound
    CHECK(separator::state_bound(1000, 20.0) >= separator::state_bound(1000, 10.0));
}

TEST_CASE("soundness and symmetry on random pairs, all modes") {
    std::mt19937_64 rng(1357);
    const Mode modes[] = {Mode::paper, Mode::baseline, Mode::optimize};
    for (int iter = 0; iter < 120; ++iter) {
        const int64_t n = 2 + static_cast<int64_t>(rng() % 120);
        auto x = random_binary_string(rng, n);
        auto y = random_binary_string(rng, n);
        if (x == y) continue;
        for (Mode mode : modes) {
            const auto r = separator::separate(x, y, mode);
            CHECK(separator::verify(r.dfa, x, y));
            check_certificate_honesty(r, x, y);
            const auto rsym = separator::separate(y, x, mode);
            CHECK(separator::verify(rsym.dfa, y, x));
        }
    }
}

TEST_CASE("pairs with a deep first difference exercise the window path") {
    std::mt19937_64 rng(8642);
    int window_cases = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const int64_t n = 27 + static_cast<int64_t>(rng() % 100);
        const int64_t t = arithmetic::ceil_cbrt(n);
        auto xv = random_binary_string(rng, n).data();
        const int64_t k = 2 * t + static_cast<int64_t>(rng() % (n - 2 * t + 1));
        auto yv = xv;
        yv[static_cast<size_t>(k - 1)] ^= 1;
        for (int64_t j = k; j < n; ++j) yv[static_cast<size_t>(j)] = rng() & 1;
        const BinaryString x{std::move(xv)}, y{std::move(yv)};
        if (x == y) continue;

        const auto r = separator::separate(x, y, Mode::paper);
        CHECK(separator::verify(r.dfa, x, y));
        check_certificate_honesty(r, x, y);
        if (!r.certificate.is_prefix()) {
            ++window_cases;
            const auto& c = r.certificate.counting();
            CHECK(c.spec.w.size() == 2 * t);
            CHECK(c.spec.modulus >= c.spec.w.size());
            CHECK(c.modulus_is_prime);
        }
    }
    CHECK(window_cases > 100);
}

TEST_CASE("optimize mode never exceeds paper mode") {
    std::mt19937_64 rng(11213);
    for (int iter = 0; iter < 80; ++iter) {
        const int64_t n = 2 + static_cast<int64_t>(rng() % 200);
        auto x = random_binary_string(rng, n);
        auto y = random_binary_string(rng, n);
        if (x == y) continue;
        const auto paper = separator::separate(x, y, Mode::paper);
        const auto opt = separator::separate(x, y, Mode::optimize);
        CHECK(opt.certificate.states <= paper.certificate.states);
        CHECK(separator::verify(opt.dfa, x, y));
        check_certificate_honesty(opt, x, y);
    }
}

TEST_CASE("certificate text block") {
    const auto r = separator::separate(bs("00010000"), bs("00011000"), Mode::paper);
    const std::string text = r.certificate.to_text();
    CHECK(text.find("mode: paper\n") != std::string::npos);
    CHECK(text.find("variant: counting\n") != std::string::npos);
    CHECK(text.find("w: 0010\n") != std::string::npos);
    CHECK(text.find("m: 5\n") != std::string::npos);
    CHECK(text.find("i: 2\n") != std::string::npos);
    CHECK(text.find("q: 2\n") != std::string::npos);
    CHECK(text.find("a: 1\n") != std::string::npos);
    CHECK(text.find("states: 20\n") != std::string::npos);
    CHECK(text.find("verified: true\n") != std::string::npos);

    const auto rp = separator::separate(bs("0"), bs("1"), Mode::paper);
    const std::string tp = rp.certificate.to_text();
    CHECK(tp.find("variant: prefix\n") != std::string::npos);
    CHECK(tp.find("prefix: 0\n") != std::string::npos);
}
