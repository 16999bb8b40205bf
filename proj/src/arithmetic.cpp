#include "sepwords/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sepwords/errors.hpp"

namespace sepwords::arithmetic {

IndexSet::IndexSet(std::vector<int64_t> elements, int64_t universe)
    : elements_(std::move(elements)), universe_(universe) {
    if (universe_ < 0) throw std::invalid_argument("index set universe must be non-negative");
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1 || elements_[i] > universe_) {
            throw std::invalid_argument("index set element out of range [1, n]");
        }
        if (i > 0 && elements_[i] <= elements_[i - 1]) {
            throw std::invalid_argument("index set elements must be strictly increasing");
        }
    }
}

bool IndexSet::is_separated(int64_t d) const {
    for (size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] - elements_[i - 1] < d) return false;
    }
    return true;
}

IndexSet IndexSet::parse(std::string_view text, int64_t universe) {
    std::vector<int64_t> elems;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        size_t lo = token.find_first_not_of(" \t\r\n");
        if (lo == std::string::npos) continue;
        size_t hi = token.find_last_not_of(" \t\r\n");
        size_t used = 0;
        int64_t value;
        try {
            value = std::stoll(token.substr(lo, hi - lo + 1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("index set: bad integer '" + token + "'");
        }
        if (used != hi - lo + 1) throw std::invalid_argument("index set: bad integer '" + token + "'");
        elems.push_back(value);
    }
    std::sort(elems.begin(), elems.end());
    return IndexSet(std::move(elems), universe);
}

std::string IndexSet::to_string() const {
    std::string out;
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(elements_[i]);
    }
    return out;
}

std::vector<int64_t> primes_up_to(int64_t k) {
    if (k < 2) return {};
    std::vector<char> composite(static_cast<size_t>(k + 1), 0);
    std::vector<int64_t> primes;
    for (int64_t p = 2; p <= k; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        primes.push_back(p);
        for (int64_t mult = p * p; mult <= k; mult += p) composite[static_cast<size_t>(mult)] = 1;
    }
    return primes;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int64_t ceil_cbrt(int64_t n) {
    if (n < 1) throw std::invalid_argument("ceil_cbrt: argument must be >= 1");
    int64_t t = static_cast<int64_t>(std::cbrt(static_cast<double>(n)));
    while (t > 1 && (t - 1) * (t - 1) * (t - 1) >= n) --t;
    while (t * t * t < n) ++t;
    return t;
}

ResidueProfile residue_profile(const IndexSet& a, int64_t p) {
    if (p < 1) throw std::invalid_argument("residue_profile: modulus must be >= 1");
    ResidueProfile profile;
    profile.modulus = p;
    profile.counts.assign(static_cast<size_t>(p), 0);
    for (int64_t e : a.elements()) ++profile.counts[static_cast<size_t>(e % p)];
    return profile;
}

std::optional<std::pair<int64_t, int64_t>> find_separating_prime(const IndexSet& a,
                                                                 const IndexSet& b, int64_t p_min,
                                                                 int64_t p_max) {
    if (a == b) throw std::invalid_argument("find_separating_prime: sets must differ");
    for (int64_t p : primes_up_to(p_max)) {
        if (p < p_min) continue;
        const auto pa = residue_profile(a, p);
        const auto pb = residue_profile(b, p);
        for (int64_t i = 0; i < p; ++i) {
            if (pa.counts[static_cast<size_t>(i)] != pb.counts[static_cast<size_t>(i)]) {
                return std::make_pair(p, i);
            }
        }
    }
    return std::nullopt;
}

std::optional<int64_t> find_count_prime(int64_t c1, int64_t c2, int64_t q_max) {
    if (c1 < 0 || c2 < 0) throw std::invalid_argument("find_count_prime: counts must be >= 0");
    if (c1 == c2) throw std::invalid_argument("find_count_prime: counts must differ");
    for (int64_t q : primes_up_to(q_max)) {
        if (c1 % q != c2 % q) return q;
    }
    return std::nullopt;
}

BigInt moment(const IndexSet& a, int64_t m) {
    if (m < 0) throw std::invalid_argument("moment: exponent must be >= 0");
    BigInt sum = 0;
    for (int64_t e : a.elements()) {
        BigInt term = 1; // covers the 0^0 = 1 convention at m = 0
        BigInt base = e;
        int64_t exp = m;
        while (exp > 0) {
            if (exp & 1) term *= base;
            base *= base;
            exp >>= 1;
        }
        sum += term;
    }
    return sum;
}

std::optional<MomentWitness> find_moment_witness(const IndexSet& a, const IndexSet& b,
                                                 int64_t m_max) {
    if (a == b) throw std::invalid_argument("find_moment_witness: sets must differ");
    // Incremental power sums: powers[j] holds element_j^m across iterations.
    std::vector<BigInt> pow_a(a.elements().size(), 1), pow_b(b.elements().size(), 1);
    for (int64_t m = 0; m <= m_max; ++m) {
        BigInt sum_a = 0, sum_b = 0;
        for (const auto& v : pow_a) sum_a += v;
        for (const auto& v : pow_b) sum_b += v;
        if (sum_a != sum_b) return MomentWitness{m, std::move(sum_a), std::move(sum_b)};
        for (size_t j = 0; j < pow_a.size(); ++j) pow_a[j] *= a.elements()[j];
        for (size_t j = 0; j < pow_b.size(); ++j) pow_b[j] *= b.elements()[j];
    }
    return std::nullopt;
}

std::optional<std::pair<int64_t, int64_t>> moment_to_prime(const IndexSet& a, const IndexSet& b,
                                                           int64_t m, int64_t p_min,
                                                           int64_t p_max) {
    const BigInt diff = moment(a, m) - moment(b, m);
    if (diff == 0) throw std::invalid_argument("moment_to_prime: moments must differ at m");
    for (int64_t p : primes_up_to(p_max)) {
        if (p < p_min) continue;
        if (diff % p == 0) continue;
        const auto pa = residue_profile(a, p);
        const auto pb = residue_profile(b, p);
        for (int64_t i = 0; i < p; ++i) {
            const int64_t ca = pa.counts[static_cast<size_t>(i)] % p;
            const int64_t cb = pb.counts[static_cast<size_t>(i)] % p;
            if (ca != cb) return std::make_pair(p, i);
        }
        throw ContradictionError(
            "moment_to_prime: residue-moment identity violated (no differing residue mod " +
            std::to_string(p) + ")");
    }
    return std::nullopt;
}

} // namespace sepwords::arithmetic
