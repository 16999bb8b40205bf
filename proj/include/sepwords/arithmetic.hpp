#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepwords::arithmetic {

using BigInt = boost::multiprecision::cpp_int;

/// Strictly increasing integers in [1, n].
class IndexSet {
public:
    IndexSet(std::vector<int64_t> elements, int64_t universe);

    const std::vector<int64_t>& elements() const { return elements_; }
    int64_t universe() const { return universe_; }
    int64_t size() const { return static_cast<int64_t>(elements_.size()); }
    bool empty() const { return elements_.empty(); }

    /// Consecutive elements differ by at least d.
    bool is_separated(int64_t d) const;

    /// Comma-separated integers, e.g. "1,4,9"; empty text is the empty set.
    static IndexSet parse(std::string_view text, int64_t universe);
    std::string to_string() const;

    bool operator==(const IndexSet& other) const { return elements_ == other.elements_; }
    bool operator!=(const IndexSet& other) const { return elements_ != other.elements_; }

private:
    std::vector<int64_t> elements_;
    int64_t universe_;
};

/// counts[i] = |{a in A : a = i mod p}| for i in [0, p).
struct ResidueProfile {
    int64_t modulus = 1;
    std::vector<int64_t> counts;

    bool operator==(const ResidueProfile& other) const = default;
};

/// Minimal exponent at which the power sums of two sets differ, with the
/// exact values.
struct MomentWitness {
    int64_t exponent = 0;
    BigInt moment_a;
    BigInt moment_b;
};

/// All primes <= k, ascending (sieve of Eratosthenes).
std::vector<int64_t> primes_up_to(int64_t k);

bool is_prime(int64_t n);

/// Smallest t with t^3 >= n (exact integer arithmetic).
int64_t ceil_cbrt(int64_t n);

ResidueProfile residue_profile(const IndexSet& a, int64_t p);

/// Smallest prime p in [p_min, p_max] admitting a residue i with
/// |A_{i,p}| != |B_{i,p}|, together with the smallest such i.
std::optional<std::pair<int64_t, int64_t>> find_separating_prime(const IndexSet& a,
                                                                 const IndexSet& b, int64_t p_min,
                                                                 int64_t p_max);

/// Smallest prime q <= q_max with c1 != c2 (mod q).
std::optional<int64_t> find_count_prime(int64_t c1, int64_t c2, int64_t q_max);

/// Exact power sum over the set; 0^0 = 1, so moment(A, 0) = |A|.
BigInt moment(const IndexSet& a, int64_t m);

/// Minimal m <= m_max with differing moments.
std::optional<MomentWitness> find_moment_witness(const IndexSet& a, const IndexSet& b,
                                                 int64_t m_max);

/// Smallest prime p in [p_min, p_max] not dividing moment(A,m) - moment(B,m),
/// with the smallest residue i whose counts differ mod p. Such an i exists
/// by the residue-moment identity sum_a a^m = sum_i |A_{i,p}| i^m (mod p).
std::optional<std::pair<int64_t, int64_t>> moment_to_prime(const IndexSet& a, const IndexSet& b,
                                                           int64_t m, int64_t p_min, int64_t p_max);

} // namespace sepwords::arithmetic
