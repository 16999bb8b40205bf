#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepwords/arithmetic.hpp"
#include "sepwords/automata.hpp"
#include "sepwords/words.hpp"

namespace sepwords::oracle {

/// Exhaustively established minimal separating DFA size with one witness.
struct ExactResult {
    int64_t size = 0;
    automata::Dfa witness;
};

/// Distinct d-separated sets with identical residue profiles for all
/// primes p <= verified_prime_bound.
struct AdversarialPair {
    arithmetic::IndexSet a;
    arithmetic::IndexSet b;
    int64_t separation = 1;
    int64_t verified_prime_bound = 1;
};

/// Enumerates every complete DFA structure on exactly `states` reachable
/// states over {0,1}, start fixed at state 0, states numbered in
/// first-visit order (canonical-form pruning). The callback receives the
/// 0-based transition table and returns false to stop early.
void enumerate_canonical_dfas(int64_t states,
                              const std::function<bool(const std::vector<std::array<int64_t, 2>>&)>& fn);

/// Minimal s <= s_max such that an s-state DFA accepts x and rejects y,
/// plus a witness; nullopt when no such DFA exists within the cap.
std::optional<ExactResult> exact_min_dfa(const words::BinaryString& x,
                                         const words::BinaryString& y, int64_t s_max);

/// Minimal separating sizes for every unordered pair of distinct length-n
/// strings. sizes is indexed by u * 2^n + v for string codes u < v
/// (x_1 is the most significant bit); 0 marks pairs not separated within
/// s_max.
struct AllPairSizes {
    int64_t n = 0;
    std::vector<uint8_t> sizes;
    int64_t undetermined = 0;

    int64_t size_of(int64_t u, int64_t v) const;
};
AllPairSizes exact_sizes_all_pairs(int64_t n, int64_t s_max);

/// f(n) = max over all distinct pairs of the minimal separating size.
/// Capped at n <= 10; throws if s_max leaves any pair undetermined.
int64_t f_of_n(int64_t n, int64_t s_max);

/// Randomized collision search for distinct d-separated subsets of [n]
/// with identical residue profiles for all primes p <= k. Samples subsets
/// holding at most one element per interval [2jd+1, (2j+1)d] and hashes
/// profile tuples until two distinct samples collide; nullopt once the
/// budget is exhausted. Deterministic for a fixed seed.
std::optional<AdversarialPair> adversarial_pair(int64_t n, int64_t d, int64_t k, int64_t budget,
                                                uint64_t seed);

/// Embeds the pair as strings of length n_out: ones at A + floor(n_out/4)
/// and B + floor(n_out/4), zeros elsewhere.
std::pair<words::BinaryString, words::BinaryString> adversarial_strings(const AdversarialPair& pair,
                                                                        int64_t n_out);

/// True iff |pos_w(x)_{i,p}| = |pos_w(y)_{i,p}| for all primes p <= p_max,
/// residues i, and patterns w with 1 <= |w| <= min(w_len_max, p).
bool check_profile_equality(const words::BinaryString& x, const words::BinaryString& y,
                            int64_t p_max, int64_t w_len_max);

} // namespace sepwords::oracle
