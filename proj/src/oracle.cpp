#include "sepwords/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "sepwords/errors.hpp"

namespace sepwords::oracle {

using arithmetic::IndexSet;
using words::BinaryString;

namespace {

struct CanonicalEnumerator {
    int64_t s;
    std::vector<std::array<int64_t, 2>> trans;
    const std::function<bool(const std::vector<std::array<int64_t, 2>>&)>* fn;
    bool stopped = false;

    // Fills transition slots in state-major order; a fresh target always
    // receives the next unused index, which quotients out relabeling.
    void fill(int64_t slot, int64_t used) {
        if (stopped) return;
        if (slot == 2 * s) {
            if (used == s && !(*fn)(trans)) stopped = true;
            return;
        }
        const int64_t state = slot / 2;
        if (state >= used) return;            // state never discovered: dead branch
        if (s - used > 2 * s - slot) return;  // not enough slots left to discover the rest
        const int64_t sym = slot % 2;
        const int64_t top = std::min(used, s - 1);
        for (int64_t target = 0; target <= top; ++target) {
            trans[static_cast<size_t>(state)][static_cast<size_t>(sym)] = target;
            fill(slot + 1, used + (target == used ? 1 : 0));
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_canonical_dfas(
    int64_t states, const std::function<bool(const std::vector<std::array<int64_t, 2>>&)>& fn) {
    if (states < 1) throw std::invalid_argument("enumerate_canonical_dfas: need states >= 1");
    CanonicalEnumerator e;
    e.s = states;
    e.trans.assign(static_cast<size_t>(states), {0, 0});
    e.fn = &fn;
    e.fill(0, 1);
}

std::optional<ExactResult> exact_min_dfa(const BinaryString& x, const BinaryString& y,
                                         int64_t s_max) {
    if (x.size() != y.size()) throw std::invalid_argument("exact_min_dfa: lengths must match");
    if (x == y) throw std::invalid_argument("exact_min_dfa: strings must be distinct");
    for (int64_t s = 1; s <= s_max; ++s) {
        std::optional<ExactResult> found;
        enumerate_canonical_dfas(s, [&](const std::vector<std::array<int64_t, 2>>& trans) {
            int64_t sx = 0, sy = 0;
            for (int64_t i = 1; i <= x.size(); ++i) {
                sx = trans[static_cast<size_t>(sx)][static_cast<size_t>(x.bit(i))];
                sy = trans[static_cast<size_t>(sy)][static_cast<size_t>(y.bit(i))];
            }
            if (sx == sy) return true;
            std::vector<std::array<int64_t, 2>> shifted(trans.size());
            for (size_t st = 0; st < trans.size(); ++st) {
                shifted[st] = {trans[st][0] + 1, trans[st][1] + 1};
            }
            found = ExactResult{s, automata::Dfa(s, std::move(shifted), 1, {sx + 1})};
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

int64_t AllPairSizes::size_of(int64_t u, int64_t v) const {
    if (u > v) std::swap(u, v);
    return sizes[static_cast<size_t>((u << n) + v)];
}

AllPairSizes exact_sizes_all_pairs(int64_t n, int64_t s_max) {
    if (n < 1 || n > 10) throw std::invalid_argument("exact_sizes_all_pairs: n must be in [1, 10]");
    const int64_t count = int64_t{1} << n;
    AllPairSizes result;
    result.n = n;
    result.sizes.assign(static_cast<size_t>(count * count), 0);

    std::vector<std::pair<int32_t, int32_t>> remaining;
    remaining.reserve(static_cast<size_t>(count * (count - 1) / 2));
    for (int64_t u = 0; u < count; ++u) {
        for (int64_t v = u + 1; v < count; ++v) {
            remaining.emplace_back(static_cast<int32_t>(u), static_cast<int32_t>(v));
        }
    }

    std::vector<int32_t> finals(static_cast<size_t>(count));
    std::vector<int32_t> level[2];
    for (int64_t s = 1; s <= s_max && !remaining.empty(); ++s) {
        enumerate_canonical_dfas(s, [&](const std::vector<std::array<int64_t, 2>>& trans) {
            // Final state of every length-n string by dynamic programming
            // over prefixes (bit 1 of the string is the most significant).
            level[0].assign(1, 0);
            for (int64_t depth = 0; depth < n; ++depth) {
                auto& cur = level[depth % 2];
                auto& nxt = level[(depth + 1) % 2];
                nxt.resize(cur.size() * 2);
                for (size_t pfx = 0; pfx < cur.size(); ++pfx) {
                    nxt[2 * pfx] = static_cast<int32_t>(trans[static_cast<size_t>(cur[pfx])][0]);
                    nxt[2 * pfx + 1] = static_cast<int32_t>(trans[static_cast<size_t>(cur[pfx])][1]);
                }
            }
            auto& last = level[n % 2];
            for (int64_t u = 0; u < count; ++u) finals[static_cast<size_t>(u)] = last[static_cast<size_t>(u)];

            size_t kept = 0;
            for (const auto& [u, v] : remaining) {
                if (finals[static_cast<size_t>(u)] != finals[static_cast<size_t>(v)]) {
                    result.sizes[static_cast<size_t>((static_cast<int64_t>(u) << n) + v)] =
                        static_cast<uint8_t>(s);
                } else {
                    remaining[kept++] = {u, v};
                }
            }
            remaining.resize(kept);
            return !remaining.empty();
        });
    }
    result.undetermined = static_cast<int64_t>(remaining.size());
    return result;
}

int64_t f_of_n(int64_t n, int64_t s_max) {
    const auto all = exact_sizes_all_pairs(n, s_max);
    if (all.undetermined > 0) {
        throw std::runtime_error("f_of_n: " + std::to_string(all.undetermined) +
                                 " pairs not separated within s_max=" + std::to_string(s_max));
    }
    uint8_t best = 0;
    for (uint8_t s : all.sizes) best = std::max(best, s);
    return best;
}

namespace {

struct Interval {
    int64_t lo;
    int64_t hi; // inclusive; may be clipped at the universe boundary
};

std::vector<Interval> sigma_intervals(int64_t n, int64_t d) {
    std::vector<Interval> out;
    for (int64_t j = 0;; ++j) {
        const int64_t lo = 2 * j * d + 1;
        if (lo > n) break;
        out.push_back({lo, std::min((2 * j + 1) * d, n)});
    }
    return out;
}

uint64_t tuple_hash(const std::vector<int64_t>& tuple) {
    uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int64_t v : tuple) {
        h ^= static_cast<uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDULL;
    }
    return h;
}

struct SigmaSampler {
    std::vector<Interval> intervals;
    std::vector<int64_t> primes;
    uint64_t seed;
    // Chain mode: indices of intervals whose values are congruent modulo
    // the product of the tested primes. Restricting variation to such a
    // chain makes profile tuples depend only on the multiset of chosen
    // offsets, so two distinct samples collide at birthday-bound rates;
    // unrestricted uniform sampling has no realistic chance of a collision
    // once the profile tuple has more than a few dozen bits of entropy.
    std::vector<size_t> varied;
    std::vector<int64_t> base; // element per interval, -1 = skip

    SigmaSampler(int64_t n, int64_t d, int64_t k, uint64_t seed_in) : seed(seed_in) {
        intervals = sigma_intervals(n, d);
        primes = arithmetic::primes_up_to(k);

        int64_t primorial = 1;
        bool overflow = false;
        for (int64_t p : primes) {
            if (primorial > (int64_t{1} << 60) / p) {
                overflow = true;
                break;
            }
            primorial *= p;
        }

        std::vector<size_t> full; // full-width intervals only
        for (size_t idx = 0; idx < intervals.size(); ++idx) {
            if (intervals[idx].hi - intervals[idx].lo + 1 == d) full.push_back(idx);
        }

        size_t step = 0;
        if (!overflow && !primes.empty()) {
            const int64_t g = std::gcd(2 * d, primorial);
            const int64_t step64 = primorial / g;
            if (step64 <= static_cast<int64_t>(full.size())) step = static_cast<size_t>(step64);
        }
        if (step > 0 && full.size() >= 1 + step) {
            const size_t chain_len = std::min<size_t>(8, 1 + (full.size() - 1) / step);
            std::mt19937_64 rng(seed ^ 0xBA5EBA5Eu);
            const size_t max_start = full.size() - 1 - (chain_len - 1) * step;
            const size_t start = static_cast<size_t>(
                std::uniform_int_distribution<uint64_t>(0, max_start)(rng));
            for (size_t u = 0; u < chain_len; ++u) varied.push_back(full[start + u * step]);
            base.assign(intervals.size(), -1);
            for (size_t idx = 0; idx < intervals.size(); ++idx) {
                const auto& iv = intervals[idx];
                const uint64_t span = static_cast<uint64_t>(iv.hi - iv.lo + 1);
                const uint64_t pick = std::uniform_int_distribution<uint64_t>(0, span)(rng);
                base[idx] = pick == span ? -1 : iv.lo + static_cast<int64_t>(pick);
            }
        } else {
            // Uniform over all intervals; adequate when the profile-tuple
            // space is small.
            for (size_t idx = 0; idx < intervals.size(); ++idx) varied.push_back(idx);
            base.assign(intervals.size(), -1);
        }
    }

    std::vector<int64_t> sample(int64_t index) const {
        std::seed_seq sq{seed, static_cast<uint64_t>(index) + 1};
        std::mt19937_64 rng(sq);
        std::vector<int64_t> elems;
        elems.reserve(intervals.size());
        std::vector<int64_t> chosen = base;
        for (size_t idx : varied) {
            const auto& iv = intervals[idx];
            const uint64_t span = static_cast<uint64_t>(iv.hi - iv.lo + 1);
            const uint64_t pick = std::uniform_int_distribution<uint64_t>(0, span)(rng);
            chosen[idx] = pick == span ? -1 : iv.lo + static_cast<int64_t>(pick);
        }
        for (int64_t e : chosen) {
            if (e >= 0) elems.push_back(e);
        }
        return elems;
    }

    std::vector<int64_t> profile_tuple(const std::vector<int64_t>& elems) const {
        std::vector<int64_t> tuple;
        for (int64_t p : primes) {
            std::vector<int64_t> counts(static_cast<size_t>(p), 0);
            for (int64_t e : elems) ++counts[static_cast<size_t>(e % p)];
            tuple.insert(tuple.end(), counts.begin(), counts.end());
        }
        return tuple;
    }
};

} // namespace

std::optional<AdversarialPair> adversarial_pair(int64_t n, int64_t d, int64_t k, int64_t budget,
                                                uint64_t seed) {
    if (n < 1 || d < 1 || k < 1) {
        throw std::invalid_argument("adversarial_pair: n, d, k must be >= 1");
    }
    SigmaSampler sampler(n, d, k, seed);
    std::unordered_map<uint64_t, int64_t> seen; // tuple hash -> first sample index
    seen.reserve(1024);
    for (int64_t index = 0; index < budget; ++index) {
        const auto elems = sampler.sample(index);
        const auto tuple = sampler.profile_tuple(elems);
        const uint64_t h = tuple_hash(tuple);
        auto it = seen.find(h);
        if (it == seen.end()) {
            seen.emplace(h, index);
            continue;
        }
        const auto prior = sampler.sample(it->second);
        if (prior == elems) continue;                             // identical set, keep looking
        if (sampler.profile_tuple(prior) != tuple) continue;      // hash false positive
        IndexSet a(prior, n), b(elems, n);
        if (!a.is_separated(d) || !b.is_separated(d)) {
            throw ContradictionError("adversarial_pair: sampled set violates d-separation");
        }
        for (int64_t p : sampler.primes) {
            if (residue_profile(a, p) != residue_profile(b, p)) {
                throw ContradictionError("adversarial_pair: profile mismatch after collision");
            }
        }
        return AdversarialPair{std::move(a), std::move(b), d, k};
    }
    return std::nullopt;
}

std::pair<BinaryString, BinaryString> adversarial_strings(const AdversarialPair& pair,
                                                          int64_t n_out) {
    if (n_out < 4) throw std::invalid_argument("adversarial_strings: output length too small");
    if (pair.a.universe() > n_out / 2 || pair.b.universe() > n_out / 2) {
        throw std::invalid_argument("adversarial_strings: pair universe exceeds n_out/2");
    }
    int64_t max_elem = 0;
    if (!pair.a.empty()) max_elem = std::max(max_elem, pair.a.elements().back());
    if (!pair.b.empty()) max_elem = std::max(max_elem, pair.b.elements().back());
    if (n_out < 4 * max_elem) {
        throw std::invalid_argument("adversarial_strings: padding insufficient (need n_out >= 4*max element)");
    }
    const int64_t shift = n_out / 4;
    auto embed = [&](const IndexSet& s) {
        std::vector<uint8_t> bits(static_cast<size_t>(n_out), 0);
        for (int64_t e : s.elements()) bits[static_cast<size_t>(e + shift - 1)] = 1;
        return BinaryString(std::move(bits));
    };
    return {embed(pair.a), embed(pair.b)};
}

bool check_profile_equality(const BinaryString& x, const BinaryString& y, int64_t p_max,
                            int64_t w_len_max) {
    if (x.size() != y.size()) throw std::invalid_argument("check_profile_equality: lengths must match");
    const int64_t n = x.size();
    for (int64_t p : arithmetic::primes_up_to(p_max)) {
        for (int64_t l = 1; l <= std::min(w_len_max, p) && l <= n; ++l) {
            // counts[value][residue of start position]
            const int64_t values = int64_t{1} << l;
            std::vector<int64_t> cx(static_cast<size_t>(values * p), 0);
            std::vector<int64_t> cy(static_cast<size_t>(values * p), 0);
            const int64_t mask = values - 1;
            int64_t vx = 0, vy = 0;
            for (int64_t i = 1; i <= n; ++i) {
                vx = ((vx << 1) | x.bit(i)) & mask;
                vy = ((vy << 1) | y.bit(i)) & mask;
                if (i >= l) {
                    const int64_t start = i - l + 1;
                    ++cx[static_cast<size_t>(vx * p + start % p)];
                    ++cy[static_cast<size_t>(vy * p + start % p)];
                }
            }
            if (cx != cy) return false;
        }
    }
    return true;
}

} // namespace sepwords::oracle
