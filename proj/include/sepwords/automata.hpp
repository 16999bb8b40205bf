#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sepwords/words.hpp"

namespace sepwords::automata {

/// Deterministic finite automaton over {0,1} with a total transition
/// function. States are numbered 1..state_count; immutable once built.
class Dfa {
public:
    Dfa(int64_t state_count, std::vector<std::array<int64_t, 2>> transitions, int64_t start,
        std::vector<int64_t> accept);

    int64_t state_count() const { return static_cast<int64_t>(transitions_.size()); }
    int64_t start() const { return start_; }
    int64_t transition(int64_t state, int symbol) const {
        return transitions_[static_cast<size_t>(state - 1)][static_cast<size_t>(symbol)];
    }
    /// Accept states, sorted ascending.
    const std::vector<int64_t>& accept_states() const { return accept_; }
    bool is_accept(int64_t state) const;

    bool operator==(const Dfa& other) const = default;

private:
    std::vector<std::array<int64_t, 2>> transitions_;
    int64_t start_;
    std::vector<int64_t> accept_; // sorted, unique
};

/// Parameters of the occurrence-counting machine: it accepts x iff the
/// number of occurrences of w starting at positions congruent to
/// `residue` mod `modulus` is congruent to `target` mod `count_prime`.
struct CountingMachineSpec {
    int64_t modulus = 1;       // m >= 1
    int64_t residue = 0;       // i in [0, m)
    int64_t count_prime = 2;   // q, prime
    int64_t target = 0;        // a in [0, q)
    words::BinaryString w;     // 1 <= |w| <= m
};

/// Runs the automaton over x; true iff the final state accepts.
bool run(const Dfa& dfa, const words::BinaryString& x);

/// Builds the 2mq-state counting machine. States are organized as
/// Z_m x {0,1} x Z_q; the middle flag marks an in-progress candidate
/// occurrence that started at a position congruent to the residue.
Dfa build_counting_machine(const CountingMachineSpec& spec);

/// |prefix| + 2 states: a match chain, an absorbing accept state, and a
/// dead state. Accepts exactly the strings that start with the prefix.
Dfa build_prefix_acceptor(const words::BinaryString& prefix);

/// Language-equivalent DFA with the minimum number of states
/// (partition refinement over the reachable part).
Dfa minimize(const Dfa& dfa);

/// True iff the two automata accept the same language (product-automaton
/// reachability over state pairs).
bool equal_language(const Dfa& a, const Dfa& b);

/// Plain-text serialization, bit-exact:
///   states N
///   start S
///   accept a1 a2 ...
///   <state> <target-on-0> <target-on-1>   (N lines, states in order)
std::string to_text(const Dfa& dfa);
Dfa from_text(std::string_view text);

/// Graphviz DOT export; accept states get doubled circles.
std::string to_dot(const Dfa& dfa);

} // namespace sepwords::automata
