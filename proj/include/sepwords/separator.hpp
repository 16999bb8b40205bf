#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "sepwords/automata.hpp"
#include "sepwords/words.hpp"

namespace sepwords::separator {

enum class Mode { paper, baseline, optimize };

Mode mode_from_string(std::string_view name);
std::string mode_to_string(Mode mode);

struct PrefixCertificate {
    words::BinaryString prefix;
};

struct CountingCertificate {
    automata::CountingMachineSpec spec;
    int64_t window_k = 0;       // first index where the inputs differ
    int64_t accepted_count = 0; // |A_{i,m}| for the accepted string
    int64_t rejected_count = 0; // |B_{i,m}| for the rejected string
    bool modulus_is_prime = true;
};

/// Full witness for why the produced DFA separates the two inputs.
struct SeparationCertificate {
    std::variant<PrefixCertificate, CountingCertificate> detail;
    int64_t states = 0;
    Mode mode = Mode::paper;
    bool verified = false;

    bool is_prefix() const { return std::holds_alternative<PrefixCertificate>(detail); }
    const PrefixCertificate& prefix() const { return std::get<PrefixCertificate>(detail); }
    const CountingCertificate& counting() const { return std::get<CountingCertificate>(detail); }

    /// Key-value text block (mode, variant, w, m, i, q, a, states, verified, ...).
    std::string to_text() const;
};

struct SeparationResult {
    automata::Dfa dfa;
    SeparationCertificate certificate;
};

/// Search caps; 0 means derive the documented default from n.
struct SeparateOptions {
    int64_t p_max = 0;
    int64_t q_max = 0;
};

/// Builds a DFA accepting x and rejecting y, re-verified before returning.
/// Throws invalid_argument for equal or mismatched inputs and
/// ContradictionError if a theorem-guaranteed search exhausts its cap.
SeparationResult separate(const words::BinaryString& x, const words::BinaryString& y, Mode mode,
                          const SeparateOptions& options = {});

/// True iff the DFA accepts x and rejects y.
bool verify(const automata::Dfa& dfa, const words::BinaryString& x, const words::BinaryString& y);

/// Reporting bound max(2, ceil(K * n^{1/3} * (ln n)^7)) for dashboards;
/// never used as a hard assertion.
int64_t state_bound(int64_t n, double k = 10.0);

/// Default search caps used by the pipeline for inputs of length n.
int64_t default_p_max(int64_t n);
int64_t default_baseline_p_max(int64_t n);
int64_t default_q_max(int64_t n);

} // namespace sepwords::separator
