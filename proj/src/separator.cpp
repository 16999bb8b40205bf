#include "sepwords/separator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sepwords/arithmetic.hpp"
#include "sepwords/errors.hpp"

namespace sepwords::separator {

using arithmetic::IndexSet;
using automata::CountingMachineSpec;
using automata::Dfa;
using words::BinaryString;

Mode mode_from_string(std::string_view name) {
    if (name == "paper") return Mode::paper;
    if (name == "baseline") return Mode::baseline;
    if (name == "optimize") return Mode::optimize;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::string mode_to_string(Mode mode) {
    switch (mode) {
        case Mode::paper: return "paper";
        case Mode::baseline: return "baseline";
        case Mode::optimize: return "optimize";
    }
    return "paper";
}

std::string SeparationCertificate::to_text() const {
    std::ostringstream out;
    out << "mode: " << mode_to_string(mode) << "\n";
    if (is_prefix()) {
        out << "variant: prefix\n";
        out << "prefix: " << prefix().prefix.to_string() << "\n";
        out << "states: " << states << "\n";
        out << "verified: " << (verified ? "true" : "false") << "\n";
    } else {
        const auto& c = counting();
        out << "variant: counting\n";
        out << "w: " << c.spec.w.to_string() << "\n";
        out << "m: " << c.spec.modulus << "\n";
        out << "i: " << c.spec.residue << "\n";
        out << "q: " << c.spec.count_prime << "\n";
        out << "a: " << c.spec.target << "\n";
        out << "states: " << states << "\n";
        out << "verified: " << (verified ? "true" : "false") << "\n";
        out << "window_k: " << c.window_k << "\n";
        out << "accepted_count: " << c.accepted_count << "\n";
        out << "rejected_count: " << c.rejected_count << "\n";
        out << "modulus_is_prime: " << (c.modulus_is_prime ? "true" : "false") << "\n";
    }
    return out.str();
}

bool verify(const Dfa& dfa, const BinaryString& x, const BinaryString& y) {
    return automata::run(dfa, x) && !automata::run(dfa, y);
}

int64_t state_bound(int64_t n, double k) {
    if (n < 2) throw std::invalid_argument("state_bound: n must be >= 2");
    const double ln = std::log(static_cast<double>(n));
    const double value = k * std::cbrt(static_cast<double>(n)) * std::pow(ln, 7.0);
    const double ceiled = std::ceil(value);
    return std::max<int64_t>(2, static_cast<int64_t>(ceiled));
}

int64_t default_p_max(int64_t n) {
    const double ln = std::log(static_cast<double>(n));
    const double value = 10.0 * std::cbrt(static_cast<double>(n)) * std::pow(ln, 6.0);
    return std::max<int64_t>(64, static_cast<int64_t>(std::ceil(value)));
}

int64_t default_baseline_p_max(int64_t n) {
    const double value = 10.0 * std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n + 1)));
    return std::max<int64_t>(64, static_cast<int64_t>(std::ceil(value)));
}

int64_t default_q_max(int64_t n) {
    const double value = 10.0 * std::log(static_cast<double>(n + 2));
    return std::max<int64_t>(64, static_cast<int64_t>(std::ceil(value)));
}

namespace {

IndexSet to_index_set(const words::PositionSet& positions, int64_t universe) {
    return IndexSet(positions.positions, universe);
}

void check_inputs(const BinaryString& x, const BinaryString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("separate: inputs must have equal length");
    if (x == y) throw std::invalid_argument("separate: inputs must be distinct");
}

SeparationResult make_prefix_result(const BinaryString& x, int64_t k, Mode mode) {
    const BinaryString prefix = x.substring(1, k);
    Dfa dfa = automata::build_prefix_acceptor(prefix);
    SeparationCertificate cert{PrefixCertificate{prefix}, dfa.state_count(), mode, false};
    return SeparationResult{std::move(dfa), std::move(cert)};
}

SeparationResult make_counting_result(const CountingMachineSpec& spec, int64_t window_k,
                                      int64_t accepted_count, int64_t rejected_count, Mode mode) {
    Dfa dfa = automata::build_counting_machine(spec);
    SeparationCertificate cert{CountingCertificate{spec, window_k, accepted_count, rejected_count,
                                                   arithmetic::is_prime(spec.modulus)},
                               dfa.state_count(), mode, false};
    return SeparationResult{std::move(dfa), std::move(cert)};
}

// Shared tail of the paper and baseline modes: given differing occurrence
// sets, find (p, i, q, a) and build the machine.
SeparationResult counting_pipeline(const BinaryString& w, const IndexSet& a_set,
                                   const IndexSet& b_set, int64_t window_k, int64_t p_min,
                                   int64_t p_max, int64_t q_max, Mode mode) {
    const auto found = arithmetic::find_separating_prime(a_set, b_set, p_min, p_max);
    if (!found) {
        throw ContradictionError("separate: no separating prime in [" + std::to_string(p_min) +
                                 ", " + std::to_string(p_max) +
                                 "] although one is guaranteed; cap hit");
    }
    const auto [p, i] = *found;
    const int64_t count_a = arithmetic::residue_profile(a_set, p).counts[static_cast<size_t>(i)];
    const int64_t count_b = arithmetic::residue_profile(b_set, p).counts[static_cast<size_t>(i)];
    const auto q = arithmetic::find_count_prime(count_a, count_b, q_max);
    if (!q) {
        throw ContradictionError("separate: no counting prime <= " + std::to_string(q_max) +
                                 " although one is guaranteed; cap hit");
    }
    CountingMachineSpec spec{p, i, *q, count_a % *q, w};
    return make_counting_result(spec, window_k, count_a, count_b, mode);
}

SeparationResult separate_paper(const BinaryString& x, const BinaryString& y,
                                const SeparateOptions& options, Mode mode) {
    const int64_t n = x.size();
    const int64_t t = arithmetic::ceil_cbrt(n);
    const int64_t k = *words::first_difference(x, y);
    if (k < 2 * t) {
        return make_prefix_result(x, k, mode);
    }
    const auto window = words::select_window(x, y, t);
    const IndexSet a_set = to_index_set(words::positions(x, window.w), n);
    const IndexSet b_set = to_index_set(words::positions(y, window.w), n);
    if (a_set == b_set) {
        throw ContradictionError("separate: window occurrence sets coincide");
    }
    if (!a_set.is_separated(t) || !b_set.is_separated(t)) {
        throw ContradictionError("separate: window occurrence sets are not t-separated");
    }
    const int64_t p_max = options.p_max > 0 ? options.p_max : default_p_max(n);
    const int64_t q_max = options.q_max > 0 ? options.q_max : default_q_max(n);
    return counting_pipeline(window.w, a_set, b_set, k, window.w.size(), p_max, q_max, mode);
}

SeparationResult separate_baseline(const BinaryString& x, const BinaryString& y,
                                   const SeparateOptions& options) {
    const int64_t n = x.size();
    const BinaryString one = BinaryString::parse("1");
    const IndexSet a_set = to_index_set(words::positions(x, one), n);
    const IndexSet b_set = to_index_set(words::positions(y, one), n);
    const int64_t k = *words::first_difference(x, y);
    const int64_t p_max = options.p_max > 0 ? options.p_max : default_baseline_p_max(n);
    const int64_t q_max = options.q_max > 0 ? options.q_max : default_q_max(n);
    return counting_pipeline(one, a_set, b_set, k, 2, p_max, q_max, Mode::baseline);
}

SeparationResult separate_optimize(const BinaryString& x, const BinaryString& y,
                                   const SeparateOptions& options) {
    const int64_t n = x.size();
    const int64_t t = arithmetic::ceil_cbrt(n);
    const int64_t k = *words::first_difference(x, y);

    SeparationResult best = separate_paper(x, y, options, Mode::optimize);

    if (k + 2 < best.certificate.states) {
        best = make_prefix_result(x, k, Mode::optimize);
    }

    // Candidate windows: the two singletons plus aperiodic windows for
    // doubling separation parameters up to the paper's t.
    std::vector<BinaryString> windows;
    windows.push_back(BinaryString::parse("0"));
    windows.push_back(BinaryString::parse("1"));
    std::vector<int64_t> t_candidates;
    for (int64_t tc = 1; tc < t; tc *= 2) t_candidates.push_back(tc);
    t_candidates.push_back(t);
    for (int64_t tc : t_candidates) {
        if (2 * tc <= k) windows.push_back(words::select_window(x, y, tc).w);
    }

    const int64_t m_cap = options.p_max > 0 ? options.p_max : default_p_max(n);
    const int64_t q_cap = options.q_max > 0 ? options.q_max : default_q_max(n);
    const auto q_primes = arithmetic::primes_up_to(q_cap);

    struct Candidate {
        CountingMachineSpec spec;
        int64_t count_a = 0;
        int64_t count_b = 0;
    };
    std::optional<Candidate> winner;
    int64_t best_states = best.certificate.states;

    for (const auto& w : windows) {
        const auto pos_a = words::positions(x, w);
        const auto pos_b = words::positions(y, w);
        if (pos_a == pos_b) continue;
        for (int64_t m = w.size(); m <= m_cap && 4 * m < best_states; ++m) {
            std::vector<int64_t> prof_a(static_cast<size_t>(m), 0), prof_b(static_cast<size_t>(m), 0);
            for (int64_t pos : pos_a.positions) ++prof_a[static_cast<size_t>(pos % m)];
            for (int64_t pos : pos_b.positions) ++prof_b[static_cast<size_t>(pos % m)];
            for (int64_t q : q_primes) {
                if (2 * m * q >= best_states) break;
                int64_t found_i = -1;
                for (int64_t i = 0; i < m; ++i) {
                    if (prof_a[static_cast<size_t>(i)] % q != prof_b[static_cast<size_t>(i)] % q) {
                        found_i = i;
                        break;
                    }
                }
                if (found_i >= 0) {
                    const int64_t ca = prof_a[static_cast<size_t>(found_i)];
                    const int64_t cb = prof_b[static_cast<size_t>(found_i)];
                    winner = Candidate{CountingMachineSpec{m, found_i, q, ca % q, w}, ca, cb};
                    best_states = 2 * m * q;
                    break;
                }
            }
        }
    }

    if (winner) {
        best = make_counting_result(winner->spec, k, winner->count_a, winner->count_b,
                                    Mode::optimize);
    }
    return best;
}

} // namespace

SeparationResult separate(const BinaryString& x, const BinaryString& y, Mode mode,
                          const SeparateOptions& options) {
    check_inputs(x, y);
    SeparationResult result = [&] {
        switch (mode) {
            case Mode::baseline: return separate_baseline(x, y, options);
            case Mode::optimize: return separate_optimize(x, y, options);
            case Mode::paper: default: return separate_paper(x, y, options, Mode::paper);
        }
    }();
    if (!verify(result.dfa, x, y)) {
        throw ContradictionError("separate: constructed automaton failed re-verification");
    }
    result.certificate.verified = true;
    return result;
}

} // namespace sepwords::separator
