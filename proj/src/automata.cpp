#include "sepwords/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sepwords/errors.hpp"

namespace sepwords::automata {

Dfa::Dfa(int64_t state_count, std::vector<std::array<int64_t, 2>> transitions, int64_t start,
         std::vector<int64_t> accept)
    : transitions_(std::move(transitions)), start_(start), accept_(std::move(accept)) {
    if (state_count < 1) throw std::invalid_argument("dfa needs at least one state");
    if (static_cast<int64_t>(transitions_.size()) != state_count) {
        throw std::invalid_argument("transition table size does not match state count");
    }
    for (const auto& row : transitions_) {
        for (int64_t target : row) {
            if (target < 1 || target > state_count) {
                throw std::invalid_argument("transition target out of range");
            }
        }
    }
    if (start_ < 1 || start_ > state_count) throw std::invalid_argument("start state out of range");
    std::sort(accept_.begin(), accept_.end());
    accept_.erase(std::unique(accept_.begin(), accept_.end()), accept_.end());
    for (int64_t a : accept_) {
        if (a < 1 || a > state_count) throw std::invalid_argument("accept state out of range");
    }
}

bool Dfa::is_accept(int64_t state) const {
    return std::binary_search(accept_.begin(), accept_.end(), state);
}

bool run(const Dfa& dfa, const words::BinaryString& x) {
    int64_t state = dfa.start();
    for (int64_t i = 1; i <= x.size(); ++i) {
        state = dfa.transition(state, x.bit(i));
    }
    return dfa.is_accept(state);
}

namespace {

bool is_prime_small(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

Dfa build_counting_machine(const CountingMachineSpec& spec) {
    const int64_t m = spec.modulus;
    const int64_t q = spec.count_prime;
    const int64_t i = spec.residue;
    const int64_t a = spec.target;
    const int64_t l = spec.w.size();
    if (m < 1) throw std::invalid_argument("counting machine: modulus must be >= 1");
    if (l > m) throw std::invalid_argument("counting machine: pattern longer than modulus");
    if (!is_prime_small(q)) throw std::invalid_argument("counting machine: count modulus must be prime");
    if (i < 0 || i >= m) throw std::invalid_argument("counting machine: residue out of range");
    if (a < 0 || a >= q) throw std::invalid_argument("counting machine: target out of range");

    // State (j, b, s) with j in Z_m (position mod m before reading the next
    // symbol), b the in-progress flag, s in Z_q; 1-based index below.
    auto idx = [&](int64_t j, int64_t b, int64_t s) { return 1 + j * 2 * q + b * q + s; };

    const int64_t n_states = 2 * m * q;
    std::vector<std::array<int64_t, 2>> trans(static_cast<size_t>(n_states));
    const auto& w = spec.w.data();

    for (int64_t j = 0; j < m; ++j) {
        const int64_t jn = (j + 1) % m;
        for (int64_t s = 0; s < q; ++s) {
            const int64_t s_hit = (s + 1) % q;
            for (int eps = 0; eps <= 1; ++eps) {
                int64_t to0; // from (j, 0, s)
                if (l == 1) {
                    // Single-symbol pattern: no tracking phase, count directly.
                    to0 = (j == i && eps == w[0]) ? idx(jn, 0, s_hit) : idx(jn, 0, s);
                } else if (j == i) {
                    to0 = (eps == w[0]) ? idx(jn, 1, s) : idx(jn, 0, s);
                } else {
                    to0 = idx(jn, 0, s);
                }
                trans[static_cast<size_t>(idx(j, 0, s) - 1)][static_cast<size_t>(eps)] = to0;

                int64_t to1; // from (j, 1, s)
                const int64_t offset = ((j - i) % m + m) % m; // symbols matched so far
                if (l > 1 && offset >= 1 && offset < l - 1) {
                    to1 = (eps == w[static_cast<size_t>(offset)]) ? idx(jn, 1, s) : idx(jn, 0, s);
                } else if (l > 1 && offset == l - 1) {
                    to1 = (eps == w[static_cast<size_t>(l - 1)]) ? idx(jn, 0, s_hit) : idx(jn, 0, s);
                } else {
                    // Offsets 0 and >= l never carry an in-progress match
                    // (unreachable); resolve the flag and keep counting.
                    to1 = idx(jn, 0, s);
                }
                trans[static_cast<size_t>(idx(j, 1, s) - 1)][static_cast<size_t>(eps)] = to1;
            }
        }
    }

    std::vector<int64_t> accept;
    accept.reserve(static_cast<size_t>(2 * m));
    for (int64_t j = 0; j < m; ++j) {
        for (int64_t b = 0; b <= 1; ++b) accept.push_back(idx(j, b, a));
    }
    return Dfa(n_states, std::move(trans), idx(1 % m, 0, 0), std::move(accept));
}

Dfa build_prefix_acceptor(const words::BinaryString& prefix) {
    const int64_t len = prefix.size();
    const int64_t accept_state = len + 1;
    const int64_t dead = len + 2;
    std::vector<std::array<int64_t, 2>> trans(static_cast<size_t>(len + 2));
    for (int64_t c = 1; c <= len; ++c) {
        const int expected = prefix.bit(c);
        trans[static_cast<size_t>(c - 1)][static_cast<size_t>(expected)] = c + 1;
        trans[static_cast<size_t>(c - 1)][static_cast<size_t>(1 - expected)] = dead;
    }
    trans[static_cast<size_t>(accept_state - 1)] = {accept_state, accept_state};
    trans[static_cast<size_t>(dead - 1)] = {dead, dead};
    return Dfa(len + 2, std::move(trans), 1, {accept_state});
}

namespace {

std::vector<int64_t> reachable_states(const Dfa& dfa) {
    std::vector<char> seen(static_cast<size_t>(dfa.state_count() + 1), 0);
    std::deque<int64_t> queue{dfa.start()};
    seen[static_cast<size_t>(dfa.start())] = 1;
    std::vector<int64_t> order;
    while (!queue.empty()) {
        int64_t s = queue.front();
        queue.pop_front();
        order.push_back(s);
        for (int sym = 0; sym <= 1; ++sym) {
            int64_t t = dfa.transition(s, sym);
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }
    return order;
}

} // namespace

Dfa minimize(const Dfa& dfa) {
    // Moore partition refinement on the reachable part.
    const auto reach = reachable_states(dfa);
    std::vector<int64_t> cls(static_cast<size_t>(dfa.state_count() + 1), -1);
    for (int64_t s : reach) cls[static_cast<size_t>(s)] = dfa.is_accept(s) ? 1 : 0;

    int64_t n_classes = 2;
    for (;;) {
        std::map<std::array<int64_t, 3>, int64_t> sig_to_class;
        std::vector<int64_t> next(cls.size(), -1);
        for (int64_t s : reach) {
            std::array<int64_t, 3> sig = {cls[static_cast<size_t>(s)],
                                          cls[static_cast<size_t>(dfa.transition(s, 0))],
                                          cls[static_cast<size_t>(dfa.transition(s, 1))]};
            auto it = sig_to_class.try_emplace(sig, static_cast<int64_t>(sig_to_class.size())).first;
            next[static_cast<size_t>(s)] = it->second;
        }
        const int64_t n_next = static_cast<int64_t>(sig_to_class.size());
        cls.swap(next);
        if (n_next == n_classes) break;
        n_classes = n_next;
    }

    // One representative per class, then renumber classes in BFS
    // first-reach order for a canonical result.
    std::vector<int64_t> rep_of(static_cast<size_t>(n_classes), 0);
    for (int64_t s : reach) {
        int64_t c = cls[static_cast<size_t>(s)];
        if (rep_of[static_cast<size_t>(c)] == 0) rep_of[static_cast<size_t>(c)] = s;
    }
    std::vector<int64_t> renum(static_cast<size_t>(n_classes), 0);
    std::vector<char> seen(static_cast<size_t>(n_classes), 0);
    std::deque<int64_t> queue{cls[static_cast<size_t>(dfa.start())]};
    seen[static_cast<size_t>(queue.front())] = 1;
    int64_t next_id = 0;
    std::vector<int64_t> class_order;
    while (!queue.empty()) {
        int64_t c = queue.front();
        queue.pop_front();
        renum[static_cast<size_t>(c)] = ++next_id;
        class_order.push_back(c);
        int64_t rep = rep_of[static_cast<size_t>(c)];
        for (int sym = 0; sym <= 1; ++sym) {
            int64_t tc = cls[static_cast<size_t>(dfa.transition(rep, sym))];
            if (!seen[static_cast<size_t>(tc)]) {
                seen[static_cast<size_t>(tc)] = 1;
                queue.push_back(tc);
            }
        }
    }

    std::vector<std::array<int64_t, 2>> trans(static_cast<size_t>(n_classes));
    std::vector<int64_t> accept;
    for (int64_t c : class_order) {
        int64_t rep = rep_of[static_cast<size_t>(c)];
        int64_t id = renum[static_cast<size_t>(c)];
        trans[static_cast<size_t>(id - 1)] = {
            renum[static_cast<size_t>(cls[static_cast<size_t>(dfa.transition(rep, 0))])],
            renum[static_cast<size_t>(cls[static_cast<size_t>(dfa.transition(rep, 1))])]};
        if (dfa.is_accept(rep)) accept.push_back(id);
    }
    return Dfa(n_classes, std::move(trans), 1, std::move(accept));
}

bool equal_language(const Dfa& a, const Dfa& b) {
    // BFS over reachable state pairs; unequal acceptance anywhere is a witness.
    std::vector<char> seen(static_cast<size_t>(a.state_count() * b.state_count()), 0);
    auto key = [&](int64_t sa, int64_t sb) {
        return static_cast<size_t>((sa - 1) * b.state_count() + (sb - 1));
    };
    std::deque<std::pair<int64_t, int64_t>> queue{{a.start(), b.start()}};
    seen[key(a.start(), b.start())] = 1;
    while (!queue.empty()) {
        auto [sa, sb] = queue.front();
        queue.pop_front();
        if (a.is_accept(sa) != b.is_accept(sb)) return false;
        for (int sym = 0; sym <= 1; ++sym) {
            int64_t ta = a.transition(sa, sym);
            int64_t tb = b.transition(sb, sym);
            if (!seen[key(ta, tb)]) {
                seen[key(ta, tb)] = 1;
                queue.emplace_back(ta, tb);
            }
        }
    }
    return true;
}

std::string to_text(const Dfa& dfa) {
    std::ostringstream out;
    out << "states " << dfa.state_count() << "\n";
    out << "start " << dfa.start() << "\n";
    out << "accept";
    for (int64_t a : dfa.accept_states()) out << " " << a;
    out << "\n";
    for (int64_t s = 1; s <= dfa.state_count(); ++s) {
        out << s << " " << dfa.transition(s, 0) << " " << dfa.transition(s, 1) << "\n";
    }
    return out.str();
}

Dfa from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    int64_t n_states = 0;
    if (!(in >> word) || word != "states" || !(in >> n_states) || n_states < 1) {
        throw std::invalid_argument("dfa text: expected 'states N'");
    }
    int64_t start = 0;
    if (!(in >> word) || word != "start" || !(in >> start)) {
        throw std::invalid_argument("dfa text: expected 'start S'");
    }
    std::string rest;
    std::getline(in, rest); // consume end of the start line
    std::string accept_line;
    if (!std::getline(in, accept_line) || accept_line.rfind("accept", 0) != 0) {
        throw std::invalid_argument("dfa text: expected 'accept ...' line");
    }
    std::vector<int64_t> accept;
    {
        std::istringstream acc(accept_line.substr(6));
        int64_t a;
        while (acc >> a) accept.push_back(a);
    }
    std::vector<std::array<int64_t, 2>> trans(static_cast<size_t>(n_states));
    std::vector<char> filled(static_cast<size_t>(n_states), 0);
    for (int64_t row = 0; row < n_states; ++row) {
        int64_t s, t0, t1;
        if (!(in >> s >> t0 >> t1)) throw std::invalid_argument("dfa text: truncated transition table");
        if (s < 1 || s > n_states) throw std::invalid_argument("dfa text: state index out of range");
        if (filled[static_cast<size_t>(s - 1)]) throw std::invalid_argument("dfa text: duplicate state row");
        filled[static_cast<size_t>(s - 1)] = 1;
        trans[static_cast<size_t>(s - 1)] = {t0, t1};
    }
    return Dfa(n_states, std::move(trans), start, std::move(accept));
}

std::string to_dot(const Dfa& dfa) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (int64_t s = 1; s <= dfa.state_count(); ++s) {
        out << "  " << s << " [shape=" << (dfa.is_accept(s) ? "doublecircle" : "circle") << "];\n";
    }
    out << "  __start -> " << dfa.start() << ";\n";
    for (int64_t s = 1; s <= dfa.state_count(); ++s) {
        int64_t t0 = dfa.transition(s, 0);
        int64_t t1 = dfa.transition(s, 1);
        if (t0 == t1) {
            out << "  " << s << " -> " << t0 << " [label=\"0,1\"];\n";
        } else {
            out << "  " << s << " -> " << t0 << " [label=\"0\"];\n";
            out << "  " << s << " -> " << t1 << " [label=\"1\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace sepwords::automata
