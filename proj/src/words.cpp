#include "sepwords/words.hpp"

#include <cctype>
#include <stdexcept>

#include "sepwords/errors.hpp"

namespace sepwords::words {

BinaryString::BinaryString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("binary string must be non-empty");
    }
    for (uint8_t b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("binary string symbols must be 0 or 1");
        }
    }
}

BinaryString BinaryString::parse(std::string_view text) {
    size_t lo = 0;
    size_t hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    if (lo == hi) {
        throw std::invalid_argument("binary string must be non-empty");
    }
    std::vector<uint8_t> bits;
    bits.reserve(hi - lo);
    for (size_t i = lo; i < hi; ++i) {
        char c = text[i];
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<uint8_t>(c - '0'));
        } else {
            throw std::invalid_argument("invalid character at index " + std::to_string(i + 1) +
                                        ": expected '0' or '1'");
        }
    }
    return BinaryString(std::move(bits));
}

BinaryString BinaryString::substring(int64_t from, int64_t to) const {
    if (from < 1 || to > size() || from > to) {
        throw std::invalid_argument("substring range out of bounds");
    }
    return BinaryString(std::vector<uint8_t>(bits_.begin() + (from - 1), bits_.begin() + to));
}

BinaryString BinaryString::append(int bit) const {
    std::vector<uint8_t> bits = bits_;
    bits.push_back(static_cast<uint8_t>(bit));
    return BinaryString(std::move(bits));
}

std::string BinaryString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

bool PositionSet::is_separated(int64_t d) const {
    for (size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] - positions[i - 1] < d) return false;
    }
    return true;
}

namespace {

// Border (failure-function) array: border[i] = length of the longest proper
// border of the prefix of length i.
std::vector<int64_t> border_array(const std::vector<uint8_t>& w) {
    const int64_t l = static_cast<int64_t>(w.size());
    std::vector<int64_t> border(static_cast<size_t>(l) + 1, 0);
    int64_t b = 0;
    for (int64_t i = 2; i <= l; ++i) {
        while (b > 0 && w[static_cast<size_t>(i - 1)] != w[static_cast<size_t>(b)]) {
            b = border[static_cast<size_t>(b)];
        }
        if (w[static_cast<size_t>(i - 1)] == w[static_cast<size_t>(b)]) ++b;
        border[static_cast<size_t>(i)] = b;
    }
    return border;
}

} // namespace

PositionSet positions(const BinaryString& x, const BinaryString& w) {
    const int64_t n = x.size();
    const int64_t l = w.size();
    PositionSet out;
    out.pattern_length = l;
    if (l > n) return out;

    // KMP scan; the naive quadratic scan is kept as the test oracle.
    const auto border = border_array(w.data());
    const auto& ws = w.data();
    const auto& xs = x.data();
    int64_t matched = 0;
    for (int64_t i = 0; i < n; ++i) {
        while (matched > 0 && xs[static_cast<size_t>(i)] != ws[static_cast<size_t>(matched)]) {
            matched = border[static_cast<size_t>(matched)];
        }
        if (xs[static_cast<size_t>(i)] == ws[static_cast<size_t>(matched)]) ++matched;
        if (matched == l) {
            out.positions.push_back(i - l + 2); // 1-based start
            matched = border[static_cast<size_t>(matched)];
        }
    }
    return out;
}

int64_t minimal_period(const BinaryString& w) {
    const auto border = border_array(w.data());
    return w.size() - border[static_cast<size_t>(w.size())];
}

std::optional<int64_t> first_difference(const BinaryString& x, const BinaryString& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("first_difference requires equal-length strings");
    }
    for (int64_t k = 1; k <= x.size(); ++k) {
        if (x.bit(k) != y.bit(k)) return k;
    }
    return std::nullopt;
}

WindowChoice select_window(const BinaryString& x, const BinaryString& y, int64_t t) {
    if (t < 1) throw std::invalid_argument("select_window requires t >= 1");
    auto kd = first_difference(x, y);
    if (!kd) throw std::invalid_argument("select_window requires distinct strings");
    const int64_t k = *kd;
    if (k < 2 * t) {
        throw std::invalid_argument("select_window requires first difference k >= 2t (k=" +
                                    std::to_string(k) + ", t=" + std::to_string(t) + ")");
    }

    const BinaryString stem = x.substring(k - 2 * t + 1, k - 1); // length 2t-1, common to x and y
    const BinaryString with_x = stem.append(x.bit(k));
    if (minimal_period(with_x) > t) {
        return WindowChoice{with_x, k, t, true};
    }
    const BinaryString with_y = stem.append(y.bit(k));
    if (minimal_period(with_y) > t) {
        return WindowChoice{with_y, k, t, false};
    }
    // Robson's Lemmas 1-2 rule this out; reaching it means the period
    // computation is broken.
    throw ContradictionError("select_window: both extensions of the window stem are periodic");
}

} // namespace sepwords::words
