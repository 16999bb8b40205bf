#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepwords::words {

/// Immutable binary string with 1-based position semantics: the first
/// symbol is bit(1), the last is bit(n).
class BinaryString {
public:
    explicit BinaryString(std::vector<uint8_t> bits);

    /// Parses ASCII '0'/'1' text. Leading/trailing whitespace is trimmed;
    /// any other character raises invalid_argument naming its 1-based index
    /// in the original text. The result must be non-empty.
    static BinaryString parse(std::string_view text);

    int64_t size() const { return static_cast<int64_t>(bits_.size()); }
    int bit(int64_t pos) const { return bits_[static_cast<size_t>(pos - 1)]; }

    /// Substring x_from .. x_to, both 1-based and inclusive.
    BinaryString substring(int64_t from, int64_t to) const;
    /// Copy with one extra symbol appended.
    BinaryString append(int bit) const;

    std::string to_string() const;
    const std::vector<uint8_t>& data() const { return bits_; }

    bool operator==(const BinaryString& other) const { return bits_ == other.bits_; }
    bool operator!=(const BinaryString& other) const { return bits_ != other.bits_; }

private:
    std::vector<uint8_t> bits_;
};

/// Sorted set of 1-based occurrence positions of a fixed-length pattern.
struct PositionSet {
    std::vector<int64_t> positions; // strictly increasing, within [1, n-l+1]
    int64_t pattern_length = 0;

    bool is_separated(int64_t d) const;
    bool empty() const { return positions.empty(); }
    int64_t size() const { return static_cast<int64_t>(positions.size()); }

    bool operator==(const PositionSet& other) const { return positions == other.positions; }
};

/// Output of select_window: an aperiodic window w of length 2t around the
/// first difference of two strings.
struct WindowChoice {
    BinaryString w;    // length 2t, minimal period > t
    int64_t k = 0;     // first index where the inputs differ
    int64_t t = 0;     // separation parameter
    bool in_x = false; // true iff position k-2t+1 occurs in pos_w(x) and not pos_w(y)
};

/// All occurrence positions of w in x, overlaps included. |w| > |x| yields
/// the empty set; an empty pattern is invalid.
PositionSet positions(const BinaryString& x, const BinaryString& w);

/// Smallest p >= 1 with w_i = w_{i+p} wherever both sides are defined.
int64_t minimal_period(const BinaryString& w);

/// Smallest k with x_k != y_k, or nullopt when the strings are identical.
/// The strings must have equal length.
std::optional<int64_t> first_difference(const BinaryString& x, const BinaryString& y);

/// Picks w = w'0 or w'1, where w' = x_{k-2t+1} .. x_{k-1}, such that
/// minimal_period(w) > t. Requires k >= 2t. When both extensions qualify,
/// the one ending in x_k wins, so in_x is true.
WindowChoice select_window(const BinaryString& x, const BinaryString& y, int64_t t);

} // namespace sepwords::words
