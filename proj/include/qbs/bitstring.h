#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbs {

/// A search-register value stored as ε_1…ε_n, where ε_k carries weight 2^(k-1).
/// The textual form writes ε_1 first, so "01" is the integer 2.
class BitString {
   public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits);

    static BitString from_integer(uint64_t value, int n);
    static BitString from_string(std::string_view text);
    static BitString zeros(int n);
    static BitString ones(int n);

    int size() const { return static_cast<int>(bits_.size()); }
    /// 1-based access, matching qubit numbering.
    uint8_t operator[](int k) const { return bits_.at(static_cast<size_t>(k - 1)); }
    void set(int k, uint8_t bit);
    void push_back(uint8_t bit);

    uint64_t to_integer() const;
    std::string to_string() const;
    int popcount() const;

    const std::vector<uint8_t>& bits() const { return bits_; }

    bool operator==(const BitString&) const = default;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace qbs
