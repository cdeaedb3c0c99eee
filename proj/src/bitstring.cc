#include "qbs/bitstring.h"

#include <algorithm>
#include <stdexcept>

namespace qbs {

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString entries must be 0 or 1");
        }
    }
}

BitString BitString::from_integer(uint64_t value, int n) {
    if (n < 0 || n > 63) {
        throw std::invalid_argument("BitString width must be in [0, 63]");
    }
    if (n < 64 && (value >> n) != 0) {
        throw std::out_of_range("value " + std::to_string(value) + " does not fit in " + std::to_string(n) + " bits");
    }
    std::vector<uint8_t> bits(static_cast<size_t>(n));
    for (int k = 0; k < n; k++) {
        bits[static_cast<size_t>(k)] = static_cast<uint8_t>((value >> k) & 1);
    }
    return BitString(std::move(bits));
}

BitString BitString::from_string(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString text must contain only '0' and '1'");
        }
        bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::zeros(int n) { return BitString(std::vector<uint8_t>(static_cast<size_t>(n), 0)); }

BitString BitString::ones(int n) { return BitString(std::vector<uint8_t>(static_cast<size_t>(n), 1)); }

void BitString::set(int k, uint8_t bit) {
    if (bit > 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    bits_.at(static_cast<size_t>(k - 1)) = bit;
}

void BitString::push_back(uint8_t bit) {
    if (bit > 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    bits_.push_back(bit);
}

uint64_t BitString::to_integer() const {
    if (bits_.size() > 63) {
        throw std::out_of_range("BitString too wide for integer conversion");
    }
    uint64_t value = 0;
    for (size_t k = 0; k < bits_.size(); k++) {
        value |= static_cast<uint64_t>(bits_[k]) << k;
    }
    return value;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

int BitString::popcount() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), uint8_t{1})); }

}  // namespace qbs
