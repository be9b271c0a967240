#include "qsig/bitstring.hpp"

#include <bit>

#include "qsig/errors.hpp"

namespace qsig {

namespace {
std::size_t word_count(std::int64_t len) {
    return static_cast<std::size_t>((len + 63) / 64);
}
} // namespace

BitString::BitString(std::int64_t length) : len_(length), words_(word_count(length), 0) {
    if (length < 1) throw dimension_error("BitString: length must be positive");
}

BitString BitString::random(std::int64_t length, std::mt19937_64& g) {
    BitString b(length);
    for (auto& w : b.words_) w = g();
    const int rem = static_cast<int>(length % 64);
    if (rem != 0) b.words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
    return b;
}

BitString BitString::from_string(std::string_view s) {
    BitString b(static_cast<std::int64_t>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') b.set(static_cast<std::int64_t>(i), true);
        else if (s[i] != '0') throw parameter_error("BitString: invalid character");
    }
    return b;
}

void BitString::check_index(std::int64_t i) const {
    if (i < 0 || i >= len_) throw dimension_error("BitString: index out of range");
}

bool BitString::get(std::int64_t i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

void BitString::set(std::int64_t i, bool v) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    auto& w = words_[static_cast<std::size_t>(i >> 6)];
    if (v) w |= mask;
    else w &= ~mask;
}

void BitString::flip(std::int64_t i) {
    check_index(i);
    words_[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63);
}

std::int64_t BitString::weight() const {
    std::int64_t w = 0;
    for (auto x : words_) w += std::popcount(x);
    return w;
}

std::int64_t BitString::distance(const BitString& other) const {
    if (len_ != other.len_) throw dimension_error("BitString: length mismatch");
    std::int64_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) w += std::popcount(words_[i] ^ other.words_[i]);
    return w;
}

BitString BitString::complemented() const {
    BitString b(len_);
    for (std::size_t i = 0; i < words_.size(); ++i) b.words_[i] = ~words_[i];
    const int rem = static_cast<int>(len_ % 64);
    if (rem != 0) b.words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
    return b;
}

BitString BitString::gather(const std::vector<std::int64_t>& positions) const {
    if (positions.empty()) throw dimension_error("BitString: empty position list");
    BitString b(static_cast<std::int64_t>(positions.size()));
    for (std::size_t j = 0; j < positions.size(); ++j) {
        b.set(static_cast<std::int64_t>(j), get(positions[j]));
    }
    return b;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (std::int64_t i = 0; i < len_; ++i)
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

} // namespace qsig
