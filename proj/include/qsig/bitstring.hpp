#ifndef QSIG_BITSTRING_HPP
#define QSIG_BITSTRING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qsig {

// Packed bit string of fixed length. Bit i of word i/64 holds position i.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::int64_t length);

    static BitString random(std::int64_t length, std::mt19937_64& g);
    static BitString from_string(std::string_view s);   // e.g. "0110"

    std::int64_t size() const { return len_; }
    bool get(std::int64_t i) const;
    void set(std::int64_t i, bool v);
    void flip(std::int64_t i);

    std::int64_t weight() const;
    // Hamming distance; lengths must match.
    std::int64_t distance(const BitString& other) const;
    BitString complemented() const;
    // Substring picked out at the given positions, in the order listed.
    BitString gather(const std::vector<std::int64_t>& positions) const;

    bool operator==(const BitString& other) const = default;
    std::string to_string() const;

private:
    std::int64_t len_ = 0;
    std::vector<std::uint64_t> words_;

    void check_index(std::int64_t i) const;
};

} // namespace qsig

#endif
