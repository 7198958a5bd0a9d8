#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eksr {

// Truth assignment to variables x_1..x_n. Bit i holds the value of x_{i+1};
// the textual form lists x_1 first.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n, bool value = false);

    static Assignment from_string(std::string_view bits);
    // Low n bits of `code`, bit i -> x_{i+1}. Requires n <= 64.
    static Assignment from_code(std::uint64_t code, std::size_t n);

    std::size_t size() const noexcept { return bits_.size(); }

    // 1-based variable access.
    bool operator[](int var) const { return bits_[static_cast<std::size_t>(var - 1)]; }
    void set(int var, bool value) { bits_[static_cast<std::size_t>(var - 1)] = value; }
    void flip(int var) { bits_.flip(static_cast<std::size_t>(var - 1)); }

    std::size_t count() const { return bits_.count(); }
    std::uint64_t to_code() const;
    std::string to_string() const;

    // Concatenation: x_1..x_n of *this followed by `tail`.
    Assignment concat(const Assignment& tail) const;
    // Variables first..first+len-1 as a standalone assignment.
    Assignment slice(int first, std::size_t len) const;

    friend bool operator==(const Assignment& a, const Assignment& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Assignment& a, const Assignment& b) { return !(a == b); }
    friend bool operator<(const Assignment& a, const Assignment& b) {
        return a.to_string() < b.to_string();
    }

    friend std::size_t hamming(const Assignment& a, const Assignment& b);

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

std::size_t hamming(const Assignment& a, const Assignment& b);

// Variables (1-based, ascending) at which a and b differ. Throws DomainError
// on a length mismatch.
std::vector<int> diff_vars(const Assignment& a, const Assignment& b);

}  // namespace eksr
