#include "eksr/core/assignment.hpp"

#include "eksr/core/error.hpp"

namespace eksr {

Assignment::Assignment(std::size_t n, bool value) : bits_(n) {
    if (value) bits_.set();
}

Assignment Assignment::from_string(std::string_view bits) {
    Assignment a(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            a.bits_.set(i);
        else if (bits[i] != '0')
            throw DomainError("assignment must be a 0/1 string, got '" + std::string(bits) + "'");
    }
    return a;
}

Assignment Assignment::from_code(std::uint64_t code, std::size_t n) {
    if (n > 64) throw DomainError("from_code supports at most 64 variables");
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((code >> i) & 1U) a.bits_.set(i);
    return a;
}

std::uint64_t Assignment::to_code() const {
    if (size() > 64) throw DomainError("to_code supports at most 64 variables");
    std::uint64_t code = 0;
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        code |= std::uint64_t{1} << i;
    return code;
}

std::string Assignment::to_string() const {
    std::string s(size(), '0');
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
        s[i] = '1';
    return s;
}

Assignment Assignment::concat(const Assignment& tail) const {
    Assignment out(size() + tail.size());
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i];
    for (std::size_t i = 0; i < tail.size(); ++i) out.bits_[size() + i] = tail.bits_[i];
    return out;
}

Assignment Assignment::slice(int first, std::size_t len) const {
    auto start = static_cast<std::size_t>(first - 1);
    if (first < 1 || start + len > size()) throw DomainError("slice out of range");
    Assignment out(len);
    for (std::size_t i = 0; i < len; ++i) out.bits_[i] = bits_[start + i];
    return out;
}

std::size_t hamming(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) throw DomainError("assignment length mismatch");
    return (a.bits_ ^ b.bits_).count();
}

std::vector<int> diff_vars(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) throw DomainError("assignment length mismatch");
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int v = static_cast<int>(i) + 1;
        if (a[v] != b[v]) out.push_back(v);
    }
    return out;
}

}  // namespace eksr
