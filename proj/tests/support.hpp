#ifndef KFRAC_TESTS_SUPPORT_HPP
#define KFRAC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>

#include "kfrac/field.hpp"
#include "kfrac/montecarlo.hpp"

namespace testing {

inline kfrac::Word word(const std::string& s) {
    kfrac::Word w;
    for (char c : s) w.push_back(static_cast<kfrac::Elem>(c - '0'));
    return w;
}

inline std::string str(const kfrac::Word& w) {
    std::string s;
    for (auto x : w) s.push_back(static_cast<char>('0' + x));
    return s;
}

inline kfrac::Word random_word(kfrac::SplitMix64& eng, unsigned q, std::size_t n) {
    std::uniform_int_distribution<kfrac::Elem> d(0, q - 1);
    kfrac::Word w(n);
    for (auto& x : w) x = d(eng);
    return w;
}

// Word whose digits in base q are the index, least significant first.
inline kfrac::Word word_of_index(std::uint64_t idx, unsigned q, std::size_t n) {
    kfrac::Word w(n);
    for (std::size_t i = 0; i < n; ++i, idx /= q) w[i] = static_cast<kfrac::Elem>(idx % q);
    return w;
}

inline std::size_t first_difference(const kfrac::Word& a, const kfrac::Word& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
}

}  // namespace testing

#endif  // KFRAC_TESTS_SUPPORT_HPP
