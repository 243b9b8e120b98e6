#ifndef KFRAC_IO_HPP
#define KFRAC_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "kfrac/field.hpp"

namespace kfrac {

enum class InputFormat { ascii, hex, raw };
enum class BitOrder { msb_first, lsb_first };

InputFormat input_format_from_string(const std::string& s);
BitOrder bit_order_from_string(const std::string& s);

/// ascii: one digit per symbol (q <= 10); whitespace is skipped.
/// hex: 4 bits per digit, raw: 8 bits per byte, both for q = 2 only, with
/// the given bit order inside each digit or byte.
/// limit = 0 means no limit. Errors carry the byte offset of the bad input.
Word parse_symbols(std::string_view data, InputFormat fmt, BitOrder order, unsigned q, std::size_t limit = 0);

/// Inverse of parse_symbols. hex and raw pad the last digit/byte with zeros.
std::string format_symbols(const Word& w, InputFormat fmt, BitOrder order, unsigned q);

/// ascii rendering for CSV columns and reports.
std::string word_string(const Word& w);
/// word_string for q <= 10, otherwise decimal symbols joined by ':'.
std::string word_text(const Word& w, unsigned q);

}  // namespace kfrac

#endif  // KFRAC_IO_HPP
