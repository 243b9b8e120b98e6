#include "kfrac/io.hpp"

#include <cctype>

namespace kfrac {

InputFormat input_format_from_string(const std::string& s) {
    if (s == "ascii") return InputFormat::ascii;
    if (s == "hex") return InputFormat::hex;
    if (s == "raw") return InputFormat::raw;
    fail(ErrorCode::Parse, "unknown input format '" + s + "' (ascii, hex, raw)");
}

BitOrder bit_order_from_string(const std::string& s) {
    if (s == "msb" || s == "msb-first") return BitOrder::msb_first;
    if (s == "lsb" || s == "lsb-first") return BitOrder::lsb_first;
    fail(ErrorCode::Parse, "unknown bit order '" + s + "' (msb-first, lsb-first)");
}

namespace {

void push_bits(Word& out, unsigned value, unsigned width, BitOrder order, std::size_t limit) {
    for (unsigned i = 0; i < width; ++i) {
        if (limit && out.size() >= limit) return;
        const unsigned shift = order == BitOrder::msb_first ? width - 1 - i : i;
        out.push_back((value >> shift) & 1u);
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Word parse_symbols(std::string_view data, InputFormat fmt, BitOrder order, unsigned q, std::size_t limit) {
    Word out;
    auto full = [&] { return limit && out.size() >= limit; };
    switch (fmt) {
        case InputFormat::ascii:
            require(q <= 10, ErrorCode::InvalidArgument, "ascii input needs q <= 10");
            for (std::size_t i = 0; i < data.size() && !full(); ++i) {
                const char c = data[i];
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= q)
                    fail(ErrorCode::Parse, "invalid symbol '" + std::string(1, c) + "' at byte " + std::to_string(i) +
                                               " for q = " + std::to_string(q));
                out.push_back(static_cast<Elem>(c - '0'));
            }
            break;
        case InputFormat::hex:
            require(q == 2, ErrorCode::InvalidArgument, "hex input needs q = 2");
            for (std::size_t i = 0; i < data.size() && !full(); ++i) {
                const char c = data[i];
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                const int v = hex_value(c);
                if (v < 0)
                    fail(ErrorCode::Parse, "invalid hex digit '" + std::string(1, c) + "' at byte " + std::to_string(i));
                push_bits(out, static_cast<unsigned>(v), 4, order, limit);
            }
            break;
        case InputFormat::raw:
            require(q == 2, ErrorCode::InvalidArgument, "raw input needs q = 2");
            for (std::size_t i = 0; i < data.size() && !full(); ++i)
                push_bits(out, static_cast<unsigned char>(data[i]), 8, order, limit);
            break;
    }
    return out;
}

std::string format_symbols(const Word& w, InputFormat fmt, BitOrder order, unsigned q) {
    std::string out;
    auto pack = [&](std::size_t start, unsigned width) {
        unsigned v = 0;
        for (unsigned i = 0; i < width; ++i) {
            const unsigned bit = start + i < w.size() ? w[start + i] : 0;
            const unsigned shift = order == BitOrder::msb_first ? width - 1 - i : i;
            v |= bit << shift;
        }
        return v;
    };
    switch (fmt) {
        case InputFormat::ascii:
            require(q <= 10, ErrorCode::InvalidArgument, "ascii output needs q <= 10");
            return word_string(w);
        case InputFormat::hex:
            require(q == 2, ErrorCode::InvalidArgument, "hex output needs q = 2");
            for (std::size_t i = 0; i < w.size(); i += 4) out.push_back("0123456789abcdef"[pack(i, 4)]);
            return out;
        case InputFormat::raw:
            require(q == 2, ErrorCode::InvalidArgument, "raw output needs q = 2");
            for (std::size_t i = 0; i < w.size(); i += 8) out.push_back(static_cast<char>(pack(i, 8)));
            return out;
    }
    return out;
}

std::string word_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Elem x : w) {
        require(x < 10, ErrorCode::InvalidArgument, "symbol does not fit one ascii digit");
        s.push_back(static_cast<char>('0' + x));
    }
    return s;
}

std::string word_text(const Word& w, unsigned q) {
    if (q <= 10) return word_string(w);
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s.push_back(':');
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace kfrac
