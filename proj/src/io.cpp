#include "hullforge/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace hullforge {

namespace {

struct Token {
    std::string text;
    size_t line, col;  // 1-based
};

[[noreturn]] void fail(size_t line, size_t col, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

// Significant lines only (comments and blank lines dropped), tokenized.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    size_t lineno = 1, col = 1;
    std::vector<Token> current;
    bool comment = false;
    std::string tok;
    size_t tok_col = 0;
    auto flush_tok = [&] {
        if (!tok.empty()) {
            current.push_back({tok, lineno, tok_col});
            tok.clear();
        }
    };
    auto flush_line = [&] {
        flush_tok();
        if (!current.empty()) lines.push_back(std::move(current));
        current.clear();
        comment = false;
        ++lineno;
        col = 1;
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush_line();
            continue;
        }
        if (ch == '\r') fail(lineno, col, "CR found; the format uses LF line endings");
        if (!comment) {
            if (ch == '#' && tok.empty() && current.empty()) {
                comment = true;
            } else if (ch == ' ' || ch == '\t') {
                flush_tok();
            } else {
                if (tok.empty()) tok_col = col;
                tok += ch;
            }
        }
        ++col;
    }
    flush_line();
    return lines;
}

uint64_t parse_uint(const Token& t, uint64_t max, const std::string& what) {
    if (t.text.empty() || t.text.size() > 10) fail(t.line, t.col, what + ": not a small decimal integer");
    uint64_t v = 0;
    for (char ch : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            fail(t.line, t.col, what + ": expected a decimal integer, got '" + t.text + "'");
        v = v * 10 + static_cast<uint64_t>(ch - '0');
    }
    if (v > max) fail(t.line, t.col, what + " " + t.text + " out of range (max " + std::to_string(max) + ")");
    return v;
}

}  // namespace

LinearCode parse_code_file(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1, column 1: empty input");

    const auto& hdr = lines[0];
    if (hdr.size() != 4) fail(hdr[0].line, hdr[0].col, "header must be exactly `p m n k`");
    uint64_t p = parse_uint(hdr[0], 1024, "p");
    uint64_t m = parse_uint(hdr[1], 10, "m");
    uint64_t n = parse_uint(hdr[2], 1u << 20, "n");
    uint64_t k = parse_uint(hdr[3], n == 0 ? 0 : n, "k");
    if (p < 2) fail(hdr[0].line, hdr[0].col, "p must be a prime >= 2");
    if (m < 1) fail(hdr[1].line, hdr[1].col, "m must be >= 1");
    if (n < 1) fail(hdr[2].line, hdr[2].col, "n must be >= 1");

    if (lines.size() < 2) throw ParseError("line " + std::to_string(hdr[0].line + 1) +
                                           ", column 1: missing modulus line");
    const auto& mod = lines[1];
    if (mod[0].text != "modulus") fail(mod[0].line, mod[0].col, "expected the keyword `modulus`");
    if (mod.size() != m + 2)
        fail(mod[0].line, mod[0].col, "modulus needs " + std::to_string(m + 1) + " coefficients c0..c" +
                                          std::to_string(m));
    std::vector<int> modulus;
    for (size_t i = 1; i < mod.size(); ++i)
        modulus.push_back(static_cast<int>(parse_uint(mod[i], p - 1, "modulus coefficient")));

    const Field* f;
    try {
        f = &Field::get(static_cast<int>(p), static_cast<int>(m), modulus);
    } catch (const Error& e) {
        fail(mod[0].line, mod[0].col, e.what());
    }

    if (lines.size() != k + 2)
        throw ParseError("line " + std::to_string(mod[0].line + 1) + ", column 1: expected " +
                         std::to_string(k) + " generator rows, found " + std::to_string(lines.size() - 2));
    GFMatrix g(*f, k, n);
    for (size_t r = 0; r < k; ++r) {
        const auto& row = lines[r + 2];
        if (row.size() != n)
            fail(row[0].line, row[0].col, "generator row " + std::to_string(r + 1) + " has " +
                                              std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(n));
        for (size_t j = 0; j < n; ++j)
            g.set(r, j, static_cast<uint32_t>(parse_uint(row[j], f->q() - 1, "element rep")));
    }
    return k == 0 ? LinearCode::zero_code(*f, n) : LinearCode::from_generator(g);
}

std::string serialize_code_file(const LinearCode& code) {
    const Field& f = code.field();
    std::ostringstream out;
    out << f.p() << ' ' << f.m() << ' ' << code.n() << ' ' << code.k() << '\n';
    out << "modulus";
    for (int c : f.modulus()) out << ' ' << c;
    out << '\n';
    for (size_t i = 0; i < code.k(); ++i) {
        for (size_t j = 0; j < code.n(); ++j) {
            if (j) out << ' ';
            out << code.generator().at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hullforge
