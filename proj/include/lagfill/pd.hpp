// PD codes and braid words: types, text grammar, serialization.
#ifndef LAGFILL_PD_HPP
#define LAGFILL_PD_HPP

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagfill {

enum class ErrorKind { Parse, Validation, Unsupported, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrorKind kind;
};

// One tuple X(a,b,c,d): arc labels counterclockwise starting at the incoming
// under-strand. The under-strand runs a -> c.
struct PdCode {
    std::vector<std::array<int, 4>> crossings;
    int trivial_loops = 0; // crossingless unknot components

    bool empty() const { return crossings.empty() && trivial_loops == 0; }
    int size() const { return static_cast<int>(crossings.size()); }

    std::string text() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& x : crossings) {
            if (!first) os << ' ';
            first = false;
            os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
        }
        for (int i = 0; i < trivial_loops; ++i) {
            if (!first) os << ' ';
            first = false;
            os << "U()";
        }
        return os.str();
    }
};

struct BraidWord {
    int strands = 1;
    std::vector<int> letters; // nonzero, |i| < strands

    void validate() const {
        if (strands < 1) throw Error(ErrorKind::Parse, "braid: strand count must be >= 1");
        for (int l : letters) {
            if (l == 0 || std::abs(l) >= strands)
                throw Error(ErrorKind::Parse,
                            "braid: letter " + std::to_string(l) + " out of range for " +
                                std::to_string(strands) + " strands");
        }
    }
};

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline int parse_uint(const std::string& s, size_t& i, const char* what) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(ErrorKind::Parse, std::string("expected ") + what);
    return std::stoi(s.substr(start, i - start));
}

} // namespace detail

// Syntax-level PD parse: whitespace-separated `X(a,b,c,d)` terms with positive
// integers, optional `pd:` header, optional `U()` trivial loops. Structural
// invariants (label multiplicity, orientation, planarity) are checked by
// build_diagram; parse_pd in diagram.hpp runs both.
inline PdCode parse_pd_syntax(const std::string& text) {
    PdCode pd;
    size_t i = 0;
    detail::skip_ws(text, i);
    if (text.compare(i, 3, "pd:") == 0) i += 3;
    detail::skip_ws(text, i);
    if (i >= text.size()) throw Error(ErrorKind::Parse, "empty diagram");
    while (i < text.size()) {
        detail::skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] == 'U') {
            ++i;
            detail::skip_ws(text, i);
            if (i >= text.size() || text[i] != '(') throw Error(ErrorKind::Parse, "expected '(' after U");
            ++i;
            detail::skip_ws(text, i);
            if (i >= text.size() || text[i] != ')') throw Error(ErrorKind::Parse, "expected ')' in U()");
            ++i;
            pd.trivial_loops++;
            continue;
        }
        if (text[i] != 'X') throw Error(ErrorKind::Parse, "expected 'X' term");
        ++i;
        detail::skip_ws(text, i);
        if (i >= text.size() || text[i] != '(') throw Error(ErrorKind::Parse, "expected '('");
        ++i;
        std::array<int, 4> x{};
        for (int k = 0; k < 4; ++k) {
            x[k] = detail::parse_uint(text, i, "arc label");
            if (x[k] <= 0) throw Error(ErrorKind::Parse, "arc labels must be positive");
            detail::skip_ws(text, i);
            char want = (k < 3) ? ',' : ')';
            if (i >= text.size() || text[i] != want)
                throw Error(ErrorKind::Parse, std::string("expected '") + want + "'");
            ++i;
        }
        pd.crossings.push_back(x);
    }
    if (pd.empty()) throw Error(ErrorKind::Parse, "empty diagram");
    return pd;
}

// `braid <n>: i1 i2 ... ik` with signed nonzero integers.
inline BraidWord parse_braid(const std::string& text) {
    size_t i = 0;
    detail::skip_ws(text, i);
    if (text.compare(i, 5, "braid") != 0) throw Error(ErrorKind::Parse, "expected 'braid'");
    i += 5;
    BraidWord b;
    b.strands = detail::parse_uint(text, i, "strand count");
    detail::skip_ws(text, i);
    if (i >= text.size() || text[i] != ':') throw Error(ErrorKind::Parse, "expected ':'");
    ++i;
    while (true) {
        detail::skip_ws(text, i);
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '-') {
            sign = -1;
            ++i;
        }
        int v = detail::parse_uint(text, i, "braid letter");
        b.letters.push_back(sign * v);
    }
    b.validate();
    return b;
}

inline bool looks_like_braid(const std::string& text) {
    size_t i = 0;
    detail::skip_ws(text, i);
    return text.compare(i, 5, "braid") == 0;
}

} // namespace lagfill

#endif
