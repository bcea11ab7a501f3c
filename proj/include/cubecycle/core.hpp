#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubecycle {

// Error taxonomy shared across the library. Verification failures are
// reported through VerificationReport, not through these.
enum class Errc {
    wrong_length,
    invalid_ssq_group,
    invalid_label,
    not_an_edge,
    dimension_too_small,
    too_large,
    length_out_of_range,
    odd_length,
    edge_not_shared,
    overlap_beyond_edge,
    index_out_of_range,
    unverified,
    not_an_automorphism,
    search_failed,
    bad_argument,
};

class CubeError : public std::runtime_error {
public:
    CubeError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& what) {
    throw CubeError(code, what);
}

enum class CubeFamily { ssq, bsq };

inline std::string_view family_name(CubeFamily f) {
    return f == CubeFamily::ssq ? "ssq" : "bsq";
}

inline CubeFamily parse_family(std::string_view s) {
    if (s == "ssq" || s == "SSQ") return CubeFamily::ssq;
    if (s == "bsq" || s == "BSQ") return CubeFamily::bsq;
    throw_error(Errc::bad_argument, "unknown family: " + std::string(s));
}

// Number of label bits n, with n == 4k+2. Group k is the 4-bit prefix,
// group 0 the 2-bit suffix.
class Dimension {
public:
    static constexpr int kMaxBits = 62;

    explicit Dimension(int n) : n_(n) {
        if (n < 2 || n % 4 != 2)
            throw_error(Errc::bad_argument, "n must be >= 2 and n % 4 == 2, got " + std::to_string(n));
        if (n > kMaxBits)
            throw_error(Errc::too_large, "n exceeds supported label width");
    }

    int bits() const { return n_; }
    int groups() const { return (n_ - 2) / 4; }

    friend bool operator==(Dimension a, Dimension b) { return a.n_ == b.n_; }
    friend bool operator!=(Dimension a, Dimension b) { return a.n_ != b.n_; }

private:
    int n_;
};

// A vertex label: bit i of `bits` is u_i, so the least significant bit is
// the last character of the text form.
struct Label {
    std::uint64_t bits = 0;

    friend bool operator==(Label a, Label b) { return a.bits == b.bits; }
    friend bool operator!=(Label a, Label b) { return a.bits != b.bits; }
    friend bool operator<(Label a, Label b) { return a.bits < b.bits; }
};

struct Edge {
    Label u, v;
};

// u_4^j as a nibble, most significant bit u_{4j+1}; group 0 is the suffix.
inline unsigned group_value(Label u, int j) {
    if (j == 0) return static_cast<unsigned>(u.bits & 0x3u);
    return static_cast<unsigned>((u.bits >> (4 * j - 2)) & 0xFu);
}

inline Label with_group(Label u, int j, unsigned value) {
    if (j == 0) return Label{(u.bits & ~0x3ull) | (value & 0x3u)};
    int shift = 4 * j - 2;
    return Label{(u.bits & ~(0xFull << shift)) | (static_cast<std::uint64_t>(value & 0xFu) << shift)};
}

// p_4(u): the prefix nibble, defined for n >= 6 only.
inline unsigned prefix4(Dimension dim, Label u) {
    if (dim.bits() < 6)
        throw_error(Errc::dimension_too_small, "prefix4 undefined for n = 2");
    return group_value(u, dim.groups());
}

// s_m(u): the m low-order bits.
inline std::uint64_t suffix_bits(Label u, int m) {
    return m >= 64 ? u.bits : (u.bits & ((1ull << m) - 1));
}

inline std::string to_text(Dimension dim, Label u) {
    std::string s(static_cast<std::size_t>(dim.bits()), '0');
    for (int i = 0; i < dim.bits(); ++i)
        if ((u.bits >> i) & 1) s[static_cast<std::size_t>(dim.bits() - 1 - i)] = '1';
    return s;
}

inline Label parse_label(Dimension dim, std::string_view text) {
    if (static_cast<int>(text.size()) != dim.bits())
        throw_error(Errc::wrong_length, "label text must have exactly " +
                                            std::to_string(dim.bits()) + " characters");
    Label u;
    for (int i = 0; i < dim.bits(); ++i) {
        char c = text[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1')
            throw_error(Errc::wrong_length, "label text must be over {0,1}");
        if (c == '1') u.bits |= 1ull << (dim.bits() - 1 - i);
    }
    return u;
}

}  // namespace cubecycle
