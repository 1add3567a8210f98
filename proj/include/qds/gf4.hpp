#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Arithmetic over GF(4) = {0, 1, w, w^2} with w^2 = w + 1, and over the
// mixed alphabet F4^n x F2^(m+r) used throughout the library.
//
// A GF(4) element is stored as two bits (x, z): 1 = (1,0), w = (0,1),
// w^2 = (1,1).  Vectors over GF(4) keep one machine word per bit plane so
// that addition, weight and the trace inner product reduce to word ops.
// The encoding never leaks into file formats; those use the symbolic
// alphabets {0,1,w,W} and {I,X,Z,Y}.

namespace qds {

inline constexpr int kMaxLen = 64;

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

/// One GF(4) element, two-bit encoding as described above.
struct F4 {
    std::uint8_t v = 0;  // bit0 = x-plane, bit1 = z-plane

    constexpr F4() = default;
    constexpr explicit F4(std::uint8_t raw) : v(raw & 3u) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 omega() { return F4(2); }
    static constexpr F4 omega_sq() { return F4(3); }

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.v ^ b.v); }
    friend constexpr bool operator==(F4 a, F4 b) { return a.v == b.v; }

    friend constexpr F4 operator*(F4 a, F4 b) {
        // multiplication table of F2[w]/(w^2+w+1)
        constexpr std::uint8_t tab[4][4] = {
            {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return F4(tab[a.v][b.v]);
    }

    /// Conjugation: fixes 0 and 1, swaps w and w^2.
    constexpr F4 conj() const {
        std::uint8_t x = v & 1u, z = (v >> 1) & 1u;
        return F4(static_cast<std::uint8_t>((x ^ z) | (z << 1)));
    }

    /// Trace to F2: Tr(x) = x + x^2.  Zero on {0,1}, one on {w, w^2}.
    constexpr int trace() const { return (v >> 1) & 1; }

    char symbol() const { return "01wW"[v]; }
    char pauli_symbol() const { return "IXZY"[v]; }
};

/// A length-n vector over GF(4); the image of a phaseless n-qubit Pauli
/// operator under the map I,X,Z,Y -> 0,1,w,w^2.
struct PauliVector {
    int n = 0;
    std::uint64_t x = 0;  // coefficient-of-1 plane
    std::uint64_t z = 0;  // coefficient-of-w plane

    PauliVector() = default;
    PauliVector(int len, std::uint64_t xp, std::uint64_t zp) : n(len), x(xp), z(zp) {
        if (len < 0 || len > kMaxLen) throw std::invalid_argument("PauliVector: bad length");
        std::uint64_t m = mask();
        x &= m;
        z &= m;
    }
    explicit PauliVector(int len) : PauliVector(len, 0, 0) {}

    std::uint64_t mask() const { return n == 64 ? ~0ull : ((1ull << n) - 1); }

    F4 operator[](int i) const {
        return F4(static_cast<std::uint8_t>(((x >> i) & 1u) | (((z >> i) & 1u) << 1)));
    }
    void set(int i, F4 e) {
        x = (x & ~(1ull << i)) | (std::uint64_t(e.v & 1u) << i);
        z = (z & ~(1ull << i)) | (std::uint64_t((e.v >> 1) & 1u) << i);
    }

    int weight() const { return std::popcount(x | z); }
    bool is_zero() const { return (x | z) == 0; }

    friend PauliVector operator+(const PauliVector& a, const PauliVector& b) {
        if (a.n != b.n) throw std::invalid_argument("PauliVector: length mismatch");
        return PauliVector(a.n, a.x ^ b.x, a.z ^ b.z);
    }
    friend bool operator==(const PauliVector& a, const PauliVector& b) {
        return a.n == b.n && a.x == b.x && a.z == b.z;
    }

    /// The 2n-bit symplectic image (x plane in the low bits).
    std::uint64_t symplectic_bits() const { return x | (z << n); }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (*this)[i].symbol();
        return s;
    }
    std::string pauli_str() const {
        std::string s(static_cast<std::size_t>(n), 'I');
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (*this)[i].pauli_symbol();
        return s;
    }
};

/// Trace inner product Tr(sum x_i * conj(y_i)); zero iff the corresponding
/// Pauli operators commute.
inline int trace_inner(const PauliVector& a, const PauliVector& b) {
    if (a.n != b.n) throw std::invalid_argument("trace_inner: length mismatch");
    return parity64((a.x & b.z) ^ (a.z & b.x));
}

/// tau: maps a string over {I,X,Z,Y} to its GF(4) image.
inline PauliVector tau_map(std::string_view labels) {
    PauliVector p(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        F4 e;
        switch (labels[i]) {
            case 'I': e = F4::zero(); break;
            case 'X': e = F4::one(); break;
            case 'Z': e = F4::omega(); break;
            case 'Y': e = F4::omega_sq(); break;
            default: throw std::invalid_argument(std::string("tau_map: invalid label '") + labels[i] + "'");
        }
        p.set(static_cast<int>(i), e);
    }
    return p;
}

/// Parses a GF(4) vector from either alphabet, {0,1,w,W} or {I,X,Z,Y}.
inline PauliVector parse_f4_vector(std::string_view s) {
    PauliVector p(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        F4 e;
        switch (s[i]) {
            case '0': case 'I': e = F4::zero(); break;
            case '1': case 'X': e = F4::one(); break;
            case 'w': case 'Z': e = F4::omega(); break;
            case 'W': case 'Y': e = F4::omega_sq(); break;
            default: throw std::invalid_argument(std::string("parse_f4_vector: invalid symbol '") + s[i] + "'");
        }
        p.set(static_cast<int>(i), e);
    }
    return p;
}

/// A plain binary vector of fixed length (syndrome part of a DS word).
struct BitVec {
    int len = 0;
    std::uint64_t bits = 0;

    BitVec() = default;
    BitVec(int l, std::uint64_t b) : len(l), bits(b) {
        if (l < 0 || l > kMaxLen) throw std::invalid_argument("BitVec: bad length");
        if (l < 64) bits &= (1ull << l) - 1;
    }
    explicit BitVec(int l) : BitVec(l, 0) {}

    int weight() const { return std::popcount(bits); }
    int operator[](int i) const { return (bits >> i) & 1; }

    friend BitVec operator+(const BitVec& a, const BitVec& b) {
        if (a.len != b.len) throw std::invalid_argument("BitVec: length mismatch");
        return BitVec(a.len, a.bits ^ b.bits);
    }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.len == b.len && a.bits == b.bits;
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = 0; i < len; ++i)
            if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }
};

inline BitVec parse_bit_vector(std::string_view s) {
    BitVec b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            b.bits |= 1ull << i;
        else if (s[i] != '0')
            throw std::invalid_argument(std::string("parse_bit_vector: invalid symbol '") + s[i] + "'");
    }
    return b;
}

/// An element of F4^n x F2^(m+r): a joint data/syndrome word.
struct DSVector {
    PauliVector data;
    BitVec syn;

    DSVector() = default;
    DSVector(PauliVector d, BitVec s) : data(d), syn(s) {}

    int total_weight() const { return data.weight() + syn.weight(); }

    friend DSVector operator+(const DSVector& a, const DSVector& b) {
        return DSVector(a.data + b.data, a.syn + b.syn);
    }
    friend bool operator==(const DSVector& a, const DSVector& b) {
        return a.data == b.data && a.syn == b.syn;
    }
};

/// Split weight (i, j): nonzero GF(4) entries and nonzero syndrome bits.
inline std::pair<int, int> split_weight(const DSVector& v) {
    return {v.data.weight(), v.syn.weight()};
}

/// The mixed inner product: trace form on the GF(4) part plus the standard
/// binary form on the F2 part, valued in F2.
inline int star(const DSVector& a, const DSVector& b) {
    if (a.syn.len != b.syn.len) throw std::invalid_argument("star: shape mismatch");
    return trace_inner(a.data, b.data) ^ parity64(a.syn.bits & b.syn.bits);
}

}  // namespace qds
