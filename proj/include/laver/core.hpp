#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace laver {

// Algebra elements are machine words.  Interpretation (1-based table form,
// 0-based renamed form, or backward form) is carried by the call site.
using Elem = std::uint64_t;

// Levels above 62 would need elements past 2^62; everything stays in one word.
inline constexpr unsigned kMaxLevel = 62;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad element or level for the requested operation.
struct RangeError : Error {
    using Error::Error;
};

// Work or memory budget exhausted; distinct from wrong input.
struct BudgetError : Error {
    using Error::Error;
};

// A structure-theorem hypothesis failed; the message names the clause.
struct HypothesisError : Error {
    using Error::Error;
};

// Cache file rejected (bad magic, bad structure, or invariant violation).
struct CacheError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Table level n: the algebra on 2^n elements.
class Level {
public:
    explicit Level(unsigned n) : n_(n) {
        if (n > kMaxLevel)
            throw RangeError("level " + std::to_string(n) + " exceeds maximum " +
                             std::to_string(kMaxLevel));
    }

    unsigned value() const noexcept { return n_; }
    // Number of elements; also the 1-based top element.
    Elem size() const noexcept { return Elem(1) << n_; }
    Elem top() const noexcept { return Elem(1) << n_; }
    Elem mask() const noexcept { return top() - 1; }

    friend bool operator==(Level a, Level b) noexcept { return a.n_ == b.n_; }
    friend bool operator<=(Level a, Level b) noexcept { return a.n_ <= b.n_; }

private:
    unsigned n_;
};

inline bool is_pow2(Elem v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

// log2 of a power of two.
inline unsigned log2_exact(Elem v) noexcept {
    return static_cast<unsigned>(std::countr_zero(v));
}

// Reduction into the representative set {1,...,2^n}; 0 maps to 2^n.
inline Elem mod_plus(Elem v, Level n) noexcept {
    Elem r = v & n.mask();
    return r == 0 ? n.top() : r;
}

inline void check_prime_element(Level n, Elem a, const char* what) {
    if (a < 1 || a > n.top())
        throw RangeError(std::string(what) + " " + std::to_string(a) +
                         " out of range 1.." + std::to_string(n.top()));
}

inline void check_zero_element(Level n, Elem a, const char* what) {
    if (a > n.mask())
        throw RangeError(std::string(what) + " " + std::to_string(a) +
                         " out of range 0.." + std::to_string(n.mask()));
}

// mod+ reduction from level `big` down to level `small`; a homomorphism.
inline Elem reduce_mod(Level big, Level small, Elem a) {
    if (!(small <= big))
        throw RangeError("reduce_mod: target level above source level");
    check_prime_element(big, a, "element");
    return mod_plus(a, small);
}

// The shift x -> x + 2^n embedding level n into the upper half of level n+1.
inline Elem lift_shift(Level n, Elem a) {
    check_prime_element(n, a, "element");
    if (n.value() + 1 > kMaxLevel)
        throw RangeError("lift_shift: level above maximum");
    return a + n.top();
}

}  // namespace laver
