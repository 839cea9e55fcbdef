#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace entropia {

/// Exact positive rational kept in factored form (prime -> exponent,
/// exponents may be negative, no zero entries).  Every index and entropy
/// value in the library is built from these, so all comparisons are exact.
class Factored {
public:
    Factored() = default; // the rational 1

    static Factored from_integer(std::int64_t n); // n >= 1, trial division
    static Factored prime_power(std::int64_t p, std::int64_t e);

    Factored times(const Factored& other) const;
    Factored divided_by(const Factored& other) const;
    Factored pow(std::int64_t m) const; // m >= 0

    bool is_one() const { return exponents_.empty(); }
    bool is_integer() const;

    bool operator==(const Factored& other) const { return exponents_ == other.exponents_; }
    bool operator!=(const Factored& other) const { return !(*this == other); }

    /// Exact three-way comparison as rationals: -1, 0, +1.
    int compare(const Factored& other) const;

    const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }

    /// Natural log, for display only.
    double log_natural() const;

    /// "2^3*5", "1", possibly with negative exponents for rationals.
    std::string format() const;

    /// Exact decimal string; "a/b" when not an integer.
    std::string decimal() const;

private:
    std::map<std::int64_t, std::int64_t> exponents_;

    void set(std::int64_t p, std::int64_t e);
};

/// Index [A:B] of one subgroup in another: an exact factored positive
/// integer or infinite.
struct Index {
    bool infinite = false;
    Factored value; // meaningful when finite

    static Index finite(Factored v) { return Index{false, std::move(v)}; }
    static Index infinity() { return Index{true, {}}; }

    bool operator==(const Index& other) const
    {
        return infinite == other.infinite && (infinite || value == other.value);
    }
};

/// Entropy value: log(q) for an exact positive rational q, or infinity.
/// Addition multiplies the rationals, scalar multiples raise to powers.
class EntropyValue {
public:
    EntropyValue() = default; // zero entropy, log 1

    static EntropyValue log_of(Factored q) { return EntropyValue(false, std::move(q)); }
    static EntropyValue zero() { return EntropyValue(); }
    static EntropyValue infinity() { return EntropyValue(true, {}); }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && q_.is_one(); }
    const Factored& rational() const { return q_; }

    EntropyValue plus(const EntropyValue& other) const;
    EntropyValue minus(const EntropyValue& other) const; // other must be finite
    EntropyValue scaled(std::int64_t m) const;            // m >= 0; 0 * infinity = 0

    bool operator==(const EntropyValue& other) const;
    bool operator!=(const EntropyValue& other) const { return !(*this == other); }

    /// Exact comparison; infinity compares above everything finite.
    int compare(const EntropyValue& other) const;

    double log_natural() const; // display only; +inf when infinite
    std::string format() const; // "log 6", "0", "infinity"

private:
    EntropyValue(bool infinite, Factored q) : infinite_(infinite), q_(std::move(q)) {}

    bool infinite_ = false;
    Factored q_;
};

namespace detail {

/// Minimal unsigned bignum, only what exact comparison and decimal
/// rendering of factored values need.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v);

    void multiply_small(std::uint64_t v);
    int compare(const BigUint& other) const;
    std::string decimal() const;

private:
    std::vector<std::uint32_t> limbs_; // little-endian base 2^32
};

} // namespace detail

} // namespace entropia
