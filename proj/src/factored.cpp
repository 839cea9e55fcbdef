#include "factored.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace entropia {

namespace detail {

BigUint::BigUint(std::uint64_t v)
{
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32)
        limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::multiply_small(std::uint64_t v)
{
    if (v == 0) {
        limbs_.assign(1, 0);
        return;
    }
    // v can exceed 32 bits; split into two limb multiplies
    std::uint64_t lo = v & 0xffffffffu;
    std::uint64_t hi = v >> 32;

    std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]);
        std::uint64_t p0 = cur * lo;
        std::uint64_t p1 = cur * hi;
        std::uint64_t carry = 0;

        std::uint64_t s = static_cast<std::uint64_t>(out[i]) + (p0 & 0xffffffffu);
        out[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;

        s = static_cast<std::uint64_t>(out[i + 1]) + (p0 >> 32) + (p1 & 0xffffffffu) + carry;
        out[i + 1] = static_cast<std::uint32_t>(s);
        carry = s >> 32;

        std::size_t j = i + 2;
        std::uint64_t add = (p1 >> 32) + carry;
        while (add) {
            std::uint64_t t = static_cast<std::uint64_t>(out[j]) + (add & 0xffffffffu);
            out[j] = static_cast<std::uint32_t>(t);
            add = (add >> 32) + (t >> 32);
            ++j;
        }
    }
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    limbs_ = std::move(out);
}

int BigUint::compare(const BigUint& other) const
{
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::decimal() const
{
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    auto all_zero = [&] {
        for (auto limb : work)
            if (limb)
                return false;
        return true;
    };
    if (all_zero())
        return "0";
    while (!all_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + rem));
    }
    return std::string(digits.rbegin(), digits.rend());
}

namespace {

std::uint64_t pow_u64(std::uint64_t p, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= p;
    return r;
}

// Evaluate prod p^e as a bignum; exponents must be >= 0.
BigUint evaluate(const std::map<std::int64_t, std::int64_t>& exps, bool positive_part)
{
    BigUint acc(1);
    for (const auto& [p, e] : exps) {
        std::int64_t use = positive_part ? e : -e;
        if (use <= 0)
            continue;
        // multiply in chunks that stay below 2^63
        std::int64_t left = use;
        double lp = std::log2(static_cast<double>(p));
        std::int64_t chunk = std::max<std::int64_t>(1, static_cast<std::int64_t>(62.0 / lp));
        while (left > 0) {
            std::int64_t take = std::min(left, chunk);
            acc.multiply_small(pow_u64(static_cast<std::uint64_t>(p),
                                       static_cast<std::uint64_t>(take)));
            left -= take;
        }
    }
    return acc;
}

} // namespace
} // namespace detail

void Factored::set(std::int64_t p, std::int64_t e)
{
    if (e == 0)
        exponents_.erase(p);
    else
        exponents_[p] = e;
}

Factored Factored::from_integer(std::int64_t n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "factored value must be a positive integer, got " + std::to_string(n));
    Factored f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            f.exponents_[p] += 1;
            n /= p;
        }
    }
    if (n > 1)
        f.exponents_[n] += 1;
    return f;
}

Factored Factored::prime_power(std::int64_t p, std::int64_t e)
{
    if (p < 2)
        fail(ErrorCode::InvalidArgument, "prime_power needs p >= 2");
    Factored f;
    f.set(p, e);
    return f;
}

Factored Factored::times(const Factored& other) const
{
    Factored out = *this;
    for (const auto& [p, e] : other.exponents_)
        out.set(p, out.exponents_.count(p) ? out.exponents_[p] + e : e);
    return out;
}

Factored Factored::divided_by(const Factored& other) const
{
    Factored out = *this;
    for (const auto& [p, e] : other.exponents_)
        out.set(p, out.exponents_.count(p) ? out.exponents_[p] - e : -e);
    return out;
}

Factored Factored::pow(std::int64_t m) const
{
    if (m < 0)
        fail(ErrorCode::InvalidArgument, "pow exponent must be >= 0");
    Factored out;
    if (m == 0)
        return out;
    for (const auto& [p, e] : exponents_)
        out.exponents_[p] = e * m;
    return out;
}

bool Factored::is_integer() const
{
    for (const auto& [p, e] : exponents_) {
        (void)p;
        if (e < 0)
            return false;
    }
    return true;
}

int Factored::compare(const Factored& other) const
{
    // this/other >= 1 iff numerator(diff) >= denominator(diff)
    Factored diff = divided_by(other);
    detail::BigUint num = detail::evaluate(diff.exponents_, true);
    detail::BigUint den = detail::evaluate(diff.exponents_, false);
    return num.compare(den);
}

double Factored::log_natural() const
{
    double acc = 0.0;
    for (const auto& [p, e] : exponents_)
        acc += static_cast<double>(e) * std::log(static_cast<double>(p));
    return acc;
}

std::string Factored::format() const
{
    if (exponents_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exponents_) {
        if (!first)
            os << "*";
        first = false;
        os << p;
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

std::string Factored::decimal() const
{
    detail::BigUint num = detail::evaluate(exponents_, true);
    detail::BigUint den = detail::evaluate(exponents_, false);
    if (is_integer())
        return num.decimal();
    return num.decimal() + "/" + den.decimal();
}

EntropyValue EntropyValue::plus(const EntropyValue& other) const
{
    if (infinite_ || other.infinite_)
        return infinity();
    return log_of(q_.times(other.q_));
}

EntropyValue EntropyValue::minus(const EntropyValue& other) const
{
    if (other.infinite_)
        fail(ErrorCode::InvalidArgument, "cannot subtract an infinite entropy value");
    if (infinite_)
        return infinity();
    return log_of(q_.divided_by(other.q_));
}

EntropyValue EntropyValue::scaled(std::int64_t m) const
{
    if (m < 0)
        fail(ErrorCode::InvalidArgument, "entropy scale factor must be >= 0");
    if (m == 0)
        return zero();
    if (infinite_)
        return infinity();
    return log_of(q_.pow(m));
}

bool EntropyValue::operator==(const EntropyValue& other) const
{
    if (infinite_ != other.infinite_)
        return false;
    return infinite_ || q_ == other.q_;
}

int EntropyValue::compare(const EntropyValue& other) const
{
    if (infinite_ && other.infinite_)
        return 0;
    if (infinite_)
        return 1;
    if (other.infinite_)
        return -1;
    return q_.compare(other.q_);
}

double EntropyValue::log_natural() const
{
    if (infinite_)
        return std::numeric_limits<double>::infinity();
    return q_.log_natural();
}

std::string EntropyValue::format() const
{
    if (infinite_)
        return "infinity";
    if (q_.is_one())
        return "0";
    return "log " + q_.decimal();
}

} // namespace entropia
