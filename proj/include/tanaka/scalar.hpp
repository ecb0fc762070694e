#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace tanaka {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits.
class Scalar {
public:
    Scalar() noexcept = default;
    Scalar(int v) noexcept : num_(v) {}
    Scalar(long v) : Scalar(static_cast<long long>(v)) {}
    Scalar(long long v) {
        if (v == std::numeric_limits<long long>::min()) *this = Scalar(v, 1);
        else num_ = v;
    }
    Scalar(long long num, long long den);
    explicit Scalar(const mpq_class& q);

    Scalar(const Scalar& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Scalar& operator=(Scalar&&) noexcept = default;

    /// Parses "p", "-p" or "p/q".
    static Scalar parse(const std::string& text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const noexcept;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    /// this -= a * b
    void sub_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    void set_from_mpq(const mpq_class& q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar half() { return Scalar(1, 2); }

} // namespace tanaka
