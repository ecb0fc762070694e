#include "tanaka/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace tanaka {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    // operands are never INT64_MIN here: inline values stay within +-kMax
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v >= -i128(kMax) && v <= i128(kMax); }

mpz_class mpz_from_i64(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

mpq_class mpq_from_pair(std::int64_t n, std::int64_t d) {
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), static_cast<long>(n));
    mpz_set_si(mpq_denref(q.get_mpq_t()), static_cast<long>(d));
    return q;
}

} // namespace

Scalar::Scalar(long long num, long long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        mpq_class q(mpz_from_i64(num), mpz_from_i64(den));
        q.canonicalize();
        set_from_mpq(q);
    }
}

Scalar::Scalar(const mpq_class& q) { set_from_mpq(q); }

void Scalar::set_from_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        long nn = mpz_get_si(n.get_mpz_t());
        long dd = mpz_get_si(d.get_mpz_t());
        if (nn != std::numeric_limits<long>::min()) {
            num_ = nn;
            den_ = dd;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
}

Scalar Scalar::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Scalar::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }

mpz_class Scalar::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

mpq_class Scalar::to_mpq() const { return big_ ? *big_ : mpq_from_pair(num_, den_); }

std::string Scalar::to_string() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    if (big_) {
        r.set_from_mpq(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            i128 s = i128(num_) + o.num_;
            if (fits(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
        }
        i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
            return *this;
        }
    }
    set_from_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (!o.big_) {
        Scalar neg;
        neg.num_ = -o.num_;
        neg.den_ = o.den_;
        return *this += neg;
    }
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::int64_t g1 = gcd64(num_, o.den_);
        std::int64_t g2 = gcd64(o.num_, den_);
        i128 n = i128(num_ / g1) * (o.num_ / g2);
        i128 d = i128(den_ / g2) * (o.den_ / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    set_from_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (!o.big_) {
        Scalar inv;
        inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
        inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
        return *this *= inv;
    }
    set_from_mpq(to_mpq() / o.to_mpq());
    return *this;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        i128 s = i128(num_) - i128(a.num_) * b.num_;
        if (fits(s)) {
            num_ = static_cast<std::int64_t>(s);
            return;
        }
    }
    Scalar p = a;
    p *= b;
    *this -= p;
}

bool operator==(const Scalar& a, const Scalar& b) {
    // both representations are canonical, so inline and big never coincide
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace tanaka
