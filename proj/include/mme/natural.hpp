#ifndef MME_NATURAL_HPP
#define MME_NATURAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "mme/errors.hpp"

namespace mme {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Arbitrary-precision nonnegative integer. Thin wrapper over GMP that
/// enforces the nonnegativity invariant: subtraction below zero throws
/// instead of going negative. Values are always canonical, equality is value
/// equality.
class Natural {
  public:
    Natural() : v_(0) {}
    Natural(u64 x) { set_u64(x); }
    explicit Natural(const mpz_class& z) : v_(z) {
        if (sgn(v_) < 0) throw UsageError("Natural: negative value");
    }
    explicit Natural(const std::string& decimal) {
        if (decimal.empty()) throw UsageError("Natural: empty decimal string");
        for (char c : decimal)
            if (c < '0' || c > '9') throw UsageError("Natural: bad decimal string '" + decimal + "'");
        v_ = mpz_class(decimal, 10);
    }

    const mpz_class& mpz() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    bool fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
    u64 to_u64() const {
        if (!fits_u64()) throw UnsupportedError("Natural: value exceeds 64 bits");
        u64 lo = mpz_getlimbn(v_.get_mpz_t(), 0);
        return lo;
    }

    /// Number of bits in the binary representation; bit_length(0) == 0.
    u64 bit_length() const {
        if (is_zero()) return 0;
        return mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    std::string to_string() const { return v_.get_str(10); }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Natural& a, const Natural& b) { return a.v_ != b.v_; }
    friend bool operator<(const Natural& a, const Natural& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Natural& a, const Natural& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Natural& a, const Natural& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Natural& a, const Natural& b) { return a.v_ >= b.v_; }

    friend Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ + b.v_)); }
    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ * b.v_)); }
    friend Natural operator-(const Natural& a, const Natural& b) {
        if (a.v_ < b.v_) throw UsageError("Natural: subtraction underflow");
        return Natural(mpz_class(a.v_ - b.v_));
    }
    friend Natural operator%(const Natural& a, const Natural& b) {
        if (b.is_zero()) throw UsageError("Natural: modulo by zero");
        return Natural(mpz_class(a.v_ % b.v_));
    }
    friend Natural operator/(const Natural& a, const Natural& b) {
        if (b.is_zero()) throw UsageError("Natural: division by zero");
        return Natural(mpz_class(a.v_ / b.v_));
    }

    Natural& operator+=(const Natural& b) { v_ += b.v_; return *this; }
    Natural& operator*=(const Natural& b) { v_ *= b.v_; return *this; }

    /// Quotient and remainder in one pass.
    friend std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b) {
        if (b.is_zero()) throw UsageError("Natural: division by zero");
        Natural q, r;
        mpz_fdiv_qr(q.v_.get_mpz_t(), r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return {std::move(q), std::move(r)};
    }

    friend Natural gcd(const Natural& a, const Natural& b) {
        Natural g;
        mpz_gcd(g.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return g;
    }

    /// a^e over the integers (e word-sized; the results we need stay bounded
    /// by the caller's modulus sizes).
    friend Natural pow(const Natural& a, u64 e) {
        Natural r;
        mpz_pow_ui(r.v_.get_mpz_t(), a.mpz().get_mpz_t(), e);
        return r;
    }

  private:
    void set_u64(u64 x) { mpz_import(v_.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &x); }
    mpz_class v_;
};

/// Modular inverse; throws NonUnitError when gcd(a, n) != 1.
inline Natural mod_inverse_natural(const Natural& a, const Natural& n) {
    Natural r;
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), a.mpz().get_mpz_t(), n.mpz().get_mpz_t()) == 0)
        throw NonUnitError("mod_inverse: " + a.to_string() + " is not a unit mod " + n.to_string());
    return Natural(out);
}

/// ceil(log2(x)) for x >= 1; ceil_log2(1) == 0.
inline u64 ceil_log2(const Natural& x) {
    if (x.is_zero()) throw UsageError("ceil_log2: x must be >= 1");
    if (x.is_one()) return 0;
    return (x - Natural(1)).bit_length();
}

}  // namespace mme

#endif
