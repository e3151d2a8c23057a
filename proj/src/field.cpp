#include "monrep/field.hpp"

#include <numeric>

namespace monrep {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kMaxI64 = INT64_MAX;

i64 checked_narrow(i128 v, const char* op) {
    if (v > i128(kMaxI64) || v < -i128(kMaxI64)) {
        throw ArithmeticOverflow(std::string("rational arithmetic overflow in ") + op +
                                 "; re-run over a prime field (e.g. field 101)");
    }
    return static_cast<i64>(v);
}

i64 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return checked_narrow(a, "gcd");
}

// Normalize a fraction held as 128-bit intermediates down to a Scalar.
Scalar make_rat(i128 num, i128 den, const char* op) {
    if (den == 0) throw ArithmeticOverflow("rational division by zero");
    if (num == 0) return {0, 1};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = gcd128(num, den);
    num /= g;
    den /= g;
    return {checked_narrow(num, op), checked_narrow(den, op)};
}

bool is_prime_i64(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(std::int64_t p) {
    if (!is_prime_i64(p))
        throw ValidationError("field characteristic must be prime, got " + std::to_string(p));
    if (p > (i64(1) << 30))
        throw ValidationError("prime field characteristic too large: " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rational, 0); }

std::int64_t Field::mod_reduce(std::int64_t n) const {
    i64 r = n % p_;
    return r < 0 ? r + p_ : r;
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::prime) return {mod_reduce(n), 1};
    return {n, 1};
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw ValidationError("fraction with zero denominator");
    if (kind_ == FieldKind::prime) return div(from_int(num), from_int(den));
    return make_rat(num, den, "from_fraction");
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return {mod_reduce(a.num + b.num), 1};
    return make_rat(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den, "add");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return {mod_reduce(a.num - b.num), 1};
    return make_rat(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den, "sub");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return {mod_reduce(i64((i128(a.num) * b.num) % p_)), 1};
    return make_rat(i128(a.num) * b.num, i128(a.den) * b.den, "mul");
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return {mod_reduce(-a.num), 1};
    return {-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
    if (a.num == 0) throw ValidationError("inverse of zero");
    if (kind_ == FieldKind::rational) {
        return a.num > 0 ? Scalar{a.den, a.num} : Scalar{-a.den, -a.num};
    }
    // Extended Euclid in F_p.
    i64 t = 0, new_t = 1, r = p_, new_r = a.num;
    while (new_r != 0) {
        i64 q = r / new_r;
        i64 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return {mod_reduce(t), 1};
}

std::string Field::to_string(const Scalar& a) const {
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

} // namespace monrep
