#pragma once

#include "yh/ratfun.hpp"

namespace yh {

// Formal quadratic extension RatFun[r]/(r^2 - lambda): value = even + odd*r.
// The radicand travels with the value; no branch of the square root is ever
// chosen. A value whose odd part is zero is radicand-agnostic for arithmetic.
class SqrtExt {
  public:
    SqrtExt() : even_(0), odd_(0), radicand_(0) {}
    SqrtExt(RatFun even, RatFun odd, RatFun radicand)
        : even_(std::move(even)), odd_(std::move(odd)), radicand_(std::move(radicand)) {}

    static SqrtExt scalar(RatFun v, RatFun radicand) {
        return SqrtExt(std::move(v), RatFun(0), std::move(radicand));
    }
    static SqrtExt root(RatFun radicand) { return SqrtExt(RatFun(0), RatFun(1), radicand); }

    const RatFun& even() const { return even_; }
    const RatFun& odd() const { return odd_; }
    const RatFun& radicand() const { return radicand_; }

    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

    SqrtExt operator-() const { return SqrtExt(-even_, -odd_, radicand_); }
    SqrtExt operator+(const SqrtExt& o) const;
    SqrtExt operator*(const SqrtExt& o) const;
    SqrtExt scaled(const RatFun& c) const { return SqrtExt(even_ * c, odd_ * c, radicand_); }
    SqrtExt inverse() const;
    SqrtExt pow(int m) const;

    // Equality within one extension: equal radicands, equal parts. Values with
    // both odd parts zero compare by even part alone.
    bool operator==(const SqrtExt& o) const;
    bool operator!=(const SqrtExt& o) const { return !(*this == o); }

  private:
    RatFun joint_radicand(const SqrtExt& o) const;

    RatFun even_, odd_, radicand_;
};

inline SqrtExt sqrtext_mul(const SqrtExt& a, const SqrtExt& b) { return a * b; }
inline SqrtExt sqrtext_pow(const SqrtExt& a, int m) { return a.pow(m); }

}  // namespace yh
