#include "yh/sqrtext.hpp"

namespace yh {

RatFun SqrtExt::joint_radicand(const SqrtExt& o) const {
    if (odd_.is_zero()) return o.radicand();
    if (o.odd().is_zero()) return radicand_;
    if (!ratfun_eq(radicand_, o.radicand())) throw DomainError("mismatched radicands");
    return radicand_;
}

SqrtExt SqrtExt::operator+(const SqrtExt& o) const {
    RatFun rad = joint_radicand(o);
    return SqrtExt(even_ + o.even_, odd_ + o.odd_, rad);
}

SqrtExt SqrtExt::operator*(const SqrtExt& o) const {
    RatFun rad = joint_radicand(o);
    return SqrtExt(even_ * o.even_ + odd_ * o.odd_ * rad, even_ * o.odd_ + odd_ * o.even_, rad);
}

SqrtExt SqrtExt::inverse() const {
    // (a + b r)^-1 = (a - b r) / (a^2 - lambda b^2)
    RatFun norm = even_ * even_ - radicand_ * odd_ * odd_;
    if (norm.is_zero()) throw DomainError("non-invertible square-root extension value");
    RatFun ninv = norm.inverse();
    return SqrtExt(even_ * ninv, -(odd_ * ninv), radicand_);
}

SqrtExt SqrtExt::pow(int m) const {
    if (m < 0) return inverse().pow(-m);
    SqrtExt out = SqrtExt::scalar(RatFun(1), radicand_);
    for (int i = 0; i < m; ++i) out = out * *this;
    return out;
}

bool SqrtExt::operator==(const SqrtExt& o) const {
    if (!ratfun_eq(even_, o.even_)) return false;
    if (odd_.is_zero() && o.odd_.is_zero()) return true;
    return ratfun_eq(odd_, o.odd_) && ratfun_eq(radicand_, o.radicand_);
}

}  // namespace yh
