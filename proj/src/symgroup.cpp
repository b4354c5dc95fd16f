#include "yh/symgroup.hpp"

#include <algorithm>
#include <numeric>

namespace yh {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    if (n < 1) throw DomainError("permutation needs n >= 1");
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_image(std::vector<int> image) {
    Permutation p(static_cast<int>(image.size()));
    std::vector<bool> seen(image.size(), false);
    for (int x : image) {
        if (x < 1 || x > static_cast<int>(image.size()) || seen[static_cast<std::size_t>(x - 1)])
            throw DomainError("not a permutation image");
        seen[static_cast<std::size_t>(x - 1)] = true;
    }
    p.img_ = std::move(image);
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    Permutation p(n);
    if (i < 1 || i >= n) throw DomainError("transposition index out of range");
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& letters) {
    Permutation p(n);
    for (int i : letters) p = p.right_mul_s(i);
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw DomainError("permutation size mismatch");
    Permutation out(size());
    for (int x = 1; x <= size(); ++x)
        out.img_[static_cast<std::size_t>(x - 1)] = (*this)(o(x));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(size());
    for (int x = 1; x <= size(); ++x) out.img_[static_cast<std::size_t>((*this)(x)-1)] = x;
    return out;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Permutation Permutation::right_mul_s(int i) const {
    if (i < 1 || i >= size()) throw DomainError("generator index out of range");
    Permutation out = *this;
    std::swap(out.img_[static_cast<std::size_t>(i - 1)], out.img_[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> letters;
    Permutation cur = *this;
    for (;;) {
        int descent = 0;
        for (int i = 1; i < cur.size(); ++i) {
            if (cur(i) > cur(i + 1)) {
                descent = i;
                break;
            }
        }
        if (descent == 0) break;
        cur = cur.right_mul_s(descent);
        letters.push_back(descent);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

Permutation Permutation::embedded(int m) const {
    if (m < size()) throw DomainError("cannot embed into fewer points");
    Permutation out(m);
    for (int x = 1; x <= size(); ++x) out.img_[static_cast<std::size_t>(x - 1)] = (*this)(x);
    return out;
}

Permutation Permutation::restricted() const {
    if (size() < 2 || !fixes(size())) throw DomainError("top point not fixed");
    Permutation out(size() - 1);
    for (int x = 1; x < size(); ++x) out.img_[static_cast<std::size_t>(x - 1)] = (*this)(x);
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition must be decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int length(const Permutation& w) { return w.length(); }

std::vector<int> reduced_word(const Permutation& w) { return w.reduced_word(); }

Partition cycle_type(const Permutation& w) {
    std::vector<bool> seen(static_cast<std::size_t>(w.size()), false);
    std::vector<int> lengths;
    for (int x = 1; x <= w.size(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)]) continue;
        int len = 0, y = x;
        do {
            seen[static_cast<std::size_t>(y - 1)] = true;
            y = w(y);
            ++len;
        } while (y != x);
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

Permutation w_mu(const Partition& mu) {
    int n = mu.sum();
    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    int acc = 0;
    for (int part : mu.parts) {
        acc += part;
        removed[static_cast<std::size_t>(acc)] = true;
    }
    std::vector<int> letters;  // descending
    for (int i = n; i >= 1; --i)
        if (!removed[static_cast<std::size_t>(i)]) letters.push_back(i);
    return Permutation::from_word(n, letters);
}

std::vector<Permutation> enumerate_D(int n) {
    std::vector<Permutation> out;
    int k = n - 1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> letters;
        for (int i = k; i >= 1; --i)
            if (mask & (1u << (i - 1))) letters.push_back(i);
        out.push_back(Permutation::from_word(n, letters));
    }
    return out;
}

TopDecomposition top_decompose(const Permutation& w) {
    int m = w.size();
    if (w.fixes(m)) return {w, 0};
    int i = w.inverse()(m);
    // tail c = s_{m-1}...s_i maps i -> m and shifts (i, m] down by one.
    std::vector<int> tail_letters;
    for (int j = m - 1; j >= i; --j) tail_letters.push_back(j);
    Permutation c = Permutation::from_word(m, tail_letters);
    return {w * c.inverse(), i};
}

}  // namespace yh
