#pragma once

#include <vector>

#include "yh/rational.hpp"

namespace yh {

// Permutation of {1..n} in one-line notation. Composition applies the right
// factor first: (w * v)(x) = w(v(x)), so right-multiplying by s_i swaps the
// image entries at positions i, i+1. All downstream length bookkeeping (Hecke
// multiplication, trace recursions) relies on this convention; the length
// additivity tests pin it.
class Permutation {
  public:
    explicit Permutation(int n);
    static Permutation from_image(std::vector<int> image);
    static Permutation transposition(int n, int i);  // s_i
    static Permutation from_word(int n, const std::vector<int>& letters);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& image() const { return img_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;

    bool is_identity() const;
    bool fixes(int x) const { return (*this)(x) == x; }

    int length() const;  // inversion count
    bool right_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }
    Permutation right_mul_s(int i) const;

    // Deterministic reduced expression: smallest descent first. The product
    // of the returned letters, left to right, re-creates the permutation.
    std::vector<int> reduced_word() const;

    // Pad with fixed points up to m points.
    Permutation embedded(int m) const;
    // Drop the top point, which must be fixed.
    Permutation restricted() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;
};

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    explicit Partition(std::vector<int> p);
    int sum() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

int length(const Permutation& w);
std::vector<int> reduced_word(const Permutation& w);
Partition cycle_type(const Permutation& w);

// Minimal-length class representative of cycle type mu: the descending product
// over {1..n} minus the partial sums of mu.
Permutation w_mu(const Partition& mu);

// The 2^{n-1} descending-index products s_{i_k}...s_{i_1}, i_1 < ... < i_k.
std::vector<Permutation> enumerate_D(int n);

// w on m points as v * (s_{m-1}...s_i) with v fixing m; tail == 0 when w
// already fixes m. length(w) = length(v) + (m - tail) when tail > 0.
struct TopDecomposition {
    Permutation v;
    int tail;
};
TopDecomposition top_decompose(const Permutation& w);

}  // namespace yh
