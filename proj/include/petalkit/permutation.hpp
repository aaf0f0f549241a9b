#pragma once

#include <vector>

namespace petalkit::braid {

// Permutation of {1,...,n}, stored as the image list: image(i) = img_[i-1].
// Composition is function composition: (a * b)(x) = a(b(x)).
class Perm {
public:
    explicit Perm(int n);                    // identity
    explicit Perm(std::vector<int> img);     // validates bijectivity
    static Perm transposition(int n, int i); // s_i = (i, i+1)
    static Perm reversal(int n);             // i -> n+1-i  (the half-twist)

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& image() const { return img_; }

    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;

    // Positions i in 1..n-1 with image(i) > image(i+1).
    std::vector<int> descents() const;

    bool is_identity() const;
    bool is_reversal() const;
    bool is_single_cycle() const;
    int inversions() const;

    bool operator==(const Perm&) const = default;

private:
    std::vector<int> img_;
};

}  // namespace petalkit::braid
