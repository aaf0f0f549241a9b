#include "petalkit/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace petalkit::braid {

Perm::Perm(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
    int n = static_cast<int>(img_.size());
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    std::vector<bool> seen(n + 1, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("image list is not a permutation");
        seen[v] = true;
    }
}

Perm Perm::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::reversal(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p.img_[i] = n - i;
    return p;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("permutation size mismatch");
    Perm r(a.n());
    for (int i = 1; i <= a.n(); ++i) r.img_[i - 1] = a(b(i));
    return r;
}

Perm Perm::inverse() const {
    Perm r(n());
    for (int i = 1; i <= n(); ++i) r.img_[img_[i - 1] - 1] = i;
    return r;
}

std::vector<int> Perm::descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (img_[i - 1] > img_[i]) d.push_back(i);
    return d;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

bool Perm::is_reversal() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != n() + 1 - i) return false;
    return true;
}

bool Perm::is_single_cycle() const {
    int len = 0, at = 1;
    do {
        at = img_[at - 1];
        ++len;
    } while (at != 1 && len <= n());
    return len == n();
}

int Perm::inversions() const {
    int count = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

}  // namespace petalkit::braid
