#include "ktype/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ktype/errors.hpp"

namespace ktype {

Permutation::Permutation(int n) : images_(n) {
    if (n < 1) throw usage_error("Permutation: degree must be positive");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw usage_error("Permutation: images are not a bijection of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw usage_error("Permutation::simple: index out of range");
    Permutation w(n);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw usage_error("Permutation: degree mismatch in *");
    std::vector<int> img(a.degree());
    for (int i = 1; i <= a.degree(); ++i) img[i - 1] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < degree(); ++i) os << (i ? " " : "") << images_[i];
    os << ")";
    return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw usage_error("Composition: empty");
    for (int p : parts_) {
        if (p < 1) throw usage_error("Composition: parts must be positive");
        total_ += p;
    }
    block_of_.resize(total_);
    int pos = 0;
    for (size_t b = 0; b < parts_.size(); ++b)
        for (int k = 0; k < parts_[b]; ++k) block_of_[pos++] = static_cast<int>(b);
}

bool Composition::simple_in_parabolic(int i) const {
    if (i < 1 || i >= total_) throw usage_error("Composition: simple index out of range");
    return block_of_[i - 1] == block_of_[i];
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& img = w.images();
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    std::vector<int> img = w.images();
    const int n = static_cast<int>(img.size());
    // undo the first descent until sorted; w = s_{word[0]} ... s_{word[k-1]}
    while (true) {
        int i = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (img[k] > img[k + 1]) {
                i = k;
                break;
            }
        if (i < 0) break;
        std::swap(img[i], img[i + 1]);  // right-multiply by s_{i+1}
        word.push_back(i + 1);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

bool is_min_coset_rep(const Permutation& w, const Composition& c) {
    if (w.degree() != c.total()) throw usage_error("is_min_coset_rep: degree mismatch");
    int pos = 1;
    for (int part : c.parts()) {
        for (int k = 1; k < part; ++k)
            if (w.apply(pos + k - 1) > w.apply(pos + k)) return false;
        pos += part;
    }
    return true;
}

std::vector<Permutation> min_coset_reps(int n, const Composition& c) {
    if (c.total() != n) throw usage_error("min_coset_reps: composition does not sum to n");
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(n))
        if (is_min_coset_rep(w, c)) out.push_back(w);
    return out;
}

std::pair<Permutation, Permutation> parabolic_factor(const Permutation& w, const Composition& c) {
    if (w.degree() != c.total()) throw usage_error("parabolic_factor: degree mismatch");
    // x = w sorted increasingly within each block of positions; u = x^{-1} w
    std::vector<int> img = w.images();
    int pos = 0;
    for (int part : c.parts()) {
        std::sort(img.begin() + pos, img.begin() + pos + part);
        pos += part;
    }
    Permutation x{std::move(img)};
    Permutation u = x.inverse() * w;
    return {std::move(x), std::move(u)};
}

DeodharStep deodhar_step(int s, const Permutation& x, const Composition& c) {
    if (!is_min_coset_rep(x, c)) throw usage_error("deodhar_step: x is not a minimal coset representative");
    const int n = x.degree();
    if (s < 1 || s >= n) throw usage_error("deodhar_step: simple index out of range");
    // positions of the values s and s+1
    const Permutation xinv = x.inverse();
    const int p = xinv.apply(s);
    const int pp = xinv.apply(s + 1);
    Permutation y = Permutation::simple(n, s) * x;
    if (!is_min_coset_rep(y, c)) {
        // values s, s+1 sit in adjacent positions of one block; s*x = x*t
        return StaysInParabolic{std::min(p, pp)};
    }
    if (p < pp) return LongerRep{std::move(y)};
    return ShorterRep{std::move(y)};
}

}  // namespace ktype
