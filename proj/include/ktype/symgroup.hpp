#ifndef KTYPE_SYMGROUP_HPP
#define KTYPE_SYMGROUP_HPP

#include <string>
#include <variant>
#include <vector>

namespace ktype {

// Element of S_n in one-line notation: images[i] = w(i+1), values 1..n.
//
// Composition convention, fixed once for the whole artifact: (a*b) applies
// b first, then a, i.e. (a*b)(i) = a(b(i)).  Permutations act on positions.
class Permutation {
  public:
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> images);
    static Permutation simple(int n, int i);  // s_i swaps i and i+1, 1 <= i < n

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    // lexicographic on one-line notation; the canonical enumeration order
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

    std::string str() const;

  private:
    std::vector<int> images_;
};

// Ordered list of positive block sizes summing to n; defines the parabolic
// (Young) subgroup S_{e_1} x ... x S_{e_k}.
class Composition {
  public:
    explicit Composition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    // true iff s_i lies inside a block (i and i+1 in the same block)
    bool simple_in_parabolic(int i) const;

  private:
    std::vector<int> parts_;
    int total_ = 0;
    std::vector<int> block_of_;  // block index of each position 1..n
};

// Coxeter length = inversion count.
int length(const Permutation& w);

// Reduced word for w as a list of simple-reflection indices (1-based);
// product left-to-right equals w.  Deterministic rule: repeatedly undo the
// first descent (bubble-sort word).
std::vector<int> reduced_word(const Permutation& w);

// All w in S_n, lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// Minimal-length representatives of the left cosets w*W_c, i.e. the
// permutations increasing within every block of c; lexicographic order.
std::vector<Permutation> min_coset_reps(int n, const Composition& c);

bool is_min_coset_rep(const Permutation& w, const Composition& c);

// Factors w = x * u with x the minimal representative of w*W_c and u in
// W_c; lengths add.
std::pair<Permutation, Permutation> parabolic_factor(const Permutation& w, const Composition& c);

// Trichotomy for s_i * x with x a minimal coset representative: either a
// longer minimal representative, a shorter one, or x * t with t a simple
// reflection inside the parabolic (t reported by its index).
struct LongerRep { Permutation rep; };
struct ShorterRep { Permutation rep; };
struct StaysInParabolic { int t; };
using DeodharStep = std::variant<LongerRep, ShorterRep, StaysInParabolic>;

DeodharStep deodhar_step(int s, const Permutation& x, const Composition& c);

}  // namespace ktype

#endif
