#ifndef KTYPE_COMBIN_HPP
#define KTYPE_COMBIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ktype/scalar.hpp"

namespace ktype {

// Integer partition: weakly decreasing positive parts.  The empty partition
// has size 0.  Doubles as the label of a K-type constituent.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // zero-padded access

    Partition conjugate() const;

    // Serialized as "[3,1]"; the empty partition is "[]".
    std::string str() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

using KTypeLabel = Partition;

// Partial order with (n) smallest and (1,...,1) biggest: a <= b iff the
// partial sums of a dominate the partial sums of b at every index.  This is
// the reverse of the usual dominance order.  Comparing partitions of
// different sizes is a usage error.
bool dominance_leq(const Partition& a, const Partition& b);

// Smallest label (n): the Steinberg / sign-type K-shadow.
KTypeLabel min_label(int n);
// Biggest label (1^n): the trivial-type K-shadow.
KTypeLabel max_label(int n);

// Number of standard Young tableaux of the given shape, by the hook-length
// formula.  For sizes <= 8 the result is cross-checked against a direct
// backtracking enumeration; a mismatch is an internal error.
long count_syt(const Partition& p);

// Backtracking enumeration of standard Young tableaux (independent of the
// hook-length route; exposed for oracle use in tests).
long count_syt_by_enumeration(const Partition& p);

// All partitions of n, descending lexicographic, each exactly once.
std::vector<Partition> enumerate_partitions(int n);

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu, counted by backtracking.  Small sizes only; used as an
// independent oracle for induced-module multiplicities.
long kostka_number(const Partition& lambda, const std::vector<int>& mu);

}  // namespace ktype

#endif
