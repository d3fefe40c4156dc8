#ifndef KTYPE_SEGMENTS_HPP
#define KTYPE_SEGMENTS_HPP

#include <string>
#include <vector>

namespace ktype {

// Integer interval [start, start + length - 1] of unramified twists on one
// cuspidal line.  Line 0 is the default line (powers of q); other lines
// carry a non-q-power multiplier, so segments on distinct lines never link.
struct Segment {
    int line = 0;
    int start = 0;
    int length = 1;

    Segment() = default;
    Segment(int start_, int length_, int line_ = 0);
    int end() const { return start + length - 1; }  // inclusive

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.line == b.line && a.start == b.start && a.length == b.length;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
    std::string str() const;  // "[a,b]" with optional "@line"
};

// Ordered list of segments; total length is the rank n of the ambient
// algebra.
struct Multisegment {
    std::vector<Segment> segments;

    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segments(std::move(segs)) {}
    int total() const;
    int size() const { return static_cast<int>(segments.size()); }

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.segments == b.segments;
    }
    friend bool operator!=(const Multisegment& a, const Multisegment& b) { return !(a == b); }
    std::string str() const;  // semicolon-separated canonical text form
};

// Zelevinsky linking: same line, the union of the intervals is an interval,
// and neither contains the other.
bool linked(const Segment& d1, const Segment& d2);

// d1 precedes d2 iff they are linked and d1 starts earlier.
bool precedes(const Segment& d1, const Segment& d2);

// True iff for i < j, segment i never precedes segment j.
bool is_langlands_ordered(const Multisegment& m);

// Reorders so that no earlier segment precedes a later one.  Deterministic
// tie-break: descending start, then descending length, then line id.  The
// result is the canonical form of the multisegment.
Multisegment langlands_sort(const Multisegment& m);

// No two segments (in any order) are linked.
bool is_generic(const Multisegment& m);

// All multisets of segments on line 0 with total length n and both
// endpoints inside [window_lo, window_hi], each in canonical Langlands form,
// no duplicates.  Deterministic order.
std::vector<Multisegment> enumerate_multisegments(int n, int window_lo, int window_hi);

// Text syntax: "[a,b]" with a <= b, optional "@k" line suffix, semicolons
// between segments, e.g. "[0,1];[3,3];[0,0]@1".  Whitespace is ignored.
Segment parse_segment(const std::string& text);
Multisegment parse_multisegment(const std::string& text);

}  // namespace ktype

#endif
