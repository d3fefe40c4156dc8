#include "ktype/segments.hpp"

#include <algorithm>
#include <sstream>

#include "ktype/errors.hpp"

namespace ktype {

Segment::Segment(int start_, int length_, int line_) : line(line_), start(start_), length(length_) {
    if (length < 1) throw usage_error("Segment: length must be >= 1");
    if (line < 0) throw usage_error("Segment: line id must be >= 0");
}

std::string Segment::str() const {
    std::ostringstream os;
    os << "[" << start << "," << end() << "]";
    if (line != 0) os << "@" << line;
    return os.str();
}

int Multisegment::total() const {
    int t = 0;
    for (const auto& s : segments) t += s.length;
    return t;
}

std::string Multisegment::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < segments.size(); ++i) os << (i ? ";" : "") << segments[i].str();
    return os.str();
}

bool linked(const Segment& d1, const Segment& d2) {
    if (d1.line != d2.line) return false;
    // union is an interval iff they touch or overlap
    if (d1.start > d2.end() + 1 || d2.start > d1.end() + 1) return false;
    // neither contains the other
    const bool d1_contains = d1.start <= d2.start && d2.end() <= d1.end();
    const bool d2_contains = d2.start <= d1.start && d1.end() <= d2.end();
    return !d1_contains && !d2_contains;
}

bool precedes(const Segment& d1, const Segment& d2) {
    return linked(d1, d2) && d1.start < d2.start;
}

bool is_langlands_ordered(const Multisegment& m) {
    for (size_t i = 0; i < m.segments.size(); ++i)
        for (size_t j = i + 1; j < m.segments.size(); ++j)
            if (precedes(m.segments[i], m.segments[j])) return false;
    return true;
}

Multisegment langlands_sort(const Multisegment& m) {
    std::vector<Segment> segs = m.segments;
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.start != b.start) return a.start > b.start;
        if (a.length != b.length) return a.length > b.length;
        return a.line < b.line;
    });
    Multisegment out(std::move(segs));
    if (!is_langlands_ordered(out))
        throw internal_error("langlands_sort: sorted output violates non-precedence");
    return out;
}

bool is_generic(const Multisegment& m) {
    for (size_t i = 0; i < m.segments.size(); ++i)
        for (size_t j = i + 1; j < m.segments.size(); ++j)
            if (linked(m.segments[i], m.segments[j])) return false;
    return true;
}

std::vector<Multisegment> enumerate_multisegments(int n, int window_lo, int window_hi) {
    if (window_hi < window_lo) throw usage_error("enumerate_multisegments: empty window");
    if (n < 1) throw usage_error("enumerate_multisegments: n must be positive");
    // all candidate segments inside the window, in a fixed order
    std::vector<Segment> pool;
    for (int a = window_lo; a <= window_hi; ++a)
        for (int e = 1; e <= n && a + e - 1 <= window_hi; ++e) pool.emplace_back(a, e);
    std::vector<Multisegment> out;
    std::vector<Segment> cur;
    // multisets: nondecreasing pool indices
    auto rec = [&](auto&& self, size_t from, int rest) -> void {
        if (rest == 0) {
            out.push_back(langlands_sort(Multisegment(cur)));
            return;
        }
        for (size_t k = from; k < pool.size(); ++k) {
            if (pool[k].length > rest) continue;
            cur.push_back(pool[k]);
            self(self, k, rest - pool[k].length);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

Segment parse_segment(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    int line = 0;
    auto at = s.find('@');
    if (at != std::string::npos) {
        try {
            line = std::stoi(s.substr(at + 1));
        } catch (const std::exception&) {
            throw usage_error("parse_segment: bad line id in '" + text + "'");
        }
        s = s.substr(0, at);
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw usage_error("parse_segment: expected \"[a,b]\", got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string::npos) throw usage_error("parse_segment: expected \"[a,b]\", got '" + text + "'");
    int a, b;
    try {
        a = std::stoi(s.substr(0, comma));
        b = std::stoi(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw usage_error("parse_segment: bad endpoints in '" + text + "'");
    }
    if (b < a) throw usage_error("parse_segment: endpoints must satisfy a <= b in '" + text + "'");
    return Segment(a, b - a + 1, line);
}

Multisegment parse_multisegment(const std::string& text) {
    std::vector<Segment> segs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        segs.push_back(parse_segment(tok));
    }
    if (segs.empty()) throw usage_error("parse_multisegment: no segments in '" + text + "'");
    return Multisegment(std::move(segs));
}

}  // namespace ktype
