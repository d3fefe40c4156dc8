#include "ktype/combin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ktype/errors.hpp"

namespace ktype {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw usage_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw usage_error("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw usage_error("Partition::parse: expected bracketed list, got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw usage_error("dominance_leq: partitions of different integers");
    const int len = std::max(a.length(), b.length());
    long sa = 0, sb = 0;
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

KTypeLabel min_label(int n) {
    if (n <= 0) throw usage_error("min_label: n must be positive");
    return Partition({n});
}

KTypeLabel max_label(int n) {
    if (n <= 0) throw usage_error("max_label: n must be positive");
    return Partition(std::vector<int>(n, 1));
}

long count_syt_by_enumeration(const Partition& p) {
    const int n = p.size();
    if (n == 0) return 1;
    std::vector<int> fill(p.length(), 0);  // boxes already placed in each row
    long count = 0;
    // place 1..n; entry k may go at the end of any row whose current length
    // is strictly less than the row above's current fill
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            ++count;
            return;
        }
        for (int r = 0; r < p.length(); ++r) {
            if (fill[r] >= p.parts()[r]) continue;
            if (r > 0 && fill[r] >= fill[r - 1]) continue;
            ++fill[r];
            self(self, k + 1);
            --fill[r];
        }
    };
    rec(rec, 1);
    return count;
}

long count_syt(const Partition& p) {
    const int n = p.size();
    if (n == 0) return 1;
    // hook-length formula: n! / prod(hooks)
    Partition conj = p.conjugate();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class den(1);
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.parts()[r]; ++c) {
            long hook = (p.parts()[r] - c) + (conj.parts()[c] - r) - 1;
            den *= hook;
        }
    mpz_class q = num / den;
    if (q * den != num) throw internal_error("count_syt: hook product does not divide n!");
    if (!q.fits_slong_p()) throw internal_error("count_syt: result out of long range");
    long result = q.get_si();
    if (n <= 8 && result != count_syt_by_enumeration(p))
        throw internal_error("count_syt: hook-length and enumeration disagree for " + p.str());
    return result;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw usage_error("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;  // descending lexicographic by construction
}

long kostka_number(const Partition& lambda, const std::vector<int>& mu) {
    long total = std::accumulate(mu.begin(), mu.end(), 0L);
    if (total != lambda.size())
        throw usage_error("kostka_number: content size does not match shape size");
    // fill boxes with values 1..len(mu), weakly increasing along rows,
    // strictly increasing down columns, value v used exactly mu[v-1] times
    const int rows = lambda.length();
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lambda.parts()[r], 0);
    std::vector<int> remaining(mu);
    long count = 0;
    // fill in row-major order
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lambda.parts()[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(mu.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            tab[r][c] = v;
            self(self, nr, nc);
            ++remaining[v - 1];
        }
        tab[r][c] = 0;
    };
    if (rows == 0)
        count = 1;
    else
        rec(rec, 0, 0);
    return count;
}

}  // namespace ktype
