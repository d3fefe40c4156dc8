#ifndef KTYPE_PIPELINE_HPP
#define KTYPE_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "ktype/combin.hpp"
#include "ktype/scalar.hpp"
#include "ktype/segments.hpp"

namespace ktype {

// K-type multiplicity table of the Langlands quotient attached to a
// multisegment: multiplicity of every Specht-type constituent in the
// restriction of the quotient to the finite Hecke algebra.
struct MultiplicityTable {
    int n = 0;
    Rational q;
    Multisegment multisegment;  // canonical (Langlands-sorted) form
    std::map<Partition, long> entries;
    int quotient_dim = 0;

    long at(const Partition& p) const;
};

// Theorem check for one multisegment: the sign-type multiplicity must be 1
// exactly on generic (pairwise unlinked) multisegments and 0 otherwise.
struct Certificate {
    Multisegment multisegment;  // canonical form
    bool generic = false;
    long sign_multiplicity = 0;
    bool pass = false;
    double seconds = 0.0;  // wall time; never serialized (outputs stay deterministic)
};

// Langlands-sort, build the standard module, take its head, restrict to the
// T generators, decompose against every Specht module of n.
MultiplicityTable ktype_table(const Multisegment& m, const Rational& q);

Certificate certify(const Multisegment& m, const Rational& q);

struct SweepResult {
    int n = 0;
    Rational q;
    int window_lo = 0, window_hi = 0;
    std::vector<Certificate> certificates;  // canonical enumeration order
    int generic_count = 0;
    int failures = 0;
    bool all_pass() const { return failures == 0; }
};

// Certifies every multisegment of total size n with endpoints in the
// window.  n above max_n is a usage error (default cap 4; 5 sits behind an
// explicit opt-in).  jobs > 1 distributes multisegments over a thread pool;
// results are merged in enumeration order, so output does not depend on
// scheduling.
SweepResult sweep(int n, int window_lo, int window_hi, const Rational& q, int jobs = 1,
                  int max_n = 4);

// Cross-check of the product structure over distinct cuspidal lines: the
// sign-type multiplicity of a multi-line multisegment equals the product of
// the per-line sign-type multiplicities.  Supported for n <= 4.
struct LineProductCheck {
    long full_multiplicity = 0;
    std::vector<std::pair<int, long>> per_line;  // (line id, sign multiplicity)
    bool consistent = false;
};
LineProductCheck line_product_check(const Multisegment& m, const Rational& q);

enum class EmitFormat { Text, Json, Csv };
EmitFormat parse_format(const std::string& name);

std::string render_table(const MultiplicityTable& table, EmitFormat format);
std::string render_certificate(const Certificate& cert, int n, const Rational& q, EmitFormat format);
std::string render_sweep(const SweepResult& result, EmitFormat format);

// destination "-" means stdout; anything else is a file path.  Unwritable
// destinations raise std::runtime_error (CLI maps it to a nonzero exit).
void write_output(const std::string& content, const std::string& destination);

// Relation/property battery; prints one line per suite to out.  Returns
// true iff everything passed.
bool selftest(const Rational& q, std::ostream& out);

}  // namespace ktype

#endif
