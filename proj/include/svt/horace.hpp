#pragma once

// Residue and trace operators on vertically graded components, the
// fixed-component test, and the numeric verifications of the degeneration,
// residue and collinear-point lemmas. Residue/trace are symbolic rewrite
// rules on components; every rule is pinned against the ideal calculus in
// the tests.

#include <optional>

#include "svt/idealcalc.hpp"

namespace svt {

struct NotVerticallyGraded : std::runtime_error {
    explicit NotVerticallyGraded(const std::string& what) : std::runtime_error(what) {}
};

struct LineRef {
    PlanePoint p1, p2;
    std::array<Fp, 3> dual;  // the linear form vanishing on the line

    static LineRef through(const PlanePoint& a, const PlanePoint& b);
    bool contains(const PlanePoint& p) const;
    PolyVec form() const { return plane_linear(dual); }
    // a spanning point of the line distinct from p
    PlanePoint other_point(const PlanePoint& p) const;
    // a random point of the line, distinct from the listed ones
    PlanePoint random_point(Rng& rng, const std::vector<PlanePoint>& avoid = {}) const;
};

struct TraceEntry {
    PlanePoint support;
    int length;
};

struct TraceScheme {
    LineRef line;
    std::vector<TraceEntry> entries;

    int total_length() const;
};

// j-th residue / trace with respect to L; j is per-component with default 1.
// Components off the line pass through the residue untouched (and need
// j == 1); unsupported component/line configurations raise
// NotVerticallyGraded.
SchemeSpec residue_scheme(const SchemeSpec& x, const LineRef& line, const std::vector<int>& j = {});
TraceScheme trace_scheme(const SchemeSpec& x, const LineRef& line, const std::vector<int>& j = {});

// rank of the trace conditions on degree-d forms of the line
int trace_rank(const TraceScheme& t, int d);

// true iff every degree-d curve through x is divisible by the line's form
bool is_fixed_component(const SchemeSpec& x, const LineRef& line, int d);

struct HoraceStepResult {
    bool trace_ok = false;
    bool residue_ok = false;
    bool conclusion = false;
    bool empty_case = false;  // both systems empty: certifies emptiness at degree d
    int trace_rank = 0, trace_length = 0;
    int residue_rank = 0, residue_length = 0;
};

// One differential Horace step: trace conditions of Tr^1(x) + Tr^j(ytilde)
// on the line at degree d, residue conditions of Res^1(x) + Res^j(ytilde)
// at degree d-1.
HoraceStepResult horace_step_check(const SchemeSpec& x, const SchemeSpec& ytilde,
                                   const LineRef& line, const std::vector<int>& j, int d);

// the two-jet family degenerating onto a (2,2)-jet, checked piecewise
bool verify_degeneration(int samples, int dmax, std::uint64_t seed);

// both implications of the collinear-points lemma on a given instance
bool verify_collinear_lemma(const SchemeSpec& x, const LineRef& line, int s, int d,
                            int trials, std::uint64_t seed);

// All residue/trace identities of the worked (3,2)-point example, checked as
// degree-piece equalities for every degree <= dmax, via the rewrite rules,
// the colon-ideal calculus and the closed-form ideals.
bool verify_residue_example(int dmax);

// (l1^2,l2^2) : l1 == (l1,l2^2) and (l1^2,l2^2) : (a l1 + b l2) ==
// (l1^2, a l1 - b l2), piecewise, for `count` random configurations
bool verify_colon_identities(int count, int dmax, std::uint64_t seed);

// a few instances of the collinear-points lemma, including one where the
// emptiness implication fires
bool verify_collinear_suite(int trials, std::uint64_t seed);

// differential Horace steps on pinned configurations
bool verify_horace_step_suite(std::uint64_t seed);

}  // namespace svt
