#pragma once

// Set families over small ground sets [n] (n <= 30), stored as machine-word
// bitmasks, plus the combinatorial predicates used throughout the toolkit.
// Element labels are 1-based in all I/O; bit i of a mask encodes element i+1.

#include <cstdint>
#include <string>
#include <vector>

namespace combip {

inline constexpr int kMaxGround = 30;

using SetBits = std::uint32_t;

// A single subset of [n].
struct SetCode {
    SetBits bits = 0;
    int ground = 0;

    SetCode() = default;
    SetCode(SetBits b, int n);  // throws std::invalid_argument on bad input

    int size() const;
    bool contains(int element) const;       // 1-based
    std::vector<int> elements() const;      // 1-based, ascending
    std::string to_string() const;          // "{1,3,5}"
};

SetCode set_of(std::initializer_list<int> elements, int ground);
SetBits bits_of(std::initializer_list<int> elements);

// An ordered, duplicate-free family of subsets of one ground set.
// Members are kept strictly increasing as bitmask values.
class Family {
public:
    Family() = default;
    explicit Family(int ground);
    // Sorts and validates; throws std::invalid_argument on duplicates or
    // members out of range.
    Family(int ground, std::vector<SetBits> members);

    int ground() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SetBits>& members() const { return members_; }
    SetBits operator[](std::size_t i) const { return members_[i]; }
    bool contains(SetBits bits) const;

    // Keeps the strictly-increasing order; duplicate insert throws.
    void insert(SetBits bits);

    bool operator==(const Family&) const = default;

private:
    int ground_ = 0;
    std::vector<SetBits> members_;
};

// A 0-1 pattern forbidden as a configuration (row/column-permuted submatrix
// of a family's incidence matrix). Rows index ground elements, columns sets.
struct PatternMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;  // row-major, values 0/1

    PatternMatrix() = default;
    PatternMatrix(int k, int l, std::vector<std::uint8_t> e);
    std::uint8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// The 3x4 matrix of the Anstee forbidden-trace problem:
//   1 1 1 1
//   1 1 1 1
//   1 0 0 0
PatternMatrix anstee_pattern();

// The 3x8 matrix whose presence as a configuration witnesses VC dimension >= 3
// (all eight 0-1 columns of height three).
PatternMatrix vc3_pattern();

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// All subsets of [n] whose cardinality lies in `sizes`, ascending by bitmask.
Family enum_subsets(int n, const std::vector<int>& sizes);

// True iff no strict containment between two members.
bool is_antichain(const Family& f);

// Length of the longest chain A1 c A2 c ... c Ak among members (0 if empty).
int longest_chain(const Family& f);

// Maximum symmetric-difference size over member pairs; throws on empty input.
int diameter(const Family& f);

// Every pair of members shares an element. A family containing the empty set
// and anything else is not intersecting; {{}} alone is vacuously intersecting.
bool is_intersecting(const Family& f);

struct DiversityResult {
    long long diversity = 0;
    int argmax_element = 0;  // smallest element of maximum degree, 1-based
};

// |f| minus the maximum element degree; ties broken by smallest element.
// Throws on empty input.
DiversityResult diversity(const Family& f);

// Every s-subset of [n] lies in the same number of members.
bool is_s_subset_regular(const Family& f, int s);

// No three distinct members with A u B = C.
bool is_union_free(const Family& f);

// Size of the largest pairwise-disjoint subfamily. Branch-and-prune ordered
// by set size with remaining-capacity pruning.
int max_pairwise_disjoint(const Family& f);

// Some p.cols members and p.rows ground elements realize p up to independent
// row/column permutation.
bool has_configuration(const Family& f, const PatternMatrix& p);

// Exhaustive reference for has_configuration; exposed for cross-checks.
bool has_configuration_naive(const Family& f, const PatternMatrix& p);

// ---------------------------------------------------------------------------
// Helpers shared across modules
// ---------------------------------------------------------------------------

long long binomial(int n, int r);       // 0 for r < 0 or r > n (n >= 0); 1 for r == 0
int popcount32(SetBits v);

// Visits all r-subsets of [n] in increasing bitmask order (Gosper's hack).
template <typename Fn>
void for_each_subset_of_size(int n, int r, Fn&& fn) {
    if (r < 0 || r > n) return;
    if (r == 0) {
        fn(SetBits{0});
        return;
    }
    SetBits v = (SetBits{1} << r) - 1;
    const SetBits limit = SetBits{1} << n;
    while (v < limit) {
        fn(v);
        SetBits t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
    }
}

std::vector<int> element_list(SetBits bits);  // 1-based elements of a mask

}  // namespace combip
