#include "combip/setfam.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace combip {

int popcount32(SetBits v) { return std::popcount(v); }

long long binomial(int n, int r) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    if (n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
    }
    return result;
}

std::vector<int> element_list(SetBits bits) {
    std::vector<int> out;
    while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(b + 1);
        bits &= bits - 1;
    }
    return out;
}

SetCode::SetCode(SetBits b, int n) : bits(b), ground(n) {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("SetCode: ground size out of range [1,30]");
    if (n < kMaxGround && b >= (SetBits{1} << n))
        throw std::invalid_argument("SetCode: bits exceed ground set");
}

int SetCode::size() const { return popcount32(bits); }

bool SetCode::contains(int element) const {
    return element >= 1 && element <= ground && (bits >> (element - 1)) & 1u;
}

std::vector<int> SetCode::elements() const { return element_list(bits); }

std::string SetCode::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

SetBits bits_of(std::initializer_list<int> elements) {
    SetBits b = 0;
    for (int e : elements) b |= SetBits{1} << (e - 1);
    return b;
}

SetCode set_of(std::initializer_list<int> elements, int ground) {
    return SetCode(bits_of(elements), ground);
}

Family::Family(int ground) : ground_(ground) {
    if (ground < 1 || ground > kMaxGround)
        throw std::invalid_argument("Family: ground size out of range [1,30]");
}

Family::Family(int ground, std::vector<SetBits> members) : Family(ground) {
    std::sort(members.begin(), members.end());
    const SetBits limit = (ground == kMaxGround) ? ~SetBits{0} : ((SetBits{1} << ground) - 1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] > limit)
            throw std::invalid_argument("Family: member exceeds ground set");
        if (i > 0 && members[i] == members[i - 1])
            throw std::invalid_argument("Family: duplicate member");
    }
    members_ = std::move(members);
}

bool Family::contains(SetBits bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
}

void Family::insert(SetBits bits) {
    auto it = std::lower_bound(members_.begin(), members_.end(), bits);
    if (it != members_.end() && *it == bits)
        throw std::invalid_argument("Family::insert: duplicate member");
    members_.insert(it, bits);
}

PatternMatrix::PatternMatrix(int k, int l, std::vector<std::uint8_t> e)
    : rows(k), cols(l), entries(std::move(e)) {
    if (k < 1 || l < 1) throw std::invalid_argument("PatternMatrix: empty dimensions");
    if (entries.size() != static_cast<std::size_t>(k) * l)
        throw std::invalid_argument("PatternMatrix: entry count mismatch");
    for (auto v : entries)
        if (v > 1) throw std::invalid_argument("PatternMatrix: entries must be 0/1");
}

PatternMatrix anstee_pattern() {
    return PatternMatrix(3, 4, {1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0});
}

PatternMatrix vc3_pattern() {
    // Columns are all eight 0-1 vectors of height three.
    std::vector<std::uint8_t> e(24);
    for (int c = 0; c < 8; ++c)
        for (int r = 0; r < 3; ++r) e[static_cast<std::size_t>(r) * 8 + c] = (c >> r) & 1;
    return PatternMatrix(3, 8, e);
}

Family enum_subsets(int n, const std::vector<int>& sizes) {
    Family out(n);
    std::vector<SetBits> members;
    std::vector<int> wanted(sizes);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (int r : wanted) {
        if (r < 0 || r > n) throw std::invalid_argument("enum_subsets: size out of range");
        for_each_subset_of_size(n, r, [&](SetBits v) { members.push_back(v); });
    }
    return Family(n, std::move(members));
}

bool is_antichain(const Family& f) {
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const SetBits meet = m[i] & m[j];
            if (meet == m[i] || meet == m[j]) return false;
        }
    return true;
}

int longest_chain(const Family& f) {
    const auto& m = f.members();
    if (m.empty()) return 0;
    // Process members by increasing cardinality; chain DP over containments.
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int pa = popcount32(m[a]), pb = popcount32(m[b]);
        return pa != pb ? pa < pb : m[a] < m[b];
    });
    std::vector<int> best(m.size(), 1);
    int answer = 1;
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
        const SetBits big = m[order[ii]];
        for (std::size_t jj = 0; jj < ii; ++jj) {
            const SetBits small = m[order[jj]];
            if (small != big && (small & big) == small)
                best[ii] = std::max(best[ii], best[jj] + 1);
        }
        answer = std::max(answer, best[ii]);
    }
    return answer;
}

int diameter(const Family& f) {
    const auto& m = f.members();
    if (m.empty()) throw std::invalid_argument("diameter: empty family");
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            d = std::max(d, popcount32(m[i] ^ m[j]));
    return d;
}

bool is_intersecting(const Family& f) {
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if ((m[i] & m[j]) == 0) return false;
    return true;
}

DiversityResult diversity(const Family& f) {
    if (f.empty()) throw std::invalid_argument("diversity: empty family");
    std::vector<long long> degree(f.ground(), 0);
    for (SetBits s : f.members())
        for (int e = 0; e < f.ground(); ++e)
            if ((s >> e) & 1u) ++degree[e];
    int arg = 0;
    for (int e = 1; e < f.ground(); ++e)
        if (degree[e] > degree[arg]) arg = e;
    return DiversityResult{static_cast<long long>(f.size()) - degree[arg], arg + 1};
}

bool is_s_subset_regular(const Family& f, int s) {
    if (s < 0 || s > f.ground()) throw std::invalid_argument("is_s_subset_regular: bad s");
    long long expected = -1;
    bool regular = true;
    for_each_subset_of_size(f.ground(), s, [&](SetBits sub) {
        if (!regular) return;
        long long count = 0;
        for (SetBits mem : f.members())
            if ((mem & sub) == sub) ++count;
        if (expected < 0)
            expected = count;
        else if (count != expected)
            regular = false;
    });
    return regular;
}

bool is_union_free(const Family& f) {
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const SetBits u = m[i] | m[j];
            if (u != m[i] && u != m[j] && f.contains(u)) return false;
        }
    return true;
}

namespace {

struct DisjointSearch {
    const std::vector<SetBits>& sets;   // sorted ascending by size
    const std::vector<int>& sizes;
    int ground;
    int best = 0;

    // Largest t such that the t smallest sizes from `idx` on fit in `free`.
    int capacity_bound(std::size_t idx, int free) const {
        int t = 0;
        for (std::size_t i = idx; i < sets.size(); ++i) {
            if (sizes[i] > free) break;
            free -= sizes[i];
            ++t;
        }
        return t;
    }

    void run(std::size_t idx, SetBits used, int count) {
        best = std::max(best, count);
        if (idx >= sets.size()) return;
        const int free = ground - popcount32(used);
        if (count + capacity_bound(idx, free) <= best) return;
        for (std::size_t i = idx; i < sets.size(); ++i) {
            if (sizes[i] > free) break;
            if (sets[i] & used) continue;
            if (count + 1 + capacity_bound(i + 1, free - sizes[i]) <= best) continue;
            run(i + 1, used | sets[i], count + 1);
        }
    }
};

}  // namespace

int max_pairwise_disjoint(const Family& f) {
    std::vector<SetBits> sets(f.members());
    std::sort(sets.begin(), sets.end(), [](SetBits a, SetBits b) {
        int pa = popcount32(a), pb = popcount32(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<int> sizes(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) sizes[i] = popcount32(sets[i]);
    DisjointSearch search{sets, sizes, f.ground()};
    search.run(0, 0, 0);
    return search.best;
}

namespace {

// Column-to-member backtracking with row-profile multiset pruning. After
// assigning members to the first j pattern columns, each pattern row and each
// ground element has a 0-1 profile of length j; an injective row->element map
// can exist only if, per profile class, rows do not outnumber elements.
struct ConfigSearch {
    const std::vector<SetBits>& members;
    const PatternMatrix& p;
    int ground;
    std::vector<int> chosen;        // member index per assigned column
    std::vector<std::uint32_t> row_profile;    // one bit per assigned column
    std::vector<std::uint32_t> elem_profile;

    bool profiles_feasible(int assigned) const {
        // Count rows and elements per profile value; profiles have
        // `assigned` bits, so at most 2^assigned values, but we just scan.
        for (int r = 0; r < p.rows; ++r) {
            int rows_like = 0, elems_like = 0;
            for (int r2 = 0; r2 < p.rows; ++r2)
                if (row_profile[r2] == row_profile[r]) ++rows_like;
            for (int e = 0; e < ground; ++e)
                if (elem_profile[e] == row_profile[r]) ++elems_like;
            if (rows_like > elems_like) return false;
        }
        (void)assigned;
        return true;
    }

    bool assign(int col) {
        if (col == p.cols) return true;  // profiles already checked exactly
        for (std::size_t m = 0; m < members.size(); ++m) {
            bool used = false;
            for (int c = 0; c < col; ++c)
                if (chosen[c] == static_cast<int>(m)) used = true;
            if (used) continue;
            chosen[col] = static_cast<int>(m);
            for (int r = 0; r < p.rows; ++r)
                row_profile[r] |= std::uint32_t{p.at(r, col)} << col;
            for (int e = 0; e < ground; ++e)
                elem_profile[e] |= ((members[m] >> e) & 1u) << col;
            if (profiles_feasible(col + 1) && assign(col + 1)) return true;
            for (int r = 0; r < p.rows; ++r)
                row_profile[r] &= ~(std::uint32_t{1} << col);
            for (int e = 0; e < ground; ++e)
                elem_profile[e] &= ~(std::uint32_t{1} << col);
        }
        chosen[col] = -1;
        return false;
    }
};

bool is_anstee_pattern(const PatternMatrix& p) {
    const PatternMatrix a = anstee_pattern();
    if (p.rows != a.rows || p.cols != a.cols) return false;
    return p.entries == a.entries;
}

}  // namespace

bool has_configuration(const Family& f, const PatternMatrix& p) {
    if (p.cols > static_cast<int>(f.size()) || p.rows > f.ground()) return false;
    if (is_anstee_pattern(p)) {
        // Fast path: a quadruple of members sharing >= 2 common elements with
        // some element lying in exactly one of the four.
        const auto& m = f.members();
        const std::size_t sz = m.size();
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a + 1; b < sz; ++b) {
                if (popcount32(m[a] & m[b]) < 2) continue;
                for (std::size_t c = b + 1; c < sz; ++c) {
                    if (popcount32(m[a] & m[b] & m[c]) < 2) continue;
                    for (std::size_t d = c + 1; d < sz; ++d) {
                        if (popcount32(m[a] & m[b] & m[c] & m[d]) < 2) continue;
                        const SetBits at_least_two =
                            (m[a] & m[b]) | (m[a] & m[c]) | (m[a] & m[d]) |
                            (m[b] & m[c]) | (m[b] & m[d]) | (m[c] & m[d]);
                        const SetBits exactly_one =
                            (m[a] | m[b] | m[c] | m[d]) & ~at_least_two;
                        if (exactly_one) return true;
                    }
                }
            }
        return false;
    }
    ConfigSearch search{f.members(), p, f.ground(), std::vector<int>(p.cols, -1),
                        std::vector<std::uint32_t>(p.rows, 0),
                        std::vector<std::uint32_t>(f.ground(), 0)};
    return search.assign(0);
}

bool has_configuration_naive(const Family& f, const PatternMatrix& p) {
    // All ordered element tuples x all ordered member tuples, no pruning.
    const int n = f.ground();
    const auto& m = f.members();
    if (p.cols > static_cast<int>(m.size()) || p.rows > n) return false;
    std::vector<int> rows(p.rows, -1), cols(p.cols, -1);
    std::vector<bool> rused(n, false), cused(m.size(), false);

    auto match = [&]() {
        for (int r = 0; r < p.rows; ++r)
            for (int c = 0; c < p.cols; ++c) {
                const bool in = (m[cols[c]] >> rows[r]) & 1u;
                if (in != static_cast<bool>(p.at(r, c))) return false;
            }
        return true;
    };
    // Recursive enumeration of injective row and column maps.
    auto pick_cols = [&](auto&& self, int c) -> bool {
        if (c == p.cols) return match();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (cused[i]) continue;
            cused[i] = true;
            cols[c] = static_cast<int>(i);
            if (self(self, c + 1)) {
                cused[i] = false;
                return true;
            }
            cused[i] = false;
        }
        return false;
    };
    auto pick_rows = [&](auto&& self, int r) -> bool {
        if (r == p.rows) return pick_cols(pick_cols, 0);
        for (int e = 0; e < n; ++e) {
            if (rused[e]) continue;
            rused[e] = true;
            rows[r] = e;
            if (self(self, r + 1)) {
                rused[e] = false;
                return true;
            }
            rused[e] = false;
        }
        return false;
    };
    return pick_rows(pick_rows, 0);
}

}  // namespace combip
