#include "momentforge/combinat.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "momentforge/config.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/series.hpp"

namespace momentforge::combinat {

int IntPartition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::map<int, int> IntPartition::multiplicities() const {
    std::map<int, int> r;
    for (int p : parts) ++r[p];
    return r;
}

Int IntPartition::d() const {
    Int num = int_factorial(weight());
    Int den(1);
    for (const auto& [part, mult] : multiplicities()) {
        Int pf = int_factorial(part);
        for (int j = 0; j < mult; ++j) den *= pf;
        den *= int_factorial(mult);
    }
    return num / den;
}

std::vector<IntPartition> integer_partitions(int i) {
    if (i < 0) throw input_error("integer_partitions: negative weight");
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(IntPartition{cur});
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(i, i == 0 ? 1 : i);
    return out;
}

int SetPartition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

std::vector<int> SetPartition::type() const {
    std::vector<int> t;
    t.reserve(blocks.size());
    for (const auto& b : blocks) t.push_back(static_cast<int>(b.size()));
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<SetPartition> set_partitions(int n, std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().enumeration);
    if (n < 1) throw input_error("set_partitions: n must be positive");
    if (n > limit) throw cap_error("set_partitions: n exceeds cap");

    std::vector<SetPartition> out;
    std::vector<int> assign(static_cast<size_t>(n), 0);
    // restricted growth strings
    std::function<void(int, int)> rec = [&](int pos, int maxblock) {
        if (pos == n) {
            SetPartition p;
            p.blocks.assign(static_cast<size_t>(maxblock), {});
            for (int i = 0; i < n; ++i) p.blocks[static_cast<size_t>(assign[static_cast<size_t>(i)])].push_back(i);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= maxblock; ++b) {
            assign[static_cast<size_t>(pos)] = b;
            rec(pos + 1, std::max(maxblock, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

bool refines(const SetPartition& a, const SetPartition& b) {
    // map element -> block id in b
    std::vector<int> where(static_cast<size_t>(a.ground_size()), -1);
    for (size_t j = 0; j < b.blocks.size(); ++j)
        for (int e : b.blocks[j]) where[static_cast<size_t>(e)] = static_cast<int>(j);
    for (const auto& blk : a.blocks) {
        const int target = where[static_cast<size_t>(blk[0])];
        for (int e : blk)
            if (where[static_cast<size_t>(e)] != target) return false;
    }
    return true;
}

bool is_interval(const SetPartition& p) {
    for (const auto& b : p.blocks) {
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i] != b[i - 1] + 1) return false;
    }
    return true;
}

bool is_noncrossing(const SetPartition& p) {
    std::vector<int> where(static_cast<size_t>(p.ground_size()), -1);
    for (size_t j = 0; j < p.blocks.size(); ++j)
        for (int e : p.blocks[j]) where[static_cast<size_t>(e)] = static_cast<int>(j);
    const int n = p.ground_size();
    for (int h = 0; h < n; ++h)
        for (int l = h + 1; l < n; ++l)
            for (int k = l + 1; k < n; ++k)
                for (int m = k + 1; m < n; ++m)
                    if (where[h] == where[k] && where[l] == where[m] && where[h] != where[l])
                        return false;
    return true;
}

std::vector<SetPartition> lattice_partitions(LatticeKind kind, int n, std::optional<int> cap) {
    std::vector<SetPartition> all = set_partitions(n, cap);
    if (kind == LatticeKind::All) return all;
    std::vector<SetPartition> out;
    for (auto& p : all) {
        const bool keep = kind == LatticeKind::Interval ? is_interval(p) : is_noncrossing(p);
        if (keep) out.push_back(std::move(p));
    }
    return out;
}

int MultisetSubdivision::block_count() const {
    int c = 0;
    for (const auto& [blk, g] : blocks) c += g;
    return c;
}

static Int subdivision_d(const std::vector<int>& multiplicities,
                         const std::vector<std::pair<std::vector<int>, int>>& blocks) {
    Int num(1);
    for (int f : multiplicities) num *= int_factorial(f);
    Int den(1);
    for (const auto& [blk, g] : blocks) {
        Int per(1);
        for (int h : blk) per *= int_factorial(h);
        for (int j = 0; j < g; ++j) den *= per;
        den *= int_factorial(g);
    }
    return num / den;
}

std::vector<MultisetSubdivision> multiset_subdivisions(const std::vector<int>& multiplicities,
                                                       std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().enumeration);
    int total = 0;
    for (int f : multiplicities) {
        if (f < 0) throw input_error("multiset_subdivisions: negative multiplicity");
        total += f;
    }
    if (total > limit) throw cap_error("multiset_subdivisions: multiset size exceeds cap");

    const size_t k = multiplicities.size();
    std::vector<MultisetSubdivision> out;
    std::vector<std::pair<std::vector<int>, int>> chosen;

    // Blocks are chosen in strictly descending lexicographic order (equal
    // blocks are absorbed into a repetition count), so each multiset of
    // blocks appears exactly once.
    std::function<void(const std::vector<int>&, std::optional<std::vector<int>>)> rec =
        [&](const std::vector<int>& rest, std::optional<std::vector<int>> maxblock) {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
                MultisetSubdivision s;
                s.blocks = chosen;
                s.d_S = subdivision_d(multiplicities, chosen);
                out.push_back(std::move(s));
                return;
            }
            // candidate blocks <= rest componentwise and, once a block has
            // been placed, strictly below it in lex order
            std::vector<int> blk(k, 0);
            std::function<void(size_t, bool)> gen = [&](size_t pos, bool tight) {
                if (pos == k) {
                    if (maxblock && tight) return; // lex-equal to the previous block
                    if (std::all_of(blk.begin(), blk.end(), [](int v) { return v == 0; })) return;
                    int fit = 0;
                    {
                        std::vector<int> r = rest;
                        bool ok = true;
                        while (ok) {
                            for (size_t i = 0; i < k; ++i)
                                if (r[i] < blk[i]) { ok = false; break; }
                            if (!ok) break;
                            for (size_t i = 0; i < k; ++i) r[i] -= blk[i];
                            ++fit;
                        }
                    }
                    for (int g = 1; g <= fit; ++g) {
                        std::vector<int> r = rest;
                        for (size_t i = 0; i < k; ++i) r[i] -= g * blk[i];
                        chosen.emplace_back(blk, g);
                        rec(r, blk);
                        chosen.pop_back();
                    }
                    return;
                }
                int hi = rest[pos];
                if (maxblock && tight) hi = std::min(hi, (*maxblock)[pos]);
                for (int v = hi; v >= 0; --v) {
                    blk[pos] = v;
                    gen(pos + 1, tight && maxblock && v == (*maxblock)[pos]);
                }
                blk[pos] = 0;
            };
            gen(0, maxblock.has_value());
        };

    rec(multiplicities, std::nullopt);
    return out;
}

int MultiIndexPartition::length() const {
    int l = 0;
    for (const auto& [col, r] : columns) l += r;
    return l;
}

Int MultiIndexPartition::multiplicity_factorial() const {
    Int f(1);
    for (const auto& [col, r] : columns) f *= int_factorial(r);
    return f;
}

Int MultiIndexPartition::entry_factorial() const {
    Int f(1);
    for (const auto& [col, r] : columns) {
        Int per(1);
        for (int e : col) per *= int_factorial(e);
        for (int j = 0; j < r; ++j) f *= per;
    }
    return f;
}

std::vector<MultiIndexPartition> multi_index_partitions(const std::vector<int>& index,
                                                        std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().enumeration);
    int total = 0;
    for (int v : index) {
        if (v < 0) throw input_error("multi_index_partitions: negative component");
        total += v;
    }
    if (total > limit) throw cap_error("multi_index_partitions: total order exceeds cap");

    const size_t k = index.size();
    std::vector<MultiIndexPartition> out;
    std::vector<std::vector<int>> cols;

    // all nonzero vectors <= rest componentwise, ascending lexicographic
    auto candidates = [&](const std::vector<int>& rest) {
        std::vector<std::vector<int>> cands;
        std::vector<int> cur(k, 0);
        std::function<void(size_t)> gen = [&](size_t pos) {
            if (pos == k) {
                if (std::any_of(cur.begin(), cur.end(), [](int v) { return v != 0; }))
                    cands.push_back(cur);
                return;
            }
            for (int v = 0; v <= rest[pos]; ++v) {
                cur[pos] = v;
                gen(pos + 1);
            }
            cur[pos] = 0;
        };
        gen(0);
        std::sort(cands.begin(), cands.end());
        return cands;
    };

    std::function<void(std::vector<int>, const std::vector<int>&)> rec =
        [&](std::vector<int> rest, const std::vector<int>& mincol) {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
                MultiIndexPartition p;
                for (const auto& c : cols) {
                    if (!p.columns.empty() && p.columns.back().first == c)
                        ++p.columns.back().second;
                    else
                        p.columns.emplace_back(c, 1);
                }
                out.push_back(std::move(p));
                return;
            }
            for (const auto& c : candidates(rest)) {
                if (c < mincol) continue;
                std::vector<int> r = rest;
                for (size_t i = 0; i < k; ++i) r[i] -= c[i];
                cols.push_back(c);
                rec(std::move(r), c);
                cols.pop_back();
            }
        };

    rec(index, std::vector<int>(k, 0));
    return out;
}

static std::mutex cache_mutex;

Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    if (n == 0) return Int(k == 0 ? 1 : 0);
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::vector<std::vector<Int>> table{{Int(1)}};
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        std::vector<Int> row(static_cast<size_t>(m) + 1, Int(0));
        for (int j = 1; j <= m; ++j) {
            Int prev_same = j <= m - 1 ? table[static_cast<size_t>(m - 1)][static_cast<size_t>(j)] : Int(0);
            row[static_cast<size_t>(j)] =
                table[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)] + Int(j) * prev_same;
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int stirling1_signed(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    if (n == 0) return Int(k == 0 ? 1 : 0);
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::vector<std::vector<Int>> table{{Int(1)}};
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        std::vector<Int> row(static_cast<size_t>(m) + 1, Int(0));
        for (int j = 1; j <= m; ++j) {
            Int prev_same = j <= m - 1 ? table[static_cast<size_t>(m - 1)][static_cast<size_t>(j)] : Int(0);
            row[static_cast<size_t>(j)] =
                table[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)] - Int(m - 1) * prev_same;
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational bernoulli_number(int n) {
    if (n < 0) throw input_error("bernoulli_number: negative index");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::vector<Rational> cache{Rational(1)};
    while (static_cast<int>(cache.size()) <= n) {
        const int i = static_cast<int>(cache.size());
        // sum_{k=0}^{i} C(i+1, k) B_k = 0
        Rational s(0);
        for (int j = 0; j < i; ++j)
            s += Rational(int_binomial(i + 1, j)) * cache[static_cast<size_t>(j)];
        cache.push_back(-s / Rational(int_binomial(i + 1, i)));
    }
    return cache[static_cast<size_t>(n)];
}

Rational euler_number(int n) {
    if (n < 0) throw input_error("euler_number: negative index");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::vector<Rational> cache;
    if (static_cast<int>(cache.size()) <= n) {
        const int order = n + 8;
        // 2 e^z / (e^{2z} + 1) = e^z / [(e^{2z} + 1) / 2]
        std::vector<Rational> expz(static_cast<size_t>(order) + 1, Rational(1));
        std::vector<Rational> half(static_cast<size_t>(order) + 1);
        half[0] = Rational(1);
        for (int i = 1; i <= order; ++i) half[static_cast<size_t>(i)] = Rational(2).pow(i - 1);
        TruncatedSeries f = series_mul(TruncatedSeries(expz),
                                       series_reciprocal(TruncatedSeries(half)));
        cache = f.coeffs();
    }
    return cache[static_cast<size_t>(n)];
}

Int bell_number(int n) {
    Int b(0);
    for (int k = 0; k <= n; ++k) b += stirling2(n, k);
    return b;
}

Int catalan_number(int n) {
    if (n < 0) return Int(0);
    return int_binomial(2 * n, n) / Int(n + 1);
}

Rational named_number(NamedNumber kind, int i, int k) {
    switch (kind) {
        case NamedNumber::Bell: return Rational(bell_number(i));
        case NamedNumber::Bernoulli: return bernoulli_number(i);
        case NamedNumber::Euler: return euler_number(i);
        case NamedNumber::Catalan: return Rational(catalan_number(i));
        case NamedNumber::Stirling1: return Rational(stirling1_signed(i, k));
        case NamedNumber::Stirling2: return Rational(stirling2(i, k));
        case NamedNumber::MobiusPi: {
            if (i < 1) throw input_error("mobius_pi: index must be positive");
            Rational v(int_factorial(i - 1));
            return (i % 2 == 0) ? -v : v;
        }
    }
    throw input_error("named_number: unknown kind");
}

std::vector<std::vector<int>> parking_functions(int n, std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().parking);
    if (n < 1) throw input_error("parking_functions: n must be positive");
    if (n > limit) throw cap_error("parking_functions: n exceeds cap");

    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<size_t>(n), 1);
    auto valid = [&]() {
        std::vector<int> s = p;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < n; ++i)
            if (s[static_cast<size_t>(i)] > i + 1) return false;
        return true;
    };
    while (true) {
        if (valid()) out.push_back(p);
        int pos = n - 1;
        while (pos >= 0 && p[static_cast<size_t>(pos)] == n) {
            p[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++p[static_cast<size_t>(pos)];
    }
    return out;
}

} // namespace momentforge::combinat
