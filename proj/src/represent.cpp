#include "polyu/represent.hpp"

#include <algorithm>
#include <unordered_map>

namespace polyu {

i64 polygonal_value(int m, i64 x) {
    if (m != 4 && m != 8) fail(errc::invalid_argument, "polygonal order must be 4 or 8");
    __int128 v;
    if (m == 4) {
        v = static_cast<__int128>(x) * x;
    } else {
        v = 3 * static_cast<__int128>(x) * x - 2 * static_cast<__int128>(x);
    }
    if (v > INT64_MAX) fail(errc::overflow, "polygonal value overflows 64 bits");
    return static_cast<i64>(v);
}

std::vector<i64> polygonal_values_up_to(int m, i64 bound) {
    if (m != 4 && m != 8) fail(errc::invalid_argument, "polygonal order must be 4 or 8");
    if (bound < 0) fail(errc::invalid_argument, "bound must be nonnegative");
    std::vector<i64> vals;
    vals.push_back(0);
    if (m == 4) {
        for (i64 x = 1; static_cast<__int128>(x) * x <= bound; ++x) vals.push_back(x * x);
    } else {
        // P8(x) = 3x^2 - 2x, P8(-x) = 3x^2 + 2x for x >= 1.
        for (i64 x = 1; 3 * static_cast<__int128>(x) * x - 2 * x <= bound; ++x) {
            vals.push_back(3 * x * x - 2 * x);
            if (3 * static_cast<__int128>(x) * x + 2 * x <= bound) vals.push_back(3 * x * x + 2 * x);
        }
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

namespace {

struct Term {
    i64 coeff;
    int m;
};

// Terms of phi sorted by descending coefficient.
std::vector<Term> terms_desc(const MixedSum& phi) {
    std::vector<Term> t;
    t.reserve(phi.arity());
    for (i64 c : phi.squares()) t.push_back({c, 4});
    for (i64 c : phi.octagonals()) t.push_back({c, 8});
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.coeff > b.coeff; });
    return t;
}

// Scaled term values c * P_m(x) <= bound, ascending.
std::vector<i64> scaled_values(i64 coeff, int m, i64 bound) {
    std::vector<i64> base = polygonal_values_up_to(m, bound / coeff);
    for (i64& v : base) v *= coeff;
    while (!base.empty() && base.back() > bound) base.pop_back();
    return base;
}

struct DecisionSearch {
    std::vector<std::vector<i64>> values;               // per term, ascending
    std::vector<std::unordered_map<i64, bool>> memo;    // per term: remainder -> solvable

    bool solve(std::size_t term, i64 remaining) {
        if (remaining == 0) return true;
        if (term == values.size()) return false;
        if (auto it = memo[term].find(remaining); it != memo[term].end()) return it->second;
        const auto& vals = values[term];
        // Largest candidate first.
        auto ub = std::upper_bound(vals.begin(), vals.end(), remaining);
        bool ok = false;
        for (auto it = std::make_reverse_iterator(ub); it != vals.rend(); ++it) {
            if (solve(term + 1, remaining - *it)) {
                ok = true;
                break;
            }
        }
        memo[term].emplace(remaining, ok);
        return ok;
    }
};

}  // namespace

bool is_represented(const MixedSum& phi, i64 n) {
    if (n < 0) return false;
    if (n == 0) return true;
    DecisionSearch search;
    for (const Term& t : terms_desc(phi)) search.values.push_back(scaled_values(t.coeff, t.m, n));
    search.memo.resize(search.values.size());
    return search.solve(0, n);
}

namespace {

// Arguments in order of increasing |x|, nonnegative first. For squares the
// negative argument is redundant and skipped.
std::vector<i64> argument_order(int m, i64 coeff, i64 bound) {
    std::vector<i64> args;
    args.push_back(0);
    for (i64 x = 1;; ++x) {
        bool any = false;
        if (polygonal_value(m, x) * coeff <= bound) {
            args.push_back(x);
            any = true;
        }
        if (m == 8 && polygonal_value(m, -x) * coeff <= bound) {
            args.push_back(-x);
            any = true;
        }
        if (!any) break;
    }
    return args;
}

// Order on witnesses: lexicographic over the absolute values of the argument
// vector, then over the signs with nonnegative preferred.
bool witness_less(const std::vector<i64>& a, const std::vector<i64>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        i64 aa = a[i] < 0 ? -a[i] : a[i], ab = b[i] < 0 ? -b[i] : b[i];
        if (aa != ab) return aa < ab;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        int sa = a[i] < 0 ? 1 : 0, sb = b[i] < 0 ? 1 : 0;
        if (sa != sb) return sa < sb;
    }
    return false;
}

struct WitnessSearch {
    std::vector<Term> terms;             // declared order: squares then octagonals
    std::vector<std::vector<i64>> args;  // candidates per term, by |arg| ascending, nonnegative first
    std::vector<std::unordered_map<i64, std::optional<std::vector<i64>>>> memo;

    // Minimal-witness suffix for the given remainder; composition is valid
    // because the suffix order is independent of the prefix.
    const std::optional<std::vector<i64>>& solve(std::size_t term, i64 remaining) {
        auto [it, fresh] = memo[term].try_emplace(remaining, std::nullopt);
        if (!fresh) return it->second;
        std::optional<std::vector<i64>>& best = it->second;
        if (term == terms.size()) {
            if (remaining == 0) best.emplace();
            return best;
        }
        for (i64 x : args[term]) {
            i64 ax = x < 0 ? -x : x;
            if (best && ax > ((*best)[0] < 0 ? -(*best)[0] : (*best)[0])) break;
            i64 v = terms[term].coeff * polygonal_value(terms[term].m, x);
            if (v > remaining) continue;
            const auto& sub = solve(term + 1, remaining - v);
            if (!sub) continue;
            std::vector<i64> candidate;
            candidate.reserve(terms.size() - term);
            candidate.push_back(x);
            candidate.insert(candidate.end(), sub->begin(), sub->end());
            if (!best || witness_less(candidate, *best)) best = std::move(candidate);
        }
        return memo[term].at(remaining);
    }
};

}  // namespace

std::optional<Witness> find_witness(const MixedSum& phi, i64 n) {
    if (n < 0) return std::nullopt;
    WitnessSearch search;
    for (i64 c : phi.squares()) search.terms.push_back({c, 4});
    for (i64 c : phi.octagonals()) search.terms.push_back({c, 8});
    for (const Term& t : search.terms) search.args.push_back(argument_order(t.m, t.coeff, n));
    search.memo.resize(search.terms.size() + 1);
    const auto& result = search.solve(0, n);
    if (!result) return std::nullopt;
    Witness w;
    std::size_t u = phi.squares().size();
    w.xs.assign(result->begin(), result->begin() + static_cast<std::ptrdiff_t>(u));
    w.ys.assign(result->begin() + static_cast<std::ptrdiff_t>(u), result->end());
    return w;
}

RepSieve::RepSieve(const MixedSum& phi, i64 bound) : bound_(bound) {
    if (bound < 0) fail(errc::invalid_argument, "sieve bound must be nonnegative");
    std::size_t nwords = static_cast<std::size_t>(bound / 64 + 1);
    words_.assign(nwords, 0);
    words_[0] = 1;  // empty sum represents 0
    std::vector<std::uint64_t> next(nwords);
    for (const Term& t : terms_desc(phi)) {
        std::fill(next.begin(), next.end(), 0);
        for (i64 v : scaled_values(t.coeff, t.m, bound)) {
            std::size_t ws = static_cast<std::size_t>(v >> 6);
            int bs = static_cast<int>(v & 63);
            if (bs == 0) {
                for (std::size_t i = nwords; i-- > ws;) next[i] |= words_[i - ws];
            } else {
                for (std::size_t i = nwords; i-- > ws;) {
                    std::uint64_t w = words_[i - ws] << bs;
                    if (i - ws > 0) w |= words_[i - ws - 1] >> (64 - bs);
                    next[i] |= w;
                }
            }
        }
        words_.swap(next);
    }
}

std::optional<i64> RepSieve::first_gap() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t missing = ~words_[i];
        while (missing) {
            int b = __builtin_ctzll(missing);
            i64 n = static_cast<i64>(i) * 64 + b;
            if (n > bound_) return std::nullopt;
            if (n > 0) return n;
            missing &= missing - 1;
        }
    }
    return std::nullopt;
}

std::vector<i64> RepSieve::gaps() const {
    std::vector<i64> out;
    for (i64 n = 1; n <= bound_; ++n)
        if (!test(n)) out.push_back(n);
    return out;
}

bool criterion_universal(const MixedSum& phi) {
    RepSieve sieve(phi, critical_integers.back());
    for (i64 n : critical_integers)
        if (!sieve.test(n)) return false;
    return true;
}

TruantReport truant(const MixedSum& phi, i64 bound) {
    if (bound < 61) fail(errc::invalid_argument, "truant search bound must be at least 61");
    TruantReport report;
    report.searched_bound = bound;
    report.criterion_passed = criterion_universal(phi);
    auto with_gap = [&](i64 gap) {
        if (report.criterion_passed)
            fail(errc::indeterminate, "criterion passed but " + phi.notation() + " misses " +
                                          std::to_string(gap) + " <= " + std::to_string(bound));
        report.verdict = TruantReport::Verdict::non_universal;
        report.truant = gap;
        return report;
    };
    // A failed criterion pins the truant below 62; scan the small prefix first.
    RepSieve small(phi, 61);
    if (auto gap = small.first_gap()) return with_gap(*gap);
    RepSieve full(phi, bound);
    if (auto gap = full.first_gap()) return with_gap(*gap);
    if (!report.criterion_passed)
        fail(errc::indeterminate, "all values to " + std::to_string(bound) + " represented by " +
                                      phi.notation() + " yet the 19-integer criterion fails");
    report.verdict = TruantReport::Verdict::universal;
    return report;
}

std::vector<i64> exceptional_set(const MixedSum& phi, i64 bound) {
    if (bound < 0) fail(errc::invalid_argument, "bound must be nonnegative");
    return RepSieve(phi, bound).gaps();
}

}  // namespace polyu
