#ifndef DISCHARGEKIT_CHOOSABILITY_HPP
#define DISCHARGEKIT_CHOOSABILITY_HPP

#include "error.hpp"
#include "graph.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dischargekit {

/// Per-vertex colour lists. Lists are kept sorted and free of repeats.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> l)
        : lists(std::move(l))
    {
        for (auto& list : lists) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            if (list.empty())
                throw error(errc::parse_error, "every vertex needs a nonempty list");
            if (list.front() < 0)
                throw error(errc::parse_error, "colours are nonnegative integers");
        }
    }

    std::size_t size() const noexcept { return lists.size(); }
    const std::vector<int>& operator[](std::size_t v) const { return lists[v]; }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

using Coloring = std::vector<int>;

/// Proper colouring with c(v) in L(v), or nullopt when none exists.
/// Backtracking, always branching on the uncoloured vertex with the fewest
/// remaining options (ties to the lower index); colours tried ascending.
inline std::optional<Coloring> l_color(const Graph& g, const ListAssignment& lists)
{
    const int n = g.vertex_count();
    if (lists.size() != static_cast<std::size_t>(n))
        throw error(errc::parse_error, "list assignment must cover every vertex");
    Coloring color(static_cast<std::size_t>(n), -1);

    auto available = [&](Vertex v, int c) {
        for (auto w : g.neighbors(v))
            if (color[static_cast<std::size_t>(w)] == c)
                return false;
        return true;
    };

    std::function<bool(int)> solve = [&](int colored) -> bool {
        if (colored == n)
            return true;
        Vertex best = -1;
        int best_options = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0)
                continue;
            int options = 0;
            for (int c : lists[static_cast<std::size_t>(v)])
                options += available(v, c) ? 1 : 0;
            if (options == 0)
                return false;
            if (best < 0 || options < best_options) {
                best = v;
                best_options = options;
            }
        }
        for (int c : lists[static_cast<std::size_t>(best)]) {
            if (!available(best, c))
                continue;
            color[static_cast<std::size_t>(best)] = c;
            if (solve(colored + 1))
                return true;
        }
        color[static_cast<std::size_t>(best)] = -1;
        return false;
    };
    if (!solve(0))
        return std::nullopt;
    return color;
}

inline bool is_proper_l_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c)
{
    if (c.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& l = lists[static_cast<std::size_t>(v)];
        if (!std::binary_search(l.begin(), l.end(), c[static_cast<std::size_t>(v)]))
            return false;
    }
    for (auto e : g.edges())
        if (c[static_cast<std::size_t>(e.a)] == c[static_cast<std::size_t>(e.b)])
            return false;
    return true;
}

// ------------------------------------------------ assignment enumeration --

struct SearchLimits {
    int max_vertices = 10;
    int threads = 0; // 0 = from DISCHARGEKIT_THREADS / hardware
};

struct ChoosabilityResult {
    bool holds = true;
    std::optional<ListAssignment> witness; // least failing assignment when !holds
    std::uint64_t assignments_checked = 0;
};

namespace detail {

/// Lists of `size` colours a vertex may take when `used` colours are
/// already in play: any subset of the used colours topped up with the
/// next unused ones. Sorted lexicographically. Up to colour renaming this
/// reaches every assignment over an unbounded universe.
inline std::vector<std::vector<int>> canonical_options(int used, int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(pick.size()) == size) {
            out.push_back(pick);
            return;
        }
        for (int c = next; c < used + size; ++c) {
            // fresh colours must form a prefix of the fresh block
            if (c >= used && c != (pick.empty() || pick.back() < used ? used : pick.back() + 1))
                continue;
            pick.push_back(c);
            rec(c + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Enumerates canonical assignments of the given sizes to `order` (a list
/// of vertex slots) and reports the first one rejected by `accept`, i.e. the
/// least in enumeration order. The first slot is fixed to 0..s-1; the
/// choices of the second slot are dealt out to worker threads and the
/// lowest-indexed failing branch wins, so results do not depend on timing.
inline ChoosabilityResult search_assignments(std::span<const int> sizes,
                                             const std::function<bool(const std::vector<std::vector<int>>&)>& accept,
                                             int threads)
{
    const std::size_t k = sizes.size();
    ChoosabilityResult result;
    if (k == 0) {
        result.assignments_checked = 1;
        result.holds = accept({});
        return result;
    }

    std::vector<int> first(static_cast<std::size_t>(sizes[0]));
    std::iota(first.begin(), first.end(), 0);
    const int used0 = sizes[0];

    struct Branch {
        std::vector<std::vector<int>> witness;
        bool failed = false;
        std::uint64_t checked = 0;
    };

    auto run = [&](std::vector<std::vector<int>> prefix, int used, Branch& out, const std::atomic<std::size_t>& stop_above,
                   std::size_t my_index) {
        std::vector<std::vector<int>> lists = std::move(prefix);
        std::function<bool(int)> rec = [&](int used_now) -> bool {
            if (stop_above.load(std::memory_order_relaxed) < my_index)
                return true; // a lower branch already failed
            if (lists.size() == k) {
                ++out.checked;
                if (!accept(lists)) {
                    out.failed = true;
                    out.witness = lists;
                    return true;
                }
                return false;
            }
            const int s = sizes[lists.size()];
            for (auto& opt : canonical_options(used_now, s)) {
                int fresh = 0;
                for (int c : opt)
                    fresh += c >= used_now ? 1 : 0;
                lists.push_back(std::move(opt));
                bool done = rec(used_now + fresh);
                lists.pop_back();
                if (done)
                    return true;
            }
            return false;
        };
        rec(used);
    };

    if (k == 1) {
        Branch b;
        std::atomic<std::size_t> stop{SIZE_MAX};
        run({first}, used0, b, stop, 0);
        result.holds = !b.failed;
        result.assignments_checked = b.checked;
        if (b.failed)
            result.witness = ListAssignment(b.witness);
        return result;
    }

    const auto second = canonical_options(used0, sizes[1]);
    std::vector<Branch> branches(second.size());
    std::atomic<std::size_t> lowest_failure{SIZE_MAX};
    parallel_for(second.size(), threads, [&](std::size_t i) {
        if (lowest_failure.load() < i)
            return;
        int fresh = 0;
        for (int c : second[i])
            fresh += c >= used0 ? 1 : 0;
        run({first, second[i]}, used0 + fresh, branches[i], lowest_failure, i);
        if (branches[i].failed) {
            auto current = lowest_failure.load();
            while (i < current && !lowest_failure.compare_exchange_weak(current, i)) {
            }
        }
    });
    for (auto& b : branches)
        result.assignments_checked += b.checked;
    auto idx = lowest_failure.load();
    if (idx != SIZE_MAX) {
        result.holds = false;
        result.witness = ListAssignment(branches[idx].witness);
    }
    return result;
}

/// Vertices left after repeatedly deleting any vertex whose degree (among
/// survivors) is below its list size; deleted vertices can always be
/// coloured last.
inline std::vector<Vertex> extension_core(const Graph& g, std::span<const int> sizes)
{
    const int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(v)]) {
                alive[static_cast<std::size_t>(v)] = 0;
                for (auto w : g.neighbors(v))
                    --deg[static_cast<std::size_t>(w)];
                changed = true;
            }
    }
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            core.push_back(v);
    return core;
}

inline Graph induced(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : g.edges()) {
        int a = index[static_cast<std::size_t>(e.a)], b = index[static_cast<std::size_t>(e.b)];
        if (a >= 0 && b >= 0)
            edges.emplace_back(a, b);
    }
    return Graph(static_cast<int>(keep.size()), edges);
}

inline void check_sizes(const Graph& g, std::span<const int> sizes, const SearchLimits& limits)
{
    if (sizes.size() != static_cast<std::size_t>(g.vertex_count()))
        throw error(errc::parse_error, "one list size per vertex required");
    for (auto s : sizes)
        if (s < 1)
            throw error(errc::parse_error, "list sizes must be positive");
    if (g.vertex_count() > limits.max_vertices)
        throw error(errc::size_limit_exceeded, std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                                                   std::to_string(limits.max_vertices));
}

/// Every assignment with |L(v)| = sizes[v] admits an L-colouring?
/// Enumeration runs over the core only; a failing core assignment is padded
/// with lists {0..s-1} on the deleted vertices to form the witness.
inline ChoosabilityResult all_assignments_colorable(const Graph& g, std::span<const int> sizes,
                                                    const SearchLimits& limits)
{
    check_sizes(g, sizes, limits);
    const auto core = extension_core(g, sizes);
    ChoosabilityResult result;
    if (core.empty()) {
        result.holds = true;
        return result;
    }
    const Graph h = induced(g, core);
    std::vector<int> core_sizes;
    for (auto v : core)
        core_sizes.push_back(sizes[static_cast<std::size_t>(v)]);
    auto accept = [&](const std::vector<std::vector<int>>& lists) {
        return l_color(h, ListAssignment(lists)).has_value();
    };
    auto inner = search_assignments(core_sizes, accept, limits.threads);
    result.holds = inner.holds;
    result.assignments_checked = inner.assignments_checked;
    if (!inner.holds) {
        std::vector<std::vector<int>> full(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            full[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(sizes[static_cast<std::size_t>(v)]));
            std::iota(full[static_cast<std::size_t>(v)].begin(), full[static_cast<std::size_t>(v)].end(), 0);
        }
        for (std::size_t i = 0; i < core.size(); ++i)
            full[static_cast<std::size_t>(core[i])] = inner.witness->lists[i];
        result.witness = ListAssignment(std::move(full));
    }
    return result;
}

} // namespace detail

/// k-choosability by exhaustive canonical enumeration of k-assignments.
inline ChoosabilityResult is_k_choosable(const Graph& g, int k, SearchLimits limits = {})
{
    if (k < 1)
        throw error(errc::parse_error, "k must be positive");
    std::vector<int> sizes(static_cast<std::size_t>(g.vertex_count()), k);
    return detail::all_assignments_colorable(g, sizes, limits);
}

// ------------------------------------------------------------ reducible --

/// An inner graph whose vertices keep `residual_sizes[v]` colours after the
/// outside has been coloured; `choice_set` may be coloured first.
struct ReducibleConfig {
    std::string name;
    Graph inner;
    std::vector<int> residual_sizes;
    std::vector<Vertex> choice_set;
    std::vector<std::string> labels; // optional, for reports
};

inline ChoosabilityResult check_extension_detailed(const ReducibleConfig& config, SearchLimits limits = {})
{
    return detail::all_assignments_colorable(config.inner, config.residual_sizes, limits);
}

/// Every residual assignment of the configured sizes extends to the inner graph.
inline bool check_extension(const ReducibleConfig& config, SearchLimits limits = {})
{
    return check_extension_detailed(config, limits).holds;
}

/// For every residual assignment: some proper colouring of the choice
/// vertices from their own lists leaves (after deleting each chosen colour
/// from the lists of adjacent inner vertices) an L-colourable remainder.
inline ChoosabilityResult check_extension_with_rechoice_detailed(const ReducibleConfig& config, SearchLimits limits = {})
{
    const Graph& g = config.inner;
    detail::check_sizes(g, config.residual_sizes, limits);
    if (config.choice_set.empty())
        throw error(errc::parse_error, "choice set must be nonempty");
    std::vector<char> is_choice(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto c : config.choice_set) {
        if (c < 0 || c >= g.vertex_count())
            throw error(errc::dangling_vertex_index, "choice vertex " + std::to_string(c));
        is_choice[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<Vertex> choice, rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (is_choice[static_cast<std::size_t>(v)] ? choice : rest).push_back(v);
    const Graph rest_graph = detail::induced(g, rest);

    auto accept = [&](const std::vector<std::vector<int>>& lists) {
        std::vector<int> pick(choice.size(), -1);
        std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
            if (i == choice.size()) {
                std::vector<std::vector<int>> residual;
                for (auto v : rest) {
                    auto l = lists[static_cast<std::size_t>(v)];
                    for (std::size_t j = 0; j < choice.size(); ++j)
                        if (g.adjacent(v, choice[j]))
                            std::erase(l, pick[j]);
                    if (l.empty())
                        return false;
                    residual.push_back(std::move(l));
                }
                return l_color(rest_graph, ListAssignment(std::move(residual))).has_value();
            }
            for (int c : lists[static_cast<std::size_t>(choice[i])]) {
                bool clash = false;
                for (std::size_t j = 0; j < i; ++j)
                    if (pick[j] == c && g.adjacent(choice[i], choice[j]))
                        clash = true;
                if (clash)
                    continue;
                pick[i] = c;
                if (choose(i + 1))
                    return true;
            }
            return false;
        };
        return choose(0);
    };
    return detail::search_assignments(config.residual_sizes, accept, limits.threads);
}

inline bool check_extension_with_rechoice(const ReducibleConfig& config, SearchLimits limits = {})
{
    return check_extension_with_rechoice_detailed(config, limits).holds;
}

/// Vertices of degree at most 3.
inline std::vector<Vertex> verify_min_degree(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 3)
            out.push_back(v);
    return out;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_CHOOSABILITY_HPP
