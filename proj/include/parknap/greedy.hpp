#pragma once

#include "parknap/affine.hpp"
#include "parknap/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace parknap {

struct GreedyCell {
    BigInt approx_profit;       // p^A on this cell
    KnapsackSolution solution;  // the greedy winner (prefix rule vs best single item)
};

/// Partition of the line into cells on which the greedy output is constant.
struct GreedyPartition {
    std::vector<Rational> breakpoints;
    std::vector<GreedyCell> cells;
    std::size_t raw_event_count = 0;  // events enumerated before dedup/merge

    std::size_t cell_count() const { return cells.size(); }
    ClosedInterval cell_interval(std::size_t j) const {
        ExtRational lo = j == 0 ? ExtRational::neg_inf() : ExtRational(breakpoints[j - 1]);
        ExtRational hi = j == breakpoints.size() ? ExtRational::pos_inf() : ExtRational(breakpoints[j]);
        return {lo, hi};
    }
};

/// Weight-per-profit ratio of each item as an affine function of the
/// parameter: f_i(lambda) = a_i/p_i + lambda * b_i/p_i.
inline std::vector<AffineForm> ratio_functions(const ParametricInstance& inst) {
    std::vector<AffineForm> fs;
    fs.reserve(inst.size());
    for (const Item& it : inst.items())
        fs.emplace_back(Rational(BigInt(it.weight_intercept), BigInt(it.profit)),
                        Rational(BigInt(it.weight_slope), BigInt(it.profit)));
    return fs;
}

namespace greedy_detail {

// f_i(lambda) < f_j(lambda) without constructing rationals. lambda = num/den,
// den > 0 and profits > 0, so cross-multiplying preserves order.
inline bool ratio_less(const ParametricInstance& inst, std::size_t i, std::size_t j,
                       const BigInt& num, const BigInt& den) {
    const Item& a = inst.item(i);
    const Item& b = inst.item(j);
    BigInt lhs = (BigInt(a.weight_intercept) * den + num * a.weight_slope) * b.profit;
    BigInt rhs = (BigInt(b.weight_intercept) * den + num * b.weight_slope) * a.profit;
    return lhs < rhs;
}

inline std::vector<std::size_t> ratio_order(const ParametricInstance& inst, const Rational& lambda) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    const BigInt& num = lambda.num();
    const BigInt& den = lambda.den();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (ratio_less(inst, i, j, num, den)) return true;
        if (ratio_less(inst, j, i, num, den)) return false;
        return i < j;
    });
    return order;
}

// Greedy output for a fixed ratio order: select every position whose running
// weight stays within capacity (weights may be negative, so the selection is
// not necessarily a prefix), then compare against the best single item.
inline std::pair<BigInt, KnapsackSolution> greedy_for_order(const ParametricInstance& inst,
                                                            const std::vector<std::size_t>& order,
                                                            const Rational& lambda) {
    const BigInt& num = lambda.num();
    const BigInt& den = lambda.den();
    const BigInt wcap = BigInt(inst.capacity()) * den;

    std::vector<char> prefix_chosen(inst.size(), 0);
    BigInt run = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const Item& it = inst.item(order[pos]);
        run += BigInt(it.weight_intercept) * den + num * it.weight_slope;
        if (run <= wcap) prefix_chosen[order[pos]] = 1;
    }
    KnapsackSolution prefix_sol = make_solution(inst, std::move(prefix_chosen));

    long long best_single = -1;
    BigInt best_single_profit = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const Item& it = inst.item(i);
        if (BigInt(it.weight_intercept) * den + num * it.weight_slope > wcap) continue;
        if (best_single < 0 || BigInt(it.profit) > best_single_profit) {
            best_single = static_cast<long long>(i);
            best_single_profit = it.profit;
        }
    }
    if (best_single >= 0 && best_single_profit > prefix_sol.profit) {
        std::vector<char> chosen(inst.size(), 0);
        chosen[static_cast<std::size_t>(best_single)] = 1;
        KnapsackSolution single = make_solution(inst, std::move(chosen));
        return {single.profit, single};
    }
    return {prefix_sol.profit, prefix_sol};
}

}  // namespace greedy_detail

/// Pointwise greedy: items in increasing ratio order (ties by index), running
/// prefix rule, then the better of that selection and the best single item.
inline std::pair<BigInt, KnapsackSolution> greedy_at(const ParametricInstance& inst,
                                                     const Rational& lambda) {
    return greedy_detail::greedy_for_order(inst, greedy_detail::ratio_order(inst, lambda), lambda);
}

namespace greedy_detail {

inline GreedyPartition partition_from_events(const ParametricInstance& inst,
                                             std::vector<Rational> events,
                                             std::size_t raw_count) {
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<Rational> reps;
    if (events.empty()) {
        reps.emplace_back(0);
    } else {
        reps.push_back(events.front() - Rational(1));
        for (std::size_t i = 0; i + 1 < events.size(); ++i)
            reps.push_back((events[i] + events[i + 1]) / Rational(2));
        reps.push_back(events.back() + Rational(1));
    }

    GreedyPartition part;
    part.raw_event_count = raw_count;
    for (std::size_t j = 0; j < reps.size(); ++j) {
        auto [profit, sol] = greedy_at(inst, reps[j]);
        if (!part.cells.empty() && part.cells.back().approx_profit == profit &&
            part.cells.back().solution.chosen == sol.chosen) {
            continue;  // merge with previous cell
        }
        if (!part.cells.empty()) part.breakpoints.push_back(events[j - 1]);
        part.cells.push_back({std::move(profit), std::move(sol)});
    }
    // Merging may have skipped cells; rebuild breakpoints accordingly.
    // (The loop above already only records a breakpoint when a new cell
    // starts, so the two vectors are consistent.)
    return part;
}

}  // namespace greedy_detail

/// Baseline partition. Event superset: all pairwise ratio intersections, the
/// capacity crossings of every running prefix sum inside its ordering range,
/// and the capacity crossing of every single item. Cells evaluated at one
/// interior point each, then merged.
inline GreedyPartition greedy_partition(const ParametricInstance& inst) {
    const std::size_t n = inst.size();
    const Rational cap{inst.capacity()};

    bool any_slope = false;
    for (const Item& it : inst.items())
        if (it.weight_slope != 0) any_slope = true;
    if (!any_slope) {
        // Nothing depends on the parameter.
        GreedyPartition part;
        auto [profit, sol] = greedy_at(inst, Rational(0));
        part.cells.push_back({std::move(profit), std::move(sol)});
        return part;
    }

    const std::vector<AffineForm> fs = ratio_functions(inst);

    std::vector<Rational> order_events;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto x = affine_intersect(fs[i], fs[j])) order_events.push_back(*x);
    std::size_t raw_count = order_events.size();

    std::vector<Rational> events = order_events;
    std::sort(order_events.begin(), order_events.end());
    order_events.erase(std::unique(order_events.begin(), order_events.end()), order_events.end());

    // Ordering ranges delimited by the intersection points; roots of the
    // running prefix sums are events only inside the range whose ordering
    // produced them.
    std::vector<Rational> range_reps;
    if (order_events.empty()) {
        range_reps.emplace_back(0);
    } else {
        range_reps.push_back(order_events.front() - Rational(1));
        for (std::size_t i = 0; i + 1 < order_events.size(); ++i)
            range_reps.push_back((order_events[i] + order_events[i + 1]) / Rational(2));
        range_reps.push_back(order_events.back() + Rational(1));
    }
    for (std::size_t r = 0; r < range_reps.size(); ++r) {
        ExtRational lo = r == 0 ? ExtRational::neg_inf() : ExtRational(order_events[r - 1]);
        ExtRational hi = r == order_events.size() ? ExtRational::pos_inf() : ExtRational(order_events[r]);
        ClosedInterval range(lo, hi);
        std::vector<std::size_t> order = greedy_detail::ratio_order(inst, range_reps[r]);
        AffineForm prefix;
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const Item& it = inst.item(order[pos]);
            prefix = prefix + AffineForm(Rational(it.weight_intercept), Rational(it.weight_slope));
            if (auto root = affine_root(prefix, cap)) {
                if (range.contains(*root)) {
                    events.push_back(*root);
                    ++raw_count;
                }
            }
        }
    }

    for (const Item& it : inst.items()) {
        AffineForm w(Rational(it.weight_intercept), Rational(it.weight_slope));
        if (auto root = affine_root(w, cap)) {
            events.push_back(*root);
            ++raw_count;
        }
    }

    // Hard cap on the enumerated event count.
    const std::size_t pairs = n * (n - 1) / 2;
    if (raw_count > pairs + (pairs + 1) * n + 2 * n)
        throw std::logic_error("greedy_partition: event count exceeds structural cap");

    return greedy_detail::partition_from_events(inst, std::move(events), raw_count);
}

/// Left-to-right sweep over the same event structure: maintains the ratio
/// order across intersection batches (re-sorting only the tied blocks) and
/// derives each range's selection from the maintained order instead of
/// re-sorting per cell. Output matches greedy_partition pointwise.
inline GreedyPartition level_sweep_partition(const ParametricInstance& inst) {
    const std::size_t n = inst.size();
    const Rational cap{inst.capacity()};

    bool any_slope = false;
    for (const Item& it : inst.items())
        if (it.weight_slope != 0) any_slope = true;
    if (!any_slope) {
        GreedyPartition part;
        auto [profit, sol] = greedy_at(inst, Rational(0));
        part.cells.push_back({std::move(profit), std::move(sol)});
        return part;
    }

    const std::vector<AffineForm> fs = ratio_functions(inst);

    std::vector<Rational> order_events;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto x = affine_intersect(fs[i], fs[j])) order_events.push_back(*x);
    std::size_t raw_count = order_events.size();
    std::sort(order_events.begin(), order_events.end());
    order_events.erase(std::unique(order_events.begin(), order_events.end()), order_events.end());

    // Maintained state: the ratio order, valid on the current range.
    Rational start = order_events.empty() ? Rational(0) : order_events.front() - Rational(1);
    std::vector<std::size_t> order = greedy_detail::ratio_order(inst, start);

    GreedyPartition part;
    part.raw_event_count = raw_count;  // level events added below
    std::vector<Rational> cell_events;

    auto emit_cell = [&](const Rational& rep, const std::optional<Rational>& left_event) {
        auto [profit, sol] = greedy_detail::greedy_for_order(inst, order, rep);
        if (!part.cells.empty() && part.cells.back().approx_profit == profit &&
            part.cells.back().solution.chosen == sol.chosen)
            return;
        if (!part.cells.empty()) part.breakpoints.push_back(*left_event);
        part.cells.push_back({std::move(profit), std::move(sol)});
    };

    const std::size_t ranges = order_events.size() + 1;
    for (std::size_t r = 0; r < ranges; ++r) {
        ExtRational lo = r == 0 ? ExtRational::neg_inf() : ExtRational(order_events[r - 1]);
        ExtRational hi = r == order_events.size() ? ExtRational::pos_inf() : ExtRational(order_events[r]);
        ClosedInterval range(lo, hi);

        // Level events inside the range: capacity crossings of the running
        // prefix sums under the maintained order, plus single-item crossings.
        std::vector<Rational> level_events;
        AffineForm prefix;
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const Item& it = inst.item(order[pos]);
            prefix = prefix + AffineForm(Rational(it.weight_intercept), Rational(it.weight_slope));
            if (auto root = affine_root(prefix, cap)) {
                if (range.contains(*root)) level_events.push_back(*root);
            }
        }
        for (const Item& it : inst.items()) {
            AffineForm w(Rational(it.weight_intercept), Rational(it.weight_slope));
            if (auto root = affine_root(w, cap)) {
                if (range.contains(*root)) level_events.push_back(*root);
            }
        }
        part.raw_event_count += level_events.size();
        std::sort(level_events.begin(), level_events.end());
        level_events.erase(std::unique(level_events.begin(), level_events.end()), level_events.end());

        // Sub-cells of this range, delimited by the level events.
        std::vector<Rational> bounds;
        if (lo.is_finite()) bounds.push_back(lo.value());
        for (const Rational& e : level_events)
            if (!(lo.is_finite() && e == lo.value()) && !(hi.is_finite() && e == hi.value()))
                bounds.push_back(e);
        if (hi.is_finite()) bounds.push_back(hi.value());

        std::vector<std::pair<Rational, std::optional<Rational>>> cells;  // (rep, left event)
        if (bounds.empty()) {
            cells.emplace_back(Rational(0), std::nullopt);
        } else {
            if (!lo.is_finite()) cells.emplace_back(bounds.front() - Rational(1), std::nullopt);
            for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
                cells.emplace_back((bounds[i] + bounds[i + 1]) / Rational(2), bounds[i]);
            if (!hi.is_finite()) cells.emplace_back(bounds.back() + Rational(1), bounds.back());
        }
        for (const auto& [rep, left] : cells) emit_cell(rep, left);

        // Advance the maintained order past the upcoming intersection batch:
        // items tied at the event form consecutive blocks; each block is
        // reordered by ratio slope (then index), which is the order just to
        // the right of the event.
        if (r < order_events.size()) {
            const Rational& ev = order_events[r];
            std::size_t pos = 0;
            while (pos < order.size()) {
                std::size_t end = pos + 1;
                while (end < order.size() && fs[order[end]].eval(ev) == fs[order[pos]].eval(ev)) ++end;
                if (end - pos > 1) {
                    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(pos),
                                     order.begin() + static_cast<std::ptrdiff_t>(end),
                                     [&](std::size_t x, std::size_t y) {
                                         if (fs[x].slope != fs[y].slope) return fs[x].slope < fs[y].slope;
                                         return x < y;
                                     });
                }
                pos = end;
            }
        }
    }
    return part;
}

}  // namespace parknap
