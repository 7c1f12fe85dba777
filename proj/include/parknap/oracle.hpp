#pragma once

#include "parknap/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace parknap {
namespace oracle {

inline constexpr std::size_t kMaxItems = 20;

inline void check_guard(const ParametricInstance& inst) {
    if (inst.size() > kMaxItems) throw std::invalid_argument("oracle size limit");
}

namespace detail {

struct SubsetTable {
    // Per bitmask: summed weight intercept/slope and profit.
    std::vector<std::int64_t> alpha, beta, profit;
};

inline SubsetTable enumerate_subsets(const ParametricInstance& inst) {
    const std::size_t n = inst.size();
    SubsetTable t;
    const std::size_t total = std::size_t(1) << n;
    t.alpha.assign(total, 0);
    t.beta.assign(total, 0);
    t.profit.assign(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctzll(mask));
        const std::size_t rest = mask & (mask - 1);
        t.alpha[mask] = t.alpha[rest] + inst.item(low).weight_intercept;
        t.beta[mask] = t.beta[rest] + inst.item(low).weight_slope;
        t.profit[mask] = t.profit[rest] + inst.item(low).profit;
    }
    return t;
}

inline std::vector<char> mask_to_chosen(std::size_t mask, std::size_t n) {
    std::vector<char> chosen(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) chosen[i] = 1;
    return chosen;
}

}  // namespace detail

/// Exhaustive optimum at a fixed parameter value. Ties between equal-profit
/// subsets go to the lexicographically smallest selection vector, which keeps
/// the oracle deterministic.
inline std::pair<BigInt, KnapsackSolution> optimum_at(const ParametricInstance& inst,
                                                      const Rational& lambda) {
    check_guard(inst);
    const std::size_t n = inst.size();
    const detail::SubsetTable t = detail::enumerate_subsets(inst);
    // weight <= W  <=>  alpha*den + num*beta <= W*den   (den > 0)
    const BigInt& num = lambda.num();
    const BigInt& den = lambda.den();
    const BigInt wcap = BigInt(inst.capacity()) * den;

    std::int64_t best_profit = -1;
    std::size_t best_mask = 0;
    for (std::size_t mask = 0; mask < t.alpha.size(); ++mask) {
        if (BigInt(t.alpha[mask]) * den + num * t.beta[mask] > wcap) continue;
        if (t.profit[mask] > best_profit) {
            best_profit = t.profit[mask];
            best_mask = mask;
        } else if (t.profit[mask] == best_profit) {
            auto a = detail::mask_to_chosen(mask, n);
            auto b = detail::mask_to_chosen(best_mask, n);
            if (KnapsackSolution::lex_less(a, b)) best_mask = mask;
        }
    }
    if (best_profit < 0) throw std::logic_error("optimum_at: no feasible subset (capacity < 0?)");
    KnapsackSolution sol = make_solution(inst, detail::mask_to_chosen(best_mask, n));
    return {sol.profit, sol};
}

/// Exact optimal profit over the whole line: a step function with one value
/// and witness per cell.
struct ProfitStepFunction {
    std::vector<Rational> breakpoints;
    std::vector<BigInt> values;
    std::vector<KnapsackSolution> witnesses;

    std::size_t cell_count() const { return values.size(); }

    ClosedInterval cell_interval(std::size_t j) const {
        ExtRational lo = j == 0 ? ExtRational::neg_inf() : ExtRational(breakpoints[j - 1]);
        ExtRational hi = j == breakpoints.size() ? ExtRational::pos_inf() : ExtRational(breakpoints[j]);
        return {lo, hi};
    }

    /// Value at lambda; at a shared breakpoint the larger neighbor wins,
    /// since both witnesses are feasible there.
    BigInt value_at(const Rational& lambda) const {
        std::size_t j = 0;
        while (j < breakpoints.size() && breakpoints[j] < lambda) ++j;
        BigInt v = values[j];
        if (j < breakpoints.size() && breakpoints[j] == lambda && values[j + 1] > v) v = values[j + 1];
        return v;
    }
};

/// Builds the exact step function by collecting, over all subsets, the finite
/// endpoints of their feasibility rays as candidate breakpoints, probing one
/// point per gap, and merging cells that kept the same value under a witness
/// valid across the join.
inline ProfitStepFunction profit_function(const ParametricInstance& inst) {
    check_guard(inst);
    const std::size_t n = inst.size();

    if (n == 0) {
        ProfitStepFunction f;
        f.values.push_back(0);
        f.witnesses.push_back(empty_solution(inst));
        return f;
    }

    const detail::SubsetTable t = detail::enumerate_subsets(inst);
    std::vector<Rational> candidates;
    for (std::size_t mask = 0; mask < t.alpha.size(); ++mask) {
        if (t.beta[mask] == 0) continue;  // feasibility constant over the line
        candidates.emplace_back(BigInt(inst.capacity()) - t.alpha[mask], BigInt(t.beta[mask]));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Probe points: every candidate, a midpoint between consecutive ones, and
    // one point beyond each extreme.
    std::vector<Rational> probes;
    if (candidates.empty()) {
        probes.emplace_back(0);
    } else {
        probes.push_back(candidates.front() - Rational(1));
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            probes.push_back(candidates[i]);
            if (i + 1 < candidates.size())
                probes.push_back((candidates[i] + candidates[i + 1]) / Rational(2));
        }
        probes.push_back(candidates.back() + Rational(1));
    }

    // Cells delimited by the candidate points; value taken from the interior
    // probe of each cell.
    ProfitStepFunction f;
    f.breakpoints = candidates;
    for (std::size_t j = 0; j <= candidates.size(); ++j) {
        const Rational& interior = probes[2 * j];  // probes alternate interior/candidate
        auto [p, sol] = optimum_at(inst, interior);
        f.values.push_back(p);
        f.witnesses.push_back(std::move(sol));
    }

    // Merge adjacent cells with equal value when one witness is feasible
    // across the union; remaining breakpoints are genuine.
    ProfitStepFunction merged;
    merged.values.push_back(f.values[0]);
    merged.witnesses.push_back(f.witnesses[0]);
    for (std::size_t j = 1; j < f.cell_count(); ++j) {
        bool joined = false;
        if (f.values[j] == merged.values.back()) {
            ExtRational lo = merged.breakpoints.empty() ? ExtRational::neg_inf()
                                                        : ExtRational(merged.breakpoints.back());
            ExtRational hi = j == f.breakpoints.size() ? ExtRational::pos_inf()
                                                       : ExtRational(f.breakpoints[j]);
            ClosedInterval span(lo, hi);
            if (feasible_on(inst, merged.witnesses.back(), span)) {
                joined = true;
            } else if (feasible_on(inst, f.witnesses[j], span)) {
                merged.witnesses.back() = f.witnesses[j];
                joined = true;
            }
        }
        if (!joined) {
            merged.breakpoints.push_back(f.breakpoints[j - 1]);
            merged.values.push_back(f.values[j]);
            merged.witnesses.push_back(f.witnesses[j]);
        }
    }
    return merged;
}

}  // namespace oracle
}  // namespace parknap
