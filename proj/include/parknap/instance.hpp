#pragma once

#include "parknap/affine.hpp"
#include "parknap/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parknap {

/// One item: fixed profit, weight varying affinely with the parameter,
/// weight(lambda) = weight_intercept + lambda * weight_slope.
struct Item {
    std::int64_t profit = 1;
    std::int64_t weight_intercept = 0;  // a_i
    std::int64_t weight_slope = 0;      // b_i
};

class ParametricInstance {
public:
    ParametricInstance() = default;
    ParametricInstance(std::vector<Item> items, std::int64_t capacity)
        : items_(std::move(items)), capacity_(capacity) {
        validate();
    }

    std::size_t size() const { return items_.size(); }
    const std::vector<Item>& items() const { return items_; }
    const Item& item(std::size_t i) const { return items_[i]; }
    std::int64_t capacity() const { return capacity_; }

    void validate() const {
        if (capacity_ < 0) throw std::invalid_argument("instance: capacity must be >= 0");
        for (const Item& it : items_) {
            if (it.profit < 1) throw std::invalid_argument("instance: item profit must be >= 1");
        }
        // Generous magnitude guard so that sums of n coefficients and
        // products with the capacity stay well inside 64-bit range.
        constexpr std::int64_t kLimit = std::int64_t(1) << 40;
        if (static_cast<std::int64_t>(items_.size()) > kLimit)
            throw std::invalid_argument("instance: too many items");
        for (const Item& it : items_) {
            if (it.profit > kLimit || it.weight_intercept > kLimit || it.weight_intercept < -kLimit ||
                it.weight_slope > kLimit || it.weight_slope < -kLimit)
                throw std::invalid_argument("instance: coefficient magnitude too large");
        }
        if (capacity_ > kLimit) throw std::invalid_argument("instance: capacity too large");
    }

private:
    std::vector<Item> items_;
    std::int64_t capacity_ = 0;
};

/// A chosen item subset with its (redundantly stored, exactly recomputable)
/// profit and affine weight.
struct KnapsackSolution {
    std::vector<char> chosen;  // one flag per item
    BigInt profit;
    AffineForm weight;

    bool operator==(const KnapsackSolution& o) const {
        return chosen == o.chosen && profit == o.profit && weight == o.weight;
    }

    /// First index where the selections differ decides; an unset flag sorts
    /// before a set one, so the all-zero vector is smallest.
    static bool lex_less(const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.size() < b.size();
    }

    /// 1-based indices of the selected items.
    std::vector<std::size_t> selected_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i]) out.push_back(i + 1);
        return out;
    }
};

inline AffineForm weight_of(const ParametricInstance& inst, const std::vector<char>& chosen) {
    if (chosen.size() != inst.size())
        throw std::invalid_argument("weight_of: selection length mismatch");
    BigInt a = 0, b = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i]) {
            a += inst.item(i).weight_intercept;
            b += inst.item(i).weight_slope;
        }
    }
    return {Rational(std::move(a)), Rational(std::move(b))};
}

inline BigInt profit_of(const ParametricInstance& inst, const std::vector<char>& chosen) {
    BigInt p = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i]) p += inst.item(i).profit;
    return p;
}

inline KnapsackSolution make_solution(const ParametricInstance& inst, std::vector<char> chosen) {
    KnapsackSolution s;
    s.weight = weight_of(inst, chosen);
    s.profit = profit_of(inst, chosen);
    s.chosen = std::move(chosen);
    return s;
}

inline KnapsackSolution empty_solution(const ParametricInstance& inst) {
    return make_solution(inst, std::vector<char>(inst.size(), 0));
}

inline bool is_feasible_at(const ParametricInstance& inst, const std::vector<char>& chosen,
                           const Rational& lambda) {
    return weight_of(inst, chosen).eval(lambda) <= Rational(inst.capacity());
}

/// Whether a fixed selection stays within capacity everywhere on a closed
/// interval. The weight is affine, so finite endpoints decide; at an
/// infinite end the slope sign decides.
inline bool feasible_on(const ParametricInstance& inst, const KnapsackSolution& sol,
                        const ClosedInterval& iv) {
    const Rational cap{inst.capacity()};
    const AffineForm& w = sol.weight;
    if (iv.lo.is_finite()) {
        if (w.eval(iv.lo.value()) > cap) return false;
    } else {
        if (w.slope.sign() < 0) return false;
        if (w.slope.sign() == 0 && w.intercept > cap) return false;
    }
    if (iv.hi.is_finite()) {
        if (w.eval(iv.hi.value()) > cap) return false;
    } else {
        if (w.slope.sign() > 0) return false;
        if (w.slope.sign() == 0 && w.intercept > cap) return false;
    }
    return true;
}

/// Scale constant M = max{W, n * max_i max{a_i, b_i}}, floored at max{1, n}.
/// Bounds feasibility crossings on well-signed inputs and keeps the
/// logarithmic search-step count meaningful.
inline BigInt magnitude_bound(const ParametricInstance& inst) {
    if (inst.size() == 0) throw std::invalid_argument("magnitude_bound: no items");
    BigInt coeff_max = inst.item(0).weight_intercept;
    for (const Item& it : inst.items()) {
        if (it.weight_intercept > coeff_max) coeff_max = it.weight_intercept;
        if (it.weight_slope > coeff_max) coeff_max = it.weight_slope;
    }
    BigInt m = BigInt(inst.size()) * coeff_max;
    if (m < inst.capacity()) m = inst.capacity();
    BigInt fl = BigInt(inst.size());
    if (fl < 1) fl = 1;
    if (m < fl) m = fl;
    return m;
}

/// Like magnitude_bound but over absolute coefficient values. Every crossing
/// (W - alpha)/beta of a subset weight lies in [-(n+1)*S, (n+1)*S] for
/// S = search_magnitude, and two distinct crossings differ by at least
/// 1/(n^2 * S^2). Negative coefficients make this strictly larger than
/// magnitude_bound, which is not a safe range bound for them.
inline BigInt search_magnitude(const ParametricInstance& inst) {
    if (inst.size() == 0) throw std::invalid_argument("search_magnitude: no items");
    BigInt coeff_max = 0;
    for (const Item& it : inst.items()) {
        BigInt a = it.weight_intercept < 0 ? -BigInt(it.weight_intercept) : BigInt(it.weight_intercept);
        BigInt b = it.weight_slope < 0 ? -BigInt(it.weight_slope) : BigInt(it.weight_slope);
        if (a > coeff_max) coeff_max = a;
        if (b > coeff_max) coeff_max = b;
    }
    BigInt m = BigInt(inst.size()) * coeff_max;
    if (m < inst.capacity()) m = inst.capacity();
    BigInt fl = BigInt(inst.size());
    if (fl < 1) fl = 1;
    if (m < fl) m = fl;
    return m;
}

inline BigInt profit_upper_bound(const ParametricInstance& inst) {
    BigInt p = 0;
    for (const Item& it : inst.items()) p += it.profit;
    return p;
}

/// Partition of the real line into closed cells sharing breakpoints, with one
/// solution attached per cell. Cell j covers [breakpoints[j-1], breakpoints[j]]
/// with the outermost cells extending to the infinities.
struct SolutionPartition {
    std::vector<Rational> breakpoints;  // strictly increasing
    std::vector<KnapsackSolution> cells;

    std::size_t cell_count() const { return cells.size(); }

    ClosedInterval cell_interval(std::size_t j) const {
        ExtRational lo = j == 0 ? ExtRational::neg_inf() : ExtRational(breakpoints[j - 1]);
        ExtRational hi = j == breakpoints.size() ? ExtRational::pos_inf() : ExtRational(breakpoints[j]);
        return {lo, hi};
    }

    /// Index of some cell whose closed interval contains lambda.
    std::size_t locate(const Rational& lambda) const {
        std::size_t j = 0;
        while (j < breakpoints.size() && breakpoints[j] < lambda) ++j;
        return j;
    }

    /// Best profit the partition certifies at lambda. Breakpoints belong to
    /// both adjacent cells, so both are considered there.
    BigInt profit_at(const Rational& lambda) const {
        if (cells.empty()) return 0;
        std::size_t j = locate(lambda);
        BigInt best = cells[j].profit;
        if (j < breakpoints.size() && breakpoints[j] == lambda && cells[j + 1].profit > best)
            best = cells[j + 1].profit;
        return best;
    }
};

/// Structural check: strictly increasing breakpoints, cell count, stored
/// profits/weights recomputable, and each cell's solution feasible at its
/// endpoints (which, the weight being affine, covers the whole cell).
inline void validate_partition(const ParametricInstance& inst, const SolutionPartition& part) {
    if (part.cells.size() != part.breakpoints.size() + 1)
        throw std::logic_error("partition: cell/breakpoint count mismatch");
    for (std::size_t i = 0; i + 1 < part.breakpoints.size(); ++i)
        if (!(part.breakpoints[i] < part.breakpoints[i + 1]))
            throw std::logic_error("partition: breakpoints not strictly increasing");
    for (std::size_t j = 0; j < part.cells.size(); ++j) {
        const KnapsackSolution& s = part.cells[j];
        if (s.chosen.size() != inst.size()) throw std::logic_error("partition: solution size mismatch");
        if (weight_of(inst, s.chosen) != s.weight || profit_of(inst, s.chosen) != s.profit)
            throw std::logic_error("partition: stored solution values inconsistent");
        if (!feasible_on(inst, s, part.cell_interval(j)))
            throw std::logic_error("partition: cell solution infeasible on its cell");
    }
}

}  // namespace parknap
