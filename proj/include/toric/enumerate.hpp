#ifndef TORIC_ENUMERATE_HPP
#define TORIC_ENUMERATE_HPP

#include <stdexcept>
#include <string>
#include <vector>
#include "toric/fan.hpp"
#include "toric/heights.hpp"
#include "toric/points.hpp"

namespace toric {

// m-full positive integers <= X (every prime valuation 0 or >= m), sorted
std::vector<long> enumerate_mfull(long X, long m);
// perfect m-th powers <= X, sorted
std::vector<long> enumerate_mth_powers(long X, long m);

struct EnumOptions {
    int workers = 1;
    // node budget for the generic fallback search; exceeding it refuses
    long long fallback_budget = 50'000'000;
    bool force_fallback = false;  // for equivalence testing
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// descending-by-2 grid B, B/2, ..., returned ascending; at least min_points
// entries when B allows, all >= 1
std::vector<Rat> checkpoint_grid(const Rat& bound, int min_points = 8,
                                 int max_points = 12);

struct CountRun {
    std::string fan_name;
    std::string weights;
    std::string variant;
    Rat bound;
    std::vector<Rat> checkpoints;        // ascending
    std::vector<long long> counts;       // aligned with checkpoints
    double elapsed_ms = 0;
    bool used_fallback = false;
    std::string note;

    long long final_count() const { return counts.empty() ? 0 : counts.back(); }
    std::string csv() const;  // B,count,variant,fan,weights,elapsed_ms rows
};

// true when a specialized counting path exists for this input
bool fast_path_available(const Fan& f, const OrbifoldWeights& w, Variant variant);

CountRun count_points(const Fan& f, const OrbifoldWeights& w, Variant variant,
                      const Rat& bound, const EnumOptions& opt = {});

// materialized point list in canonical order (exact height, then lex);
// intended for small bounds
std::vector<TorusPoint> enumerate_points(const Fan& f, const OrbifoldWeights& w,
                                         Variant variant, const Rat& bound,
                                         const EnumOptions& opt = {});

}  // namespace toric

#endif
