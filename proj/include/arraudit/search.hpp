#pragma once

#include "arraudit/core.hpp"
#include "arraudit/inequalities.hpp"
#include "arraudit/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace arraudit {

/// All nonnegative solutions of Sigma_r t_r * C(r,2) = pair_total with
/// multiplicities 2 <= r <= r_cap, in deterministic order: depth-first by
/// descending r, each count from its budget maximum down to zero, pruning
/// branches whose C(r,2) exceeds the remaining budget. Requires
/// pair_total >= 0 and r_cap >= 2.
std::vector<TVector> enumerate_tvectors(const Integer& pair_total, const Integer& r_cap);

/// Streaming variant in the same order; return false from the visitor to
/// stop early.
void enumerate_tvectors(const Integer& pair_total, const Integer& r_cap,
                        const std::function<bool(const TVector&)>& visit);

enum class SearchMode { Lines, EqualDegree, LineConic };

/// What a gated-out (not applicable) filter does to a candidate.
enum class FilterPolicy {
    PassThrough,       ///< cannot eliminate: the theorem says nothing there
    RequireApplicable, ///< candidates outside a filter's gate leave the search space
};

/// A feasibility search: which t-vectors of a fixed composition satisfy the
/// pair-count identity and survive the selected inequality filters.
struct SearchSpec {
    SearchMode mode = SearchMode::Lines;
    Integer d = 1; ///< common degree (EqualDegree mode)
    Integer k = 0; ///< component count; conic count in LineConic mode
    Integer l = 0; ///< line count (LineConic mode only)
    std::optional<Integer> r_cap;
    std::vector<InequalityKind> filters; ///< applied in canonical order
    FilterPolicy policy = FilterPolicy::PassThrough;
    std::optional<std::size_t> limit; ///< survivor cap

    static SearchSpec lines(const Integer& k);
    static SearchSpec equal_degree(const Integer& d, const Integer& k);
    static SearchSpec line_conic(const Integer& l, const Integer& k);

    ComponentSpec components() const;

    /// Pair count forced by the mode: C(k,2), d^2 C(k,2), or
    /// C(l,2) + 4 C(k,2) + 2kl.
    Integer pair_total() const;

    /// Ceiling actually enumerated: min(user cap, total degree), further
    /// narrowed to floor(2 D / 3) under RequireApplicable when a filter
    /// with that multiplicity gate is selected (outside it every candidate
    /// would be gated out anyway). Never below 2.
    Integer effective_r_cap() const;
};

struct SearchResult {
    std::vector<ArrangementClass> survivors; ///< in enumeration order
    std::size_t examined = 0;
    std::map<InequalityKind, std::size_t> eliminated_by; ///< first failing filter
    bool truncated = false; ///< the survivor cap stopped the enumeration
};

/// Run the search; examined == survivors + eliminated always holds.
SearchResult search_feasible(const SearchSpec& spec);

/// Streaming variant: survivors are handed to the callback as found (and
/// still collected in the result).
SearchResult search_feasible(const SearchSpec& spec,
                             const std::function<void(const ArrangementClass&)>& on_survivor);

} // namespace arraudit
