#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin {

// A verified potential maximal clique together with the minimal separators
// contained in it (the neighborhoods of the components of G \ omega).
struct Pmc {
    VertexSet omega;
    std::vector<VertexSet> separators;
    int fill = 0; // non-edges inside omega
};

// Deduplicated set of vital PMCs keyed by canonical omega. Inserts are
// filtered by the vitality bound fill <= budget.
class PmcCatalog {
public:
    PmcCatalog() = default;
    PmcCatalog(std::uint64_t graph_fingerprint, int budget)
        : fp_(graph_fingerprint), budget_(budget)
    {
    }

    // Set-semantics insert; drops entries that exceed the budget.
    // Returns true when the entry is (now) present.
    bool insert(Pmc p);

    const std::map<VertexSet, Pmc>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int budget() const { return budget_; }
    std::uint64_t graph_fingerprint() const { return fp_; }

    // One PMC per line, space-separated sorted vertex ids.
    std::string export_text() const;
    static PmcCatalog import_text(const std::string& text, const Graph& g, int budget);

private:
    std::uint64_t fp_ = 0;
    int budget_ = 0;
    std::map<VertexSet, Pmc> entries_;
};

// Square-root threshold used by both branching and enumeration:
// t = max(1, ceil(sqrt(k))). A single convention keeps the two coupled.
int sqrt_threshold(int k);

// Components C of G \ s with N(C) = s exactly.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

// True iff s has at least two full components.
bool is_minimal_separator(const Graph& g, const VertexSet& s);

// Checks the two-part characterization: no full component associated to
// omega, and completing every component neighborhood makes omega complete.
std::optional<Pmc> verify_pmc(const Graph& g, const VertexSet& omega);

bool is_vital(const Graph& g, const VertexSet& omega, int k);

// All PMCs that become cliques after deleting at most z_max vertices
// (default 5t). Output entries are verified and vitality-filtered.
PmcCatalog enumerate_quasi_cliques(const Graph& g, int k, int z_max = -1);

// All vital PMCs of a non-reducible instance (g, k); sound on any input.
PmcCatalog enumerate_vital_pmcs(const Graph& g, int k);

} // namespace fillin
