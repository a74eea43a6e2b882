#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridgelab/graph.hpp"

namespace bridgelab {

/// Raised when an enumeration request exceeds the class's feasibility cap
/// (CLI maps this to exit code 3).
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A set of labelled graphs given by a membership predicate, with an
/// exhaustive per-level enumerator. Membership must be pure.
class GraphClass {
public:
    virtual ~GraphClass() = default;

    virtual std::string name() const = 0;
    virtual bool contains(const Graph& g) const = 0;

    // Largest n enumerate() accepts without an explicit override.
    virtual int default_cap() const { return 7; }

    // Declared properties; the mechanical checkers must confirm them.
    virtual bool declared_bridge_addable() const { return false; }
    virtual bool declared_bridge_alterable() const { return false; }

    /// Visits each member on vertex set {0..n-1} exactly once, in
    /// ascending edge-mask order. The Graph reference is only valid
    /// during the visit.
    virtual void enumerate(int n, const GraphVisitor& visit) const;
};

/// all_graphs | forests | pseudoforests | block_clique | planar_small,
/// or "cmd:<path>" for an external predicate process.
std::shared_ptr<const GraphClass> make_class(const std::string& spec);
std::vector<std::string> builtin_class_names();

/// Wraps an arbitrary predicate (used for tests and the Y/N protocol).
std::shared_ptr<const GraphClass> predicate_class(std::string name,
                                                  std::function<bool(const Graph&)> pred,
                                                  int cap = 7);

void check_cap(const GraphClass& cls, int n, std::optional<int> max_n_override = {});

struct ClassCheckResult {
    bool ok = false;
    std::optional<Graph> witness;               // failing member
    std::optional<std::pair<int, int>> edge;    // offending pair (0-based)
    std::string detail;
};

// True iff adding any cross pair to any member stays in the class.
ClassCheckResult check_bridge_addable(const GraphClass& cls, int n,
                                      std::optional<int> max_n_override = {});
// Bridge-addable plus closed under deleting bridges.
ClassCheckResult check_bridge_alterable(const GraphClass& cls, int n,
                                        std::optional<int> max_n_override = {});

// Membership predicates shared with the sampler.
bool is_pseudoforest(const Graph& g);
bool is_block_clique(const Graph& g);
bool is_planar_small(const Graph& g);  // n <= 8 only

std::uint64_t count_members(const GraphClass& cls, int n,
                            std::optional<int> max_n_override = {});

}  // namespace bridgelab
