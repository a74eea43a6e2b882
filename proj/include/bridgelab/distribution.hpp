#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "bridgelab/classes.hpp"
#include "bridgelab/rational.hpp"
#include "bridgelab/weighting.hpp"

namespace bridgelab {

/// Exact pmf of an integer statistic; masses are rationals summing to 1.
class Distribution {
public:
    explicit Distribution(std::map<int, Rational> unnormalized_masses);

    const std::map<int, Rational>& pmf() const { return pmf_; }
    Rational pr(int value) const;
    Rational tail_geq(int t) const;  // Pr(X >= t)
    Rational cdf_leq(int t) const;
    Rational mean() const;
    int min_value() const { return pmf_.begin()->first; }
    int max_value() const { return pmf_.rbegin()->first; }

    /// The law of X - shift (used for component counts less one).
    Distribution shifted(int shift) const;

private:
    std::map<int, Rational> pmf_;
};

enum class Statistic { kKappa, kFrag, kBridges };
Statistic statistic_from_name(const std::string& name);
std::string statistic_name(Statistic s);

/// One enumeration pass per (class, n), shared by every catalog
/// weighting, statistic and the rooted laws: graphs are aggregated by
/// (edges, bridges, components, fragment) with a count and the total
/// rooting multiplicity (product of component sizes).
struct StatCell {
    std::uint64_t count = 0;
    std::uint64_t rootings = 0;
};

struct StatKey {
    std::uint8_t edges, bridges, kappa, frag;
    auto operator<=>(const StatKey&) const = default;
};

struct StatTable {
    int n = 0;
    std::map<StatKey, StatCell> cells;
    std::uint64_t total_graphs = 0;
};

/// Cached per (class name, n); enumeration honors the class cap unless
/// overridden.
const StatTable& stat_table(const GraphClass& cls, int n,
                            std::optional<int> max_n_override = {});

Distribution statistic_distribution(const GraphClass& cls, int n, const Weighting& w,
                                    Statistic stat, std::optional<int> max_n_override = {});

struct ClassMoments {
    Rational total_mass;
    Rational p_connected;
    Rational e_kappa;
    Rational e_frag;
};
ClassMoments class_moments(const GraphClass& cls, int n, const Weighting& w,
                           std::optional<int> max_n_override = {});

}  // namespace bridgelab
