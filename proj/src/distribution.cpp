#include "bridgelab/distribution.hpp"

#include <mutex>

namespace bridgelab {

Distribution::Distribution(std::map<int, Rational> unnormalized_masses) {
    Rational total = 0;
    for (auto it = unnormalized_masses.begin(); it != unnormalized_masses.end();) {
        if (it->second < 0) throw std::domain_error("negative mass in distribution");
        if (it->second == 0) {
            it = unnormalized_masses.erase(it);
            continue;
        }
        total += it->second;
        ++it;
    }
    if (total <= 0) throw std::domain_error("distribution has zero total mass");
    for (auto& [value, mass] : unnormalized_masses) mass /= total;
    pmf_ = std::move(unnormalized_masses);
}

Rational Distribution::pr(int value) const {
    auto it = pmf_.find(value);
    return it == pmf_.end() ? Rational(0) : it->second;
}

Rational Distribution::tail_geq(int t) const {
    Rational acc = 0;
    for (auto it = pmf_.lower_bound(t); it != pmf_.end(); ++it) acc += it->second;
    return acc;
}

Rational Distribution::cdf_leq(int t) const { return Rational(1) - tail_geq(t + 1); }

Rational Distribution::mean() const {
    Rational acc = 0;
    for (const auto& [value, mass] : pmf_) acc += value * mass;
    return acc;
}

Distribution Distribution::shifted(int shift) const {
    std::map<int, Rational> out;
    for (const auto& [value, mass] : pmf_) out[value - shift] = mass;
    return Distribution(std::move(out));
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "kappa") return Statistic::kKappa;
    if (name == "frag") return Statistic::kFrag;
    if (name == "bridges") return Statistic::kBridges;
    throw std::invalid_argument("unknown statistic '" + name + "' (kappa|frag|bridges)");
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::kKappa: return "kappa";
        case Statistic::kFrag: return "frag";
        case Statistic::kBridges: return "bridges";
    }
    return "?";
}

namespace {

std::uint64_t rooting_multiplicity(const Graph& g) {
    std::uint64_t mult = 1;
    for (int s : components(g).sizes) mult *= static_cast<std::uint64_t>(s);
    return mult;
}

struct TableCache {
    std::mutex mu;
    std::map<std::pair<std::string, int>, StatTable> tables;
};

TableCache& table_cache() {
    static TableCache c;
    return c;
}

}  // namespace

const StatTable& stat_table(const GraphClass& cls, int n, std::optional<int> max_n_override) {
    auto key = std::make_pair(cls.name(), n);
    {
        std::lock_guard lock(table_cache().mu);
        auto it = table_cache().tables.find(key);
        if (it != table_cache().tables.end()) return it->second;
    }
    check_cap(cls, n, max_n_override);
    StatTable table;
    table.n = n;
    cls.enumerate(n, [&](const Graph& g) {
        StatKey sk{static_cast<std::uint8_t>(g.edge_count()),
                   static_cast<std::uint8_t>(bridge_count(g)),
                   static_cast<std::uint8_t>(component_count(g)),
                   static_cast<std::uint8_t>(fragment(g))};
        StatCell& cell = table.cells[sk];
        cell.count += 1;
        cell.rootings += rooting_multiplicity(g);
        table.total_graphs += 1;
    });
    std::lock_guard lock(table_cache().mu);
    return table_cache().tables.emplace(key, std::move(table)).first->second;
}

Distribution statistic_distribution(const GraphClass& cls, int n, const Weighting& w,
                                    Statistic stat, std::optional<int> max_n_override) {
    std::map<int, Rational> masses;
    auto value_of = [stat](const StatKey& k) {
        switch (stat) {
            case Statistic::kKappa: return static_cast<int>(k.kappa);
            case Statistic::kFrag: return static_cast<int>(k.frag);
            case Statistic::kBridges: return static_cast<int>(k.bridges);
        }
        return 0;
    };
    if (w.is_catalog()) {
        const StatTable& table = stat_table(cls, n, max_n_override);
        for (const auto& [key, cell] : table.cells) {
            Rational mass = w.tau_from_stats(key.edges, key.bridges, key.kappa);
            masses[value_of(key)] += mass * Rational(static_cast<unsigned long>(cell.count));
        }
    } else {
        check_cap(cls, n, max_n_override);
        cls.enumerate(n, [&](const Graph& g) {
            int value = 0;
            switch (stat) {
                case Statistic::kKappa: value = component_count(g); break;
                case Statistic::kFrag: value = fragment(g); break;
                case Statistic::kBridges: value = bridge_count(g); break;
            }
            masses[value] += w.tau(g);
        });
    }
    return Distribution(std::move(masses));
}

ClassMoments class_moments(const GraphClass& cls, int n, const Weighting& w,
                           std::optional<int> max_n_override) {
    ClassMoments m{0, 0, 0, 0};
    if (w.is_catalog()) {
        const StatTable& table = stat_table(cls, n, max_n_override);
        for (const auto& [key, cell] : table.cells) {
            Rational mass = w.tau_from_stats(key.edges, key.bridges, key.kappa) *
                            Rational(static_cast<unsigned long>(cell.count));
            m.total_mass += mass;
            if (key.kappa == 1) m.p_connected += mass;
            m.e_kappa += mass * key.kappa;
            m.e_frag += mass * key.frag;
        }
    } else {
        check_cap(cls, n, max_n_override);
        cls.enumerate(n, [&](const Graph& g) {
            Rational mass = w.tau(g);
            int kappa = component_count(g);
            m.total_mass += mass;
            if (kappa == 1) m.p_connected += mass;
            m.e_kappa += mass * kappa;
            m.e_frag += mass * fragment(g);
        });
    }
    if (m.total_mass <= 0)
        throw std::domain_error("zero total mass for class '" + cls.name() + "'");
    m.p_connected /= m.total_mass;
    m.e_kappa /= m.total_mass;
    m.e_frag /= m.total_mass;
    return m;
}

}  // namespace bridgelab
