#include "sandgraph/edge_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sandgraph/factor.hpp"
#include "sandgraph/rng.hpp"

namespace sandgraph {

EdgeModel EdgeModel::from_pmf(const std::map<std::uint64_t, double>& pmf, double epsilon) {
    EdgeModel m = unchecked(pmf, epsilon);
    if (!check_epsilon_balanced(m, epsilon))
        throw std::invalid_argument("edge model: fails declared epsilon balance");
    return m;
}

EdgeModel EdgeModel::unchecked(const std::map<std::uint64_t, double>& pmf, double epsilon) {
    if (pmf.empty()) throw std::invalid_argument("edge model: empty support");
    double total = 0.0;
    for (const auto& [v, p] : pmf) {
        if (p <= 0.0) throw std::invalid_argument("edge model: probabilities must be positive");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("edge model: probabilities must sum to 1");
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("edge model: epsilon must lie in (0,1)");
    EdgeModel m;
    for (const auto& [v, p] : pmf) m.pmf_.emplace_back(v, p);
    double acc = 0.0;
    for (const auto& [v, p] : m.pmf_) {
        acc += p;
        m.cdf_.push_back(acc);
    }
    m.cdf_.back() = 1.0;
    m.epsilon_ = epsilon;
    return m;
}

EdgeModel EdgeModel::bernoulli(double q) {
    if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("bernoulli: q must lie in (0,1)");
    return from_pmf({{0, 1.0 - q}, {1, q}}, std::min(q, 1.0 - q));
}

EdgeModel EdgeModel::uniform_multiplicity(std::uint64_t max_value) {
    if (max_value == 0) throw std::invalid_argument("uniform model needs at least two support points");
    std::map<std::uint64_t, double> pmf;
    for (std::uint64_t v = 0; v <= max_value; ++v) pmf[v] = 1.0 / static_cast<double>(max_value + 1);
    EdgeModel probe = unchecked(pmf, 0.5 / static_cast<double>(max_value + 1));
    return from_pmf(pmf, max_balance(probe));
}

std::uint64_t EdgeModel::sample(std::mt19937_64& eng) const {
    double u = uniform01(eng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
    if (idx >= pmf_.size()) idx = pmf_.size() - 1;
    return pmf_[idx].first;
}

namespace {

double worst_residue_mass(const EdgeModel& model) {
    const auto& pmf = model.pmf();
    double worst = 0.0;
    for (const auto& [v, p] : pmf) worst = std::max(worst, p); // settles all large primes
    std::uint64_t lo = pmf.front().first, hi = pmf.back().first;
    for (std::uint64_t p = 2; p <= hi - lo; ++p) {
        if (!is_prime(p)) continue;
        std::map<std::uint64_t, double> residue;
        for (const auto& [v, w] : pmf) residue[v % p] += w;
        for (const auto& [r, w] : residue) worst = std::max(worst, w);
    }
    return worst;
}

} // namespace

bool check_epsilon_balanced(const EdgeModel& model, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (model.pmf().empty()) throw std::invalid_argument("edge model: empty support");
    return worst_residue_mass(model) <= 1.0 - eps + 1e-15;
}

double max_balance(const EdgeModel& model) {
    return 1.0 - worst_residue_mass(model);
}

EdgeModel parse_edge_model(const std::string& spec, double q) {
    if (spec == "bernoulli") return EdgeModel::bernoulli(q);
    if (spec.rfind("uniform:", 0) == 0) {
        std::uint64_t k = std::stoull(spec.substr(8));
        return EdgeModel::uniform_multiplicity(k);
    }
    if (spec == "uniform") return EdgeModel::uniform_multiplicity(2);
    // Otherwise a JSON file: {"pmf": {"0": 0.5, "1": 0.5}, "epsilon": 0.5}
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open model file: " + spec);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::map<std::uint64_t, double> pmf;
    for (const auto& [key, val] : doc.at("pmf").items())
        pmf[std::stoull(key)] = val.get<double>();
    double eps = doc.at("epsilon").get<double>();
    return EdgeModel::from_pmf(pmf, eps);
}

} // namespace sandgraph
