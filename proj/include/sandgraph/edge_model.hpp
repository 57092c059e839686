#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace sandgraph {

// Finite-support distribution over nonnegative integer edge multiplicities,
// together with the balance margin it claims: no residue class modulo any
// prime carries mass above 1 - epsilon.
class EdgeModel {
public:
    // Validating constructors; throw when the pmf is not a probability
    // distribution or fails the declared balance margin.
    static EdgeModel from_pmf(const std::map<std::uint64_t, double>& pmf, double epsilon);
    static EdgeModel bernoulli(double q);                       // {0,1}, epsilon = min(q, 1-q)
    static EdgeModel uniform_multiplicity(std::uint64_t max_value); // {0..max}, best epsilon

    // Skips the balance check (degenerate models for tests).
    static EdgeModel unchecked(const std::map<std::uint64_t, double>& pmf, double epsilon);

    const std::vector<std::pair<std::uint64_t, double>>& pmf() const { return pmf_; }
    double declared_epsilon() const { return epsilon_; }

    std::uint64_t sample(std::mt19937_64& eng) const;

private:
    std::vector<std::pair<std::uint64_t, double>> pmf_; // sorted by value
    std::vector<double> cdf_;
    double epsilon_ = 0.0;
};

// True iff every residue class mod every prime up to the support span, and
// every single support point, carries mass at most 1 - eps. Single-point
// masses settle all larger primes: distinct support values land in distinct
// residue classes once p exceeds the span.
bool check_epsilon_balanced(const EdgeModel& model, double eps);

// The largest margin the model satisfies.
double max_balance(const EdgeModel& model);

// "bernoulli" (with q), "uniform:K", or a path to a JSON pmf file.
EdgeModel parse_edge_model(const std::string& spec, double q);

} // namespace sandgraph
