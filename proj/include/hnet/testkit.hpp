#ifndef HNET_TESTKIT_HPP
#define HNET_TESTKIT_HPP

// Seeded generators and independent oracles for the law suite. Nothing here
// calls the operator implementations.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "hnet/hypernetwork.hpp"

namespace hnet::testkit {

struct GenConfig {
    int max_vertices = 6;
    int max_hypersimplices = 5;
    int max_arity = 3;
    int max_boundaries = 3;
    double alpha_beta_ratio = 0.5;  // probability that a hypersimplex is alpha
    double percolation_probability = 0.5;
    std::uint64_t seed = 0;
};

// Valid hypernetwork, a pure function of `cfg`. Ids come from a fixed
// namespace (v0.., h0.., b0..) and relation symbols from a three-symbol pool,
// so independently generated models collide on names.
Hypernetwork gen_valid(const GenConfig& cfg);

// Vertices and anti-vertices only.
Hypernetwork gen_flat(const GenConfig& cfg);

// Two models from the shared namespace. The second is independent on odd
// seeds and a perturbed copy of the first on even seeds.
std::pair<Hypernetwork, Hypernetwork> gen_pair(const GenConfig& cfg);

// (small, big) with small drawn from big's elements (closed over participants),
// sometimes with one tag added or removed.
std::pair<Hypernetwork, Hypernetwork> gen_sub_pair(const GenConfig& cfg);

// Longest chain of hypersimplex-in-hypersimplex containment, counting the
// outermost hypersimplex as depth 1.
int nesting_depth(const Hypernetwork& h);

class OperandNotFlat : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SetOps {
    std::set<std::string> union_ids;
    std::set<std::string> intersection_ids;
    std::set<std::string> difference_ids;
};

SetOps oracle_set_ops(const Hypernetwork& h1, const Hypernetwork& h2);

constexpr std::size_t kOracleSubhnLimit = 8;

// Exhaustive element matching; throws TooLarge above kOracleSubhnLimit elements.
bool oracle_subhn(const Hypernetwork& h_small, const Hypernetwork& h_big);

} // namespace hnet::testkit

#endif // HNET_TESTKIT_HPP
