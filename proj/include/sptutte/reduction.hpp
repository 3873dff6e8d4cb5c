#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sptutte/errors.hpp"
#include "sptutte/rational.hpp"

namespace sptutte {

// Result of collapsing a subgraph onto a single edge: the replacement weight
// and the multiplicative prefactor the partition function picks up. The
// prefactor is 1 unless a series reduction happened, and is never 0.
template <class T>
struct EffectiveEdge {
    T weight;
    T prefactor;
};

namespace detail {

template <class T>
std::string scalar_text(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace detail

// A bundle of parallel edges between one vertex pair collapses to a single
// edge of weight prod(1 + v_i) - 1. Total, order- and grouping-independent.
template <class T>
T parallel_weight(const std::vector<T>& weights) {
    if (weights.empty()) throw std::invalid_argument("parallel_weight: empty weight list");
    T acc(1);
    for (const T& v : weights) acc *= T(1) + v;
    return acc - T(1);
}

// A path whose internal vertices have degree 2 collapses to a single edge:
//   weight    = q * prod(v_i) / D
//   prefactor = D / q          with D = prod(v_i + q) - prod(v_i).
// Undefined at q = 0, and at any (weights, q) where D vanishes. The n-ary
// form below is primary; folding pairwise agrees with it exactly wherever
// both are defined.
template <class T>
EffectiveEdge<T> series_weight(const std::vector<T>& weights, const T& q) {
    if (weights.empty()) throw std::invalid_argument("series_weight: empty weight list");
    if (q == T(0)) throw InvalidQ("series reduction is undefined at q = 0");
    T shifted(1);
    T plain(1);
    for (const T& v : weights) {
        shifted *= v + q;
        plain *= v;
    }
    const T denom = shifted - plain;
    if (denom == T(0)) {
        throw SingularPoint("series reduction denominator vanishes at q = " + detail::scalar_text(q),
                            detail::scalar_text(q));
    }
    return EffectiveEdge<T>{q * plain / denom, denom / q};
}

// Levels of a necklace: level i is the list of weights along the i-th series
// path between the two terminals. At least one level, no empty levels.
template <class T>
using NecklaceLevels = std::vector<std::vector<T>>;

using NecklaceSpec = NecklaceLevels<Rational>;

// A necklace between two terminals: level i is a series path of weights
// v_i1..v_ik. Collapses in one step to
//   weight    = prod_i (P_i + (q - 1) L_i) / (P_i - L_i) - 1
//   prefactor = prod_i (P_i - L_i) / q
// with P_i = prod_j (v_ij + q) and L_i = prod_j v_ij. This equals reducing
// each level in series and then all levels in parallel, with the per-level
// prefactors multiplied out.
template <class T>
EffectiveEdge<T> necklace_weight(const std::vector<std::vector<T>>& levels, const T& q) {
    if (levels.empty()) throw std::invalid_argument("necklace_weight: no levels");
    if (q == T(0)) throw InvalidQ("necklace reduction is undefined at q = 0");
    T factor_product(1);
    T prefactor(1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const std::vector<T>& level = levels[i];
        if (level.empty()) throw std::invalid_argument("necklace_weight: empty level");
        T shifted(1);
        T plain(1);
        for (const T& v : level) {
            shifted *= v + q;
            plain *= v;
        }
        const T denom = shifted - plain;
        if (denom == T(0)) {
            throw SingularPoint("necklace level " + std::to_string(i) +
                                    " denominator vanishes at q = " + detail::scalar_text(q),
                                detail::scalar_text(q));
        }
        factor_product *= (shifted + (q - T(1)) * plain) / denom;
        prefactor *= denom / q;
    }
    return EffectiveEdge<T>{factor_product - T(1), prefactor};
}

} // namespace sptutte
