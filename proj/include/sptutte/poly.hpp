#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sptutte/errors.hpp"
#include "sptutte/evaluate.hpp"
#include "sptutte/rational.hpp"

namespace sptutte {

// Dense univariate polynomial in q with exact rational coefficients, stored
// in ascending powers with trailing zeros trimmed.
class PolyQ {
public:
    PolyQ() = default;

    explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for the zero polynomial

    Rational coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Rational(0);
    }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational at(const Rational& q) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * q + coeffs_[i];
        }
        return acc;
    }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    // Human-readable form, ascending powers, zero terms skipped, unit
    // coefficients elided: "q + q^2", "2q - 3q^2 + q^3", "(3/2)q^2".
    std::string pretty() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            const bool negative = c.sign() < 0;
            if (!first) {
                out += negative ? " - " : " + ";
            } else if (negative) {
                out += "-";
            }
            const Rational mag = negative ? -c : c;
            const bool unit = (mag == Rational(1));
            if (i == 0) {
                out += mag.str();
            } else {
                if (!unit) {
                    out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
                }
                out += "q";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Unique polynomial of degree < points.size() through the given points
// (Newton divided differences, expanded to monomial coefficients).
inline PolyQ interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    const std::size_t m = points.size();
    std::vector<Rational> dd;
    dd.reserve(m);
    for (const auto& p : points) dd.push_back(p.second);
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
        }
    }
    std::vector<Rational> coeffs{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        // coeffs <- coeffs * (q - x_i) + dd[i]
        coeffs.insert(coeffs.begin(), Rational(0));
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
            coeffs[k] -= points[i].first * coeffs[k + 1];
        }
        coeffs[0] += dd[i];
    }
    return PolyQ(std::move(coeffs));
}

// Recovers the partition function as a polynomial in q for fixed weights.
// The value at |V|+1 distinct nonzero points determines it: the degree of a
// graph's partition polynomial is |V| (the empty edge subset contributes
// q^|V|, everything else lower order). Sample points run 1, 2, 3, ...;
// singular points are skipped, and failing to find enough good points among
// the first 8(|V|+1) candidates is reported (not expected in practice, since
// singular q are roots of finitely many polynomials). Z(0) = 0 is checked as
// a free consistency constraint after the fit.
inline PolyQ partition_polynomial(const WeightedMultigraph& g, bool reduce_pendants = false,
                                  const std::optional<Rational>& weight_override = std::nullopt) {
    const auto weights = detail::request_weights(g, weight_override);
    const auto prep = PreparedEvaluation<Rational>::prepare(g, weights, reduce_pendants);

    const std::size_t needed = static_cast<std::size_t>(g.vertex_count()) + 1;
    const long long limit = 8LL * static_cast<long long>(needed);
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(needed);
    for (long long k = 1; k <= limit && points.size() < needed; ++k) {
        const Rational q(k);
        try {
            points.emplace_back(q, prep.at(q));
        } catch (const SingularPoint&) {
            continue;
        }
    }
    if (points.size() < needed) {
        throw InterpolationFailure("could not find " + std::to_string(needed) +
                                   " nonsingular sample points among the first " +
                                   std::to_string(limit) + " candidates");
    }

    PolyQ poly = interpolate(points);
    if (!poly.coefficient(0).is_zero()) {
        throw std::logic_error("partition polynomial has a nonzero constant term");
    }
    return poly;
}

// Chromatic polynomial: the all-weights -1 specialization. At any positive
// integer q it counts proper q-colorings.
inline PolyQ chromatic_polynomial(const WeightedMultigraph& g, bool reduce_pendants = false) {
    return partition_polynomial(g, reduce_pendants, Rational(-1));
}

} // namespace sptutte
