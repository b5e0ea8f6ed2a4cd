#pragma once

// Atiyah-Bott fixed-point evaluation of the degree-one section count A_a for
// O(-n) -> P^m, at explicit rational torus weights. Used as an oracle that
// is independent of the tau_{a,n} closed form.

#include "shcalc/novikov.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace shcalc {

/// Torus weights alpha_0..alpha_m acting on P^m; must be pairwise distinct.
struct WeightVector {
    std::vector<Rational> alphas;

    std::size_t size() const { return alphas.size(); }
    bool pairwise_distinct() const;
};

enum class NodeSide { NodeAtInfinity, NodeAtZero };

/// A fixed stable map: u(0) = p_{0i}, u(inf) = p_{1j}, node over infinity
/// (the Gamma_{1ij} family) or over zero (Gamma_{ij0}).
struct FixedPointGraph {
    int i = 0;
    int j = 0;
    NodeSide side = NodeSide::NodeAtInfinity;
};

/// Equivariant weights entering 1/e(N^vir) for one fixed graph, before the
/// two graphs sharing (i, j) are merged.
struct GraphWeights {
    Rational node_smoothing;                  // Def(C)^mov
    std::vector<Rational> marked_point_moves; // Def(u)^mov
    Rational line_obstruction;                // O(-1,-n) at the node
    std::vector<Rational> bubble_obstruction; // H^1(O(-n)) on the bubble
};

GraphWeights graph_weights(const FixedPointGraph& graph, int m, int n, int a, const WeightVector& w);

/// 1/e(N^vir) for a single graph, from graph_weights.
Rational graph_contribution(const FixedPointGraph& graph, int m, int n, int a, const WeightVector& w);

/// Index ranges {0..a} and {m-(n-a-1)..m} of the fixed points on P^a and
/// P^{n-a-1}.
std::pair<int, int> source_range(int a);
std::pair<int, int> target_range(int m, int n, int a);

/// Merged contribution of Gamma_{1ij} and Gamma_{ij0}, with the common node
/// factor cancelled:
///   -n prod_{A+B=n} (A a_i + B a_j) / (prod_{I != i} (a_i - a_I) prod_{J != j} (a_j - a_J)).
Rational graph_contribution_pair(int i, int j, int m, int n, int a, const WeightVector& w);

/// Full fixed-point sum rescaled by -n; equals n^2 tau_{a,n}.
Rational localize_Aa(int m, int n, int a, const WeightVector& w);

/// The two graph contributions for O(-1) -> P^1: -a0/(a0-a1), -a1/(a1-a0).
std::pair<Rational, Rational> localize_O1P1_graphs(const Rational& a0, const Rational& a1);

/// Deterministic pairwise-distinct small-denominator weights for P^m.
WeightVector sample_weights(int m, std::uint64_t seed);

}  // namespace shcalc
