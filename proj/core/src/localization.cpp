#include "shcalc/localization.hpp"

#include "shcalc/gw_entries.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace shcalc {

bool WeightVector::pairwise_distinct() const {
    std::set<Rational> seen(alphas.begin(), alphas.end());
    return seen.size() == alphas.size();
}

std::pair<int, int> source_range(int a) { return {0, a}; }

std::pair<int, int> target_range(int m, int n, int a) { return {m - (n - a - 1), m}; }

namespace {

void check_inputs(int m, int n, int a, const WeightVector& w) {
    if (m < 1 || n < 1 || n >= 1 + m)
        throw RegimeError("localization needs 1 <= n < 1+m (got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
    if (a < 0 || a > n - 1)
        throw RegimeError("localization index a=" + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
    if (w.size() != static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                                    std::to_string(m + 1));
    if (!w.pairwise_distinct()) throw std::invalid_argument("torus weights must be pairwise distinct");
}

void check_indices(int i, int j, int m, int n, int a) {
    auto [i0, i1] = source_range(a);
    auto [j0, j1] = target_range(m, n, a);
    if (i < i0 || i > i1 || j < j0 || j > j1)
        throw std::out_of_range("fixed point indices (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside the source/target ranges");
}

Rational bubble_product(int n, const Rational& ai, const Rational& aj) {
    Rational p = 1;
    for (int A = 1; A < n; ++A) p *= A * ai + (n - A) * aj;
    return p;
}

}  // namespace

GraphWeights graph_weights(const FixedPointGraph& graph, int m, int n, int a, const WeightVector& w) {
    check_inputs(m, n, a, w);
    check_indices(graph.i, graph.j, m, n, a);
    const Rational& ai = w.alphas[static_cast<std::size_t>(graph.i)];
    const Rational& aj = w.alphas[static_cast<std::size_t>(graph.j)];
    const bool at_infinity = graph.side == NodeSide::NodeAtInfinity;

    GraphWeights out;
    out.node_smoothing = at_infinity ? Rational(ai - aj) : Rational(aj - ai);
    out.line_obstruction = at_infinity ? Rational(-n * ai) : Rational(-n * aj);
    auto [i0, i1] = source_range(a);
    for (int I = i0; I <= i1; ++I)
        if (I != graph.i) out.marked_point_moves.push_back(ai - w.alphas[static_cast<std::size_t>(I)]);
    auto [j0, j1] = target_range(m, n, a);
    for (int J = j0; J <= j1; ++J)
        if (J != graph.j) out.marked_point_moves.push_back(aj - w.alphas[static_cast<std::size_t>(J)]);
    for (int A = 1; A < n; ++A) out.bubble_obstruction.push_back(A * ai + (n - A) * aj);
    return out;
}

Rational graph_contribution(const FixedPointGraph& graph, int m, int n, int a, const WeightVector& w) {
    const GraphWeights gw = graph_weights(graph, m, n, a, w);
    Rational num = gw.line_obstruction;
    for (const auto& x : gw.bubble_obstruction) num *= x;
    Rational den = gw.node_smoothing;
    for (const auto& x : gw.marked_point_moves) den *= x;
    return num / den;
}

Rational graph_contribution_pair(int i, int j, int m, int n, int a, const WeightVector& w) {
    check_inputs(m, n, a, w);
    check_indices(i, j, m, n, a);
    const Rational& ai = w.alphas[static_cast<std::size_t>(i)];
    const Rational& aj = w.alphas[static_cast<std::size_t>(j)];
    Rational den = 1;
    auto [i0, i1] = source_range(a);
    for (int I = i0; I <= i1; ++I)
        if (I != i) den *= ai - w.alphas[static_cast<std::size_t>(I)];
    auto [j0, j1] = target_range(m, n, a);
    for (int J = j0; J <= j1; ++J)
        if (J != j) den *= aj - w.alphas[static_cast<std::size_t>(J)];
    return Rational(-n) * bubble_product(n, ai, aj) / den;
}

Rational localize_Aa(int m, int n, int a, const WeightVector& w) {
    check_inputs(m, n, a, w);
    auto [i0, i1] = source_range(a);
    auto [j0, j1] = target_range(m, n, a);
    Rational sum = 0;
    for (int i = i0; i <= i1; ++i)
        for (int j = j0; j <= j1; ++j) sum += graph_contribution_pair(i, j, m, n, a, w);
    // Each of the -n copies of P^{n-a-1} was counted once.
    return Rational(-n) * sum;
}

std::pair<Rational, Rational> localize_O1P1_graphs(const Rational& a0, const Rational& a1) {
    if (a0 == a1) throw std::invalid_argument("O(-1)->P^1 localization needs distinct weights");
    const WeightVector w{{a0, a1}};
    return {graph_contribution({0, 1, NodeSide::NodeAtInfinity}, 1, 1, 0, w),
            graph_contribution({0, 1, NodeSide::NodeAtZero}, 1, 1, 0, w)};
}

WeightVector sample_weights(int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample_weights: m must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> base(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) base[static_cast<std::size_t>(k)] = k;
    for (std::size_t k = base.size() - 1; k > 0; --k) {
        std::uniform_int_distribution<std::size_t> pick(0, k);
        std::swap(base[k], base[pick(rng)]);
    }
    std::uniform_int_distribution<int> den_dist(2, 9);
    WeightVector w;
    std::set<Rational> used;
    for (int b : base) {
        Rational x;
        do {
            const int den = den_dist(rng);
            std::uniform_int_distribution<int> num_dist(0, den - 1);
            x = Rational(3 * b) + Rational(num_dist(rng), den);
            x.canonicalize();
        } while (used.count(x) != 0);
        used.insert(x);
        w.alphas.push_back(x);
    }
    return w;
}

}  // namespace shcalc
