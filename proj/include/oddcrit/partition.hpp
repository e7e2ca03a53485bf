#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oddcrit/graph.hpp"
#include "oddcrit/spectral.hpp"

namespace oddcrit {

// Ordered cells of disjoint, nonempty vertex sets covering {0..n-1}.
class Partition {
public:
    // Throws std::invalid_argument if the cells are not a partition of {0..n-1}.
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells);

    static Partition discrete(std::size_t n);
    static Partition trivial(std::size_t n);

    std::size_t ground_size() const noexcept { return n_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<std::size_t>& cell(std::size_t i) const { return cells_.at(i); }
    const std::vector<std::vector<std::size_t>>& cells() const noexcept { return cells_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> cells_;
};

// Row-major m x m matrix of block average row sums. Generally not symmetric.
struct QuotientMatrix {
    std::size_t order = 0;
    std::vector<double> entries;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

QuotientMatrix quotient(const SymMatrix& m, const Partition& p);

// Exact block row-sum comparison for integer matrices, 1e-9 tolerance otherwise.
bool is_equitable(const SymMatrix& m, const Partition& p);

// Cells [join vertices, first part, remaining parts] of family(s, parts); empty cells omitted.
Partition join_partition(int s, std::span<const int> parts);

// Positive unit eigenvector of the largest eigenvalue. Throws std::invalid_argument on negative
// entries or a reducible pattern (including the zero matrix).
std::vector<double> perron_vector(const SymMatrix& m);

// Largest population standard deviation of the vector's entries within any cell.
double max_within_cell_stddev(std::span<const double> vec, const Partition& p);

// Real roots of a 3x3 matrix's characteristic polynomial x^3 - tr x^2 + c1 x - det, descending,
// via the trigonometric / Cardano closed form plus Newton polishing.
std::vector<double> cubic_quotient_roots(const QuotientMatrix& q);

// Eigenvalues of an equitable quotient of a symmetric matrix through the similar symmetric matrix
// diag(|X_i|)^{1/2} R diag(|X_i|)^{-1/2}, solved with the Jacobi kernel. Descending.
std::vector<double> symmetrized_quotient_eigenvalues(const SymMatrix& m, const Partition& p);

// The 3x3 quotients of the join partition written out in closed form.
enum class ProofGraph { gprime, g2, g3 };
enum class DistanceKind { distance, distance_signless_laplacian };

QuotientMatrix closed_form_quotient(ProofGraph graph, DistanceKind kind, const ExtremalParams& p);
Graph build_proof_graph(ProofGraph graph, const ExtremalParams& p);
std::vector<int> proof_graph_parts(ProofGraph graph, const ExtremalParams& p);
int proof_graph_join_size(ProofGraph graph, const ExtremalParams& p);

}  // namespace oddcrit
