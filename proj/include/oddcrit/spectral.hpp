#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order);
    // Throws std::invalid_argument unless entries are finite and exactly symmetric.
    SymMatrix(std::size_t order, std::vector<double> entries);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    // Sets (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value);

    double trace() const;
    double frobenius_norm() const;
    bool is_integral() const;
    bool is_nonnegative() const;

    SymMatrix principal_submatrix(std::span<const std::size_t> indices) const;
    const std::vector<double>& entries() const noexcept { return entries_; }

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

std::string to_csv(const SymMatrix& m);

// Integer distance matrix; promoted to SymMatrix only for spectral work.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t order, std::vector<std::int64_t> entries);

    std::size_t order() const noexcept { return order_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::int64_t row_sum(std::size_t i) const;
    SymMatrix to_real() const;

private:
    std::size_t order_;
    std::vector<std::int64_t> entries_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double radius() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;                // descending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i], unit length
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below 1e-12 * ||M||_F.
Spectrum eigenvalues(const SymMatrix& m);
EigenDecomposition eigen_decompose(const SymMatrix& m);

// Power iteration for nonnegative irreducible matrices; shifted by the max row sum so the
// Perron root dominates even on bipartite patterns. Agrees with eigenvalues().radius().
double power_radius(const SymMatrix& m, double tolerance = 1e-13, int max_iterations = 200000);

enum class MatrixKind { adjacency, signless_laplacian, distance, distance_signless_laplacian };

MatrixKind parse_matrix_kind(std::string_view name);
std::string_view to_string(MatrixKind kind);

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix signless_laplacian_matrix(const Graph& g);
// Throws DistanceUndefined on disconnected graphs.
DistanceMatrix distance_matrix(const Graph& g);
SymMatrix distance_signless_laplacian_matrix(const Graph& g);
SymMatrix graph_matrix(const Graph& g, MatrixKind kind);

// rho, q, mu_1, eta_1 by kind.
double spectral_radius(const Graph& g, MatrixKind kind);

std::vector<std::int64_t> transmissions(const Graph& g);
std::int64_t wiener_index(const Graph& g);
bool is_transmission_regular(const Graph& g);

// W(G') = (1/2)[n^2 + (2b delta - 2bk + 1)n - (b^2+2b)delta^2 + ((2b^2+2b)k - 3b - 2)delta - b^2k^2 + 3bk - 2]
std::int64_t wiener_gprime_closed_form(const ExtremalParams& p);

}  // namespace oddcrit
