#include "oddcrit/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "oddcrit/errors.hpp"

namespace oddcrit {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells) : n_(n), cells_(std::move(cells)) {
    std::vector<char> seen(n_, 0);
    for (const auto& cell : cells_) {
        if (cell.empty()) throw std::invalid_argument("partition cell is empty");
        for (std::size_t v : cell) {
            if (v >= n_) throw std::invalid_argument("partition index " + std::to_string(v) + " out of range");
            if (seen[v]) throw std::invalid_argument("partition index " + std::to_string(v) + " repeated");
            seen[v] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("partition does not cover every index");
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::vector<std::size_t>> cells(n);
    for (std::size_t i = 0; i < n; ++i) cells[i] = {i};
    return Partition(n, std::move(cells));
}

Partition Partition::trivial(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (n == 0) return Partition(0, {});
    return Partition(n, {std::move(all)});
}

namespace {

void check_conformal(const SymMatrix& m, const Partition& p) {
    if (m.order() != p.ground_size())
        throw std::invalid_argument("partition covers " + std::to_string(p.ground_size()) +
                                    " indices but the matrix has order " + std::to_string(m.order()));
}

double block_row_sum(const SymMatrix& m, std::size_t row, const std::vector<std::size_t>& cols) {
    double acc = 0.0;
    for (std::size_t c : cols) acc += m(row, c);
    return acc;
}

// Block sums B_ij = sum of all entries of block (i, j).
std::vector<double> block_sums(const SymMatrix& m, const Partition& p) {
    const std::size_t k = p.cell_count();
    std::vector<double> sums(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r : p.cell(i)) sums[i * k + j] += block_row_sum(m, r, p.cell(j));
    return sums;
}

}  // namespace

QuotientMatrix quotient(const SymMatrix& m, const Partition& p) {
    check_conformal(m, p);
    const std::size_t k = p.cell_count();
    QuotientMatrix q{k, block_sums(m, p)};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) q.entries[i * k + j] /= static_cast<double>(p.cell(i).size());
    return q;
}

bool is_equitable(const SymMatrix& m, const Partition& p) {
    check_conformal(m, p);
    const bool exact = m.is_integral();
    for (const auto& row_cell : p.cells()) {
        for (const auto& col_cell : p.cells()) {
            const double reference = block_row_sum(m, row_cell.front(), col_cell);
            for (std::size_t r : row_cell) {
                const double sum = block_row_sum(m, r, col_cell);
                if (exact ? sum != reference : std::abs(sum - reference) > 1e-9) return false;
            }
        }
    }
    return true;
}

Partition join_partition(int s, std::span<const int> parts) {
    if (parts.empty()) throw ParameterError("degenerate family");
    if (s < 0) throw ParameterError("join size must be nonnegative");
    std::vector<std::vector<std::size_t>> cells;
    std::size_t next = 0;
    auto take = [&](int count) {
        std::vector<std::size_t> cell(static_cast<std::size_t>(count));
        std::iota(cell.begin(), cell.end(), next);
        next += cell.size();
        return cell;
    };
    if (s > 0) cells.push_back(take(s));
    for (int part : parts)
        if (part < 1) throw ParameterError("family part sizes must be positive");
    cells.push_back(take(parts.front()));
    const int rest = std::accumulate(parts.begin() + 1, parts.end(), 0);
    if (rest > 0) cells.push_back(take(rest));
    return Partition(next, std::move(cells));
}

std::vector<double> perron_vector(const SymMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) throw std::invalid_argument("Perron vector of an empty matrix");
    if (!m.is_nonnegative()) throw std::invalid_argument("Perron vector requires a nonnegative matrix");
    if (n == 1) {
        if (m(0, 0) == 0.0) throw std::invalid_argument("Perron vector of the zero matrix");
        return {1.0};
    }
    // irreducible iff the off-diagonal support graph is connected
    std::vector<char> reached(n, 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (!reached[w] && w != u && m(u, w) != 0.0) {
                reached[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
        throw std::invalid_argument("Perron vector requires an irreducible matrix");

    auto decomposition = eigen_decompose(m);
    std::vector<double> x = std::move(decomposition.eigenvectors.front());
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    if (sum < 0) std::transform(x.begin(), x.end(), x.begin(), [](double v) { return -v; });
    if (std::any_of(x.begin(), x.end(), [](double v) { return v <= 0.0; }))
        throw std::runtime_error("computed Perron vector is not positive");
    return x;
}

double max_within_cell_stddev(std::span<const double> vec, const Partition& p) {
    if (vec.size() != p.ground_size()) throw std::invalid_argument("vector length does not match partition");
    double worst = 0.0;
    for (const auto& cell : p.cells()) {
        double mean = 0.0;
        for (std::size_t v : cell) mean += vec[v];
        mean /= static_cast<double>(cell.size());
        double var = 0.0;
        for (std::size_t v : cell) var += (vec[v] - mean) * (vec[v] - mean);
        worst = std::max(worst, std::sqrt(var / static_cast<double>(cell.size())));
    }
    return worst;
}

std::vector<double> cubic_quotient_roots(const QuotientMatrix& q) {
    if (q.order != 3) throw std::invalid_argument("cubic solver needs a 3x3 quotient");
    auto e = [&](std::size_t i, std::size_t j) { return q(i, j); };
    const double trace = e(0, 0) + e(1, 1) + e(2, 2);
    const double minors = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0) + e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0) +
                          e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1);
    const double det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                       e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                       e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    // x^3 + a x^2 + b x + c
    const double a = -trace;
    const double b = minors;
    const double c = -det;
    const double shift = a / 3.0;
    const double pp = b - a * a / 3.0;
    const double qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    std::vector<double> roots;
    const double disc = qq * qq / 4.0 + pp * pp * pp / 27.0;
    if (pp < 0.0 && disc <= 0.0) {
        const double radius = 2.0 * std::sqrt(-pp / 3.0);
        const double arg = std::clamp(3.0 * qq / (2.0 * pp) * std::sqrt(-3.0 / pp), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) roots.push_back(radius * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift);
    } else {
        const double root_disc = std::sqrt(std::max(disc, 0.0));
        roots.push_back(std::cbrt(-qq / 2.0 + root_disc) + std::cbrt(-qq / 2.0 - root_disc) - shift);
    }

    for (double& x : roots) {
        for (int it = 0; it < 4; ++it) {
            const double f = ((x + a) * x + b) * x + c;
            const double df = (3.0 * x + 2.0 * a) * x + b;
            if (df == 0.0) break;
            const double step = f / df;
            x -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> symmetrized_quotient_eigenvalues(const SymMatrix& m, const Partition& p) {
    check_conformal(m, p);
    const std::size_t k = p.cell_count();
    const std::vector<double> sums = block_sums(m, p);
    std::vector<double> sym(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sym[i * k + j] = sums[i * k + j] / std::sqrt(static_cast<double>(p.cell(i).size() * p.cell(j).size()));
    // block sums of a symmetric matrix are symmetric up to summation order
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) sym[i * k + j] = sym[j * k + i] = 0.5 * (sym[i * k + j] + sym[j * k + i]);
    return eigenvalues(SymMatrix(k, std::move(sym))).eigenvalues;
}

int proof_graph_join_size(ProofGraph graph, const ExtremalParams& p) {
    if (graph == ProofGraph::gprime) return p.delta;
    if (!p.s) throw ParameterError("separator size s is required");
    return *p.s;
}

std::vector<int> proof_graph_parts(ProofGraph graph, const ExtremalParams& p) {
    switch (graph) {
        case ProofGraph::gprime: return gprime_parts(p);
        case ProofGraph::g2: return g2_parts(p);
        case ProofGraph::g3: return g3_parts(p);
    }
    throw std::invalid_argument("unknown proof graph");
}

Graph build_proof_graph(ProofGraph graph, const ExtremalParams& p) {
    return family(proof_graph_join_size(graph, p), proof_graph_parts(graph, p));
}

QuotientMatrix closed_form_quotient(ProofGraph graph, DistanceKind kind, const ExtremalParams& p) {
    proof_graph_parts(graph, p);  // validation
    const double n = p.n, b = p.b, k = p.k, delta = p.delta;
    const double s = proof_graph_join_size(graph, p);
    QuotientMatrix q{3, {}};

    if (graph != ProofGraph::g3) {
        // G' is G2 with s = delta.
        const double big = n - (b + 1) * s + b * k - 1;
        const double singles = b * s - b * k + 1;
        if (kind == DistanceKind::distance) {
            q.entries = {s - 1, big, singles,
                         s, n - (b + 1) * s + b * k - 2, 2 * singles,
                         s, 2 * big, 2 * (b * s - b * k)};
        } else {
            q.entries = {n + s - 2, big, singles,
                         s, 2 * n - s - 2, 2 * singles,
                         s, 2 * big, 2 * (n - b * k - 1) + (2 * b - 1) * s};
        }
        return q;
    }

    const double copies = b * s - b * k + 1;
    const double clique = delta + 1 - s;
    const double big = n - s - clique * copies;
    if (kind == DistanceKind::distance) {
        q.entries = {s - 1, big, copies * clique,
                     s, big - 1, 2 * copies * clique,
                     s, 2 * big, delta - s + 2 * (b * s - b * k) * clique};
    } else {
        q.entries = {n + s - 2, big, copies * clique,
                     s, 2 * n - s - 2, 2 * copies * clique,
                     s, 2 * big, 2 * (n - 1 + (b * s - b * k) * clique) - s};
    }
    return q;
}

}  // namespace oddcrit
