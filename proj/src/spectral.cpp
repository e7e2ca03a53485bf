#include "oddcrit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "oddcrit/errors.hpp"

namespace oddcrit {

SymMatrix::SymMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

SymMatrix::SymMatrix(std::size_t order, std::vector<double> entries) : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) throw std::invalid_argument("matrix entry count does not match order");
    for (double x : entries_)
        if (!std::isfinite(x)) throw std::invalid_argument("matrix has non-finite entries");
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = i + 1; j < order_; ++j)
            if (entries_[i * order_ + j] != entries_[j * order_ + i])
                throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("matrix entries must be finite");
    entries_[i * order_ + j] = value;
    entries_[j * order_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += entries_[i * order_ + i];
    return t;
}

double SymMatrix::frobenius_norm() const {
    return std::sqrt(std::inner_product(entries_.begin(), entries_.end(), entries_.begin(), 0.0));
}

bool SymMatrix::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double x) { return x == std::round(x); });
}

bool SymMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double x) { return x >= 0.0; });
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
    SymMatrix sub(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            sub.entries_[a * indices.size() + b] = (*this)(indices[a], indices[b]);
    return sub;
}

std::string to_csv(const SymMatrix& m) {
    std::ostringstream out;
    out << std::setprecision(12);
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) out << (j ? "," : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

DistanceMatrix::DistanceMatrix(std::size_t order, std::vector<std::int64_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) throw std::invalid_argument("distance entry count does not match order");
}

std::int64_t DistanceMatrix::row_sum(std::size_t i) const {
    const auto row = entries_.begin() + static_cast<std::ptrdiff_t>(i * order_);
    return std::accumulate(row, row + static_cast<std::ptrdiff_t>(order_), std::int64_t{0});
}

SymMatrix DistanceMatrix::to_real() const {
    std::vector<double> real(entries_.begin(), entries_.end());
    return SymMatrix(order_, std::move(real));
}

// --- eigensolvers ---------------------------------------------------------

namespace {

constexpr double kRelativeOffDiagonal = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
}

// Diagonalises `a` in place; accumulates rotations into `v` when non-null.
void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* v) {
    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    const double target = kRelativeOffDiagonal * norm;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) < target) return;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    const double new_rp = c * arp - s * arq;
                    const double new_rq = s * arp + c * arq;
                    a[r * n + p] = a[p * n + r] = new_rp;
                    a[r * n + q] = a[q * n + r] = new_rq;
                }
                if (v) {
                    auto& vv = *v;
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = vv[r * n + p];
                        const double vrq = vv[r * n + q];
                        vv[r * n + p] = c * vrp - s * vrq;
                        vv[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    if (off_diagonal_norm(a, n) >= target) throw std::runtime_error("Jacobi iteration did not converge");
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> a = m.entries();
    jacobi(a, n, nullptr);
    Spectrum spectrum;
    spectrum.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) spectrum.eigenvalues.push_back(a[i * n + i]);
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>());
    return spectrum;
}

EigenDecomposition eigen_decompose(const SymMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> a = m.entries();
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi(a, n, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

    EigenDecomposition out;
    for (std::size_t idx : order) {
        out.eigenvalues.push_back(a[idx * n + idx]);
        std::vector<double> column(n);
        for (std::size_t r = 0; r < n; ++r) column[r] = v[r * n + idx];
        out.eigenvectors.push_back(std::move(column));
    }
    return out;
}

double power_radius(const SymMatrix& m, double tolerance, int max_iterations) {
    const std::size_t n = m.order();
    if (n == 0) throw std::invalid_argument("power iteration on an empty matrix");
    if (!m.is_nonnegative()) throw std::invalid_argument("power iteration requires a nonnegative matrix");
    double max_row = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += m(i, j);
        max_row = std::max(max_row, row);
    }
    if (max_row == 0.0) return 0.0;
    const double shift = 0.25 * max_row;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * x[j];
            y[i] = acc;
        }
        const double rayleigh = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual += (y[i] - rayleigh * x[i]) * (y[i] - rayleigh * x[i]);
        lambda = rayleigh;
        if (std::sqrt(residual) <= tolerance * std::max(1.0, std::abs(lambda))) return lambda;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw std::runtime_error("power iteration did not converge");
}

// --- graph matrices -------------------------------------------------------

MatrixKind parse_matrix_kind(std::string_view name) {
    if (name == "adjacency" || name == "A") return MatrixKind::adjacency;
    if (name == "signless_laplacian" || name == "signless-laplacian" || name == "Q") return MatrixKind::signless_laplacian;
    if (name == "distance" || name == "D") return MatrixKind::distance;
    if (name == "distance_signless_laplacian" || name == "distance-signless-laplacian" || name == "QD")
        return MatrixKind::distance_signless_laplacian;
    throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "'");
}

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
        case MatrixKind::distance: return "distance";
        case MatrixKind::distance_signless_laplacian: return "distance_signless_laplacian";
    }
    return "?";
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

SymMatrix signless_laplacian_matrix(const Graph& g) {
    SymMatrix q = adjacency_matrix(g);
    for (Vertex v = 0; v < g.order(); ++v) q.set(v, v, static_cast<double>(g.degree(v)));
    return q;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw std::invalid_argument("distance matrix of the empty graph");
    std::vector<std::vector<Vertex>> adjacency(n);
    for (Vertex v = 0; v < n; ++v) adjacency[v] = g.neighbors(v);

    std::vector<std::int64_t> d(n * n, -1);
    std::queue<Vertex> frontier;
    for (Vertex source = 0; source < n; ++source) {
        std::int64_t* row = d.data() + source * n;
        row[source] = 0;
        frontier.push(source);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : adjacency[u]) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    frontier.push(w);
                }
            }
        }
        if (std::find(row, row + n, -1) != row + n) throw DistanceUndefined();
    }
    return DistanceMatrix(n, std::move(d));
}

SymMatrix distance_signless_laplacian_matrix(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    SymMatrix qd = d.to_real();
    for (std::size_t i = 0; i < d.order(); ++i) qd.set(i, i, static_cast<double>(d.row_sum(i)));
    return qd;
}

SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return adjacency_matrix(g);
        case MatrixKind::signless_laplacian: return signless_laplacian_matrix(g);
        case MatrixKind::distance: return distance_matrix(g).to_real();
        case MatrixKind::distance_signless_laplacian: return distance_signless_laplacian_matrix(g);
    }
    throw std::invalid_argument("unknown matrix kind");
}

double spectral_radius(const Graph& g, MatrixKind kind) { return eigenvalues(graph_matrix(g, kind)).radius(); }

std::vector<std::int64_t> transmissions(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::int64_t> tr(d.order());
    for (std::size_t i = 0; i < d.order(); ++i) tr[i] = d.row_sum(i);
    return tr;
}

std::int64_t wiener_index(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < d.order(); ++i)
        for (std::size_t j = i + 1; j < d.order(); ++j) w += d(i, j);
    return w;
}

bool is_transmission_regular(const Graph& g) {
    const auto tr = transmissions(g);
    return std::adjacent_find(tr.begin(), tr.end(), std::not_equal_to<>()) == tr.end();
}

std::int64_t wiener_gprime_closed_form(const ExtremalParams& p) {
    gprime_parts(p);  // validation only
    const std::int64_t n = p.n, b = p.b, k = p.k, d = p.delta;
    const std::int64_t twice = n * n + (2 * b * d - 2 * b * k + 1) * n - (b * b + 2 * b) * d * d +
                               ((2 * b * b + 2 * b) * k - 3 * b - 2) * d - b * b * k * k + 3 * b * k - 2;
    if (twice % 2 != 0) throw std::logic_error("Wiener closed form produced an odd double");
    return twice / 2;
}

}  // namespace oddcrit
