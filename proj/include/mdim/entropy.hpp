#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

using Symbol = std::int64_t;

/// Empirical distribution of one column and its entropy in nats.
struct ColumnProfile {
    std::map<Symbol, std::size_t> frequencies;
    std::size_t total = 0;
    double entropy = 0.0;
};

/// Entropy of the empirical distribution given by `counts` (summing to
/// `total`), computed as ln N - (1/N) sum c ln c with compensated summation.
double entropy_from_counts(std::span<const std::size_t> counts, std::size_t total);

/// DomainError on an empty column.
ColumnProfile column_entropy(std::span<const Symbol> column);

/// Dense row-major n x m matrix of finite-alphabet symbols.
class SymbolMatrix {
public:
    SymbolMatrix() = default;
    SymbolMatrix(std::size_t rows, std::size_t cols, Symbol fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<const Symbol> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<Symbol> column(std::size_t c) const;
    void append_column(std::span<const Symbol> column);

    bool rows_distinct() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

struct WidthBound {
    double h_max = 0.0;
    double bound = 0.0;  ///< ln n / h_max
    std::size_t columns = 0;
    bool satisfied = false;  ///< columns >= bound (within 1e-9 relative slack)
};

/// Lower bound ln n / H_max on the number of columns of a matrix whose rows
/// are pairwise distinct. Throws CertificateInapplicable on duplicate rows.
WidthBound entropic_width_bound(const SymbolMatrix& matrix);

/// Relative slack subtracted before taking the ceiling of ln n / H_max.
inline constexpr double kCeilSlack = 1e-9;

struct EntropyCertificate {
    std::size_t n = 0;
    double h_max = 0.0;
    Vertex argmax = 0;
    double raw_bound = 0.0;  ///< ln n / h_max, real-valued
    std::size_t lower_bound = 0;  ///< ceil(raw_bound * (1 - kCeilSlack))
    std::vector<double> per_vertex_entropy;
};

/// Entropy of the distance distribution seen from one vertex.
double distance_entropy(const ShellDecomposition& shells, std::size_t n);

/// Certified lower bound on the metric dimension (and on the sequential
/// metric dimension) of a connected graph, from per-vertex distance
/// entropies. Throws ConnectivityError when disconnected, DomainError n < 2.
EntropyCertificate certify_md_lower_bound(const Graph& g, unsigned workers = 1);

}  // namespace mdim
