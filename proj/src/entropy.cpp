#include "mdim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mdim/errors.hpp"
#include "mdim/parallel.hpp"

namespace mdim {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

double entropy_from_counts(std::span<const std::size_t> counts, std::size_t total) {
    if (total == 0) throw DomainError("entropy_from_counts: empty distribution");
    CompensatedSum acc;
    std::size_t seen = 0;
    for (std::size_t c : counts) {
        seen += c;
        if (c > 1) {
            const double x = static_cast<double>(c);
            acc.add(x * std::log(x));
        }
    }
    if (seen != total) throw std::logic_error("entropy_from_counts: counts do not sum to total");
    const double n = static_cast<double>(total);
    // Clamp tiny negative rounding residue for constant columns.
    return std::max(0.0, std::log(n) - acc.value() / n);
}

ColumnProfile column_entropy(std::span<const Symbol> column) {
    if (column.empty()) throw DomainError("column_entropy: empty column");
    ColumnProfile out;
    out.total = column.size();
    for (Symbol s : column) ++out.frequencies[s];
    std::vector<std::size_t> counts;
    counts.reserve(out.frequencies.size());
    for (const auto& [s, c] : out.frequencies) counts.push_back(c);
    out.entropy = entropy_from_counts(counts, out.total);
    return out;
}

std::vector<Symbol> SymbolMatrix::column(std::size_t c) const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void SymbolMatrix::append_column(std::span<const Symbol> column) {
    if (column.size() != rows_) throw ParameterError("append_column: length mismatch");
    std::vector<Symbol> next(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), cols_,
                    next.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)));
        next[r * (cols_ + 1) + cols_] = column[r];
    }
    data_ = std::move(next);
    ++cols_;
}

bool SymbolMatrix::rows_distinct() const {
    std::vector<std::size_t> order(rows_);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
        const auto ra = row(a);
        const auto rb = row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < rows_; ++i) {
        const auto ra = row(order[i - 1]);
        const auto rb = row(order[i]);
        if (std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return false;
    }
    return true;
}

WidthBound entropic_width_bound(const SymbolMatrix& matrix) {
    if (matrix.rows() < 2) throw DomainError("entropic_width_bound: requires n >= 2 rows");
    if (!matrix.rows_distinct()) {
        throw CertificateInapplicable("entropic_width_bound: rows are not pairwise distinct");
    }
    WidthBound out;
    out.columns = matrix.cols();
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
        out.h_max = std::max(out.h_max, column_entropy(matrix.column(c)).entropy);
    }
    // Distinct rows with n >= 2 force at least one non-constant column.
    out.bound = std::log(static_cast<double>(matrix.rows())) / out.h_max;
    out.satisfied = static_cast<double>(out.columns) >= out.bound * (1.0 - kCeilSlack);
    return out;
}

double distance_entropy(const ShellDecomposition& shells, std::size_t n) {
    const std::size_t total =
        std::accumulate(shells.shell_sizes.begin(), shells.shell_sizes.end(), std::size_t{0});
    if (total != n) throw std::logic_error("distance_entropy: shell sizes do not sum to n");
    return entropy_from_counts(shells.shell_sizes, n);
}

EntropyCertificate certify_md_lower_bound(const Graph& g, unsigned workers) {
    const std::size_t n = g.order();
    if (n < 2) throw DomainError("certify_md_lower_bound: requires n >= 2");
    if (!is_connected(g)) throw ConnectivityError("certify_md_lower_bound: graph is disconnected");

    EntropyCertificate cert;
    cert.n = n;
    cert.per_vertex_entropy.assign(n, 0.0);
    parallel_for(n, workers, [&](std::size_t w) {
        cert.per_vertex_entropy[w] = distance_entropy(shells(g, static_cast<Vertex>(w)), n);
    });
    const auto it = std::max_element(cert.per_vertex_entropy.begin(), cert.per_vertex_entropy.end());
    cert.h_max = *it;
    cert.argmax = static_cast<Vertex>(it - cert.per_vertex_entropy.begin());
    cert.raw_bound = std::log(static_cast<double>(n)) / cert.h_max;
    cert.lower_bound = static_cast<std::size_t>(std::ceil(cert.raw_bound * (1.0 - kCeilSlack)));
    return cert;
}

}  // namespace mdim
