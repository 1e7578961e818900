#include "imbalance/ddt.hpp"

#include <algorithm>

#include "imbalance/errors.hpp"
#include "imbalance/kernels.hpp"
#include "imbalance/parallel.hpp"

namespace imbalance {

DDTable::DDTable(const FunctionTable& f) : rows_(f.domain().order()), cols_(f.codomain().order()) {
    if (rows_ > kMaxDdtEntries / cols_) fail(ErrorKind::Capacity, "difference table exceeds 2^26 entries");
    counts_.assign(rows_ * cols_, 0);
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    auto values = f.values();
    if (f.is_binary()) {
        parallel_for(0, rows_, [&](std::size_t a) {
            std::vector<std::uint32_t> diff(rows_);
            kernels::xor_derivative(values, static_cast<std::uint32_t>(a), diff);
            std::uint32_t* row = counts_.data() + a * cols_;
            for (auto v : diff) ++row[v];
        });
        return;
    }
    parallel_for(0, rows_, [&](std::size_t a) {
        std::vector<Element> shifted = g1.translates(a);
        std::uint32_t* row = counts_.data() + a * cols_;
        for (Element x = 0; x < rows_; ++x) ++row[g2.sub(values[shifted[x]], values[x])];
    });
}

DifferentialSpectrum spectrum(const DDTable& d) {
    DifferentialSpectrum s;
    for (Element a = 1; a < d.rows(); ++a)
        for (auto v : d.row(a)) {
            ++s.counts[v];
            s.delta = std::max(s.delta, v);
        }
    std::uint64_t total = 0;
    std::uint64_t weighted = 0;
    for (auto [i, n] : s.counts) {
        total += n;
        weighted += static_cast<std::uint64_t>(i) * n;
    }
    const std::uint64_t rows = d.rows() - 1;
    if (total != rows * d.cols() || weighted != rows * d.rows())
        fail(ErrorKind::Internal, "differential spectrum violates its counting identities");
    return s;
}

std::uint32_t differential_uniformity(const DDTable& d) {
    std::uint32_t k = 0;
    for (Element a = 1; a < d.rows(); ++a)
        for (auto v : d.row(a)) k = std::max(k, v);
    return k;
}

bool is_apn(const DDTable& d) { return differential_uniformity(d) <= 2; }

bool is_pn(const FunctionTable& f, const DDTable& d) {
    const std::size_t n = f.domain().order();
    const std::size_t m = f.codomain().order();
    if (n % m != 0) return false;
    const auto target = static_cast<std::uint32_t>(n / m);
    for (Element a = 1; a < d.rows(); ++a)
        for (auto v : d.row(a))
            if (v != target) return false;
    return true;
}

std::uint64_t deficiency(const DDTable& d) {
    std::uint64_t zeros = 0;
    for (Element a = 1; a < d.rows(); ++a)
        zeros += static_cast<std::uint64_t>(std::count(d.row(a).begin(), d.row(a).end(), 0u));
    return zeros;
}

std::size_t t_f(const DDTable& d) {
    std::size_t best = 0;
    for (Element a = 1; a < d.rows(); ++a) {
        auto r = d.row(a);
        best = std::max(best, static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](auto v) { return v != 0; })));
    }
    return best;
}

}  // namespace imbalance
