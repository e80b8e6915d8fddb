#include "dbl/complex.hpp"

namespace dbl {

void FiniteComplex::set_differential(int degree, std::vector<SparseRow> rows) {
    differential_[degree] = std::move(rows);
    rank_cache_.erase(degree);
}

int FiniteComplex::dimension(int degree) const {
    const auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

int FiniteComplex::differential_rank(int degree) const {
    if (const auto it = rank_cache_.find(degree); it != rank_cache_.end()) return it->second;
    int rank = 0;
    if (const auto it = differential_.find(degree); it != differential_.end()) rank = rank_of(it->second);
    rank_cache_[degree] = rank;
    return rank;
}

int FiniteComplex::cohomology(int degree) const {
    return dimension(degree) - differential_rank(degree) - differential_rank(degree - 1);
}

int FiniteComplex::invariants(int degree) const {
    const int nk = dimension(degree);
    if (nk == 0) return 0;
    const int m = static_cast<int>(actions_.size());
    if (m == 0) return cohomology(degree);
    const int n_prev = dimension(degree - 1);
    const int n_next = dimension(degree + 1);
    const int rank_prev = differential_rank(degree - 1);
    // (z, y_1..y_m) -> (dz, x_1 z - d y_1, ..., x_m z - d y_m)
    RowEchelon echelon;
    const auto d_here = differential_.find(degree);
    for (int z = 0; z < nk; ++z) {
        SparseRow row;
        if (d_here != differential_.end()) row = d_here->second.at(z);
        for (int a = 0; a < m; ++a) {
            const auto it = actions_[a].find(degree);
            if (it == actions_[a].end()) continue;
            for (const auto& [c, v] : it->second.at(z)) row.emplace_back(n_next + a * nk + c, v);
        }
        echelon.insert(row);
    }
    if (const auto d_prev = differential_.find(degree - 1); d_prev != differential_.end()) {
        for (const auto& dy : d_prev->second) {
            for (int a = 0; a < m; ++a) {
                SparseRow row;
                for (const auto& [c, v] : dy) row.emplace_back(n_next + a * nk + c, -v);
                echelon.insert(row);
            }
        }
    }
    const int nullity = nk + m * n_prev - echelon.rank();
    return nullity - m * (n_prev - rank_prev) - rank_prev;
}

int FiniteComplex::euler_characteristic() const {
    int chi = 0;
    for (const auto& [k, n] : dims_) chi += (k % 2 == 0 ? 1 : -1) * cohomology(k);
    return chi;
}

}  // namespace dbl
