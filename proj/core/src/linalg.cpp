#include "dbl/linalg.hpp"

namespace dbl {

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow to_primitive(const SparseRow& row) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IntRow out;
    out.reserve(row.size());
    mpz_class content = 0;
    for (const auto& [c, v] : row) {
        mpz_class n = v.get_num() * (lcm / v.get_den());
        if (n == 0) continue;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        out.emplace_back(c, std::move(n));
    }
    if (content > 1) {
        for (auto& [c, n] : out) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

// a * row - b * pivot, then divided by the content.
IntRow combine(const IntRow& row, const mpz_class& a, const IntRow& pivot, const mpz_class& b) {
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    mpz_class content = 0;
    auto push = [&](int c, mpz_class v) {
        if (v == 0) return;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(c, std::move(v));
    };
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            push(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            push(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            push(row[i].first, a * row[i].second - b * pivot[j].second);
            ++i;
            ++j;
        }
    }
    if (content > 1) {
        for (auto& [c, n] : out) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

}  // namespace

bool RowEchelon::insert(const SparseRow& input) {
    IntRow row = to_primitive(input);
    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            if (row.front().second < 0) {
                for (auto& [c, n] : row) n = -n;
            }
            pivots_.emplace(row.front().first, std::move(row));
            return true;
        }
        const IntRow& pivot = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        const mpz_class a = pivot.front().second / g;
        const mpz_class b = row.front().second / g;
        row = combine(row, a, pivot, b);
    }
    return false;
}

int rank_of(const std::vector<SparseRow>& rows) {
    RowEchelon echelon;
    for (const auto& row : rows) echelon.insert(row);
    return echelon.rank();
}

void SparseMatrixBuilder::add(int row, int column, const Rational& value) {
    if (sgn(value) == 0) return;
    auto& slot = entries_[row][column];
    slot += value;
    if (sgn(slot) == 0) {
        entries_[row].erase(column);
        if (entries_[row].empty()) entries_.erase(row);
    }
}

std::vector<SparseRow> SparseMatrixBuilder::rows() const {
    std::vector<SparseRow> out;
    out.reserve(entries_.size());
    for (const auto& [r, cols] : entries_) {
        SparseRow row(cols.begin(), cols.end());
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace dbl
