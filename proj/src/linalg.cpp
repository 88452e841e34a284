#include "cliffpar/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cliffpar {

Echelon reduced_echelon(RatMat m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols)
            throw std::domain_error("reduced_echelon: ragged matrix");
    }
    Echelon result;
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int found = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot_row)], m[static_cast<std::size_t>(found)]);
        auto& pr = m[static_cast<std::size_t>(pivot_row)];
        const Rat inv_pivot = Rat(1) / pr[static_cast<std::size_t>(col)];
        for (int c = col; c < cols; ++c) pr[static_cast<std::size_t>(c)] *= inv_pivot;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            auto& other = m[static_cast<std::size_t>(r)];
            const Rat factor = other[static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                other[static_cast<std::size_t>(c)] -= factor * pr[static_cast<std::size_t>(c)];
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    result.rows.assign(m.begin(), m.begin() + pivot_row);
    return result;
}

int rank(const RatMat& m) { return reduced_echelon(m).rank(); }

std::vector<RatVec> kernel_basis(const RatMat& m, int cols) {
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols)
            throw std::domain_error("kernel_basis: row width disagrees with cols");
    }
    const Echelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVec v(static_cast<std::size_t>(cols), Rat(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[static_cast<std::size_t>(e.pivots[r])] = -e.rows[r][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const Echelon& e, const RatVec& v) {
    RatVec rem = v;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const Rat factor = rem[static_cast<std::size_t>(e.pivots[r])];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= factor * e.rows[r][c];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace cliffpar
