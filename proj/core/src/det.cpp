#include "radext/det.hpp"

#include "radext/error.hpp"

#include <utility>

namespace radext {

LaurentPoly determinant(LaurentMatrix m)
{
    const std::size_t size = m.size();
    for (const auto& row : m) {
        if (row.size() != size)
            throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    }
    if (size == 0)
        return LaurentPoly(Rational(1));

    bool negate = false;
    LaurentPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && m[pivot][k].is_zero())
                ++pivot;
            if (pivot == size)
                return {};
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                LaurentPoly cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = cross.divide_exact(prev);
            }
        }
        prev = m[k][k];
    }
    LaurentPoly det = std::move(m[size - 1][size - 1]);
    return negate ? -det : det;
}

} // namespace radext
