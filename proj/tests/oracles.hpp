#pragma once

// Brute-force oracles shared by the test suites.  Everything here works by
// definition unfolding (element enumeration, coordinate conditions) and is
// kept independent of the library code paths it checks.

#include <algorithm>
#include <vector>

#include "finite_group.hpp"
#include "shift_model.hpp"

namespace entropia::oracle {

/// {a*b : a in A, b in B} by plain double loop.
inline ElemSet pairwise_products(const FiniteGroup& g, const ElemSet& a, const ElemSet& b)
{
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int x : a)
        for (int y : b)
            in[static_cast<std::size_t>(g.mul(x, y))] = 1;
    ElemSet out;
    for (int i = 0; i < g.order(); ++i)
        if (in[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

/// Cartesian product of per-coordinate element sets over a window,
/// encoded like ShiftModel::truncate (first coordinate most significant).
inline ElemSet window_cartesian(const FiniteGroup& f, const std::vector<ElemSet>& cells)
{
    ElemSet out;
    std::vector<std::size_t> pick(cells.size(), 0);
    while (true) {
        long long code = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
            code = code * f.order() + cells[i][pick[i]];
        out.push_back(static_cast<int>(code));
        std::size_t i = cells.size();
        while (i-- > 0) {
            if (++pick[i] < cells[i].size())
                break;
            pick[i] = 0;
            if (i == 0)
                goto done;
        }
        if (cells.empty())
            break;
    }
done:
    std::sort(out.begin(), out.end());
    return out;
}

/// The per-coordinate cells of a rectangular handle over [lo, hi].
inline std::vector<ElemSet> cells_over_window(const Subgroup& rect, long long lo, long long hi)
{
    const RectRep& r = ShiftModel::rect_of(rect);
    std::vector<ElemSet> out;
    for (long long i = lo; i <= hi; ++i)
        out.push_back(r.cell_at(i));
    return out;
}

/// Preimage by definition: cell at m is theta^{-1}(A at m - s).
inline std::vector<ElemSet> preimage_cells_by_definition(const FiniteGroup& f,
                                                         const FiniteEndoMap& theta, long long s,
                                                         const Subgroup& a, long long lo,
                                                         long long hi)
{
    const RectRep& r = ShiftModel::rect_of(a);
    std::vector<ElemSet> out;
    for (long long m = lo; m <= hi; ++m)
        out.push_back(endo_preimage_set(f, theta, r.cell_at(m - s)));
    return out;
}

/// Image by definition: cell at n is theta(A at n + s).
inline std::vector<ElemSet> image_cells_by_definition(const FiniteGroup& f,
                                                      const FiniteEndoMap& theta, long long s,
                                                      const Subgroup& a, long long lo,
                                                      long long hi)
{
    const RectRep& r = ShiftModel::rect_of(a);
    std::vector<ElemSet> out;
    for (long long n = lo; n <= hi; ++n)
        out.push_back(endo_image_set(f, theta, r.cell_at(n + s)));
    return out;
}

} // namespace entropia::oracle
