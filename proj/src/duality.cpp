#include "duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace entropia {

FinAbPresentation FinAbPresentation::make(std::vector<long long> factors)
{
    std::erase(factors, 1LL);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            fail(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            fail(ErrorCode::InvalidArgument, "invariant factors must ascend by divisibility");
    }
    return FinAbPresentation{std::move(factors)};
}

long long FinAbPresentation::order() const
{
    long long n = 1;
    for (long long d : factors)
        n *= d;
    return n;
}

std::vector<long long> FinAbPresentation::decode(long long code) const
{
    std::vector<long long> tuple(factors.size(), 0);
    for (std::size_t i = factors.size(); i-- > 0;) {
        tuple[i] = code % factors[i];
        code /= factors[i];
    }
    return tuple;
}

long long FinAbPresentation::encode(const std::vector<long long>& tuple) const
{
    long long code = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long long v = ((tuple[i] % factors[i]) + factors[i]) % factors[i];
        code = code * factors[i] + v;
    }
    return code;
}

long long FinAbPresentation::add(long long a, long long b) const
{
    auto ta = decode(a);
    auto tb = decode(b);
    for (std::size_t i = 0; i < factors.size(); ++i)
        ta[i] = (ta[i] + tb[i]) % factors[i];
    return encode(ta);
}

long long FinAbPresentation::pairing(long long x, long long y) const
{
    const long long big = lcm();
    auto tx = decode(x);
    auto ty = decode(y);
    long long acc = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        acc = (acc + tx[i] * ty[i] % big * (big / factors[i])) % big;
    return acc;
}

FiniteGroup FinAbPresentation::as_table_group() const
{
    std::vector<int> orders;
    orders.reserve(factors.size());
    for (long long d : factors)
        orders.push_back(static_cast<int>(d));
    return FiniteGroup::direct_product_orders(orders);
}

MatrixEndo make_matrix_endo(const FinAbPresentation& pres,
                            std::vector<std::vector<long long>> entries)
{
    const std::size_t k = pres.factors.size();
    if (entries.size() != k)
        fail(ErrorCode::InvalidArgument, "matrix has wrong row count");
    for (std::size_t i = 0; i < k; ++i) {
        if (entries[i].size() != k)
            fail(ErrorCode::InvalidArgument, "matrix has wrong column count");
        for (std::size_t j = 0; j < k; ++j) {
            long long e = entries[i][j] % pres.factors[i];
            if (e < 0)
                e += pres.factors[i];
            entries[i][j] = e;
            // column j sends a generator of order d_j; the image must die under d_j
            if ((e * pres.factors[j]) % pres.factors[i] != 0)
                fail(ErrorCode::InvalidArgument,
                     "matrix entry does not define a homomorphism at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
        }
    }
    return MatrixEndo{std::move(entries)};
}

long long apply_matrix(const FinAbPresentation& pres, const MatrixEndo& m, long long code)
{
    auto t = pres.decode(code);
    std::vector<long long> out(pres.factors.size(), 0);
    for (std::size_t i = 0; i < pres.factors.size(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < pres.factors.size(); ++j)
            acc = (acc + m.entries[i][j] % pres.factors[i] * (t[j] % pres.factors[i])) %
                  pres.factors[i];
        out[i] = acc;
    }
    return pres.encode(out);
}

FiniteEndoMap matrix_to_map(const FinAbPresentation& pres, const MatrixEndo& m)
{
    FiniteGroup g = pres.as_table_group();
    std::vector<int> map(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x)
        map[static_cast<std::size_t>(x)] = static_cast<int>(apply_matrix(pres, m, x));
    return make_endo(g, std::move(map));
}

MatrixEndo dual_endo(const FinAbPresentation& pres, const MatrixEndo& m)
{
    // <Mx,y> = <x,Ny> forces N_ij = M_ji d_i / d_j, integral because M is
    // a homomorphism
    const std::size_t k = pres.factors.size();
    std::vector<std::vector<long long>> n(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long num = m.entries[j][i] * pres.factors[i];
            if (num % pres.factors[j] != 0)
                fail(ErrorCode::InvalidArgument, "matrix is not a homomorphism");
            n[i][j] = (num / pres.factors[j]) % pres.factors[i];
        }
    return make_matrix_endo(pres, std::move(n));
}

ElemSet span_of(const FinAbPresentation& pres, const std::vector<long long>& generator_codes)
{
    std::vector<char> in(static_cast<std::size_t>(pres.order()), 0);
    std::vector<long long> stack;
    auto push = [&](long long c) {
        if (!in[static_cast<std::size_t>(c)]) {
            in[static_cast<std::size_t>(c)] = 1;
            stack.push_back(c);
        }
    };
    push(0);
    for (long long c : generator_codes)
        push(c % pres.order());
    while (!stack.empty()) {
        long long x = stack.back();
        stack.pop_back();
        for (long long g : generator_codes)
            push(pres.add(x, g));
    }
    ElemSet out;
    for (long long c = 0; c < pres.order(); ++c)
        if (in[static_cast<std::size_t>(c)])
            out.push_back(static_cast<int>(c));
    return out;
}

DiagonalizeResult integer_diagonalize(std::vector<std::vector<long long>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    std::vector<std::vector<long long>> v(cols, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i)
        v[i][i] = 1;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) { std::swap(a[r1], a[r2]); };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t r = 0; r < rows; ++r)
            std::swap(a[r][c1], a[r][c2]);
        for (std::size_t r = 0; r < cols; ++r)
            std::swap(v[r][c1], v[r][c2]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, long long q) {
        for (std::size_t c = 0; c < cols; ++c)
            a[dst][c] += q * a[src][c];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, long long q) {
        for (std::size_t r = 0; r < rows; ++r)
            a[r][dst] += q * a[r][src];
        for (std::size_t r = 0; r < cols; ++r)
            v[r][dst] += q * v[r][src];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // smallest nonzero entry of the working submatrix as pivot
            std::size_t pr = rows, pc = cols;
            long long best = 0;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 &&
                        (best == 0 || std::llabs(a[r][c]) < std::llabs(best))) {
                        best = a[r][c];
                        pr = r;
                        pc = c;
                    }
            if (best == 0)
                break; // submatrix is zero
            if (pr != t)
                swap_rows(t, pr);
            if (pc != t)
                swap_cols(t, pc);

            bool reduced = true;
            for (std::size_t r = t + 1; r < rows; ++r)
                if (a[r][t] != 0) {
                    add_row(r, t, -(a[r][t] / a[t][t]));
                    if (a[r][t] != 0)
                        reduced = false;
                }
            for (std::size_t c = t + 1; c < cols; ++c)
                if (a[t][c] != 0) {
                    add_col(c, t, -(a[t][c] / a[t][t]));
                    if (a[t][c] != 0)
                        reduced = false;
                }
            bool cleared = true;
            for (std::size_t r = t + 1; r < rows && cleared; ++r)
                cleared = a[r][t] == 0;
            for (std::size_t c = t + 1; c < cols && cleared; ++c)
                cleared = a[t][c] == 0;
            if (reduced && cleared)
                break;
        }
    }

    DiagonalizeResult out;
    for (std::size_t t = 0; t < steps; ++t)
        out.diagonal.push_back(a[t][t]);
    out.col_transform = std::move(v);
    return out;
}

ElemSet annihilator(const FinAbPresentation& pres, const ElemSet& subgroup_codes)
{
    const std::size_t k = pres.factors.size();
    if (k == 0)
        return {0};
    const long long big = pres.lcm();

    std::vector<std::vector<long long>> a;
    for (int code : subgroup_codes) {
        auto t = pres.decode(code);
        std::vector<long long> row(k);
        for (std::size_t j = 0; j < k; ++j)
            row[j] = (t[j] * (big / pres.factors[j])) % big;
        a.push_back(std::move(row));
    }
    if (a.empty())
        a.emplace_back(k, 0);

    DiagonalizeResult d = integer_diagonalize(std::move(a), k);

    // y = V w solves the system iff s_i w_i = 0 mod L for each diagonal s_i
    std::vector<long long> gens;
    for (std::size_t i = 0; i < k; ++i) {
        long long mult = 1;
        if (i < d.diagonal.size()) {
            long long s = std::llabs(d.diagonal[i]);
            mult = big / std::gcd(s, big);
        }
        std::vector<long long> y(k);
        for (std::size_t r = 0; r < k; ++r)
            y[r] = d.col_transform[r][i] * mult;
        gens.push_back(pres.encode(y));
    }
    return span_of(pres, gens);
}

std::vector<long long> subquotient_invariant_factors(const FinAbPresentation& pres,
                                                     const ElemSet& a, const ElemSet& b)
{
    if (!set_contains(a, b))
        fail(ErrorCode::NotContained, "subquotient needs nested subgroups");
    FiniteGroup g = pres.as_table_group();
    SubgroupAsGroup sub = subgroup_as_group(g, a);
    ElemSet b_child;
    for (int x : b)
        b_child.push_back(sub.from_parent[x]);
    std::sort(b_child.begin(), b_child.end());
    QuotientResult q = quotient_group(sub.group, b_child);
    return decompose_abelian(q.group).pres.factors;
}

AbelianDecomposition decompose_abelian(const FiniteGroup& g)
{
    if (!g.is_abelian())
        fail(ErrorCode::NotAbelian, "decomposition needs an abelian group");

    // independent generators of prime-power order, primary component by
    // primary component, peeling a maximal cyclic with a complement
    std::vector<int> gens;
    std::vector<long long> orders;
    long long n = g.order();
    std::vector<long long> primes;
    {
        long long m = n;
        for (long long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0)
                    m /= p;
            }
        if (m > 1)
            primes.push_back(m);
    }

    for (long long p : primes) {
        ElemSet component;
        for (int x = 0; x < g.order(); ++x) {
            long long ord = g.element_order(x);
            while (ord % p == 0)
                ord /= p;
            if (ord == 1)
                component.push_back(x);
        }
        ElemSet h = component;
        while (h.size() > 1) {
            int pick = h.front();
            for (int x : h)
                if (g.element_order(x) > g.element_order(pick))
                    pick = x;
            gens.push_back(pick);
            orders.push_back(g.element_order(pick));

            SubgroupAsGroup child = subgroup_as_group(g, h);
            ElemSet cyc_child = closure(child.group, {child.from_parent[pick]});
            long long target = static_cast<long long>(h.size()) /
                               static_cast<long long>(cyc_child.size());
            ElemSet complement_child;
            bool found = false;
            for (const ElemSet& cand : all_subgroups(child.group)) {
                if (static_cast<long long>(cand.size()) != target)
                    continue;
                if (set_intersection(cand, cyc_child).size() == 1) {
                    complement_child = cand;
                    found = true;
                    break;
                }
            }
            if (!found)
                fail(ErrorCode::NotAGroup, "no complement found in abelian p-group");
            ElemSet next;
            for (int x : complement_child)
                next.push_back(child.to_parent[x]);
            std::sort(next.begin(), next.end());
            h = std::move(next);
        }
    }

    // merge prime-power orders into invariant factors
    std::map<long long, std::vector<std::pair<long long, int>>> by_prime; // p -> (order, gen)
    for (std::size_t i = 0; i < gens.size(); ++i) {
        long long q = orders[i];
        long long p = 0;
        for (long long cand : primes)
            if (q % cand == 0)
                p = cand;
        by_prime[p].emplace_back(q, gens[i]);
    }
    std::size_t slots = 0;
    for (auto& [p, list] : by_prime) {
        (void)p;
        std::sort(list.begin(), list.end(), std::greater<>());
        slots = std::max(slots, list.size());
    }
    std::vector<long long> descending(slots, 1);
    std::vector<int> combined(slots, g.identity());
    for (auto& [p, list] : by_prime) {
        (void)p;
        for (std::size_t j = 0; j < list.size(); ++j) {
            descending[j] *= list[j].first;
            combined[j] = g.mul(combined[j], list[j].second);
        }
    }

    AbelianDecomposition out;
    std::vector<long long> ascending(descending.rbegin(), descending.rend());
    std::vector<int> gens_ascending(combined.rbegin(), combined.rend());
    out.pres = FinAbPresentation::make(ascending);

    // coordinates: enumerate all tuples and multiply out the generators
    out.elem_to_code.assign(static_cast<std::size_t>(g.order()), -1);
    out.code_to_elem.assign(static_cast<std::size_t>(out.pres.order()), -1);
    if (out.pres.order() != g.order())
        fail(ErrorCode::NotAGroup, "abelian decomposition has wrong order");
    for (long long code = 0; code < out.pres.order(); ++code) {
        auto t = out.pres.decode(code);
        int elem = g.identity();
        for (std::size_t j = 0; j < t.size(); ++j)
            elem = g.mul(elem, g.power(gens_ascending[j], t[j]));
        if (out.elem_to_code[static_cast<std::size_t>(elem)] != -1)
            fail(ErrorCode::NotAGroup, "abelian decomposition is not a bijection");
        out.elem_to_code[static_cast<std::size_t>(elem)] = code;
        out.code_to_elem[static_cast<std::size_t>(code)] = elem;
    }
    return out;
}

namespace {

MatrixEndo map_to_matrix(const FinAbPresentation& pres, const AbelianDecomposition& dec,
                         const FiniteEndoMap& theta)
{
    const std::size_t k = pres.factors.size();
    std::vector<std::vector<long long>> entries(k, std::vector<long long>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<long long> unit(k, 0);
        unit[j] = 1;
        int gen_elem = dec.code_to_elem[static_cast<std::size_t>(pres.encode(unit))];
        long long img_code = dec.elem_to_code[static_cast<std::size_t>(theta.map[gen_elem])];
        auto tuple = pres.decode(img_code);
        for (std::size_t i = 0; i < k; ++i)
            entries[i][j] = tuple[i];
    }
    return make_matrix_endo(pres, std::move(entries));
}

ElemSet annihilator_in_dual_coords(const FinAbPresentation& pres,
                                   const AbelianDecomposition& dec, const ElemSet& cell)
{
    ElemSet codes;
    for (int x : cell)
        codes.push_back(static_cast<int>(dec.elem_to_code[static_cast<std::size_t>(x)]));
    std::sort(codes.begin(), codes.end());
    return annihilator(pres, codes);
}

} // namespace

DualModelResult dual_shift_model(const std::shared_ptr<const ShiftModel>& model, const Endo& phi)
{
    if (!model->is_abelian())
        fail(ErrorCode::NotAbelian, "dual shift model needs an abelian coefficient group");
    AbelianDecomposition dec = decompose_abelian(model->coefficient_group());
    const ShiftEndoRep& rep = ShiftModel::shift_of(phi);

    MatrixEndo theta_matrix = map_to_matrix(dec.pres, dec, rep.theta);
    MatrixEndo adjoint = dual_endo(dec.pres, theta_matrix);
    FiniteEndoMap theta_hat = matrix_to_map(dec.pres, adjoint);

    auto dual = ShiftModel::create(dec.pres.as_table_group(), !model->left_compact(),
                                   model->coefficient_name().empty()
                                       ? ""
                                       : model->coefficient_name() + "^");
    DualModelResult out;
    out.endo = dual->shift_endo(-rep.s, theta_hat);
    out.model = std::move(dual);
    return out;
}

Subgroup dual_rect_subgroup(const std::shared_ptr<const ShiftModel>& model,
                            const std::shared_ptr<const ShiftModel>& dual, const Subgroup& rect)
{
    AbelianDecomposition dec = decompose_abelian(model->coefficient_group());
    const RectRep& r = ShiftModel::rect_of(rect);
    std::vector<ElemSet> cells;
    cells.reserve(r.cells.size());
    for (const auto& c : r.cells)
        cells.push_back(annihilator_in_dual_coords(dec.pres, dec, c));
    return dual->rect_subgroup(annihilator_in_dual_coords(dec.pres, dec, r.left_tail),
                               annihilator_in_dual_coords(dec.pres, dec, r.right_tail), r.lo,
                               std::move(cells));
}

DualModelResult dual_finite_model(const std::shared_ptr<const FiniteModel>& model,
                                  const Endo& phi)
{
    if (!model->is_abelian())
        fail(ErrorCode::NotAbelian, "dual model needs an abelian group");
    AbelianDecomposition dec = decompose_abelian(model->group());
    MatrixEndo m = map_to_matrix(dec.pres, dec, FiniteModel::map_of(phi));
    MatrixEndo adjoint = dual_endo(dec.pres, m);
    auto dual = FiniteModel::create(dec.pres.as_table_group(),
                                    model->name().empty() ? "" : model->name() + "^");
    DualModelResult out;
    out.endo = dual->endo_from_map(matrix_to_map(dec.pres, adjoint).map);
    out.model = std::move(dual);
    return out;
}

} // namespace entropia
