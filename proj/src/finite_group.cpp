#include "finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace entropia {

namespace {

bool sorted_member(const ElemSet& s, int x)
{
    return std::binary_search(s.begin(), s.end(), x);
}

} // namespace

void FiniteGroup::finish_construction(bool full_validation)
{
    const int n = n_;
    if (n <= 0)
        fail(ErrorCode::NotAGroup, "group order must be positive");
    if (static_cast<int>(table_.size()) != n * n)
        fail(ErrorCode::NotAGroup, "composition table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= n)
            fail(ErrorCode::NotAGroup, "table entry out of range: " + std::to_string(v));

    // identity
    identity_ = -1;
    for (int c = 0; c < n && identity_ < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(c, a) == a && mul(a, c) == a;
        if (ok)
            identity_ = c;
    }
    if (identity_ < 0)
        fail(ErrorCode::NotAGroup, "no identity element");

    // inverses
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0)
            fail(ErrorCode::NotAGroup, "no inverse for element " + std::to_string(a));
    }

    if (full_validation && n <= kExhaustiveCap) {
        // Light's associativity test: (a*g)*b == a*(g*b) over a generating set.
        std::vector<int> gens = generating_set(*this);
        for (int g : gens)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (mul(mul(a, g), b) != mul(a, mul(g, b)))
                        fail(ErrorCode::NotAGroup,
                             "associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(g) + "," + std::to_string(b) + ")");
    }

    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table)
{
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.finish_construction(true);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    g.finish_construction(false); // constructed associatively
    return g;
}

FiniteGroup FiniteGroup::direct_product(const std::vector<FiniteGroup>& parts)
{
    if (parts.empty())
        return cyclic(1);
    long long total = 1;
    for (const auto& p : parts) {
        total *= p.order();
        if (total > 1'000'000)
            fail(ErrorCode::TooLarge, "direct product order exceeds 10^6");
    }
    const int n = static_cast<int>(total);
    // mixed-radix encoding, last factor fastest
    auto decode = [&](int x, std::vector<int>& tuple) {
        for (std::size_t i = parts.size(); i-- > 0;) {
            tuple[i] = x % parts[i].order();
            x /= parts[i].order();
        }
    };
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> ta(parts.size()), tb(parts.size());
    for (int a = 0; a < n; ++a) {
        decode(a, ta);
        for (int b = 0; b < n; ++b) {
            decode(b, tb);
            int code = 0;
            for (std::size_t i = 0; i < parts.size(); ++i)
                code = code * parts[i].order() + parts[i].mul(ta[i], tb[i]);
            g.table_[static_cast<std::size_t>(a) * n + b] = code;
        }
    }
    g.finish_construction(false);
    return g;
}

FiniteGroup FiniteGroup::direct_product_orders(const std::vector<int>& orders)
{
    std::vector<FiniteGroup> parts;
    parts.reserve(orders.size());
    for (int d : orders)
        parts.push_back(cyclic(d));
    return direct_product(parts);
}

int FiniteGroup::element_order(int a) const
{
    int x = a, ord = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++ord;
        if (ord > n_)
            fail(ErrorCode::NotAGroup, "element order exceeds group order");
    }
    return ord;
}

int FiniteGroup::power(int a, long long e) const
{
    int ord = element_order(a);
    long long r = e % ord;
    if (r < 0)
        r += ord;
    int acc = identity_;
    for (long long i = 0; i < r; ++i)
        acc = mul(acc, a);
    return acc;
}

ElemSet closure(const FiniteGroup& g, const std::vector<int>& gens)
{
    std::vector<char> in(g.order(), 0);
    std::vector<int> stack;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            stack.push_back(x);
        }
    };
    push(g.identity());
    for (int x : gens)
        push(x);
    // every pair is covered when the later-popped of the two is processed
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        push(g.inv(x));
        for (int i = 0; i < g.order(); ++i)
            if (in[i]) {
                push(g.mul(x, i));
                push(g.mul(i, x));
            }
    }
    ElemSet out;
    for (int i = 0; i < g.order(); ++i)
        if (in[i])
            out.push_back(i);
    return out;
}

bool is_subgroup(const FiniteGroup& g, const ElemSet& s)
{
    if (s.empty() || !sorted_member(s, g.identity()))
        return false;
    for (int a : s) {
        if (!sorted_member(s, g.inv(a)))
            return false;
        for (int b : s)
            if (!sorted_member(s, g.mul(a, b)))
                return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElemSet& s)
{
    if (!is_subgroup(g, s))
        return false;
    for (int x = 0; x < g.order(); ++x)
        for (int a : s)
            if (!sorted_member(s, g.mul(g.mul(x, a), g.inv(x))))
                return false;
    return true;
}

ElemSet set_product(const FiniteGroup& g, const ElemSet& a, const ElemSet& b)
{
    std::vector<char> in(g.order(), 0);
    for (int x : a)
        for (int y : b)
            in[g.mul(x, y)] = 1;
    ElemSet out;
    for (int i = 0; i < g.order(); ++i)
        if (in[i])
            out.push_back(i);
    return out;
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b)
{
    ElemSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ElemSet& a, const ElemSet& b)
{
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

ElemSet whole_set(const FiniteGroup& g)
{
    ElemSet out(g.order());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

ElemSet trivial_set(const FiniteGroup& g)
{
    return {g.identity()};
}

std::vector<int> generating_set(const FiniteGroup& g)
{
    std::vector<int> gens;
    std::vector<char> covered(g.order(), 0);
    covered[g.identity()] = 1;
    int covered_count = 1;
    while (covered_count < g.order()) {
        int pick = -1;
        for (int i = 0; i < g.order(); ++i)
            if (!covered[i]) {
                pick = i;
                break;
            }
        gens.push_back(pick);
        ElemSet c = closure(g, gens);
        std::fill(covered.begin(), covered.end(), 0);
        for (int x : c)
            covered[x] = 1;
        covered_count = static_cast<int>(c.size());
    }
    return gens;
}

std::vector<ElemSet> all_subgroups(const FiniteGroup& g)
{
    if (g.order() > FiniteGroup::kExhaustiveCap)
        fail(ErrorCode::TooLarge,
             "subgroup enumeration capped at order " + std::to_string(FiniteGroup::kExhaustiveCap));

    std::set<ElemSet> known;
    std::vector<ElemSet> cyclics;
    known.insert(trivial_set(g));
    for (int a = 0; a < g.order(); ++a) {
        ElemSet c = closure(g, {a});
        if (known.insert(c).second)
            cyclics.push_back(c);
    }
    cyclics.push_back(trivial_set(g));

    // every subgroup is an iterated join of cyclic subgroups
    std::vector<ElemSet> queue(known.begin(), known.end());
    while (!queue.empty()) {
        ElemSet s = std::move(queue.back());
        queue.pop_back();
        for (const ElemSet& c : cyclics) {
            if (set_contains(s, c))
                continue;
            std::vector<int> gens = s;
            gens.insert(gens.end(), c.begin(), c.end());
            ElemSet j = closure(g, gens);
            if (known.insert(j).second)
                queue.push_back(j);
        }
    }
    return {known.begin(), known.end()};
}

std::vector<ElemSet> all_normal_subgroups(const FiniteGroup& g)
{
    std::vector<ElemSet> out;
    for (auto& s : all_subgroups(g))
        if (is_normal_subgroup(g, s))
            out.push_back(std::move(s));
    return out;
}

bool strongly_compactly_covered_witness(const FiniteGroup& g)
{
    for (int a = 0; a < g.order(); ++a) {
        // normal closure of <a>
        std::vector<int> gens;
        for (int x = 0; x < g.order(); ++x)
            gens.push_back(g.mul(g.mul(x, a), g.inv(x)));
        ElemSet n = closure(g, gens);
        if (!is_normal_subgroup(g, n) || !sorted_member(n, a))
            return false;
    }
    return true;
}

QuotientResult quotient_group(const FiniteGroup& g, const ElemSet& normal)
{
    if (!is_normal_subgroup(g, normal))
        fail(ErrorCode::NotNormal, "quotient requires a normal subgroup");

    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order(); ++a) {
        if (coset_of[a] >= 0)
            continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int n : normal)
            coset_of[g.mul(a, n)] = id;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] = coset_of[g.mul(reps[i], reps[j])];

    QuotientResult out{FiniteGroup::from_table(m, std::move(table)), std::move(coset_of),
                       std::move(reps)};
    return out;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& subgroup)
{
    if (!is_subgroup(g, subgroup))
        fail(ErrorCode::NotAGroup, "element set is not a subgroup");
    const int m = static_cast<int>(subgroup.size());
    std::vector<int> from_parent(g.order(), -1);
    for (int i = 0; i < m; ++i)
        from_parent[subgroup[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i) * m + j] = from_parent[g.mul(subgroup[i], subgroup[j])];
    return SubgroupAsGroup{FiniteGroup::from_table(m, std::move(table)), subgroup,
                           std::move(from_parent)};
}

std::optional<FiniteEndoMap> try_make_endo(const FiniteGroup& g, std::vector<int> map)
{
    if (static_cast<int>(map.size()) != g.order())
        return std::nullopt;
    for (int v : map)
        if (v < 0 || v >= g.order())
            return std::nullopt;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (map[g.mul(a, b)] != g.mul(map[a], map[b]))
                return std::nullopt;
    return FiniteEndoMap{std::move(map)};
}

FiniteEndoMap make_endo(const FiniteGroup& g, std::vector<int> map)
{
    auto e = try_make_endo(g, std::move(map));
    if (!e)
        fail(ErrorCode::InvalidArgument, "map is not a group endomorphism");
    return *e;
}

FiniteEndoMap identity_endo(const FiniteGroup& g)
{
    std::vector<int> m(g.order());
    std::iota(m.begin(), m.end(), 0);
    return FiniteEndoMap{std::move(m)};
}

FiniteEndoMap compose_endos(const FiniteEndoMap& f, const FiniteEndoMap& g)
{
    std::vector<int> m(g.map.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = f.map[g.map[i]];
    return FiniteEndoMap{std::move(m)};
}

bool endo_is_bijective(const FiniteEndoMap& f)
{
    std::vector<char> seen(f.map.size(), 0);
    for (int v : f.map) {
        if (seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

FiniteEndoMap invert_endo(const FiniteGroup& g, const FiniteEndoMap& f)
{
    if (!endo_is_bijective(f))
        fail(ErrorCode::NotAutomorphism, "endomorphism is not bijective");
    std::vector<int> m(g.order());
    for (int i = 0; i < g.order(); ++i)
        m[f.map[i]] = i;
    return FiniteEndoMap{std::move(m)};
}

FiniteEndoMap power_endo(const FiniteGroup& g, long long m)
{
    std::vector<int> map(g.order());
    for (int i = 0; i < g.order(); ++i)
        map[i] = g.power(i, m);
    return make_endo(g, std::move(map));
}

ElemSet endo_image_set(const FiniteGroup& g, const FiniteEndoMap& f, const ElemSet& s)
{
    std::vector<char> in(g.order(), 0);
    for (int x : s)
        in[f.map[x]] = 1;
    ElemSet out;
    for (int i = 0; i < g.order(); ++i)
        if (in[i])
            out.push_back(i);
    return out;
}

ElemSet endo_preimage_set(const FiniteGroup& g, const FiniteEndoMap& f, const ElemSet& s)
{
    ElemSet out;
    for (int x = 0; x < g.order(); ++x)
        if (sorted_member(s, f.map[x]))
            out.push_back(x);
    return out;
}

ElemSet endo_kernel(const FiniteGroup& g, const FiniteEndoMap& f)
{
    return endo_preimage_set(g, f, {g.identity()});
}

FiniteEndoMap induced_on_quotient(const FiniteGroup& g, const FiniteEndoMap& f,
                                  const QuotientResult& q, const ElemSet& normal)
{
    (void)g;
    for (int n : normal)
        if (!sorted_member(normal, f.map[n]))
            fail(ErrorCode::NotInvariant, "subgroup is not invariant under the endomorphism");
    const int m = static_cast<int>(q.coset_rep.size());
    std::vector<int> map(m);
    for (int i = 0; i < m; ++i)
        map[i] = q.projection[f.map[q.coset_rep[i]]];
    return make_endo(q.group, std::move(map));
}

FiniteEndoMap restricted_to(const FiniteGroup& g, const FiniteEndoMap& f,
                            const SubgroupAsGroup& sub)
{
    (void)g;
    std::vector<int> map(sub.group.order());
    for (int i = 0; i < sub.group.order(); ++i) {
        int img = f.map[sub.to_parent[i]];
        if (sub.from_parent[img] < 0)
            fail(ErrorCode::NotInvariant, "subgroup is not invariant under the endomorphism");
        map[i] = sub.from_parent[img];
    }
    return make_endo(sub.group, std::move(map));
}

std::vector<FiniteEndoMap> all_endos(const FiniteGroup& g)
{
    std::vector<int> gens = generating_set(g);
    if (gens.empty())
        return {identity_endo(g)};

    // extend a partial assignment gens[i] -> images[i] by BFS over words
    auto extend = [&](const std::vector<int>& images) -> std::optional<FiniteEndoMap> {
        std::vector<int> map(g.order(), -1);
        map[g.identity()] = g.identity();
        std::vector<int> frontier{g.identity()};
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = g.mul(x, gens[i]);
                int img = g.mul(map[x], images[i]);
                if (map[y] < 0) {
                    map[y] = img;
                    frontier.push_back(y);
                } else if (map[y] != img) {
                    return std::nullopt;
                }
            }
        }
        return try_make_endo(g, std::move(map));
    };

    std::vector<FiniteEndoMap> out;
    std::vector<int> images(gens.size(), 0);
    while (true) {
        if (auto e = extend(images))
            out.push_back(std::move(*e));
        std::size_t i = 0;
        for (; i < images.size(); ++i) {
            if (++images[i] < g.order())
                break;
            images[i] = 0;
        }
        if (i == images.size())
            break;
    }
    return out;
}

std::vector<FiniteEndoMap> all_automorphisms(const FiniteGroup& g)
{
    std::vector<FiniteEndoMap> out;
    for (auto& e : all_endos(g))
        if (endo_is_bijective(e))
            out.push_back(std::move(e));
    return out;
}

FiniteGroup dihedral_group(int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "dihedral parameter must be >= 1");
    // elements r^i s^j encoded as i + n*j; s r = r^{-1} s
    const int m = 2 * n;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    auto enc = [&](int i, int j) { return ((i % n + n) % n) + n * j; };
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    int j = (j1 + j2) % 2;
                    table[static_cast<std::size_t>(enc(i1, j1)) * m + enc(i2, j2)] = enc(i, j);
                }
    return FiniteGroup::from_table(m, std::move(table));
}

FiniteGroup quaternion_group()
{
    // 1, -1, i, -i, j, -j, k, -k as pairs (axis, sign): 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto mulq = [](int a, int b) {
        auto split = [](int x) { return std::pair<int, int>{x / 2, x % 2}; }; // axis 0..3, sign
        auto join = [](int axis, int sign) { return axis * 2 + sign; };
        auto [ax, as] = split(a);
        auto [bx, bs] = split(b);
        int sign = (as + bs) % 2;
        if (ax == 0)
            return join(bx, sign);
        if (bx == 0)
            return join(ax, sign);
        if (ax == bx)
            return join(0, (sign + 1) % 2); // i*i = -1
        // i*j=k, j*k=i, k*i=j and anticommute
        static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        static const int neg[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
        return join(prod[ax][bx], (sign + neg[ax][bx]) % 2);
    };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[static_cast<std::size_t>(a) * 8 + b] = mulq(a, b);
    return FiniteGroup::from_table(8, std::move(table));
}

namespace {

std::vector<std::vector<int>> permutations_of(int n)
{
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms)
{
    const int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i)
        index[perms[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(perms[a].size());
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = perms[a][perms[b][i]];
            table[static_cast<std::size_t>(a) * m + b] = index.at(c);
        }
    return FiniteGroup::from_table(m, std::move(table));
}

bool perm_is_even(const std::vector<int>& p)
{
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                ++inversions;
    return inversions % 2 == 0;
}

} // namespace

FiniteGroup symmetric_group(int n)
{
    if (n < 1 || n > 5)
        fail(ErrorCode::TooLarge, "symmetric_group supports n in 1..5");
    return permutation_group(permutations_of(n));
}

FiniteGroup alternating_group(int n)
{
    if (n < 1 || n > 5)
        fail(ErrorCode::TooLarge, "alternating_group supports n in 1..5");
    std::vector<std::vector<int>> even;
    for (auto& p : permutations_of(n))
        if (perm_is_even(p))
            even.push_back(std::move(p));
    return permutation_group(even);
}

std::vector<std::pair<std::string, FiniteGroup>> group_catalog(int max_order)
{
    std::vector<std::pair<std::string, FiniteGroup>> out;
    auto add = [&](std::string name, FiniteGroup g) {
        if (g.order() <= max_order)
            out.emplace_back(std::move(name), std::move(g));
    };
    for (int n = 1; n <= max_order; ++n)
        add("Z" + std::to_string(n), FiniteGroup::cyclic(n));
    static const std::vector<std::vector<int>> products = {
        {2, 2}, {2, 4}, {2, 6}, {2, 2, 2}, {3, 3}, {2, 8}, {2, 10}, {2, 12},
        {4, 4}, {2, 2, 4}, {3, 6}, {2, 2, 6}, {2, 2, 2, 2},
    };
    for (const auto& orders : products) {
        std::string name;
        for (int d : orders)
            name += (name.empty() ? "Z" : "xZ") + std::to_string(d);
        add(name, FiniteGroup::direct_product_orders(orders));
    }
    for (int n = 3; 2 * n <= max_order; ++n)
        add("D" + std::to_string(n), dihedral_group(n));
    if (max_order >= 8)
        add("Q8", quaternion_group());
    if (max_order >= 12)
        add("A4", alternating_group(4));
    if (max_order >= 24)
        add("S4", symmetric_group(4));
    return out;
}

FiniteGroup read_table_stream(std::istream& in)
{
    int n = 0;
    if (!(in >> n) || n <= 0)
        fail(ErrorCode::ParseError, "table file must start with a positive order");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (long long i = 0; i < static_cast<long long>(n) * n; ++i) {
        int v;
        if (!(in >> v))
            fail(ErrorCode::ParseError, "table file truncated at entry " + std::to_string(i));
        table.push_back(v);
    }
    return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup read_table_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open table file: " + path);
    return read_table_stream(in);
}

} // namespace entropia
