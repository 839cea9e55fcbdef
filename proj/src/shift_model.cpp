#include "shift_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace entropia {

std::shared_ptr<const ShiftModel> ShiftModel::create(FiniteGroup coeff, bool left_compact,
                                                     std::string coeff_name)
{
    return std::shared_ptr<const ShiftModel>(
        new ShiftModel(std::move(coeff), left_compact, std::move(coeff_name)));
}

std::string ShiftModel::describe() const
{
    std::ostringstream os;
    os << "shift group over ";
    if (!coeff_name_.empty())
        os << coeff_name_;
    else
        os << "a group of order " << coeff_.order();
    os << (left_compact_ ? " (left-compact)" : " (right-compact)");
    return os.str();
}

Subgroup ShiftModel::wrap(RectRep rep) const
{
    // canonical form: trim cells equal to the adjacent tail
    while (!rep.cells.empty() && rep.cells.front() == rep.left_tail) {
        rep.cells.erase(rep.cells.begin());
        ++rep.lo;
    }
    while (!rep.cells.empty() && rep.cells.back() == rep.right_tail)
        rep.cells.pop_back();
    if (rep.cells.empty() && rep.left_tail == rep.right_tail)
        rep.lo = 1;

    SubgroupFlags flags;
    flags.normal = true; // cells are normal in F, so conjugation is cellwise
    const ElemSet full = full_cell();
    const ElemSet& compact_tail = left_compact_ ? rep.left_tail : rep.right_tail;
    const ElemSet& discrete_tail = left_compact_ ? rep.right_tail : rep.left_tail;
    flags.open = compact_tail == full;
    flags.compact = discrete_tail.size() == 1;
    return Subgroup(shared_from_this(), std::make_shared<RectRep>(std::move(rep)), flags);
}

Subgroup ShiftModel::rect_subgroup(ElemSet left_tail, ElemSet right_tail, long long lo,
                                   std::vector<ElemSet> cells) const
{
    auto check = [&](const ElemSet& s, const char* what) {
        if (!is_subgroup(coeff_, s))
            fail(ErrorCode::NotAGroup, std::string(what) + " is not a subgroup of the coefficient group");
        if (!is_normal_subgroup(coeff_, s))
            fail(ErrorCode::NotRepresentable,
                 std::string(what) + " must be normal in the coefficient group");
    };
    check(left_tail, "left tail");
    check(right_tail, "right tail");
    for (auto& c : cells)
        check(c, "window cell");
    RectRep rep;
    rep.left_tail = std::move(left_tail);
    rep.right_tail = std::move(right_tail);
    rep.lo = lo;
    rep.cells = std::move(cells);
    return wrap(std::move(rep));
}

Subgroup ShiftModel::constant_pattern(const ElemSet& value) const
{
    return rect_subgroup(value, value, 1, {});
}

Endo ShiftModel::shift_endo(long long s, FiniteEndoMap theta) const
{
    // validated: theta is a FiniteEndoMap of F by construction
    if (static_cast<int>(theta.map.size()) != coeff_.order())
        fail(ErrorCode::InvalidArgument, "coefficient endomorphism has wrong size");
    auto rep = std::make_shared<ShiftEndoRep>();
    rep->s = s;
    rep->theta = std::move(theta);
    return Endo(shared_from_this(), rep);
}

const RectRep& ShiftModel::rect_of(const Subgroup& s)
{
    return dynamic_cast<const RectRep&>(s.rep());
}

const ShiftEndoRep& ShiftModel::shift_of(const Endo& e)
{
    return dynamic_cast<const ShiftEndoRep&>(e.rep());
}

Subgroup ShiftModel::chain_member(int k) const
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "chain index must be >= 1");
    RectRep rep;
    if (left_compact_) {
        rep.left_tail = full_cell();
        rep.right_tail = trivial_cell();
        rep.lo = k + 1; // full through coordinate k
    } else {
        rep.left_tail = trivial_cell();
        rep.right_tail = full_cell();
        rep.lo = 1 - k; // full from coordinate 1-k on
    }
    return wrap(std::move(rep));
}

int ShiftModel::family_cutoff(const Endo& phi) const
{
    (void)phi;
    return 1; // entropy is chain-index independent; the engine verifies a prefix
}

Subgroup ShiftModel::whole_group() const
{
    RectRep rep;
    rep.left_tail = full_cell();
    rep.right_tail = full_cell();
    return wrap(std::move(rep));
}

Subgroup ShiftModel::trivial_subgroup() const
{
    RectRep rep;
    rep.left_tail = trivial_cell();
    rep.right_tail = trivial_cell();
    return wrap(std::move(rep));
}

Subgroup ShiftModel::product(const Subgroup& a, const Subgroup& b) const
{
    const RectRep& ra = rect_of(a);
    const RectRep& rb = rect_of(b);
    RectRep out;
    out.left_tail = set_product(coeff_, ra.left_tail, rb.left_tail);
    out.right_tail = set_product(coeff_, ra.right_tail, rb.right_tail);
    out.lo = std::min(ra.lo, rb.lo);
    long long hi = std::max(ra.hi(), rb.hi());
    for (long long i = out.lo; i < hi; ++i)
        out.cells.push_back(set_product(coeff_, ra.cell_at(i), rb.cell_at(i)));
    return wrap(std::move(out));
}

Subgroup ShiftModel::intersect(const Subgroup& a, const Subgroup& b) const
{
    const RectRep& ra = rect_of(a);
    const RectRep& rb = rect_of(b);
    RectRep out;
    out.left_tail = set_intersection(ra.left_tail, rb.left_tail);
    out.right_tail = set_intersection(ra.right_tail, rb.right_tail);
    out.lo = std::min(ra.lo, rb.lo);
    long long hi = std::max(ra.hi(), rb.hi());
    for (long long i = out.lo; i < hi; ++i)
        out.cells.push_back(set_intersection(ra.cell_at(i), rb.cell_at(i)));
    return wrap(std::move(out));
}

Subgroup ShiftModel::preimage(const Endo& phi, const Subgroup& a) const
{
    const ShiftEndoRep& f = shift_of(phi);
    const RectRep& ra = rect_of(a);
    // x in phi^{-1}A iff theta(x_m) lies in A_{m-s} for every m
    RectRep out;
    out.left_tail = endo_preimage_set(coeff_, f.theta, ra.left_tail);
    out.right_tail = endo_preimage_set(coeff_, f.theta, ra.right_tail);
    out.lo = ra.lo + f.s;
    out.cells.reserve(ra.cells.size());
    for (const auto& c : ra.cells)
        out.cells.push_back(endo_preimage_set(coeff_, f.theta, c));
    return wrap(std::move(out));
}

Subgroup ShiftModel::image(const Endo& phi, const Subgroup& a) const
{
    const ShiftEndoRep& f = shift_of(phi);
    const RectRep& ra = rect_of(a);
    // (phi A)_n = theta(A_{n+s}); representable only when the image cells
    // stay normal in F (automatic for automorphisms and abelian F)
    auto push_image = [&](const ElemSet& c) {
        ElemSet img = endo_image_set(coeff_, f.theta, c);
        if (!is_normal_subgroup(coeff_, img))
            fail(ErrorCode::NotRepresentable,
                 "image cell is not normal in the coefficient group");
        return img;
    };
    RectRep out;
    out.left_tail = push_image(ra.left_tail);
    out.right_tail = push_image(ra.right_tail);
    out.lo = ra.lo - f.s;
    out.cells.reserve(ra.cells.size());
    for (const auto& c : ra.cells)
        out.cells.push_back(push_image(c));
    return wrap(std::move(out));
}

Index ShiftModel::index(const Subgroup& a, const Subgroup& b) const
{
    if (!contains(a, b))
        fail(ErrorCode::NotContained, "index requires the second subgroup inside the first");
    const RectRep& ra = rect_of(a);
    const RectRep& rb = rect_of(b);
    if (ra.left_tail != rb.left_tail || ra.right_tail != rb.right_tail)
        return Index::infinity(); // the factors differ on infinitely many coordinates
    Factored acc;
    long long lo = std::min(ra.lo, rb.lo);
    long long hi = std::max(ra.hi(), rb.hi());
    for (long long i = lo; i < hi; ++i) {
        auto na = static_cast<std::int64_t>(ra.cell_at(i).size());
        auto nb = static_cast<std::int64_t>(rb.cell_at(i).size());
        acc = acc.times(Factored::from_integer(na / nb));
    }
    return Index::finite(acc);
}

bool ShiftModel::contains(const Subgroup& a, const Subgroup& b) const
{
    const RectRep& ra = rect_of(a);
    const RectRep& rb = rect_of(b);
    if (!set_contains(ra.left_tail, rb.left_tail) || !set_contains(ra.right_tail, rb.right_tail))
        return false;
    long long lo = std::min(ra.lo, rb.lo);
    long long hi = std::max(ra.hi(), rb.hi());
    for (long long i = lo; i < hi; ++i)
        if (!set_contains(ra.cell_at(i), rb.cell_at(i)))
            return false;
    return true;
}

bool ShiftModel::subgroup_equal(const Subgroup& a, const Subgroup& b) const
{
    const RectRep& ra = rect_of(a);
    const RectRep& rb = rect_of(b);
    return ra.left_tail == rb.left_tail && ra.right_tail == rb.right_tail && ra.lo == rb.lo &&
           ra.cells == rb.cells;
}

Endo ShiftModel::identity_endo() const
{
    return shift_endo(0, entropia::identity_endo(coeff_));
}

Endo ShiftModel::compose(const Endo& f, const Endo& g) const
{
    const ShiftEndoRep& rf = shift_of(f);
    const ShiftEndoRep& rg = shift_of(g);
    return shift_endo(rf.s + rg.s, compose_endos(rf.theta, rg.theta));
}

bool ShiftModel::is_automorphism(const Endo& phi) const
{
    return endo_is_bijective(shift_of(phi).theta);
}

Endo ShiftModel::inverse_endo(const Endo& phi) const
{
    const ShiftEndoRep& f = shift_of(phi);
    return shift_endo(-f.s, invert_endo(coeff_, f.theta));
}

bool ShiftModel::endo_equal(const Endo& f, const Endo& g) const
{
    return shift_of(f).s == shift_of(g).s && shift_of(f).theta == shift_of(g).theta;
}

std::optional<Subgroup> ShiftModel::kernel(const Endo& phi) const
{
    return constant_pattern(endo_kernel(coeff_, shift_of(phi).theta));
}

bool ShiftModel::whole_image_contains(const Endo& phi, const Subgroup& h) const
{
    ElemSet im = endo_image_set(coeff_, shift_of(phi).theta, whole_set(coeff_));
    const RectRep& rh = rect_of(h);
    if (!set_contains(im, rh.left_tail) || !set_contains(im, rh.right_tail))
        return false;
    for (const auto& c : rh.cells)
        if (!set_contains(im, c))
            return false;
    return true;
}

std::optional<int> ShiftModel::stabilization_bound(const Endo& phi, const Subgroup& u) const
{
    // the trajectory window translates by s per step; per-coordinate cells
    // ascend monotonically through the subgroup lattice of F, whose chains
    // have length at most log2 |F|
    const ShiftEndoRep& f = shift_of(phi);
    const RectRep& ru = rect_of(u);
    long long lattice_height = 0;
    for (int n = coeff_.order(); n > 1; n /= 2)
        ++lattice_height;
    long long width = static_cast<long long>(ru.cells.size());
    long long bound = width + std::llabs(f.s) + lattice_height + 2;
    return static_cast<int>(bound);
}

std::optional<Subgroup> ShiftModel::inverse_invariant_hull_closed_form(const Endo& phi,
                                                                       const Subgroup& u) const
{
    // Preimages translate the window by +s.  When the window drifts toward
    // the discrete tail and the compact tail of u is full, the full region
    // advances by |s| every step and exhausts the group.  All other cases
    // reach a fixed point, so no closed form is needed.
    const ShiftEndoRep& f = shift_of(phi);
    if (f.s == 0)
        return std::nullopt;
    bool drifts_discrete = left_compact_ ? f.s > 0 : f.s < 0;
    if (!drifts_discrete)
        return std::nullopt;
    const RectRep& ru = rect_of(u);
    const ElemSet& trailing = left_compact_ ? ru.left_tail : ru.right_tail;
    if (trailing != full_cell())
        return std::nullopt;
    return whole_group();
}

InducedPair ShiftModel::restriction_and_quotient(const Endo& phi, const Subgroup& h) const
{
    const RectRep& rh = rect_of(h);
    if (!rh.cells.empty() || rh.left_tail != rh.right_tail)
        fail(ErrorCode::NotConstantPattern,
             "restriction/quotient needs a constant-pattern subgroup");
    const ElemSet& n = rh.left_tail;
    const ShiftEndoRep& f = shift_of(phi);
    for (int x : n)
        if (!std::binary_search(n.begin(), n.end(), f.theta.map[x]))
            fail(ErrorCode::NotInvariant, "constant pattern is not invariant under the coefficient map");

    SubgroupAsGroup sub = subgroup_as_group(coeff_, n);
    FiniteEndoMap theta_sub = restricted_to(coeff_, f.theta, sub);
    auto sub_model = ShiftModel::create(sub.group, left_compact_,
                                        coeff_name_.empty() ? "" : coeff_name_ + "|N");

    QuotientResult q = quotient_group(coeff_, n);
    FiniteEndoMap theta_quot = induced_on_quotient(coeff_, f.theta, q, n);
    auto quot_model = ShiftModel::create(q.group, left_compact_,
                                         coeff_name_.empty() ? "" : coeff_name_ + "/N");

    InducedPair out;
    out.sub_model = sub_model;
    out.sub_endo = sub_model->shift_endo(f.s, theta_sub);
    out.quot_model = quot_model;
    out.quot_endo = quot_model->shift_endo(f.s, theta_quot);
    return out;
}

std::string ShiftModel::describe_subgroup(const Subgroup& s) const
{
    const RectRep& r = rect_of(s);
    auto cell_name = [&](const ElemSet& c) -> std::string {
        if (static_cast<int>(c.size()) == coeff_.order())
            return "F";
        if (c.size() == 1)
            return "e";
        return "#" + std::to_string(c.size());
    };
    std::ostringstream os;
    os << "rect[.." << cell_name(r.left_tail);
    if (!r.cells.empty()) {
        os << " | " << r.lo << ":";
        for (const auto& c : r.cells)
            os << " " << cell_name(c);
        os << " |";
    } else {
        os << " |" << r.lo << "|";
    }
    os << " " << cell_name(r.right_tail) << "..]";
    return os.str();
}

std::string ShiftModel::describe_endo(const Endo& e) const
{
    const ShiftEndoRep& f = shift_of(e);
    std::ostringstream os;
    os << "shift s=" << f.s;
    if (!(f.theta == entropia::identity_endo(coeff_)))
        os << " with coefficient map";
    return os.str();
}

ShiftModel::Truncation ShiftModel::truncate(long long lo, long long hi) const
{
    if (hi < lo)
        fail(ErrorCode::InvalidArgument, "truncation window is empty");
    long long width = hi - lo + 1;
    double size = 1;
    for (long long i = 0; i < width; ++i) {
        size *= coeff_.order();
        if (size > 4096)
            fail(ErrorCode::TooLarge, "truncation window group exceeds order 4096");
    }
    std::vector<FiniteGroup> parts(static_cast<std::size_t>(width), coeff_);
    Truncation t;
    t.model = FiniteModel::create(FiniteGroup::direct_product(parts));
    t.lo = lo;
    t.hi = hi;
    return t;
}

Subgroup ShiftModel::truncate_handle(const Truncation& t, const Subgroup& rect) const
{
    const RectRep& r = rect_of(rect);
    long long width = t.hi - t.lo + 1;
    // cartesian product of the per-coordinate cells, mixed radix with
    // coordinate t.lo most significant
    ElemSet elems;
    std::vector<std::size_t> pick(static_cast<std::size_t>(width), 0);
    while (true) {
        long long code = 0;
        for (long long i = 0; i < width; ++i) {
            const ElemSet& cell = r.cell_at(t.lo + i);
            code = code * coeff_.order() + cell[pick[static_cast<std::size_t>(i)]];
        }
        elems.push_back(static_cast<int>(code));
        long long i = width - 1;
        for (; i >= 0; --i) {
            const ElemSet& cell = r.cell_at(t.lo + i);
            if (++pick[static_cast<std::size_t>(i)] < cell.size())
                break;
            pick[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0)
            break;
    }
    std::sort(elems.begin(), elems.end());
    return t.model->subgroup_from_elements(std::move(elems));
}

} // namespace entropia
