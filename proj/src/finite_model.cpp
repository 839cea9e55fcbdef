#include "finite_model.hpp"

#include <cmath>
#include <sstream>

namespace entropia {

std::shared_ptr<const FiniteModel> FiniteModel::create(FiniteGroup group, std::string name)
{
    return std::shared_ptr<const FiniteModel>(new FiniteModel(std::move(group), std::move(name)));
}

std::string FiniteModel::describe() const
{
    std::ostringstream os;
    os << "finite group";
    if (!name_.empty())
        os << " " << name_;
    os << " of order " << group_.order();
    return os.str();
}

Subgroup FiniteModel::wrap(ElemSet elements) const
{
    SubgroupFlags flags;
    flags.compact = true;
    flags.open = true;
    flags.normal = is_normal_subgroup(group_, elements);
    auto rep = std::make_shared<FiniteSubgroupRep>();
    rep->elements = std::move(elements);
    return Subgroup(shared_from_this(), rep, flags);
}

Subgroup FiniteModel::subgroup_from_elements(ElemSet elements) const
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int x : elements)
        if (x < 0 || x >= group_.order())
            fail(ErrorCode::InvalidArgument, "subgroup element out of range");
    if (!is_subgroup(group_, elements))
        fail(ErrorCode::NotAGroup, "element set is not closed under product and inverse");
    return wrap(std::move(elements));
}

Subgroup FiniteModel::subgroup_from_generators(const std::vector<int>& gens) const
{
    for (int x : gens)
        if (x < 0 || x >= group_.order())
            fail(ErrorCode::InvalidArgument, "generator out of range");
    return wrap(closure(group_, gens));
}

Endo FiniteModel::endo_from_map(std::vector<int> map) const
{
    auto rep = std::make_shared<FiniteEndoRep>();
    rep->map = make_endo(group_, std::move(map));
    return Endo(shared_from_this(), rep);
}

Endo FiniteModel::endo_from_multiplier(long long m) const
{
    auto rep = std::make_shared<FiniteEndoRep>();
    rep->map = power_endo(group_, m);
    return Endo(shared_from_this(), rep);
}

const ElemSet& FiniteModel::elements_of(const Subgroup& s)
{
    return dynamic_cast<const FiniteSubgroupRep&>(s.rep()).elements;
}

const FiniteEndoMap& FiniteModel::map_of(const Endo& e)
{
    return dynamic_cast<const FiniteEndoRep&>(e.rep()).map;
}

Subgroup FiniteModel::chain_member(int k) const
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "chain index must be >= 1");
    return whole_group();
}

int FiniteModel::family_cutoff(const Endo& phi) const
{
    (void)phi;
    return 1; // the chain is constant at the whole group
}

Subgroup FiniteModel::whole_group() const
{
    return wrap(whole_set(group_));
}

Subgroup FiniteModel::trivial_subgroup() const
{
    return wrap(trivial_set(group_));
}

Subgroup FiniteModel::product(const Subgroup& a, const Subgroup& b) const
{
    ElemSet p = set_product(group_, elements_of(a), elements_of(b));
    if (!is_subgroup(group_, p))
        fail(ErrorCode::PreconditionFailed, "product of the element sets is not a subgroup");
    return wrap(std::move(p));
}

Subgroup FiniteModel::intersect(const Subgroup& a, const Subgroup& b) const
{
    return wrap(set_intersection(elements_of(a), elements_of(b)));
}

Subgroup FiniteModel::preimage(const Endo& phi, const Subgroup& a) const
{
    return wrap(endo_preimage_set(group_, map_of(phi), elements_of(a)));
}

Subgroup FiniteModel::image(const Endo& phi, const Subgroup& a) const
{
    return wrap(endo_image_set(group_, map_of(phi), elements_of(a)));
}

Index FiniteModel::index(const Subgroup& a, const Subgroup& b) const
{
    if (!contains(a, b))
        fail(ErrorCode::NotContained, "index requires the second subgroup inside the first");
    auto size_a = static_cast<std::int64_t>(elements_of(a).size());
    auto size_b = static_cast<std::int64_t>(elements_of(b).size());
    return Index::finite(Factored::from_integer(size_a / size_b));
}

bool FiniteModel::contains(const Subgroup& a, const Subgroup& b) const
{
    return set_contains(elements_of(a), elements_of(b));
}

bool FiniteModel::subgroup_equal(const Subgroup& a, const Subgroup& b) const
{
    return elements_of(a) == elements_of(b);
}

Endo FiniteModel::identity_endo() const
{
    auto rep = std::make_shared<FiniteEndoRep>();
    rep->map = entropia::identity_endo(group_);
    return Endo(shared_from_this(), rep);
}

Endo FiniteModel::compose(const Endo& f, const Endo& g) const
{
    auto rep = std::make_shared<FiniteEndoRep>();
    rep->map = compose_endos(map_of(f), map_of(g));
    return Endo(shared_from_this(), rep);
}

bool FiniteModel::is_automorphism(const Endo& phi) const
{
    return endo_is_bijective(map_of(phi));
}

Endo FiniteModel::inverse_endo(const Endo& phi) const
{
    auto rep = std::make_shared<FiniteEndoRep>();
    rep->map = invert_endo(group_, map_of(phi));
    return Endo(shared_from_this(), rep);
}

bool FiniteModel::endo_equal(const Endo& f, const Endo& g) const
{
    return map_of(f) == map_of(g);
}

std::optional<Subgroup> FiniteModel::kernel(const Endo& phi) const
{
    return wrap(endo_kernel(group_, map_of(phi)));
}

bool FiniteModel::whole_image_contains(const Endo& phi, const Subgroup& h) const
{
    ElemSet im = endo_image_set(group_, map_of(phi), whole_set(group_));
    return set_contains(im, elements_of(h));
}

std::optional<int> FiniteModel::stabilization_bound(const Endo& phi, const Subgroup& u) const
{
    (void)phi;
    (void)u;
    // trajectories strictly ascend until fixed, so at most log2 |G| steps
    int bound = 2;
    int n = group_.order();
    while (n > 1) {
        n /= 2;
        ++bound;
    }
    return bound;
}

InducedPair FiniteModel::restriction_and_quotient(const Endo& phi, const Subgroup& h) const
{
    if (!h.normal())
        fail(ErrorCode::NotNormal, "restriction/quotient requires a normal subgroup");
    const ElemSet& hs = elements_of(h);
    const FiniteEndoMap& f = map_of(phi);
    for (int x : hs)
        if (!std::binary_search(hs.begin(), hs.end(), f.map[x]))
            fail(ErrorCode::NotInvariant, "subgroup is not invariant under the endomorphism");

    SubgroupAsGroup sub = subgroup_as_group(group_, hs);
    FiniteEndoMap sub_map = restricted_to(group_, f, sub);
    auto sub_model = FiniteModel::create(sub.group, name_.empty() ? "" : name_ + "|H");

    QuotientResult q = quotient_group(group_, hs);
    FiniteEndoMap quot_map = induced_on_quotient(group_, f, q, hs);
    auto quot_model = FiniteModel::create(q.group, name_.empty() ? "" : name_ + "/H");

    InducedPair out;
    out.sub_model = sub_model;
    out.sub_endo = sub_model->endo_from_map(sub_map.map);
    out.quot_model = quot_model;
    out.quot_endo = quot_model->endo_from_map(quot_map.map);
    return out;
}

std::string FiniteModel::describe_subgroup(const Subgroup& s) const
{
    std::ostringstream os;
    const ElemSet& e = elements_of(s);
    os << "subgroup of order " << e.size();
    if (e.size() <= 12) {
        os << " {";
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? "," : "") << e[i];
        os << "}";
    }
    return os.str();
}

std::string FiniteModel::describe_endo(const Endo& e) const
{
    const FiniteEndoMap& m = map_of(e);
    if (m == entropia::identity_endo(group_))
        return "identity";
    std::ostringstream os;
    os << "endo [";
    for (std::size_t i = 0; i < m.map.size() && i < 16; ++i)
        os << (i ? " " : "") << m.map[i];
    if (m.map.size() > 16)
        os << " ...";
    os << "]";
    return os.str();
}

} // namespace entropia
