#include "product_model.hpp"

namespace entropia {

std::shared_ptr<const ProductModel> ProductModel::create(std::shared_ptr<const GroupModel> a,
                                                         std::shared_ptr<const GroupModel> b)
{
    if (!a || !b)
        fail(ErrorCode::InvalidArgument, "product model needs two factors");
    return std::shared_ptr<const ProductModel>(new ProductModel(std::move(a), std::move(b)));
}

std::string ProductModel::describe() const
{
    return "(" + a_->describe() + ") x (" + b_->describe() + ")";
}

Subgroup ProductModel::wrap(Subgroup a, Subgroup b) const
{
    SubgroupFlags flags;
    flags.compact = a.compact() && b.compact();
    flags.open = a.open() && b.open();
    flags.normal = a.normal() && b.normal();
    auto rep = std::make_shared<ProductSubgroupRep>();
    rep->first = std::move(a);
    rep->second = std::move(b);
    return Subgroup(shared_from_this(), rep, flags);
}

Subgroup ProductModel::pair_subgroup(Subgroup a, Subgroup b) const
{
    if (a.model_ptr() != a_ || b.model_ptr() != b_)
        fail(ErrorCode::IncompatibleModels, "pair components belong to the wrong factor models");
    return wrap(std::move(a), std::move(b));
}

Endo ProductModel::pair_endo(Endo a, Endo b) const
{
    if (a.model_ptr() != a_ || b.model_ptr() != b_)
        fail(ErrorCode::IncompatibleModels, "pair components belong to the wrong factor models");
    auto rep = std::make_shared<ProductEndoRep>();
    rep->first = std::move(a);
    rep->second = std::move(b);
    return Endo(shared_from_this(), rep);
}

const ProductSubgroupRep& ProductModel::parts_of(const Subgroup& s)
{
    return dynamic_cast<const ProductSubgroupRep&>(s.rep());
}

const ProductEndoRep& ProductModel::parts_of(const Endo& e)
{
    return dynamic_cast<const ProductEndoRep&>(e.rep());
}

Subgroup ProductModel::chain_member(int k) const
{
    return wrap(a_->chain_member(k), b_->chain_member(k));
}

int ProductModel::family_cutoff(const Endo& phi) const
{
    const auto& p = parts_of(phi);
    return std::max(a_->family_cutoff(p.first), b_->family_cutoff(p.second));
}

Subgroup ProductModel::whole_group() const
{
    return wrap(a_->whole_group(), b_->whole_group());
}

Subgroup ProductModel::trivial_subgroup() const
{
    return wrap(a_->trivial_subgroup(), b_->trivial_subgroup());
}

Subgroup ProductModel::product(const Subgroup& a, const Subgroup& b) const
{
    const auto& pa = parts_of(a);
    const auto& pb = parts_of(b);
    return wrap(a_->product(pa.first, pb.first), b_->product(pa.second, pb.second));
}

Subgroup ProductModel::intersect(const Subgroup& a, const Subgroup& b) const
{
    const auto& pa = parts_of(a);
    const auto& pb = parts_of(b);
    return wrap(a_->intersect(pa.first, pb.first), b_->intersect(pa.second, pb.second));
}

Subgroup ProductModel::preimage(const Endo& phi, const Subgroup& a) const
{
    const auto& f = parts_of(phi);
    const auto& pa = parts_of(a);
    return wrap(a_->preimage(f.first, pa.first), b_->preimage(f.second, pa.second));
}

Subgroup ProductModel::image(const Endo& phi, const Subgroup& a) const
{
    const auto& f = parts_of(phi);
    const auto& pa = parts_of(a);
    return wrap(a_->image(f.first, pa.first), b_->image(f.second, pa.second));
}

Index ProductModel::index(const Subgroup& a, const Subgroup& b) const
{
    const auto& pa = parts_of(a);
    const auto& pb = parts_of(b);
    Index ia = a_->index(pa.first, pb.first);
    Index ib = b_->index(pa.second, pb.second);
    if (ia.infinite || ib.infinite)
        return Index::infinity();
    return Index::finite(ia.value.times(ib.value));
}

bool ProductModel::contains(const Subgroup& a, const Subgroup& b) const
{
    const auto& pa = parts_of(a);
    const auto& pb = parts_of(b);
    return a_->contains(pa.first, pb.first) && b_->contains(pa.second, pb.second);
}

bool ProductModel::subgroup_equal(const Subgroup& a, const Subgroup& b) const
{
    const auto& pa = parts_of(a);
    const auto& pb = parts_of(b);
    return a_->subgroup_equal(pa.first, pb.first) && b_->subgroup_equal(pa.second, pb.second);
}

Endo ProductModel::identity_endo() const
{
    return pair_endo(a_->identity_endo(), b_->identity_endo());
}

Endo ProductModel::compose(const Endo& f, const Endo& g) const
{
    const auto& pf = parts_of(f);
    const auto& pg = parts_of(g);
    return pair_endo(a_->compose(pf.first, pg.first), b_->compose(pf.second, pg.second));
}

bool ProductModel::is_automorphism(const Endo& phi) const
{
    const auto& p = parts_of(phi);
    return a_->is_automorphism(p.first) && b_->is_automorphism(p.second);
}

Endo ProductModel::inverse_endo(const Endo& phi) const
{
    const auto& p = parts_of(phi);
    return pair_endo(a_->inverse_endo(p.first), b_->inverse_endo(p.second));
}

bool ProductModel::endo_equal(const Endo& f, const Endo& g) const
{
    const auto& pf = parts_of(f);
    const auto& pg = parts_of(g);
    return a_->endo_equal(pf.first, pg.first) && b_->endo_equal(pf.second, pg.second);
}

std::optional<Subgroup> ProductModel::kernel(const Endo& phi) const
{
    const auto& p = parts_of(phi);
    auto ka = a_->kernel(p.first);
    auto kb = b_->kernel(p.second);
    if (!ka || !kb)
        return std::nullopt;
    return wrap(std::move(*ka), std::move(*kb));
}

bool ProductModel::whole_image_contains(const Endo& phi, const Subgroup& h) const
{
    const auto& p = parts_of(phi);
    const auto& ph = parts_of(h);
    return a_->whole_image_contains(p.first, ph.first) &&
           b_->whole_image_contains(p.second, ph.second);
}

std::optional<int> ProductModel::stabilization_bound(const Endo& phi, const Subgroup& u) const
{
    const auto& p = parts_of(phi);
    const auto& pu = parts_of(u);
    auto ba = a_->stabilization_bound(p.first, pu.first);
    auto bb = b_->stabilization_bound(p.second, pu.second);
    if (!ba || !bb)
        return std::nullopt;
    return std::max(*ba, *bb);
}

std::optional<Subgroup> ProductModel::inverse_invariant_hull_closed_form(const Endo& phi,
                                                                         const Subgroup& u) const
{
    // the iteration is componentwise, so a closed form is needed exactly
    // when some component needs one; fill the other side by iterating there
    const auto& p = parts_of(phi);
    const auto& pu = parts_of(u);
    auto ca = a_->inverse_invariant_hull_closed_form(p.first, pu.first);
    auto cb = b_->inverse_invariant_hull_closed_form(p.second, pu.second);
    if (!ca && !cb)
        return std::nullopt;
    Subgroup ha = ca ? *ca : pu.first;
    Subgroup hb = cb ? *cb : pu.second;
    if (!ca) {
        // iterate the first component to its fixed point
        for (int i = 0; i < 512; ++i) {
            Subgroup next = a_->product(pu.first, a_->preimage(p.first, ha));
            if (a_->subgroup_equal(next, ha))
                break;
            ha = next;
        }
    }
    if (!cb) {
        for (int i = 0; i < 512; ++i) {
            Subgroup next = b_->product(pu.second, b_->preimage(p.second, hb));
            if (b_->subgroup_equal(next, hb))
                break;
            hb = next;
        }
    }
    return wrap(std::move(ha), std::move(hb));
}

std::string ProductModel::describe_subgroup(const Subgroup& s) const
{
    const auto& p = parts_of(s);
    return p.first.describe() + " x " + p.second.describe();
}

std::string ProductModel::describe_endo(const Endo& e) const
{
    const auto& p = parts_of(e);
    return p.first.describe() + " x " + p.second.describe();
}

} // namespace entropia
