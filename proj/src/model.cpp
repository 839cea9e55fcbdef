#include "model.hpp"

namespace entropia {

const char* model_kind_name(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Finite:  return "finite";
    case ModelKind::Shift:   return "shift";
    case ModelKind::PAdic:   return "padic";
    case ModelKind::Product: return "product";
    }
    return "unknown";
}

std::string Subgroup::describe() const
{
    return model_->describe_subgroup(*this);
}

std::string Endo::describe() const
{
    return model_->describe_endo(*this);
}

bool GroupModel::subgroup_equal(const Subgroup& a, const Subgroup& b) const
{
    return contains(a, b) && contains(b, a);
}

void require_same_model(const Subgroup& a, const Subgroup& b)
{
    if (a.model_ptr() != b.model_ptr())
        fail(ErrorCode::IncompatibleModels, "subgroup handles belong to different models");
}

void require_same_model(const Endo& phi, const Subgroup& a)
{
    if (phi.model_ptr() != a.model_ptr())
        fail(ErrorCode::IncompatibleModels, "endomorphism and subgroup belong to different models");
}

Subgroup product(const Subgroup& a, const Subgroup& b)
{
    require_same_model(a, b);
    if (!a.normal() && !b.normal())
        fail(ErrorCode::PreconditionFailed, "subgroup product needs at least one normal factor");
    return a.model().product(a, b);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b)
{
    require_same_model(a, b);
    return a.model().intersect(a, b);
}

Subgroup preimage(const Endo& phi, const Subgroup& a)
{
    require_same_model(phi, a);
    return phi.model().preimage(phi, a);
}

Subgroup image(const Endo& phi, const Subgroup& a)
{
    require_same_model(phi, a);
    return phi.model().image(phi, a);
}

Index index(const Subgroup& a, const Subgroup& b)
{
    require_same_model(a, b);
    return a.model().index(a, b);
}

bool contains(const Subgroup& a, const Subgroup& b)
{
    require_same_model(a, b);
    return a.model().contains(a, b);
}

bool equal(const Subgroup& a, const Subgroup& b)
{
    require_same_model(a, b);
    return a.model().subgroup_equal(a, b);
}

Endo compose(const Endo& f, const Endo& g)
{
    if (f.model_ptr() != g.model_ptr())
        fail(ErrorCode::IncompatibleModels, "endomorphisms belong to different models");
    return f.model().compose(f, g);
}

Endo inverse(const Endo& phi)
{
    return phi.model().inverse_endo(phi);
}

Endo endo_power(const Endo& phi, int m)
{
    if (m < 0)
        fail(ErrorCode::InvalidArgument, "endomorphism power must be >= 0");
    Endo acc = phi.model().identity_endo();
    for (int i = 0; i < m; ++i)
        acc = compose(acc, phi);
    return acc;
}

bool is_automorphism(const Endo& phi)
{
    return phi.model().is_automorphism(phi);
}

} // namespace entropia
