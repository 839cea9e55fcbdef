#include "padic_model.hpp"

#include <sstream>

#include "finite_model.hpp"

namespace entropia {

namespace {

bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

std::shared_ptr<const PAdicModel> PAdicModel::create(long long p)
{
    if (!is_prime(p))
        fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return std::shared_ptr<const PAdicModel>(new PAdicModel(p));
}

std::string PAdicModel::describe() const
{
    return "Q_" + std::to_string(p_);
}

Subgroup PAdicModel::wrap(LevelRep rep) const
{
    SubgroupFlags flags;
    flags.normal = true;
    switch (rep.which) {
    case LevelRep::Kind::Level:
        flags.compact = true;
        flags.open = true;
        break;
    case LevelRep::Kind::Whole:
        flags.compact = false;
        flags.open = true;
        break;
    case LevelRep::Kind::Trivial:
        flags.compact = true;
        flags.open = false;
        break;
    }
    return Subgroup(shared_from_this(), std::make_shared<LevelRep>(rep), flags);
}

Subgroup PAdicModel::level_subgroup(long long k) const
{
    LevelRep rep;
    rep.which = LevelRep::Kind::Level;
    rep.level = k;
    return wrap(rep);
}

Endo PAdicModel::mult_endo(std::optional<long long> valuation) const
{
    auto rep = std::make_shared<MultEndoRep>();
    rep->valuation = valuation;
    return Endo(shared_from_this(), rep);
}

const LevelRep& PAdicModel::level_of(const Subgroup& s)
{
    return dynamic_cast<const LevelRep&>(s.rep());
}

const MultEndoRep& PAdicModel::mult_of(const Endo& e)
{
    return dynamic_cast<const MultEndoRep&>(e.rep());
}

EntropyValue PAdicModel::closed_form_entropy(const Endo& phi) const
{
    const auto& m = mult_of(phi);
    if (!m.valuation)
        fail(ErrorCode::ZeroMultiplier, "closed-form entropy needs a nonzero multiplier");
    long long v = *m.valuation;
    if (v >= 0)
        return EntropyValue::zero();
    return EntropyValue::log_of(Factored::prime_power(p_, -v));
}

Subgroup PAdicModel::chain_member(int k) const
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "chain index must be >= 1");
    return level_subgroup(-static_cast<long long>(k));
}

int PAdicModel::family_cutoff(const Endo& phi) const
{
    (void)phi;
    return 1; // entropy is level-independent; the engine verifies a prefix
}

Subgroup PAdicModel::whole_group() const
{
    LevelRep rep;
    rep.which = LevelRep::Kind::Whole;
    return wrap(rep);
}

Subgroup PAdicModel::trivial_subgroup() const
{
    LevelRep rep;
    rep.which = LevelRep::Kind::Trivial;
    return wrap(rep);
}

Subgroup PAdicModel::product(const Subgroup& a, const Subgroup& b) const
{
    const auto& ra = level_of(a);
    const auto& rb = level_of(b);
    if (ra.which == LevelRep::Kind::Whole || rb.which == LevelRep::Kind::Whole)
        return whole_group();
    if (ra.which == LevelRep::Kind::Trivial)
        return wrap(rb);
    if (rb.which == LevelRep::Kind::Trivial)
        return wrap(ra);
    return level_subgroup(std::min(ra.level, rb.level));
}

Subgroup PAdicModel::intersect(const Subgroup& a, const Subgroup& b) const
{
    const auto& ra = level_of(a);
    const auto& rb = level_of(b);
    if (ra.which == LevelRep::Kind::Trivial || rb.which == LevelRep::Kind::Trivial)
        return trivial_subgroup();
    if (ra.which == LevelRep::Kind::Whole)
        return wrap(rb);
    if (rb.which == LevelRep::Kind::Whole)
        return wrap(ra);
    return level_subgroup(std::max(ra.level, rb.level));
}

Subgroup PAdicModel::preimage(const Endo& phi, const Subgroup& a) const
{
    const auto& m = mult_of(phi);
    const auto& ra = level_of(a);
    if (!m.valuation) // zero map: everything lands on 0, inside any subgroup
        return whole_group();
    if (ra.which != LevelRep::Kind::Level)
        return wrap(ra); // preimage of Q_p is Q_p, of {0} is {0} (r != 0)
    return level_subgroup(ra.level - *m.valuation);
}

Subgroup PAdicModel::image(const Endo& phi, const Subgroup& a) const
{
    const auto& m = mult_of(phi);
    const auto& ra = level_of(a);
    if (!m.valuation)
        return trivial_subgroup();
    if (ra.which != LevelRep::Kind::Level)
        return wrap(ra);
    return level_subgroup(ra.level + *m.valuation);
}

Index PAdicModel::index(const Subgroup& a, const Subgroup& b) const
{
    if (!contains(a, b))
        fail(ErrorCode::NotContained, "index requires the second subgroup inside the first");
    const auto& ra = level_of(a);
    const auto& rb = level_of(b);
    if (ra.which == rb.which && (ra.which != LevelRep::Kind::Level || ra.level == rb.level))
        return Index::finite(Factored());
    if (rb.which == LevelRep::Kind::Trivial || ra.which == LevelRep::Kind::Whole)
        return Index::infinity();
    return Index::finite(Factored::prime_power(p_, rb.level - ra.level));
}

bool PAdicModel::contains(const Subgroup& a, const Subgroup& b) const
{
    const auto& ra = level_of(a);
    const auto& rb = level_of(b);
    if (ra.which == LevelRep::Kind::Whole || rb.which == LevelRep::Kind::Trivial)
        return true;
    if (ra.which == LevelRep::Kind::Trivial)
        return false;
    if (rb.which == LevelRep::Kind::Whole)
        return false;
    return ra.level <= rb.level;
}

Endo PAdicModel::identity_endo() const
{
    return mult_endo(0);
}

Endo PAdicModel::compose(const Endo& f, const Endo& g) const
{
    const auto& mf = mult_of(f);
    const auto& mg = mult_of(g);
    if (!mf.valuation || !mg.valuation)
        return mult_endo(std::nullopt);
    return mult_endo(*mf.valuation + *mg.valuation);
}

bool PAdicModel::is_automorphism(const Endo& phi) const
{
    return mult_of(phi).valuation.has_value();
}

Endo PAdicModel::inverse_endo(const Endo& phi) const
{
    const auto& m = mult_of(phi);
    if (!m.valuation)
        fail(ErrorCode::NotAutomorphism, "the zero map has no inverse");
    return mult_endo(-*m.valuation);
}

bool PAdicModel::endo_equal(const Endo& f, const Endo& g) const
{
    return mult_of(f).valuation == mult_of(g).valuation;
}

std::optional<Subgroup> PAdicModel::kernel(const Endo& phi) const
{
    if (!mult_of(phi).valuation)
        return whole_group();
    return trivial_subgroup();
}

bool PAdicModel::whole_image_contains(const Endo& phi, const Subgroup& h) const
{
    if (mult_of(phi).valuation)
        return true; // multiplication by a nonzero rational is onto
    return level_of(h).which == LevelRep::Kind::Trivial;
}

std::optional<int> PAdicModel::stabilization_bound(const Endo& phi, const Subgroup& u) const
{
    (void)phi;
    (void)u;
    return 2; // trajectory index ratios are constant from the first step
}

std::optional<Subgroup> PAdicModel::inverse_invariant_hull_closed_form(const Endo& phi,
                                                                       const Subgroup& u) const
{
    const auto& m = mult_of(phi);
    const auto& ru = level_of(u);
    if (!m.valuation || ru.which == LevelRep::Kind::Whole)
        return whole_group();
    if (ru.which == LevelRep::Kind::Trivial)
        return trivial_subgroup(); // preimage of {0} under mult by r != 0 is {0}
    if (*m.valuation <= 0)
        return wrap(ru); // preimages only shrink, u is already a fixed point
    return whole_group(); // levels descend without bound
}

InducedPair PAdicModel::restriction_and_quotient(const Endo& phi, const Subgroup& h) const
{
    const auto& rh = level_of(h);
    if (rh.which == LevelRep::Kind::Whole) {
        InducedPair out;
        out.sub_model = shared_from_this();
        out.sub_endo = phi;
        auto trivial = FiniteModel::create(FiniteGroup::cyclic(1), "trivial");
        out.quot_model = trivial;
        out.quot_endo = trivial->identity_endo();
        return out;
    }
    if (rh.which == LevelRep::Kind::Trivial) {
        auto trivial = FiniteModel::create(FiniteGroup::cyclic(1), "trivial");
        InducedPair out;
        out.sub_model = trivial;
        out.sub_endo = trivial->identity_endo();
        out.quot_model = shared_from_this();
        out.quot_endo = phi;
        return out;
    }
    fail(ErrorCode::QuotientNotRepresentable,
         "Q_p / p^k Z_p is not representable in this model");
}

std::string PAdicModel::describe_subgroup(const Subgroup& s) const
{
    const auto& r = level_of(s);
    switch (r.which) {
    case LevelRep::Kind::Whole:
        return "Q_" + std::to_string(p_);
    case LevelRep::Kind::Trivial:
        return "{0}";
    case LevelRep::Kind::Level:
        break;
    }
    std::ostringstream os;
    if (r.level == 0)
        os << "Z_" << p_;
    else
        os << p_ << "^" << r.level << " Z_" << p_;
    return os.str();
}

std::string PAdicModel::describe_endo(const Endo& e) const
{
    const auto& m = mult_of(e);
    if (!m.valuation)
        return "zero map";
    if (*m.valuation == 0)
        return "multiplication by a unit";
    return "multiplication with valuation " + std::to_string(*m.valuation);
}

} // namespace entropia
