#include "scenario.hpp"

#include "duality.hpp"
#include "finite_model.hpp"
#include "padic_model.hpp"
#include "product_model.hpp"
#include "shift_model.hpp"

namespace entropia {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what)
{
    fail(ErrorCode::ParseError, "at " + path + ": " + what);
}

long long get_integer(const json& j, const std::string& path)
{
    // integers may arrive as JSON numbers or as decimal strings
    if (j.is_number_integer())
        return j.get<long long>();
    if (j.is_string()) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(j.get<std::string>(), &used);
            if (used == j.get<std::string>().size())
                return v;
        } catch (const std::exception&) {
        }
    }
    bad(path, "expected an integer (number or decimal string)");
}

long long field_integer(const json& j, const char* key, const std::string& path)
{
    if (!j.contains(key))
        bad(path, std::string("missing field '") + key + "'");
    return get_integer(j.at(key), path + "/" + key);
}

std::vector<int> int_list(const json& j, const std::string& path)
{
    if (!j.is_array())
        bad(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<int>(get_integer(j[i], path + "/" + std::to_string(i))));
    return out;
}

FiniteGroup parse_group(const json& spec, const std::string& path)
{
    if (!spec.is_object())
        bad(path, "expected a group object");
    if (spec.contains("cyclic"))
        return FiniteGroup::cyclic(static_cast<int>(get_integer(spec.at("cyclic"), path + "/cyclic")));
    if (spec.contains("product")) {
        std::vector<int> orders = int_list(spec.at("product"), path + "/product");
        return FiniteGroup::direct_product_orders(orders);
    }
    if (spec.contains("table")) {
        const json& t = spec.at("table");
        if (!t.is_array())
            bad(path + "/table", "expected an array of rows");
        std::vector<int> flat;
        for (std::size_t r = 0; r < t.size(); ++r) {
            std::vector<int> row = int_list(t[r], path + "/table/" + std::to_string(r));
            if (row.size() != t.size())
                bad(path + "/table", "table must be square");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return FiniteGroup::from_table(static_cast<int>(t.size()), std::move(flat));
    }
    if (spec.contains("table_file"))
        return read_table_file(spec.at("table_file").get<std::string>());
    if (spec.contains("name")) {
        std::string name = spec.at("name").get<std::string>();
        if (name == "S3")
            return symmetric_group(3);
        if (name == "S4")
            return symmetric_group(4);
        if (name == "A4")
            return alternating_group(4);
        if (name == "Q8")
            return quaternion_group();
        if (name.size() > 1 && name[0] == 'D') {
            try {
                return dihedral_group(std::stoi(name.substr(1)));
            } catch (const std::exception&) {
            }
        }
        bad(path + "/name", "unknown group name '" + name + "'");
    }
    bad(path, "group needs one of: cyclic, product, table, table_file, name");
}

std::string group_display(const json& spec)
{
    if (spec.contains("cyclic"))
        return "Z" + std::string(spec.at("cyclic").is_string()
                                     ? spec.at("cyclic").get<std::string>()
                                     : std::to_string(spec.at("cyclic").get<long long>()));
    if (spec.contains("name"))
        return spec.at("name").get<std::string>();
    if (spec.contains("product")) {
        std::string out;
        for (const auto& d : spec.at("product"))
            out += (out.empty() ? "Z" : "xZ") + std::string(d.is_string()
                                                                ? d.get<std::string>()
                                                                : std::to_string(d.get<long long>()));
        return out;
    }
    return "";
}

FiniteEndoMap parse_coeff_endo(const FiniteGroup& g, const json& spec, const std::string& path)
{
    if (!spec.is_object())
        bad(path, "expected a coefficient endomorphism object");
    if (spec.contains("identity"))
        return identity_endo(g);
    if (spec.contains("mult"))
        return power_endo(g, field_integer(spec, "mult", path));
    if (spec.contains("map")) {
        std::vector<int> m = int_list(spec.at("map"), path + "/map");
        return make_endo(g, std::move(m));
    }
    bad(path, "coefficient endomorphism needs one of: identity, mult, map");
}

} // namespace

std::shared_ptr<const GroupModel> parse_model(const json& spec, const std::string& path)
{
    if (!spec.is_object() || !spec.contains("kind"))
        bad(path, "model needs a 'kind' field");
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "finite") {
        if (!spec.contains("group"))
            bad(path, "finite model needs a 'group' field");
        return FiniteModel::create(parse_group(spec.at("group"), path + "/group"),
                                   group_display(spec.at("group")));
    }
    if (kind == "shift") {
        if (!spec.contains("coefficient"))
            bad(path, "shift model needs a 'coefficient' group");
        bool left_compact = true;
        if (spec.contains("orientation")) {
            std::string o = spec.at("orientation").get<std::string>();
            if (o == "left-compact")
                left_compact = true;
            else if (o == "right-compact")
                left_compact = false;
            else
                bad(path + "/orientation", "expected 'left-compact' or 'right-compact'");
        }
        return ShiftModel::create(parse_group(spec.at("coefficient"), path + "/coefficient"),
                                  left_compact, group_display(spec.at("coefficient")));
    }
    if (kind == "padic") {
        long long p = field_integer(spec, "p", path);
        return PAdicModel::create(p);
    }
    if (kind == "product") {
        if (!spec.contains("factors") || !spec.at("factors").is_array() ||
            spec.at("factors").size() != 2)
            bad(path, "product model needs a 'factors' array of two models");
        return ProductModel::create(parse_model(spec.at("factors")[0], path + "/factors/0"),
                                    parse_model(spec.at("factors")[1], path + "/factors/1"));
    }
    bad(path + "/kind", "unknown model kind '" + kind + "'");
}

Endo parse_endo(const std::shared_ptr<const GroupModel>& model, const json& spec,
                const std::string& path)
{
    if (!spec.is_object())
        bad(path, "expected an endomorphism object");
    if (spec.contains("identity"))
        return model->identity_endo();

    switch (model->kind()) {
    case ModelKind::Finite: {
        auto fm = std::static_pointer_cast<const FiniteModel>(model);
        if (spec.contains("mult"))
            return fm->endo_from_multiplier(field_integer(spec, "mult", path));
        if (spec.contains("map"))
            return fm->endo_from_map(int_list(spec.at("map"), path + "/map"));
        bad(path, "finite endomorphism needs one of: identity, mult, map");
    }
    case ModelKind::Shift: {
        auto sm = std::static_pointer_cast<const ShiftModel>(model);
        if (!spec.contains("shift"))
            bad(path, "shift endomorphism needs a 'shift' offset");
        long long s = field_integer(spec, "shift", path);
        FiniteEndoMap theta = spec.contains("theta")
                                  ? parse_coeff_endo(sm->coefficient_group(), spec.at("theta"),
                                                     path + "/theta")
                                  : identity_endo(sm->coefficient_group());
        return sm->shift_endo(s, std::move(theta));
    }
    case ModelKind::PAdic: {
        auto pm = std::static_pointer_cast<const PAdicModel>(model);
        if (spec.contains("zero") && spec.at("zero").get<bool>())
            return pm->mult_endo(std::nullopt);
        if (spec.contains("valuation"))
            return pm->mult_endo(field_integer(spec, "valuation", path));
        if (spec.contains("multiplier_valuation"))
            return pm->mult_endo(field_integer(spec, "multiplier_valuation", path));
        bad(path, "p-adic endomorphism needs one of: identity, valuation, "
                  "multiplier_valuation, zero");
    }
    case ModelKind::Product: {
        auto pm = std::static_pointer_cast<const ProductModel>(model);
        if (!spec.contains("factors") || !spec.at("factors").is_array() ||
            spec.at("factors").size() != 2)
            bad(path, "product endomorphism needs a 'factors' array of two endomorphisms");
        return pm->pair_endo(parse_endo(pm->first(), spec.at("factors")[0], path + "/factors/0"),
                             parse_endo(pm->second(), spec.at("factors")[1], path + "/factors/1"));
    }
    }
    bad(path, "unsupported model kind");
}

Subgroup parse_subgroup(const std::shared_ptr<const GroupModel>& model, const json& spec,
                        const std::string& path)
{
    if (!spec.is_object())
        bad(path, "expected a subgroup object");
    if (spec.contains("whole") && spec.at("whole").get<bool>())
        return model->whole_group();
    if (spec.contains("trivial") && spec.at("trivial").get<bool>())
        return model->trivial_subgroup();
    if (spec.contains("chain"))
        return model->chain_member(static_cast<int>(field_integer(spec, "chain", path)));

    switch (model->kind()) {
    case ModelKind::Finite: {
        auto fm = std::static_pointer_cast<const FiniteModel>(model);
        if (spec.contains("elements"))
            return fm->subgroup_from_elements(int_list(spec.at("elements"), path + "/elements"));
        if (spec.contains("generators"))
            return fm->subgroup_from_generators(
                int_list(spec.at("generators"), path + "/generators"));
        bad(path, "finite subgroup needs one of: elements, generators, whole, trivial, chain");
    }
    case ModelKind::Shift: {
        auto sm = std::static_pointer_cast<const ShiftModel>(model);
        const FiniteGroup& f = sm->coefficient_group();
        if (spec.contains("constant"))
            return sm->constant_pattern(
                closure(f, int_list(spec.at("constant"), path + "/constant")));
        if (spec.contains("cells")) {
            long long lo = spec.contains("window_start")
                               ? field_integer(spec, "window_start", path)
                               : 1;
            auto tail = [&](const char* key, bool compact_side) -> ElemSet {
                if (spec.contains(key)) {
                    std::string v = spec.at(key).get<std::string>();
                    if (v == "full")
                        return whole_set(f);
                    if (v == "trivial")
                        return trivial_set(f);
                    bad(path + "/" + key, "expected 'full' or 'trivial'");
                }
                // defaults follow the orientation: compact side full, discrete side trivial
                return compact_side ? whole_set(f) : trivial_set(f);
            };
            ElemSet left = tail("left", sm->left_compact());
            ElemSet right = tail("right", !sm->left_compact());
            std::vector<ElemSet> cells;
            const json& cj = spec.at("cells");
            if (!cj.is_array())
                bad(path + "/cells", "expected an array of generator lists");
            for (std::size_t i = 0; i < cj.size(); ++i)
                cells.push_back(closure(f, int_list(cj[i], path + "/cells/" + std::to_string(i))));
            return sm->rect_subgroup(std::move(left), std::move(right), lo, std::move(cells));
        }
        bad(path, "shift subgroup needs one of: chain, constant, cells, whole, trivial");
    }
    case ModelKind::PAdic: {
        auto pm = std::static_pointer_cast<const PAdicModel>(model);
        if (spec.contains("level"))
            return pm->level_subgroup(field_integer(spec, "level", path));
        bad(path, "p-adic subgroup needs one of: level, whole, trivial, chain");
    }
    case ModelKind::Product: {
        auto pm = std::static_pointer_cast<const ProductModel>(model);
        if (!spec.contains("factors") || !spec.at("factors").is_array() ||
            spec.at("factors").size() != 2)
            bad(path, "product subgroup needs a 'factors' array of two subgroups");
        return pm->pair_subgroup(
            parse_subgroup(pm->first(), spec.at("factors")[0], path + "/factors/0"),
            parse_subgroup(pm->second(), spec.at("factors")[1], path + "/factors/1"));
    }
    }
    bad(path, "unsupported model kind");
}

Scenario parse_scenario(const json& spec)
{
    if (!spec.is_object())
        fail(ErrorCode::ParseError, "at /: scenario must be a JSON object");
    if (!spec.contains("model"))
        fail(ErrorCode::ParseError, "at /: scenario needs a 'model'");

    Scenario sc;
    sc.model = parse_model(spec.at("model"), "/model");
    if (spec.contains("endo"))
        sc.endo = parse_endo(sc.model, spec.at("endo"), "/endo");
    if (spec.contains("endo2"))
        sc.endo2 = parse_endo(sc.model, spec.at("endo2"), "/endo2");
    if (spec.contains("alpha"))
        sc.alpha = parse_endo(sc.model, spec.at("alpha"), "/alpha");
    if (spec.contains("U"))
        sc.u = parse_subgroup(sc.model, spec.at("U"), "/U");
    if (spec.contains("H"))
        sc.h = parse_subgroup(sc.model, spec.at("H"), "/H");
    if (spec.contains("A"))
        sc.a = parse_subgroup(sc.model, spec.at("A"), "/A");
    if (spec.contains("m"))
        sc.power = static_cast<int>(get_integer(spec.at("m"), "/m"));

    if (spec.contains("options")) {
        const json& o = spec.at("options");
        if (o.contains("budget"))
            sc.options.iteration_budget = static_cast<int>(get_integer(o.at("budget"), "/options/budget"));
        if (o.contains("window"))
            sc.options.heuristic_window = static_cast<int>(get_integer(o.at("window"), "/options/window"));
        if (o.contains("family_cutoff"))
            sc.options.family_cutoff_override =
                static_cast<int>(get_integer(o.at("family_cutoff"), "/options/family_cutoff"));
        if (o.contains("use_model_bounds"))
            sc.options.use_model_bounds = o.at("use_model_bounds").get<bool>();
        if (o.contains("htop_powers"))
            sc.options.htop_power_range =
                static_cast<int>(get_integer(o.at("htop_powers"), "/options/htop_powers"));
        if (o.contains("allow_heuristic"))
            sc.allow_heuristic = o.at("allow_heuristic").get<bool>();
    }
    if (sc.options.iteration_budget < 1)
        fail(ErrorCode::ParseError, "at /options/budget: must be >= 1");
    if (sc.options.heuristic_window < 1)
        fail(ErrorCode::ParseError, "at /options/window: must be >= 1");
    return sc;
}

} // namespace entropia
