#include "entropia/entropia.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "entropy.hpp"
#include "report.hpp"
#include "scenario.hpp"

struct entropia_model {
    std::shared_ptr<const entropia::GroupModel> m;
};
struct entropia_subgroup {
    entropia::Subgroup s;
};
struct entropia_endo {
    entropia::Endo e;
};
struct entropia_value {
    entropia::EntropyValue v;
};

namespace {

thread_local std::string g_last_error;

entropia_status status_for(entropia::ErrorCode code)
{
    using entropia::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument:          return ENTROPIA_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError:               return ENTROPIA_ERR_PARSE;
    case ErrorCode::IncompatibleModels:       return ENTROPIA_ERR_INCOMPATIBLE_MODELS;
    case ErrorCode::NotRepresentable:         return ENTROPIA_ERR_NOT_REPRESENTABLE;
    case ErrorCode::NotContained:             return ENTROPIA_ERR_NOT_CONTAINED;
    case ErrorCode::NotAGroup:                return ENTROPIA_ERR_NOT_A_GROUP;
    case ErrorCode::NotNormal:                return ENTROPIA_ERR_NOT_NORMAL;
    case ErrorCode::NotInvariant:             return ENTROPIA_ERR_NOT_INVARIANT;
    case ErrorCode::NotAutomorphism:          return ENTROPIA_ERR_NOT_AUTOMORPHISM;
    case ErrorCode::NotAbelian:               return ENTROPIA_ERR_NOT_ABELIAN;
    case ErrorCode::NotConstantPattern:       return ENTROPIA_ERR_NOT_CONSTANT_PATTERN;
    case ErrorCode::NotStable:                return ENTROPIA_ERR_NOT_STABLE;
    case ErrorCode::QuotientNotRepresentable: return ENTROPIA_ERR_QUOTIENT_NOT_REPRESENTABLE;
    case ErrorCode::HypothesisFailed:         return ENTROPIA_ERR_HYPOTHESIS_FAILED;
    case ErrorCode::PreconditionFailed:       return ENTROPIA_ERR_PRECONDITION_FAILED;
    case ErrorCode::IterationBudgetExceeded:  return ENTROPIA_ERR_ITERATION_BUDGET_EXCEEDED;
    case ErrorCode::TooLarge:                 return ENTROPIA_ERR_TOO_LARGE;
    case ErrorCode::ZeroMultiplier:           return ENTROPIA_ERR_ZERO_MULTIPLIER;
    }
    return ENTROPIA_ERR_UNKNOWN;
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
entropia_status guarded(Fn&& body)
{
    try {
        g_last_error.clear();
        body();
        return ENTROPIA_OK;
    } catch (const entropia::Error& e) {
        g_last_error = e.what();
        return status_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return ENTROPIA_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ENTROPIA_ERR_UNKNOWN;
    }
}

entropia_status need(const void* p)
{
    if (p)
        return ENTROPIA_OK;
    g_last_error = "null argument";
    return ENTROPIA_ERR_INVALID_ARGUMENT;
}

nlohmann::json parse_json(const char* text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        entropia::fail(entropia::ErrorCode::ParseError, e.what());
    }
}

} // namespace

extern "C" {

const char* entropia_status_name(entropia_status status)
{
    switch (status) {
    case ENTROPIA_OK:                              return "ok";
    case ENTROPIA_ERR_INVALID_ARGUMENT:            return "invalid argument";
    case ENTROPIA_ERR_PARSE:                       return "parse error";
    case ENTROPIA_ERR_INCOMPATIBLE_MODELS:         return "incompatible models";
    case ENTROPIA_ERR_NOT_REPRESENTABLE:           return "not representable";
    case ENTROPIA_ERR_NOT_CONTAINED:               return "not contained";
    case ENTROPIA_ERR_NOT_A_GROUP:                 return "not a group";
    case ENTROPIA_ERR_NOT_NORMAL:                  return "not normal";
    case ENTROPIA_ERR_NOT_INVARIANT:               return "not invariant";
    case ENTROPIA_ERR_NOT_AUTOMORPHISM:            return "not an automorphism";
    case ENTROPIA_ERR_NOT_ABELIAN:                 return "not abelian";
    case ENTROPIA_ERR_NOT_CONSTANT_PATTERN:        return "not a constant pattern";
    case ENTROPIA_ERR_NOT_STABLE:                  return "not stable";
    case ENTROPIA_ERR_QUOTIENT_NOT_REPRESENTABLE:  return "quotient not representable";
    case ENTROPIA_ERR_HYPOTHESIS_FAILED:           return "hypothesis failed";
    case ENTROPIA_ERR_PRECONDITION_FAILED:         return "precondition failed";
    case ENTROPIA_ERR_ITERATION_BUDGET_EXCEEDED:   return "iteration budget exceeded";
    case ENTROPIA_ERR_TOO_LARGE:                   return "too large";
    case ENTROPIA_ERR_ZERO_MULTIPLIER:             return "zero multiplier";
    case ENTROPIA_ERR_UNKNOWN:                     return "unknown error";
    }
    return "unknown status";
}

const char* entropia_last_error(void)
{
    return g_last_error.c_str();
}

void entropia_string_free(char* s)
{
    std::free(s);
}

entropia_status entropia_model_create(const char* spec_json, entropia_model** out)
{
    if (auto st = need(spec_json); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        auto model = entropia::parse_model(parse_json(spec_json), "/");
        *out = new entropia_model{std::move(model)};
    });
}

void entropia_model_destroy(entropia_model* model)
{
    delete model;
}

entropia_status entropia_model_describe(const entropia_model* model, char** out)
{
    if (auto st = need(model); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = dup_string(model->m->describe()); });
}

entropia_status entropia_subgroup_create(const entropia_model* model, const char* spec_json,
                                         entropia_subgroup** out)
{
    if (auto st = need(model); st != ENTROPIA_OK)
        return st;
    if (auto st = need(spec_json); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *out = new entropia_subgroup{
            entropia::parse_subgroup(model->m, parse_json(spec_json), "/")};
    });
}

entropia_status entropia_chain_member(const entropia_model* model, int k, entropia_subgroup** out)
{
    if (auto st = need(model); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_subgroup{model->m->chain_member(k)}; });
}

void entropia_subgroup_destroy(entropia_subgroup* subgroup)
{
    delete subgroup;
}

entropia_status entropia_subgroup_describe(const entropia_subgroup* subgroup, char** out)
{
    if (auto st = need(subgroup); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = dup_string(subgroup->s.describe()); });
}

entropia_status entropia_subgroup_flags(const entropia_subgroup* subgroup, char** json_out)
{
    if (auto st = need(subgroup); st != ENTROPIA_OK)
        return st;
    if (auto st = need(json_out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        nlohmann::json j{{"compact", subgroup->s.compact()},
                         {"open", subgroup->s.open()},
                         {"normal", subgroup->s.normal()}};
        *json_out = dup_string(j.dump());
    });
}

#define ENTROPIA_BINOP(name, expr)                                                     \
    entropia_status name(const entropia_subgroup* a, const entropia_subgroup* b,       \
                         entropia_subgroup** out)                                      \
    {                                                                                  \
        if (auto st = need(a); st != ENTROPIA_OK)                                      \
            return st;                                                                 \
        if (auto st = need(b); st != ENTROPIA_OK)                                      \
            return st;                                                                 \
        if (auto st = need(out); st != ENTROPIA_OK)                                    \
            return st;                                                                 \
        return guarded([&] { *out = new entropia_subgroup{expr}; });                   \
    }

ENTROPIA_BINOP(entropia_subgroup_product, entropia::product(a->s, b->s))
ENTROPIA_BINOP(entropia_subgroup_intersect, entropia::intersect(a->s, b->s))

#undef ENTROPIA_BINOP

entropia_status entropia_subgroup_preimage(const entropia_endo* phi, const entropia_subgroup* a,
                                           entropia_subgroup** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_subgroup{entropia::preimage(phi->e, a->s)}; });
}

entropia_status entropia_subgroup_image(const entropia_endo* phi, const entropia_subgroup* a,
                                        entropia_subgroup** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_subgroup{entropia::image(phi->e, a->s)}; });
}

entropia_status entropia_subgroup_index(const entropia_subgroup* a, const entropia_subgroup* b,
                                        char** json_out)
{
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(b); st != ENTROPIA_OK)
        return st;
    if (auto st = need(json_out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *json_out = dup_string(entropia::index_json(entropia::index(a->s, b->s)).dump());
    });
}

entropia_status entropia_subgroup_contains(const entropia_subgroup* a, const entropia_subgroup* b,
                                           int* out)
{
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(b); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = entropia::contains(a->s, b->s) ? 1 : 0; });
}

entropia_status entropia_subgroup_equal(const entropia_subgroup* a, const entropia_subgroup* b,
                                        int* out)
{
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(b); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = entropia::equal(a->s, b->s) ? 1 : 0; });
}

entropia_status entropia_endo_create(const entropia_model* model, const char* spec_json,
                                     entropia_endo** out)
{
    if (auto st = need(model); st != ENTROPIA_OK)
        return st;
    if (auto st = need(spec_json); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *out = new entropia_endo{entropia::parse_endo(model->m, parse_json(spec_json), "/")};
    });
}

entropia_status entropia_endo_identity(const entropia_model* model, entropia_endo** out)
{
    if (auto st = need(model); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_endo{model->m->identity_endo()}; });
}

void entropia_endo_destroy(entropia_endo* endo)
{
    delete endo;
}

entropia_status entropia_endo_describe(const entropia_endo* endo, char** out)
{
    if (auto st = need(endo); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = dup_string(endo->e.describe()); });
}

entropia_status entropia_endo_compose(const entropia_endo* f, const entropia_endo* g,
                                      entropia_endo** out)
{
    if (auto st = need(f); st != ENTROPIA_OK)
        return st;
    if (auto st = need(g); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_endo{entropia::compose(f->e, g->e)}; });
}

entropia_status entropia_endo_inverse(const entropia_endo* phi, entropia_endo** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = new entropia_endo{entropia::inverse(phi->e)}; });
}

entropia_status entropia_endo_is_automorphism(const entropia_endo* phi, int* out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = entropia::is_automorphism(phi->e) ? 1 : 0; });
}

entropia_status entropia_halg(const entropia_endo* phi, entropia_value** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *out = new entropia_value{entropia::algebraic_entropy(phi->e).value};
    });
}

entropia_status entropia_halg_at(const entropia_endo* phi, const entropia_subgroup* u,
                                 int limit_path, entropia_value** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(u); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        entropia::EntropyValue v = limit_path
                                       ? entropia::entropy_by_limit(phi->e, u->s).value
                                       : entropia::entropy_limit_free(phi->e, u->s);
        *out = new entropia_value{std::move(v)};
    });
}

entropia_status entropia_halg_inverse_invariant(const entropia_endo* phi,
                                                const entropia_subgroup* a,
                                                entropia_value** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *out = new entropia_value{entropia::entropy_of_inverse_invariant(phi->e, a->s)};
    });
}

entropia_status entropia_htop(const entropia_endo* phi, entropia_value** out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *out = new entropia_value{entropia::topological_entropy(phi->e).value};
    });
}

entropia_status entropia_modulus(const entropia_endo* phi, char** json_out)
{
    if (auto st = need(phi); st != ENTROPIA_OK)
        return st;
    if (auto st = need(json_out); st != ENTROPIA_OK)
        return st;
    return guarded([&] {
        *json_out = dup_string(entropia::factored_json(entropia::modulus(phi->e)).dump());
    });
}

void entropia_value_destroy(entropia_value* value)
{
    delete value;
}

entropia_status entropia_value_is_infinite(const entropia_value* value, int* out)
{
    if (auto st = need(value); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    *out = value->v.is_infinite() ? 1 : 0;
    return ENTROPIA_OK;
}

entropia_status entropia_value_format(const entropia_value* value, char** out)
{
    if (auto st = need(value); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = dup_string(value->v.format()); });
}

entropia_status entropia_value_json(const entropia_value* value, char** out)
{
    if (auto st = need(value); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    return guarded([&] { *out = dup_string(entropia::value_json(value->v).dump()); });
}

entropia_status entropia_value_log(const entropia_value* value, double* out)
{
    if (auto st = need(value); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    *out = value->v.log_natural();
    return ENTROPIA_OK;
}

entropia_status entropia_value_equal(const entropia_value* a, const entropia_value* b, int* out)
{
    if (auto st = need(a); st != ENTROPIA_OK)
        return st;
    if (auto st = need(b); st != ENTROPIA_OK)
        return st;
    if (auto st = need(out); st != ENTROPIA_OK)
        return st;
    *out = (a->v == b->v) ? 1 : 0;
    return ENTROPIA_OK;
}

entropia_status entropia_run_command(const char* request_json, char** report_json)
{
    if (auto st = need(request_json); st != ENTROPIA_OK)
        return st;
    if (auto st = need(report_json); st != ENTROPIA_OK)
        return st;
    *report_json = nullptr;
    return guarded([&] {
        nlohmann::json report = entropia::run_request(parse_json(request_json));
        *report_json = dup_string(report.dump(2));
    });
}

} // extern "C"
