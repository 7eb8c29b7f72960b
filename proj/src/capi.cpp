#include "hartogs/hartogs.h"

#include <cstring>

#include "errors.hpp"
#include "json_io.hpp"

using namespace hartogs;

struct htg_context {
    double tol = 1e-9;
    double lambda = M_SQRT2;
    uint64_t seed = 42;
    std::string last_error;
};

struct htg_domain {
    HartogsDomain d;
};

struct htg_map {
    std::variant<HartogsProperMap, HartogsAut> m;

    const HartogsDomain& src() const {
        if (const auto* p = std::get_if<HartogsProperMap>(&m)) return p->src;
        return std::get<HartogsAut>(m).dom;
    }
    const HartogsDomain& dst() const {
        if (const auto* p = std::get_if<HartogsProperMap>(&m)) return p->dst;
        return std::get<HartogsAut>(m).dom;
    }
};

namespace {

htg_status status_of(Errc code) {
    switch (code) {
        case Errc::ok: return HTG_OK;
        case Errc::parse_error: return HTG_ERR_PARSE;
        case Errc::no_proper_map: return HTG_ERR_NO_PROPER_MAP;
        case Errc::dimension_mismatch: return HTG_ERR_DIMENSION;
        case Errc::not_in_domain:
        case Errc::branch_pole:
        case Errc::not_on_k:
        case Errc::center_too_close:
        case Errc::empty_region: return HTG_ERR_DOMAIN;
        case Errc::invalid_descriptor: return HTG_ERR_INVALID;
        case Errc::verify_failed: return HTG_ERR_VERIFY_FAILED;
        case Errc::internal: return HTG_ERR_INTERNAL;
    }
    return HTG_ERR_INTERNAL;
}

template <typename Fn>
htg_status guarded(htg_context* ctx, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (ctx) ctx->last_error = e.what();
        return status_of(e.code());
    } catch (const Json::exception& e) {
        if (ctx) ctx->last_error = e.what();
        return HTG_ERR_PARSE;
    } catch (const std::exception& e) {
        if (ctx) ctx->last_error = e.what();
        return HTG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ZW point_from_coords(const double* coords, int n, int m) {
    ZW pt;
    pt.z.resize(n);
    pt.w.resize(m);
    for (int j = 0; j < n; ++j) pt.z[j] = C(coords[2 * j], coords[2 * j + 1]);
    for (int j = 0; j < m; ++j) pt.w[j] = C(coords[2 * (n + j)], coords[2 * (n + j) + 1]);
    return pt;
}

void point_to_coords(const ZW& pt, double* out) {
    size_t i = 0;
    for (C z : pt.z) { out[i++] = z.real(); out[i++] = z.imag(); }
    for (C w : pt.w) { out[i++] = w.real(); out[i++] = w.imag(); }
}

} // namespace

extern "C" {

const char* htg_status_name(htg_status s) {
    switch (s) {
        case HTG_OK: return "ok";
        case HTG_ERR_PARSE: return "parse_error";
        case HTG_ERR_NO_PROPER_MAP: return "no_proper_map";
        case HTG_ERR_DIMENSION: return "dimension_mismatch";
        case HTG_ERR_DOMAIN: return "domain_error";
        case HTG_ERR_INVALID: return "invalid_descriptor";
        case HTG_ERR_VERIFY_FAILED: return "verify_failed";
        case HTG_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

htg_context* htg_context_new(void) { return new htg_context(); }
void htg_context_free(htg_context* ctx) { delete ctx; }

void htg_context_set_tolerance(htg_context* ctx, double tol) { ctx->tol = tol; }
void htg_context_set_lambda(htg_context* ctx, double lambda) { ctx->lambda = lambda; }
void htg_context_set_seed(htg_context* ctx, uint64_t seed) { ctx->seed = seed; }
double htg_context_tolerance(const htg_context* ctx) { return ctx->tol; }
double htg_context_lambda(const htg_context* ctx) { return ctx->lambda; }
uint64_t htg_context_seed(const htg_context* ctx) { return ctx->seed; }

const char* htg_last_error(const htg_context* ctx) { return ctx->last_error.c_str(); }

void htg_string_free(char* s) { std::free(s); }

htg_status htg_domain_parse(htg_context* ctx, const char* json, htg_domain** out) {
    return guarded(ctx, [&] {
        Json j = Json::parse(json, nullptr, false);
        if (j.is_discarded()) throw Error(Errc::parse_error, "malformed JSON");
        *out = new htg_domain{domain_from_json(j)};
        return HTG_OK;
    });
}

void htg_domain_free(htg_domain* d) { delete d; }

htg_status htg_domain_to_json(htg_context* ctx, const htg_domain* d, char** out) {
    return guarded(ctx, [&] {
        *out = dup_string(domain_to_json(d->d).dump());
        return HTG_OK;
    });
}

int htg_domain_dim_z(const htg_domain* d) { return d->d.n(); }
int htg_domain_dim_w(const htg_domain* d) { return d->d.m(); }

htg_status htg_membership(htg_context* ctx, const htg_domain* d, const double* coords,
                          const char** verdict) {
    return guarded(ctx, [&] {
        ZW pt = point_from_coords(coords, d->d.n(), d->d.m());
        *verdict = verdict_name(membership(d->d, pt, ctx->tol, ctx->lambda));
        return HTG_OK;
    });
}

htg_status htg_exists(htg_context* ctx, const htg_domain* src, const htg_domain* dst,
                      char** witness_json) {
    return guarded(ctx, [&] {
        auto w = exists_proper(src->d, dst->d);
        if (!w) {
            ctx->last_error = "no proper holomorphic map exists between these triangles";
            return HTG_ERR_NO_PROPER_MAP;
        }
        if (witness_json) *witness_json = dup_string(witness_to_json(*w).dump());
        return HTG_OK;
    });
}

htg_status htg_construct(htg_context* ctx, const htg_domain* src, const htg_domain* dst,
                         htg_map** out) {
    return guarded(ctx, [&] {
        auto m = canonical_proper(src->d, dst->d);
        if (!m) {
            ctx->last_error = "no proper holomorphic map exists between these triangles";
            return HTG_ERR_NO_PROPER_MAP;
        }
        *out = new htg_map{std::move(*m)};
        return HTG_OK;
    });
}

htg_status htg_map_parse(htg_context* ctx, const char* json, htg_map** out) {
    return guarded(ctx, [&] {
        Json j = Json::parse(json, nullptr, false);
        if (j.is_discarded()) throw Error(Errc::parse_error, "malformed JSON");
        if (j.contains("case")) *out = new htg_map{map_from_json(j)};
        else if (j.contains("regime")) *out = new htg_map{aut_from_json(j)};
        else throw Error(Errc::parse_error, "descriptor needs a 'case' or 'regime' tag");
        return HTG_OK;
    });
}

htg_status htg_map_to_json(htg_context* ctx, const htg_map* m, char** out) {
    return guarded(ctx, [&] {
        Json j = std::holds_alternative<HartogsProperMap>(m->m)
                     ? map_to_json(std::get<HartogsProperMap>(m->m))
                     : aut_to_json(std::get<HartogsAut>(m->m));
        *out = dup_string(j.dump());
        return HTG_OK;
    });
}

void htg_map_free(htg_map* m) { delete m; }

int htg_map_dim_z(const htg_map* m) { return m->src().n(); }
int htg_map_dim_w(const htg_map* m) { return m->src().m(); }

htg_status htg_map_validate(htg_context* ctx, const htg_map* m, char** report_json) {
    return guarded(ctx, [&] {
        ValidationResult res = std::holds_alternative<HartogsProperMap>(m->m)
                                   ? validate_proper_form(std::get<HartogsProperMap>(m->m))
                                   : validate_aut(std::get<HartogsAut>(m->m));
        if (report_json) {
            Json j{{"ok", res.ok}, {"violations", res.violations}};
            *report_json = dup_string(j.dump());
        }
        if (!res.ok) {
            ctx->last_error = res.violations.empty() ? "invalid descriptor" : res.violations.front();
            return HTG_ERR_INVALID;
        }
        return HTG_OK;
    });
}

htg_status htg_map_eval(htg_context* ctx, const htg_map* m, const double* in, double* out) {
    return guarded(ctx, [&] {
        ZW pt = point_from_coords(in, m->src().n(), m->src().m());
        Verdict v = membership(m->src(), pt, ctx->tol, ctx->lambda);
        if (v == Verdict::Outside || v == Verdict::Origin)
            throw Error(Errc::not_in_domain, "point is not in the closed source domain");
        ZW img = std::holds_alternative<HartogsProperMap>(m->m)
                     ? eval_map(std::get<HartogsProperMap>(m->m), pt, ctx->lambda)
                     : std::get<HartogsAut>(m->m).eval(pt, ctx->lambda);
        point_to_coords(img, out);
        return HTG_OK;
    });
}

htg_status htg_aut_family(htg_context* ctx, const htg_domain* d, char** family_json) {
    return guarded(ctx, [&] {
        *family_json = dup_string(family_to_json(aut_family(d->d)).dump());
        return HTG_OK;
    });
}

htg_status htg_aut_sample(htg_context* ctx, const htg_domain* d, uint64_t seed, htg_map** out) {
    return guarded(ctx, [&] {
        *out = new htg_map{aut_sample(d->d, seed)};
        return HTG_OK;
    });
}

htg_status htg_verify(htg_context* ctx, const htg_map* m, const char* suite, size_t samples,
                      char** reports_jsonl, int* all_pass) {
    return guarded(ctx, [&] {
        SuiteConfig cfg;
        cfg.count = samples == 0 ? 200 : samples;
        cfg.seed = ctx->seed;
        cfg.lambda = ctx->lambda;
        std::vector<VerificationReport> reports =
            std::holds_alternative<HartogsProperMap>(m->m)
                ? run_suite(std::get<HartogsProperMap>(m->m), suite, cfg)
                : run_suite(std::get<HartogsAut>(m->m), suite, cfg);
        bool ok = true;
        std::string lines;
        for (const VerificationReport& r : reports) {
            ok = ok && r.pass;
            lines += report_to_json(r).dump();
            lines += "\n";
        }
        if (reports_jsonl) *reports_jsonl = dup_string(lines);
        if (all_pass) *all_pass = ok ? 1 : 0;
        if (!ok) {
            ctx->last_error = "one or more verification properties failed";
            return HTG_ERR_VERIFY_FAILED;
        }
        return HTG_OK;
    });
}

htg_status htg_levi(htg_context* ctx, const char* p_json, const char* q, const double* point,
                    const double* tangent_x, double* lhs, double* rhs) {
    return guarded(ctx, [&] {
        Json pj = Json::parse(p_json, nullptr, false);
        if (pj.is_discarded()) throw Error(Errc::parse_error, "malformed exponent array");
        std::vector<std::string> items;
        for (const Json& e : pj) items.push_back(e.get<std::string>());
        ExponentVec p = parse_exponent_vec(items);
        Exponent qe = parse_exponent(q);
        const int n = static_cast<int>(p.size());
        CVec z(n), X(n);
        for (int j = 0; j < n; ++j) {
            z[j] = C(point[2 * j], point[2 * j + 1]);
            X[j] = C(tangent_x[2 * j], tangent_x[2 * j + 1]);
        }
        C w(point[2 * n], point[2 * n + 1]);
        auto [l, r] = levi_restricted_identity(p, qe, z, w, X, ctx->lambda,
                                               std::max(ctx->tol, 1e-9));
        *lhs = l;
        *rhs = r;
        return HTG_OK;
    });
}

htg_status htg_is_rigid(htg_context* ctx, const htg_domain* d, int* rigid) {
    return guarded(ctx, [&] {
        *rigid = is_rigid(d->d) ? 1 : 0;
        return HTG_OK;
    });
}

htg_status htg_degree_witness(htg_context* ctx, const htg_domain* d, htg_map** out) {
    return guarded(ctx, [&] {
        auto w = degree_witness(d->d);
        if (!w) {
            ctx->last_error = "no non-injective proper self-map exists in the characterized family";
            return HTG_ERR_NO_PROPER_MAP;
        }
        *out = new htg_map{std::move(*w)};
        return HTG_OK;
    });
}

} // extern "C"
