#include "lefschetz.h"

#include <cstring>
#include <string>

#include "core/config.hpp"
#include "core/fibration.hpp"
#include "core/profiles.hpp"
#include "core/suite.hpp"
#include "core/svg.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const lf::parse_error& e) {
        return set_error(LEF_ERR_PARSE, e.what());
    } catch (const lf::data_error& e) {
        return set_error(LEF_ERR_DATA, e.what());
    } catch (const lf::domain_error& e) {
        return set_error(LEF_ERR_DOMAIN, e.what());
    } catch (const lf::integration_error& e) {
        return set_error(LEF_ERR_INTEGRATION, e.what());
    } catch (const std::exception& e) {
        return set_error(LEF_ERR_INTERNAL, e.what());
    }
}

} // namespace

struct lef_config {
    lf::job_config cfg;
};

struct lef_report {
    lf::verification_report rep;
    int exit_code = 0;
    std::string json_cache;
    std::string md_cache;
};

struct lef_fiber {
    lf::fiber2d fiber;
    std::string svg_cache;
};

struct lef_fibration {
    lf::fibration_model model;
    std::string json_cache;
};

extern "C" {

const char* lef_version(void) { return "lefschetz 1.0.0"; }

const char* lef_last_error(void) { return g_last_error.c_str(); }

int lef_config_parse(const char* json_text, lef_config** out) {
    if (!json_text || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        auto* h = new lef_config{lf::parse_config(json_text)};
        *out = h;
        return LEF_OK;
    });
}

int lef_config_parse_file(const char* path, lef_config** out) {
    if (!path || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        auto* h = new lef_config{lf::parse_config_file(path)};
        *out = h;
        return LEF_OK;
    });
}

int lef_config_set_job(lef_config* cfg, const char* job) {
    if (!cfg || !job) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    if (!lf::known_job(job)) return set_error(LEF_ERR_PARSE, "unknown job");
    cfg->cfg.job = job;
    return LEF_OK;
}

int lef_config_set_seed(lef_config* cfg, uint64_t seed) {
    if (!cfg) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    cfg->cfg.seed = seed;
    return LEF_OK;
}

int lef_config_set_out_dir(lef_config* cfg, const char* dir) {
    if (!cfg || !dir) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    cfg->cfg.out_dir = dir;
    return LEF_OK;
}

int lef_config_set_tolerance_scale(lef_config* cfg, double scale) {
    if (!cfg || !(scale > 0)) return set_error(LEF_ERR_INVALID_ARG, "scale must be positive");
    lf::tolerances& t = cfg->cfg.tol;
    for (double* slot : {&t.transport, &t.conservation, &t.exactness, &t.radial, &t.halftwist,
                         &t.real_locus, &t.gradient, &t.conjugation, &t.collar, &t.action})
        *slot *= scale;
    return LEF_OK;
}

void lef_config_free(lef_config* cfg) { delete cfg; }

int lef_run(const lef_config* cfg, lef_report** out) {
    if (!cfg || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        lf::suite_result res = lf::run_suite(cfg->cfg);
        auto* h = new lef_report{res.report, res.exit_code, "", ""};
        *out = h;
        return LEF_OK;
    });
}

int lef_report_ok(const lef_report* rep) { return rep && rep->rep.all_pass() ? 1 : 0; }

int lef_report_pass_count(const lef_report* rep) { return rep ? rep->rep.pass_count() : 0; }

int lef_report_fail_count(const lef_report* rep) { return rep ? rep->rep.fail_count() : 0; }

const char* lef_report_json(const lef_report* rep) {
    if (!rep) return nullptr;
    auto* h = const_cast<lef_report*>(rep);
    if (h->json_cache.empty()) h->json_cache = rep->rep.to_json().dump(2) + "\n";
    return h->json_cache.c_str();
}

const char* lef_report_markdown(const lef_report* rep) {
    if (!rep) return nullptr;
    auto* h = const_cast<lef_report*>(rep);
    if (h->md_cache.empty()) h->md_cache = rep->rep.to_markdown();
    return h->md_cache.c_str();
}

void lef_report_free(lef_report* rep) { delete rep; }

int lef_fiber_build(const lef_config* cfg, lef_fiber** out) {
    if (!cfg || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    if (!cfg->cfg.data2d)
        return set_error(LEF_ERR_DATA, "geometric fibers exist for dim 2 data only");
    return guarded([&] {
        auto* h = new lef_fiber{lf::build_surface_fiber(*cfg->cfg.data2d, cfg->cfg.chirality), ""};
        *out = h;
        return LEF_OK;
    });
}

int lef_fiber_euler_characteristic(const lef_fiber* f, int* out) {
    if (!f || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    *out = f->fiber.surface.euler_characteristic();
    return LEF_OK;
}

int lef_fiber_boundary_components(const lef_fiber* f, int* out) {
    if (!f || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    *out = f->fiber.surface.boundary_component_count();
    return LEF_OK;
}

int lef_fiber_curve_count(const lef_fiber* f, int* out) {
    if (!f || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    *out = static_cast<int>(f->fiber.curves.size());
    return LEF_OK;
}

const char* lef_fiber_curve_name(const lef_fiber* f, int index) {
    if (!f || index < 0 || index >= static_cast<int>(f->fiber.curves.size())) return nullptr;
    return f->fiber.curves[static_cast<size_t>(index)].name.c_str();
}

int lef_fiber_intersection(const lef_fiber* f, const char* curve_a, const char* curve_b, int mode,
                           long long* out) {
    if (!f || !curve_a || !curve_b || !out)
        return set_error(LEF_ERR_INVALID_ARG, "null argument");
    if (mode != 0 && mode != 1) return set_error(LEF_ERR_INVALID_ARG, "mode must be 0 or 1");
    return guarded([&] {
        *out = lf::intersect_curves(f->fiber.surface, f->fiber.curve(curve_a),
                                    f->fiber.curve(curve_b), mode == 1);
        return LEF_OK;
    });
}

const char* lef_fiber_svg(const lef_fiber* f) {
    if (!f) return nullptr;
    auto* h = const_cast<lef_fiber*>(f);
    if (h->svg_cache.empty()) h->svg_cache = lf::render_fiber_svg(f->fiber);
    return h->svg_cache.c_str();
}

void lef_fiber_free(lef_fiber* f) { delete f; }

int lef_fibration_assemble(const lef_config* cfg, lef_fibration** out) {
    if (!cfg || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        lf::fibration_model m;
        if (cfg->cfg.data2d)
            m = lf::assemble(*cfg->cfg.data2d, cfg->cfg.chirality);
        else if (cfg->cfg.heegaard)
            m = lf::assemble(*cfg->cfg.heegaard, cfg->cfg.chirality ? -1 : 1);
        else
            m = lf::assemble(*cfg->cfg.linking, cfg->cfg.chirality ? -1 : 1);
        auto* h = new lef_fibration{std::move(m), ""};
        *out = h;
        return LEF_OK;
    });
}

const char* lef_fibration_json(const lef_fibration* m) {
    if (!m) return nullptr;
    auto* h = const_cast<lef_fibration*>(m);
    if (h->json_cache.empty())
        h->json_cache = lf::fibration_to_json(m->model).dump(2) + "\n";
    return h->json_cache.c_str();
}

int lef_fibration_critical_value_count(const lef_fibration* m, int* out) {
    if (!m || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    *out = static_cast<int>(m->model.critical_values.size());
    return LEF_OK;
}

int lef_fibration_basepoint(const lef_fibration* m, double* out) {
    if (!m || !out) return set_error(LEF_ERR_INVALID_ARG, "null argument");
    *out = m->model.basepoint;
    return LEF_OK;
}

void lef_fibration_free(lef_fibration* m) { delete m; }

int lef_profile_eval(int kind, double s, double r, double t, int order, double* out) {
    if (!out || order < 0 || order > 2)
        return set_error(LEF_ERR_INVALID_ARG, "order must be 0, 1 or 2");
    return guarded([&]() -> int {
        double v = 0;
        if (kind == 0) {
            lf::rtilde_profile p(s, r);
            v = order == 0 ? p.value(t) : order == 1 ? p.d1(t) : p.d2(t);
        } else if (kind == 1) {
            lf::cut_profile p = lf::build_cut_profile(s, r);
            v = order == 0 ? p.value(t) : order == 1 ? p.d1(t) : p.d2(t);
        } else if (kind == 2) {
            lf::h_profile p = lf::build_h_profile(r);
            v = order == 0 ? p.value(t) : order == 1 ? p.d1(t) : p.d2(t);
        } else {
            return set_error(LEF_ERR_INVALID_ARG, "kind must be 0, 1 or 2");
        }
        *out = v;
        return LEF_OK;
    });
}

} // extern "C"
