#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lf {

namespace {

using nlohmann::json;

const std::set<std::string> kJobs = {"verify-local", "build-fiber",  "assemble",
                                     "homology-check", "render",     "report-all"};

zmat parse_matrix(const json& j, const std::string& field, int rows, int cols) {
    if (!j.is_array()) throw parse_error("field '" + field + "' must be a matrix (array of arrays)");
    if (rows >= 0 && static_cast<int>(j.size()) != rows)
        throw data_error("field '" + field + "' has wrong row count");
    int r = static_cast<int>(j.size());
    int c = cols;
    if (c < 0) {
        if (r == 0) throw data_error("field '" + field + "' is empty");
        c = static_cast<int>(j.at(0).size());
    }
    zmat m(r, c);
    for (int i = 0; i < r; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != c)
            throw data_error("field '" + field + "' is not rectangular");
        for (int k = 0; k < c; ++k) {
            const json& v = row.at(static_cast<size_t>(k));
            if (!v.is_number_integer())
                throw parse_error("field '" + field + "' must hold integers");
            m.at(i, k) = v.get<zint>();
        }
    }
    return m;
}

} // namespace

bool known_job(const std::string& job) { return kJobs.count(job) > 0; }

job_config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }

    job_config cfg;
    if (j.contains("job")) {
        cfg.job = j.at("job").get<std::string>();
        if (!known_job(cfg.job)) throw parse_error("unknown job '" + cfg.job + "'");
    }
    if (!j.contains("dim")) throw parse_error("missing field 'dim'");
    cfg.dim = j.at("dim").get<int>();
    if (cfg.dim != 2 && cfg.dim != 3 && cfg.dim != 4)
        throw parse_error("field 'dim' must be 2, 3 or 4");

    if (!j.contains("case")) throw parse_error("missing field 'case'");
    cfg.case_name = j.at("case").get<std::string>();

    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("chirality")) cfg.chirality = j.at("chirality").get<bool>();
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();

    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        auto get = [&](const char* name, double& slot) {
            if (t.contains(name)) {
                slot = t.at(name).get<double>();
                if (slot <= 0) throw parse_error(std::string("tolerance '") + name + "' must be > 0");
            }
        };
        get("ode", cfg.tol.ode);
        get("transport", cfg.tol.transport);
        get("conservation", cfg.tol.conservation);
        get("exactness", cfg.tol.exactness);
        get("radial", cfg.tol.radial);
        get("halftwist", cfg.tol.halftwist);
        get("real_locus", cfg.tol.real_locus);
        get("gradient", cfg.tol.gradient);
        get("conjugation", cfg.tol.conjugation);
        get("collar", cfg.tol.collar);
        get("action", cfg.tol.action);
    }

    if (cfg.dim == 2) {
        if (cfg.case_name != "two" && cfg.case_name != "three")
            throw parse_error("dim 2 requires case 'two' or 'three'");
        morse_data_2d d;
        d.two_values = (cfg.case_name == "two");
        if (j.contains("handles")) {
            const json& hs = j.at("handles");
            if (!hs.is_array()) throw parse_error("field 'handles' must be an array");
            json fr = j.contains("framings") ? j.at("framings") : json::array();
            if (!fr.is_array()) throw parse_error("field 'framings' must be an array");
            if (!fr.empty() && fr.size() != hs.size())
                throw data_error("fields 'handles' and 'framings' disagree in length");
            for (size_t i = 0; i < hs.size(); ++i) {
                const json& h = hs.at(i);
                if (!h.is_array() || h.size() != 2)
                    throw parse_error("each handle is a pair of attachment positions");
                morse_handle_2d mh;
                mh.pos_a = h.at(0).get<double>();
                mh.pos_b = h.at(1).get<double>();
                std::string f = i < fr.size() ? fr.at(i).get<std::string>() : "preserving";
                if (f != "preserving" && f != "reversing")
                    throw parse_error("framings must be 'preserving' or 'reversing'");
                mh.reversing = (f == "reversing");
                d.handles.push_back(mh);
            }
        }
        if (d.two_values && !d.handles.empty())
            throw data_error("case 'two' does not accept handles");
        if (!d.two_values && d.handles.empty())
            throw data_error("case 'three' needs at least one handle");
        d.validate();
        cfg.data2d = d;
    } else if (cfg.dim == 3) {
        if (cfg.case_name != "four") throw parse_error("dim 3 requires case 'four'");
        if (!j.contains("genus")) throw parse_error("missing field 'genus'");
        heegaard_data d;
        d.genus = j.at("genus").get<int>();
        if (!j.contains("alpha_beta")) throw parse_error("missing field 'alpha_beta'");
        d.alpha_beta = parse_matrix(j.at("alpha_beta"), "alpha_beta", d.genus, d.genus);
        if (!j.contains("alpha_classes")) throw parse_error("missing field 'alpha_classes'");
        if (!j.contains("beta_classes")) throw parse_error("missing field 'beta_classes'");
        d.alpha_classes = parse_matrix(j.at("alpha_classes"), "alpha_classes", 2 * d.genus, d.genus);
        d.beta_classes = parse_matrix(j.at("beta_classes"), "beta_classes", 2 * d.genus, d.genus);
        d.validate();
        cfg.heegaard = d;
    } else {
        if (cfg.case_name != "three") throw parse_error("dim 4 requires case 'three'");
        if (!j.contains("linking")) throw parse_error("missing field 'linking'");
        linking_data d;
        zmat q = parse_matrix(j.at("linking"), "linking", -1, -1);
        if (q.rows() != q.cols()) throw data_error("field 'linking' must be square");
        d.k = q.rows();
        d.linking = q;
        d.validate();
        cfg.linking = d;
    }
    return cfg;
}

job_config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

} // namespace lf
