#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpstrata/ballmodels.hpp"
#include "cpstrata/chambers.hpp"
#include "cpstrata/confgeom.hpp"
#include "cpstrata/error.hpp"
#include "cpstrata/kriz.hpp"
#include "cpstrata/serialize.hpp"
#include "cpstrata/verify.hpp"

using namespace cpstrata;
using nlohmann::json;

namespace {

struct Globals {
    int cap = -1;
    bool as_json = false;
    std::string out;
    std::string boundary;
    std::string config;
};

verify::RunConfig load_config(const Globals& g)
{
    verify::RunConfig cfg;
    if (!g.config.empty())
        cfg = verify::config_from_json(serialize::read_json_file(g.config));
    if (g.cap >= 0)
        cfg.degree_cap = g.cap;
    if (!g.boundary.empty())
        cfg.boundary = chambers::parse_boundary(g.boundary);
    if (!g.out.empty())
        cfg.output = g.out;
    if (g.as_json)
        cfg.format = "json";
    cfg.validate();
    return cfg;
}

void emit(const verify::RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty())
        std::cout << text;
    else
        serialize::write_text_file(cfg.output, text);
}

std::string ranks_text(const dga::CohomologyReport& r)
{
    std::ostringstream s;
    s << "q:";
    for (int q = 0; q <= r.degree_cap; ++q)
        s << " " << q;
    s << "\nrank:";
    for (int q = 0; q <= r.degree_cap; ++q)
        s << " " << r.rank(q);
    s << "\neuler characteristic (through cap): " << r.euler_characteristic() << "\n";
    return s.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cpstrata: chambers, rational models and cohomology for spaces of symplectic balls in CP^2"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--cap", g.cap, "degree cap for cohomology computations")->check(CLI::Range(2, 1000));
    app.add_flag("--json", g.as_json, "print JSON instead of text");
    app.add_option("--out", g.out, "write the output to this file");
    app.add_option("--boundary", g.boundary, "chamber boundary convention")
        ->check(CLI::IsMember({"strict", "inclusive"}));
    app.add_option("--config", g.config, "JSON run configuration")->check(CLI::ExistingFile);

    // chamber
    auto* chamber = app.add_subcommand("chamber", "capacity chambers");
    chamber->require_subcommand(1);
    std::string capacities;
    auto* classify = chamber->add_subcommand("classify", "classify a capacity vector");
    classify->add_option("--caps,--capacities,capacities", capacities, "comma separated rationals, e.g. 1/2,2/5,1/5")
        ->required();
    int n_enum = 0;
    auto* enumerate = chamber->add_subcommand("enumerate", "list every chamber for n balls");
    enumerate->add_option("--n,n", n_enum, "number of balls")->required()->check(CLI::Range(1, 8));

    // model
    auto* model = app.add_subcommand("model", "rational models of ball embedding spaces");
    model->require_subcommand(1);
    int n_model = 0;
    std::string chamber_name, weights_text, spec_path;
    int matrix_degree = -1;
    auto add_model_opts = [&](CLI::App* sub) {
        sub->add_option("--n", n_model, "number of balls")->check(CLI::Range(1, 4));
        sub->add_option("--chamber", chamber_name, "chamber label (C_unique, big, small, C_0..C_5)");
        sub->add_option("--weights", weights_text, "circle weights, e.g. \"1,1;2,-1\"");
    };
    auto* build = model->add_subcommand("build", "print a model as a JSON spec");
    add_model_opts(build);
    auto* cohomology = model->add_subcommand("cohomology", "cohomology ranks of a model");
    add_model_opts(cohomology);
    cohomology->add_option("--spec", spec_path, "DGA spec file (JSON)")->check(CLI::ExistingFile);
    cohomology->add_option("--matrix-csv", matrix_degree, "print the differential out of this degree as CSV");

    // kriz
    int km = 2, kk = 1;
    auto* kr = app.add_subcommand("kriz", "cohomology of the Kriz model of Conf_k(CP^m)");
    kr->add_option("--m", km, "complex dimension")->check(CLI::Range(1, 8));
    kr->add_option("--k", kk, "number of points")->check(CLI::Range(1, 8));

    // conf
    auto* conf = app.add_subcommand("conf", "point configurations in CP^2");
    conf->require_subcommand(1);
    std::string points;
    auto* stratify = conf->add_subcommand("stratify", "collinearity stratum and cross ratio");
    stratify->add_option("--points,points", points, "e.g. \"1:0:0,0:1:0,1:1:0,0:0:1\"")->required();

    // verify
    std::string suite;
    std::string format;
    auto* ver = app.add_subcommand("verify", "run a named check suite");
    ver->add_option("suite", suite, "chambers, thm13, eq71, eq75, ab-iso, kriz, conf or all")->required();
    ver->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = load_config(g);

        if (classify->parsed()) {
            lattice::Capacities c(parse_rational_list(capacities));
            auto adm = chambers::is_admissible(c, cfg.boundary);
            if (!adm.admissible) {
                if (!g.as_json)
                    throw chambers::AdmissibilityError(adm);
                emit(cfg, json{{"admissible", false}, {"reason", adm.reason()}}.dump(2) + "\n");
                return 3;
            }
            auto sig = chambers::chamber_signature(c, cfg.boundary);
            auto label = chambers::chamber_label(c, cfg.boundary);
            if (g.as_json) {
                json areas = json::object();
                for (const auto& w : lattice::negative_wall_classes(c.n()))
                    areas[lattice::to_string(w)] = serialize::rational_json(lattice::area(c, w));
                json caps = json::array();
                for (const auto& v : c.values())
                    caps.push_back(serialize::rational_json(v));
                emit(cfg, json{{"admissible", true},
                               {"capacities", caps},
                               {"signature", serialize::to_json(sig)},
                               {"label", label},
                               {"areas", areas}}
                                  .dump(2) +
                              "\n");
            } else {
                emit(cfg, label + " (wall bits " + sig.bit_string() + ")\n");
            }
            return 0;
        }
        if (enumerate->parsed()) {
            auto list = chambers::enumerate_chambers(n_enum, cfg.boundary);
            if (g.as_json) {
                json arr = json::array();
                for (const auto& ch : list)
                    arr.push_back(serialize::to_json(ch));
                emit(cfg, json{{"n", n_enum},
                               {"boundary", chambers::to_string(cfg.boundary)},
                               {"count", list.size()},
                               {"chambers", arr}}
                              .dump(2) +
                              "\n");
            } else {
                std::ostringstream s;
                for (const auto& ch : list) {
                    s << ch.signature.bit_string() << "  [";
                    for (std::size_t i = 0; i < ch.witness.size(); ++i)
                        s << (i ? ", " : "") << to_string(ch.witness[i]);
                    s << "]\n";
                }
                s << list.size() << " chambers\n";
                emit(cfg, s.str());
            }
            return 0;
        }
        if (build->parsed() || cohomology->parsed()) {
            const bool from_spec = cohomology->parsed() && !spec_path.empty();
            if (!from_spec && (n_model == 0 || chamber_name.empty()))
                throw DomainError("give --n and --chamber, or --spec");
            auto d = [&] {
                if (from_spec)
                    return serialize::dga_from_json(serialize::read_json_file(spec_path), cfg.degree_cap);
                auto w = weights_text.empty() ? cfg.weights_for(n_model, chamber_name)
                                              : ballmodels::parse_weights(weights_text);
                return ballmodels::iemb_model(n_model, chamber_name, w, cfg.degree_cap);
            }();
            if (build->parsed()) {
                emit(cfg, serialize::dga_to_json(d).dump(2) + "\n");
                return 0;
            }
            if (matrix_degree >= 0) {
                emit(cfg, serialize::differential_csv(d, matrix_degree));
                return 0;
            }
            auto rep = dga::cohomology_ranks(d);
            emit(cfg, g.as_json ? serialize::to_json(rep).dump(2) + "\n" : ranks_text(rep));
            return 0;
        }
        if (kr->parsed()) {
            auto d = kriz::kriz_model({km, kk, cfg.degree_cap});
            auto rep = dga::cohomology_ranks(d);
            if (g.as_json)
                emit(cfg, json{{"model", serialize::dga_to_json(d)}, {"cohomology", serialize::to_json(rep)}}.dump(2) + "\n");
            else
                emit(cfg, ranks_text(rep));
            return 0;
        }
        if (stratify->parsed()) {
            auto pts = confgeom::parse_points(points);
            auto st = confgeom::stratum(pts);
            json out = serialize::to_json(st);
            const bool all_collinear = pts.size() == 4 && st.label == "F_1234";
            if (all_collinear)
                out["cross_ratio"] = confgeom::to_string(confgeom::cross_ratio(pts));
            if (g.as_json) {
                emit(cfg, out.dump(2) + "\n");
            } else {
                std::string s = st.label;
                if (all_collinear)
                    s += " cross ratio " + out["cross_ratio"].get<std::string>();
                emit(cfg, s + "\n");
            }
            return 0;
        }
        if (ver->parsed()) {
            if (!format.empty() && !g.as_json)
                cfg.format = format;
            auto rep = verify::run_verify_suite(suite, cfg);
            std::string text = cfg.format == "json"  ? rep.to_json().dump(2) + "\n"
                               : cfg.format == "csv" ? rep.to_csv()
                                                     : rep.to_text();
            emit(cfg, text);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const chambers::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
