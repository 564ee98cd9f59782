#include "hkdfkit/bessel.hpp"
#include "hkdfkit/gauss_integrals.hpp"
#include "hkdfkit/hermite.hpp"
#include "hkdfkit/operational.hpp"
#include "hkdfkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

json complex_json(hkdf::Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

std::map<std::string, std::string> split_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("expected key=value: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

hkdf::ParamSet parse_params(hkdf::IntegralId id, const std::string& spec) {
    const auto& sch = hkdf::integral_schema(id);
    hkdf::ParamSet ps;
    for (const auto& [k, v] : split_kv(spec)) {
        bool is_index = std::find(sch.indices.begin(), sch.indices.end(), k) != sch.indices.end();
        if (is_index) {
            ps.indices[k] = static_cast<unsigned>(std::stoul(v));
        } else {
            ps.scalars[k] = hkdf::gaussian_from_string(v);
        }
    }
    return ps;
}

int suite_exit = 0;

void print_reports(const std::vector<hkdf::SuiteReport>& reports, const std::string& format) {
    size_t total = 0, failed = 0;
    json jout = json::array();
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            ++total;
            if (!c.pass) ++failed;
            if (format == "json") {
                jout.push_back({{"suite", rep.suite},
                                {"check", c.name},
                                {"pass", c.pass},
                                {"detail", c.detail}});
            } else {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << rep.suite << "/" << c.name;
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (format == "json") {
        std::cout << json{{"checks", jout}, {"total", total}, {"failed", failed}}.dump() << "\n";
    } else {
        std::cout << (failed == 0 ? "OK" : "FAILED") << ": " << (total - failed) << "/" << total
                  << " checks passed\n";
    }
    suite_exit = failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite polynomial operational-calculus toolkit"};
    app.require_subcommand(1);

    // Worker-parallelism cap; all current suites run deterministically on
    // one thread, which trivially honors any cap.
    if (const char* threads = std::getenv("HKDF_KIT_THREADS")) {
        (void)std::atoi(threads);
    }

    std::string format = "json";

    // family
    auto* fam = app.add_subcommand("family", "construct a polynomial family by id");
    std::string fam_id;
    fam->add_option("id", fam_id, "family id, e.g. hkdf2:n=2,m=2")->required();
    fam->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    fam->callback([&] {
        hkdf::MultiPoly p = hkdf::family_from_id(fam_id);
        if (format == "text") {
            std::cout << p.to_string() << "\n";
        } else {
            std::cout << p.to_json() << "\n";
        }
    });

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a family at a point");
    std::string ev_id, ev_at;
    ev->add_option("id", ev_id)->required();
    ev->add_option("--at", ev_at, "assignment, e.g. x=1,y=-0.5 (complex: 1+2i)")->required();
    ev->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    ev->callback([&] {
        hkdf::MultiPoly p = hkdf::family_from_id(ev_id);
        std::map<std::string, hkdf::Complex> at;
        for (const auto& [k, v] : split_kv(ev_at)) {
            at[k] = hkdf::gaussian_from_string(v).to_complex();
        }
        hkdf::Complex val = p.eval(at);
        if (format == "text") {
            std::cout << val.real() << (val.imag() < 0 ? "" : "+") << val.imag() << "i\n";
        } else {
            std::cout << json{{"id", ev_id}, {"value", complex_json(val)}}.dump() << "\n";
        }
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run an identity/oracle suite");
    std::string suite;
    std::uint64_t seed = 12345;
    ver->add_option("suite", suite)->required()->check(CLI::IsMember(hkdf::suite_names()));
    ver->add_option("--seed", seed);
    ver->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    ver->callback([&] {
        print_reports(hkdf::run_suites(suite, seed),
                      format == "json" ? "json" : "text");
    });

    // integrate
    auto* integ = app.add_subcommand("integrate", "closed form vs quadrature oracle");
    std::string int_id, int_params;
    bool do_verify = false;
    double tol = 0.0;
    integ->add_option("--id", int_id)->required();
    integ->add_option("--params", int_params)->required();
    integ->add_flag("--verify", do_verify);
    integ->add_option("--tol", tol);
    integ->callback([&] {
        hkdf::IntegralId id = hkdf::integral_id_from_string(int_id);
        hkdf::ParamSet ps = parse_params(id, int_params);
        double rel_tol = tol > 0 ? tol : hkdf::default_rel_tol(id);
        hkdf::IntegralResult r =
            hkdf::verify(id, ps, hkdf::default_quadrature_config(id), rel_tol);
        json jp;
        for (const auto& [k, v] : ps.indices) jp[k] = v;
        for (const auto& [k, v] : ps.scalars) jp[k] = hkdf::to_string(v);
        std::cout << json{{"id", int_id},
                          {"params", jp},
                          {"closed_form", complex_json(r.closed_form_value)},
                          {"oracle", complex_json(r.oracle_value)},
                          {"error_estimate", r.oracle_error_estimate},
                          {"relative_discrepancy", r.relative_discrepancy},
                          {"pass", r.pass}}
                         .dump()
                  << "\n";
        if (do_verify && !r.pass) suite_exit = 1;
    });

    // bessel
    auto* bes = app.add_subcommand("bessel", "truncated Bessel series values");
    std::string fn;
    int bn = 0;
    double bx = 0.0, by = 0.0;
    unsigned K = 40;
    bool has_y = false;
    bes->add_option("--fn", fn)->required()->check(CLI::IsMember({"j", "i", "j2", "ji4", "hj"}));
    bes->add_option("--n", bn)->required();
    bes->add_option("--x", bx)->required();
    auto* yopt = bes->add_option("--y", by);
    bes->add_option("--K", K);
    bes->callback([&] {
        has_y = yopt->count() > 0;
        hkdf::SeriesValue v;
        hkdf::SeriesTruncation tr{K};
        if (fn == "j") {
            v = hkdf::bessel_j(bn, bx, tr);
        } else if (fn == "i") {
            v = hkdf::bessel_i(bn, bx, tr);
        } else if (fn == "j2") {
            v = hkdf::bessel_2var(bn, bx, by, tr);
        } else if (fn == "ji4") {
            v = hkdf::ji4(bn, bx, by, tr);
        } else {
            if (bn < 0) throw CLI::ValidationError("hj needs n >= 0");
            v = hkdf::hermite_bessel(static_cast<unsigned>(bn), bx, by, tr);
        }
        (void)has_y;
        std::cout << json{{"fn", fn}, {"n", bn},     {"x", bx},
                          {"y", by},  {"K", K},      {"value", v.value},
                          {"tail_bound", v.tail_bound}}
                         .dump()
                  << "\n";
    });

    // sequence
    auto* seq = app.add_subcommand("sequence", "Hermite-number sequences");
    unsigned order = 2, count = 10;
    bool signed_flag = false;
    seq->add_option("--order", order)->required()->check(CLI::Range(2u, 100u));
    seq->add_option("--count", count)->required()->check(CLI::Range(1u, 10000u));
    seq->add_flag("--signed", signed_flag, "apply (-1)^{r/m} at surviving r");
    seq->callback([&] {
        for (unsigned r = 0; r < count; ++r) {
            hkdf::Rational v = hkdf::umbral_number(order, r);
            if (signed_flag && r % order == 0 && (r / order) % 2 == 1) v = -v;
            std::cout << hkdf::to_fraction_string(v) << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return suite_exit;
}
