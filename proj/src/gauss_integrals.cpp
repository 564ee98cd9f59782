#include "hkdfkit/gauss_integrals.hpp"

#include "hkdfkit/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hkdf {

namespace {

const std::map<std::string, IntegralId>& id_names() {
    static const std::map<std::string, IntegralId> m = {
        {"GAUSS_1D_Y", IntegralId::Gauss1dY},
        {"COMPLEX_2D", IntegralId::Complex2d},
        {"COMPLEX_3D", IntegralId::Complex3d},
        {"TWO_COMPLEX_4D", IntegralId::TwoComplex4d},
        {"PRODUCT_1D", IntegralId::Product1d},
        {"PRODUCT_COMPLEX_2D", IntegralId::ProductComplex2d},
        {"ORTHOGONALITY", IntegralId::Orthogonality},
        {"TWO_INDEX_2D", IntegralId::TwoIndex2d},
        {"CONJUGATE_PAIR_2D", IntegralId::ConjugatePair2d},
        {"HKDF_XY_2D", IntegralId::HkdfXy2d},
        {"H3_3D", IntegralId::H3_3d},
        {"INCOMPLETE_2D", IntegralId::Incomplete2d},
    };
    return m;
}

GaussianRational inv4(const GaussianRational& a) {
    return GaussianRational(1) / (GaussianRational(4) * a);
}

// 1/(4a) - 1/(4b) = (b-a)/(4ab)
GaussianRational qdiff(const GaussianRational& a, const GaussianRational& b) {
    return inv4(a) - inv4(b);
}

MultiPoly shifted_complex_var(const std::string& x1, const std::string& x2,
                              const GaussianRational& shift) {
    return MultiPoly::variable(x1) + GaussianRational::i() * MultiPoly::variable(x2) +
           MultiPoly::constant(shift);
}

}  // namespace

IntegralId integral_id_from_string(const std::string& s) {
    auto it = id_names().find(s);
    if (it == id_names().end()) throw std::invalid_argument("unknown integral id: " + s);
    return it->second;
}

std::string to_string(IntegralId id) {
    for (const auto& [name, v] : id_names()) {
        if (v == id) return name;
    }
    return "?";
}

const std::vector<IntegralId>& all_integral_ids() {
    static const std::vector<IntegralId> ids = [] {
        std::vector<IntegralId> v;
        for (const auto& [name, id] : id_names()) v.push_back(id);
        return v;
    }();
    return ids;
}

const IntegralSchema& integral_schema(IntegralId id) {
    static const std::map<IntegralId, IntegralSchema> schemas = {
        {IntegralId::Gauss1dY, {{"n"}, {"x"}, {"b"}, 1}},
        {IntegralId::Complex2d, {{"n"}, {"d1", "d2", "y"}, {"a", "b"}, 2}},
        {IntegralId::Complex3d, {{"n"}, {"d1", "d2"}, {"a", "b", "c"}, 3}},
        {IntegralId::TwoComplex4d, {{"n"}, {"d1", "d2"}, {"a", "b", "c", "d"}, 4}},
        {IntegralId::Product1d, {{"m", "n"}, {"delta", "eta", "y", "w"}, {"a"}, 1}},
        {IntegralId::ProductComplex2d, {{"m", "n"}, {"d1", "d2", "y1", "y2"}, {"a", "b"}, 2}},
        {IntegralId::Orthogonality, {{"m", "n"}, {}, {"a", "b"}, 2}},
        {IntegralId::TwoIndex2d, {{"m", "n"}, {"x", "z", "tau"}, {"a", "b"}, 2}},
        {IntegralId::ConjugatePair2d, {{"m", "n"}, {"x1", "x2"}, {"a", "b"}, 2}},
        {IntegralId::HkdfXy2d, {{"n"}, {"delta"}, {"a", "b"}, 2}},
        {IntegralId::H3_3d, {{"n"}, {"delta"}, {"a1", "a2", "a3"}, 3}},
        {IntegralId::Incomplete2d, {{"m", "n"}, {"tau"}, {"a", "b"}, 2}},
    };
    return schemas.at(id);
}

unsigned ParamSet::index(const std::string& name) const {
    auto it = indices.find(name);
    if (it == indices.end()) throw std::invalid_argument("missing degree parameter: " + name);
    return it->second;
}

const GaussianRational& ParamSet::scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw std::invalid_argument("missing parameter: " + name);
    return it->second;
}

void check_params(IntegralId id, const ParamSet& params) {
    const auto& sch = integral_schema(id);
    for (const auto& k : sch.indices) params.index(k);
    for (const auto& k : sch.scalars) params.scalar(k);
    for (const auto& k : sch.weights) {
        const auto& w = params.scalar(k);
        if (w.re <= 0) {
            throw std::invalid_argument("Gaussian weight " + k + " must have positive real part");
        }
    }
    auto known = [](const std::vector<std::string>& v, const std::string& k) {
        return std::find(v.begin(), v.end(), k) != v.end();
    };
    for (const auto& [k, v] : params.indices) {
        if (!known(sch.indices, k)) throw std::invalid_argument("unknown index parameter: " + k);
    }
    for (const auto& [k, v] : params.scalars) {
        if (!known(sch.scalars, k) && !known(sch.weights, k)) {
            throw std::invalid_argument("unknown scalar parameter: " + k);
        }
    }
}

namespace {

Complex gaussian_prefactor(IntegralId id, const ParamSet& params) {
    const auto& sch = integral_schema(id);
    Complex prod(1.0, 0.0);
    for (const auto& k : sch.weights) prod *= params.scalar(k).to_complex();
    return std::pow(std::numbers::pi, 0.5 * sch.dimension) / std::sqrt(prod);
}

}  // namespace

ClosedForm closed_form_detail(IntegralId id, const ParamSet& params) {
    check_params(id, params);
    ClosedForm cf;
    cf.prefactor = gaussian_prefactor(id, params);

    const GaussianRational zero(0);
    switch (id) {
        case IntegralId::Gauss1dY: {
            cf.family = hkdf2(params.index("n"), 4);
            cf.args = {{"x", params.scalar("x")}, {"y", inv4(params.scalar("b"))}};
            break;
        }
        case IntegralId::Complex2d: {
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            cf.family = hkdf2(params.index("n"), 2);
            cf.args = {{"x", delta},
                       {"y", params.scalar("y") + qdiff(params.scalar("a"), params.scalar("b"))}};
            break;
        }
        case IntegralId::Complex3d: {
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            cf.family = hkdf_multi(params.index("n"), 4);
            cf.args = {{"x1", delta},
                       {"x2", qdiff(params.scalar("a"), params.scalar("b"))},
                       {"x3", zero},
                       {"x4", inv4(params.scalar("c"))}};
            break;
        }
        case IntegralId::TwoComplex4d: {
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            cf.family = hkdf_multi(params.index("n"), 4);
            cf.args = {{"x1", delta},
                       {"x2", qdiff(params.scalar("a"), params.scalar("b"))},
                       {"x3", zero},
                       {"x4", qdiff(params.scalar("c"), params.scalar("d"))}};
            break;
        }
        case IntegralId::Product1d: {
            GaussianRational q = inv4(params.scalar("a"));
            cf.family = two_index(params.index("m"), params.index("n"));
            cf.args = {{"x", params.scalar("delta")},
                       {"y", params.scalar("y") + q},
                       {"z", params.scalar("eta")},
                       {"w", params.scalar("w") + q},
                       {"tau", GaussianRational(2) * q}};
            break;
        }
        case IntegralId::ProductComplex2d: {
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            GaussianRational q = qdiff(params.scalar("a"), params.scalar("b"));
            cf.family = two_index(params.index("m"), params.index("n"));
            cf.args = {{"x", delta},
                       {"y", params.scalar("y1") + q},
                       {"z", delta},
                       {"w", params.scalar("y2") + q},
                       {"tau", GaussianRational(2) * q}};
            break;
        }
        case IntegralId::Orthogonality: {
            // pi 2^{-n} n! / (a sqrt(1/(1-a))) on the diagonal, 0 off it.
            // Weight reading (a,b) with 1/a = 1 + 1/b; requires a < 1.
            const auto& a = params.scalar("a");
            if (!a.is_real() || a.re >= 1) {
                throw std::invalid_argument("orthogonality closed form needs real a < 1");
            }
            unsigned m = params.index("m"), n = params.index("n");
            cf.prefactor = std::numbers::pi /
                           (to_double(a.re) * std::sqrt(1.0 / (1.0 - to_double(a.re))));
            GaussianRational diag =
                m == n ? GaussianRational(Rational(factorial(n), BigInt(1) << n)) : GaussianRational(0);
            cf.family = MultiPoly::constant(diag);
            cf.args = {};
            break;
        }
        case IntegralId::TwoIndex2d: {
            cf.family = composite(params.index("m"), params.index("n"), 4, 4, 1);
            cf.args = {{"x1", params.scalar("x")},
                       {"x2", inv4(params.scalar("a"))},
                       {"x3", params.scalar("z")},
                       {"x4", inv4(params.scalar("b"))},
                       {"tau", params.scalar("tau")}};
            break;
        }
        case IntegralId::ConjugatePair2d: {
            GaussianRational q = qdiff(params.scalar("a"), params.scalar("b"));  // sigma_-/2
            GaussianRational sigma_plus =
                GaussianRational(2) * (inv4(params.scalar("a")) + inv4(params.scalar("b")));
            cf.family = composite(params.index("m"), params.index("n"), 4, 4, 2);
            cf.args = {{"x1", params.scalar("x1")},
                       {"x2", q},
                       {"x3", params.scalar("x2")},
                       {"x4", q},
                       {"tau", sigma_plus}};
            break;
        }
        case IntegralId::HkdfXy2d: {
            cf.family = hkdf_multi(params.index("n"), 4);
            cf.args = {{"x1", params.scalar("delta")},
                       {"x2", inv4(params.scalar("a"))},
                       {"x3", zero},
                       {"x4", inv4(params.scalar("b"))}};
            break;
        }
        case IntegralId::H3_3d: {
            cf.family = hkdf_multi(params.index("n"), 6);
            cf.args = {{"x1", params.scalar("delta")}, {"x2", inv4(params.scalar("a1"))},
                       {"x3", zero},                   {"x4", inv4(params.scalar("a2"))},
                       {"x5", zero},                   {"x6", inv4(params.scalar("a3"))}};
            break;
        }
        case IntegralId::Incomplete2d: {
            GaussianRational q = qdiff(params.scalar("a"), params.scalar("b"));
            GaussianRational tau =
                params.scalar("tau") +
                GaussianRational(2) * (inv4(params.scalar("a")) + inv4(params.scalar("b")));
            cf.family = two_index(params.index("m"), params.index("n"));
            cf.args = {{"x", zero}, {"y", q}, {"z", zero}, {"w", q}, {"tau", tau}};
            break;
        }
    }
    cf.exact_value = cf.family.eval_exact(cf.args);
    cf.value = cf.prefactor * cf.exact_value.to_complex();
    return cf;
}

Complex closed_form(IntegralId id, const ParamSet& params) {
    return closed_form_detail(id, params).value;
}

Integrand build_integrand(IntegralId id, const ParamSet& params) {
    check_params(id, params);
    Integrand ig;
    const auto& sch = integral_schema(id);
    for (const auto& k : sch.weights) {
        const auto& w = params.scalar(k);
        if (!w.is_real() || w.re <= 0) {
            throw std::invalid_argument("oracle requires real positive weight " + k);
        }
        ig.weights.push_back(w.re);
    }

    switch (id) {
        case IntegralId::Gauss1dY: {
            ig.vars = {"y"};
            ig.poly = hkdf2(params.index("n"), 2, "xs", "y").substitute("xs", params.scalar("x"));
            break;
        }
        case IntegralId::Complex2d: {
            ig.vars = {"x1", "x2"};
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            ig.poly = hkdf2(params.index("n"), 2, "Z", "Y")
                          .substitute("Y", params.scalar("y"))
                          .substitute("Z", shifted_complex_var("x1", "x2", delta));
            break;
        }
        case IntegralId::Complex3d: {
            ig.vars = {"x1", "x2", "y"};
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            ig.poly = hkdf2(params.index("n"), 2, "Z", "y")
                          .substitute("Z", shifted_complex_var("x1", "x2", delta));
            break;
        }
        case IntegralId::TwoComplex4d: {
            ig.vars = {"x1", "x2", "y1", "y2"};
            GaussianRational delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            MultiPoly w = MultiPoly::variable("y1") +
                          GaussianRational::i() * MultiPoly::variable("y2");
            ig.poly = hkdf2(params.index("n"), 2, "Z", "W")
                          .substitute("W", w)
                          .substitute("Z", shifted_complex_var("x1", "x2", delta));
            break;
        }
        case IntegralId::Product1d: {
            ig.vars = {"x"};
            MultiPoly xv = MultiPoly::variable("x");
            MultiPoly lhs = hkdf2(params.index("m"), 2, "u", "v")
                                .substitute("v", params.scalar("y"))
                                .substitute("u", xv + MultiPoly::constant(params.scalar("delta")));
            MultiPoly rhs = hkdf2(params.index("n"), 2, "u", "v")
                                .substitute("v", params.scalar("w"))
                                .substitute("u", xv + MultiPoly::constant(params.scalar("eta")));
            ig.poly = lhs * rhs;
            break;
        }
        case IntegralId::ProductComplex2d:
        case IntegralId::Orthogonality: {
            ig.vars = {"x1", "x2"};
            GaussianRational y1, y2, delta;
            if (id == IntegralId::Orthogonality) {
                y1 = y2 = GaussianRational(Rational(-1, 4));
                delta = GaussianRational(0);
            } else {
                y1 = params.scalar("y1");
                y2 = params.scalar("y2");
                delta = params.scalar("d1") + GaussianRational::i() * params.scalar("d2");
            }
            MultiPoly z = shifted_complex_var("x1", "x2", delta);
            MultiPoly lhs =
                hkdf2(params.index("m"), 2, "u", "v").substitute("v", y1).substitute("u", z);
            MultiPoly rhs =
                hkdf2(params.index("n"), 2, "u", "v").substitute("v", y2).substitute("u", z);
            ig.poly = lhs * rhs;
            break;
        }
        case IntegralId::TwoIndex2d: {
            ig.vars = {"y", "w"};
            ig.poly = two_index(params.index("m"), params.index("n"))
                          .substitute("x", params.scalar("x"))
                          .substitute("z", params.scalar("z"))
                          .substitute("tau", params.scalar("tau"));
            break;
        }
        case IntegralId::ConjugatePair2d: {
            ig.vars = {"y1", "y2"};
            MultiPoly wp = MultiPoly::variable("y1") +
                           GaussianRational::i() * MultiPoly::variable("y2");
            MultiPoly wm = MultiPoly::variable("y1") -
                           GaussianRational::i() * MultiPoly::variable("y2");
            MultiPoly lhs = hkdf2(params.index("m"), 2, "u", "v")
                                .substitute("u", params.scalar("x1"))
                                .substitute("v", wp);
            MultiPoly rhs = hkdf2(params.index("n"), 2, "u", "v")
                                .substitute("u", params.scalar("x2"))
                                .substitute("v", wm);
            ig.poly = lhs * rhs;
            break;
        }
        case IntegralId::HkdfXy2d: {
            ig.vars = {"x", "y"};
            ig.poly = hkdf2(params.index("n"), 2, "u", "y")
                          .substitute("u", MultiPoly::variable("x") +
                                               MultiPoly::constant(params.scalar("delta")));
            break;
        }
        case IntegralId::H3_3d: {
            ig.vars = {"x1", "x2", "x3"};
            ig.poly = hkdf_multi(params.index("n"), 3)
                          .substitute("x1", MultiPoly::variable("x1") +
                                                MultiPoly::constant(params.scalar("delta")));
            break;
        }
        case IntegralId::Incomplete2d: {
            ig.vars = {"x1", "x2"};
            MultiPoly z = shifted_complex_var("x1", "x2", GaussianRational(0));
            MultiPoly zbar = MultiPoly::variable("x1") -
                             GaussianRational::i() * MultiPoly::variable("x2");
            ig.poly = incomplete(params.index("m"), params.index("n"))
                          .substitute("tau", params.scalar("tau"))
                          .substitute("x", z)
                          .substitute("z", zbar);
            break;
        }
    }
    return ig;
}

QuadratureConfig default_quadrature_config(IntegralId id) {
    QuadratureConfig cfg;
    if (integral_schema(id).dimension >= 4) {
        cfg.points_per_dim = 65;  // reduced 4-d resolution
    }
    return cfg;
}

double default_rel_tol(IntegralId id) {
    switch (integral_schema(id).dimension) {
        case 1: return 1e-8;
        case 4: return 1e-4;
        default: return 1e-6;
    }
}

Refined quadrature(IntegralId id, const ParamSet& params, const QuadratureConfig& cfg) {
    Integrand ig = build_integrand(id, params);
    const size_t dim = ig.vars.size();

    // Flatten to (complex coefficient, exponent per integration variable).
    struct Term {
        Complex c;
        std::vector<unsigned> e;
    };
    std::vector<Term> terms;
    std::vector<int> var_pos(ig.poly.vars().size(), -1);
    for (size_t k = 0; k < ig.poly.vars().size(); ++k) {
        auto it = std::find(ig.vars.begin(), ig.vars.end(), ig.poly.vars()[k]);
        if (it == ig.vars.end()) {
            if (ig.poly.degree_in(ig.poly.vars()[k]) != 0) {
                throw std::logic_error("integrand has a free non-integration variable: " +
                                       ig.poly.vars()[k]);
            }
            var_pos[k] = -1;  // substituted-out variable, exponent always 0
        } else {
            var_pos[k] = static_cast<int>(it - ig.vars.begin());
        }
    }
    std::vector<int> max_exp(dim, 0);
    for (const auto& [e, c] : ig.poly.terms()) {
        Term t;
        t.c = c.to_complex();
        t.e.assign(dim, 0u);
        for (size_t k = 0; k < e.size(); ++k) {
            if (var_pos[k] >= 0) t.e[var_pos[k]] += e[k];
        }
        for (size_t d = 0; d < dim; ++d) max_exp[d] = std::max(max_exp[d], (int)t.e[d]);
        terms.push_back(std::move(t));
    }

    double min_w = to_double(*std::min_element(ig.weights.begin(), ig.weights.end()));
    double L = cfg.half_width_sigmas / std::sqrt(min_w);

    auto eval = [&](int panels) {
        // The weight is separable and the integrand polynomial, so the
        // tensor-grid sum factorizes into per-dimension moment sums.
        std::vector<std::vector<double>> moments(dim);
        for (size_t d = 0; d < dim; ++d) {
            moments[d] = gaussian_moments(to_double(ig.weights[d]), L, panels, max_exp[d]);
        }
        Complex acc(0.0, 0.0);
        for (const auto& t : terms) {
            double m = 1.0;
            for (size_t d = 0; d < dim; ++d) m *= moments[d][t.e[d]];
            acc += t.c * m;
        }
        return acc;
    };
    return refine_integral(eval, cfg);
}

IntegralResult verify(IntegralId id, const ParamSet& params, const QuadratureConfig& cfg,
                      double rel_tol) {
    IntegralResult r;
    r.closed_form_value = closed_form(id, params);
    Refined q = quadrature(id, params, cfg);
    r.oracle_value = q.value;
    r.oracle_error_estimate = q.error_estimate;
    r.converged = q.converged;
    r.relative_discrepancy = std::abs(r.closed_form_value - r.oracle_value) /
                             std::max(std::abs(r.closed_form_value), 1e-300);
    r.pass = r.converged && r.relative_discrepancy <= rel_tol;
    return r;
}

}  // namespace hkdf
