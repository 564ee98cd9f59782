#include "hkdfkit/multipoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkdf {

MultiPoly MultiPoly::constant(GaussianRational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial(name, 1); }

MultiPoly MultiPoly::monomial(const std::string& name, unsigned k, GaussianRational c) {
    MultiPoly p;
    if (c.is_zero()) return p;
    p.vars_.push_back(name);
    p.terms_.emplace(Exponents{k}, std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    for (const auto& [e, c] : terms_) {
        if (std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; })) return false;
    }
    return true;
}

GaussianRational MultiPoly::constant_term() const {
    Exponents zero(vars_.size(), 0u);
    auto it = terms_.find(zero);
    return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    }
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

MultiPoly MultiPoly::remapped(const std::vector<std::string>& new_vars) const {
    std::vector<int> pos(vars_.size(), -1);
    for (size_t k = 0; k < vars_.size(); ++k) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[k]);
        if (it == new_vars.end()) throw std::logic_error("remap drops a live variable");
        pos[k] = static_cast<int>(it - new_vars.begin());
    }
    MultiPoly r;
    r.vars_ = new_vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0u);
        for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> u = a.vars_;
    for (const auto& v : b.vars_) {
        if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    }
    a = a.remapped(u);
    b = b.remapped(u);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    MultiPoly b = o;
    align(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    MultiPoly b = o;
    align(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::scale(const GaussianRational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    r.vars_ = vars_;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    MultiPoly r;
    r.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    MultiPoly a = *this, b = o;
    align(a, b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::diff(const std::string& var, unsigned k) const {
    int idx = var_index(var);
    if (idx < 0) return k == 0 ? *this : MultiPoly();
    MultiPoly r = *this;
    for (unsigned pass = 0; pass < k; ++pass) {
        TermMap next;
        for (const auto& [e, c] : r.terms_) {
            if (e[idx] == 0) continue;
            Exponents ne = e;
            ne[idx] -= 1;
            GaussianRational nc = c * GaussianRational(static_cast<long>(e[idx]));
            auto [it, inserted] = next.emplace(std::move(ne), nc);
            if (!inserted) it->second += nc;
        }
        r.terms_ = std::move(next);
    }
    r.prune();
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    unsigned maxe = degree_in(var);
    std::vector<MultiPoly> powers;
    powers.push_back(MultiPoly::constant(GaussianRational(1)));
    for (unsigned k = 1; k <= maxe; ++k) powers.push_back(powers.back() * replacement);

    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly rest;
        rest.vars_ = vars_;
        Exponents ne = e;
        unsigned ve = ne[idx];
        ne[idx] = 0;
        rest.terms_.emplace(std::move(ne), c);
        r += rest * powers[ve];
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const GaussianRational& value) const {
    return substitute(var, MultiPoly::constant(value));
}

MultiPoly MultiPoly::truncate_in(const std::string& var, unsigned maxdeg) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::truncate_total(unsigned maxdeg) const {
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0u) <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::truncate_total_in(const std::vector<std::string>& subset,
                                       unsigned maxdeg) const {
    std::vector<int> idx;
    for (const auto& v : subset) {
        int k = var_index(v);
        if (k >= 0) idx.push_back(k);
    }
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (int k : idx) d += e[k];
        if (d <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, unsigned k) const {
    int idx = var_index(var);
    if (idx < 0) {
        return k == 0 ? *this : MultiPoly();
    }
    std::vector<std::string> rest_vars;
    for (size_t j = 0; j < vars_.size(); ++j) {
        if (static_cast<int>(j) != idx) rest_vars.push_back(vars_[j]);
    }
    MultiPoly r;
    r.vars_ = rest_vars;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exponents ne;
        for (size_t j = 0; j < e.size(); ++j) {
            if (static_cast<int>(j) != idx) ne.push_back(e[j]);
        }
        auto [it, inserted] = r.terms_.emplace(std::move(ne), c);
        if (!inserted) it->second += c;
    }
    r.prune();
    return r;
}

Complex MultiPoly::eval(const std::map<std::string, Complex>& assignment) const {
    std::vector<std::vector<Complex>> powers(vars_.size());
    for (size_t k = 0; k < vars_.size(); ++k) {
        auto it = assignment.find(vars_[k]);
        if (it == assignment.end()) {
            throw std::invalid_argument("missing variable in assignment: " + vars_[k]);
        }
        unsigned d = degree_in(vars_[k]);
        powers[k].resize(d + 1);
        powers[k][0] = Complex(1.0, 0.0);
        for (unsigned j = 1; j <= d; ++j) powers[k][j] = powers[k][j - 1] * it->second;
    }
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        Complex t = c.to_complex();
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k]) t *= powers[k][e[k]];
        }
        acc += t;
    }
    return acc;
}

GaussianRational MultiPoly::eval_exact(
    const std::map<std::string, GaussianRational>& assignment) const {
    std::vector<std::vector<GaussianRational>> powers(vars_.size());
    for (size_t k = 0; k < vars_.size(); ++k) {
        auto it = assignment.find(vars_[k]);
        if (it == assignment.end()) {
            throw std::invalid_argument("missing variable in assignment: " + vars_[k]);
        }
        unsigned d = degree_in(vars_[k]);
        powers[k].resize(d + 1);
        powers[k][0] = GaussianRational(1);
        for (unsigned j = 1; j <= d; ++j) powers[k][j] = powers[k][j - 1] * it->second;
    }
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k]) t *= powers[k][e[k]];
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_json() const {
    nlohmann::json j;
    j["variables"] = vars_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["exponents"] = e;
        t["re"] = to_fraction_string(c.re);
        t["im"] = to_fraction_string(c.im);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

MultiPoly MultiPoly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MultiPoly p;
    p.vars_ = j.at("variables").get<std::vector<std::string>>();
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exponents").get<Exponents>();
        if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        GaussianRational c(rational_from_string(t.at("re").get<std::string>()),
                           rational_from_string(t.at("im").get<std::string>()));
        p.add_term(e, c);
    }
    return p;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << hkdf::to_string(c) << ")";
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "*" << vars_[k];
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

}  // namespace hkdf
