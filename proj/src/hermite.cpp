#include "hkdfkit/hermite.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hkdf {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad family id field: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

unsigned get_u(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("family id missing key: " + key);
    int v = std::stoi(it->second);
    if (v < 0) throw std::invalid_argument("negative index: " + key);
    return static_cast<unsigned>(v);
}

}  // namespace

MultiPoly hkdf2(unsigned n, unsigned m, const std::string& x, const std::string& y) {
    if (m < 1) throw std::invalid_argument("hkdf2 requires m >= 1");
    BigInt nf = factorial(n);
    MultiPoly p;
    for (unsigned r = 0; m * r <= n; ++r) {
        Rational c(nf, factorial(n - m * r) * factorial(r));
        MultiPoly term = MultiPoly::monomial(x, n - m * r, GaussianRational(c));
        if (r > 0) term = term * MultiPoly::monomial(y, r);
        p += term;
    }
    return p;
}

MultiPoly hkdf_multi(unsigned n, unsigned m) {
    if (m < 2) throw std::invalid_argument("hkdf_multi requires m >= 2");
    if (m == 2) return hkdf2(n, 2, "x1", "x2");
    BigInt nf = factorial(n);
    std::string xm = "x" + std::to_string(m);
    MultiPoly p;
    for (unsigned r = 0; m * r <= n; ++r) {
        GaussianRational c(Rational(nf, factorial(n - m * r) * factorial(r)));
        MultiPoly term = c * hkdf_multi(n - m * r, m - 1);
        if (r > 0) term = term * MultiPoly::monomial(xm, r);
        p += term;
    }
    return p;
}

MultiPoly two_index(unsigned m, unsigned n) {
    BigInt pre = factorial(m) * factorial(n);
    MultiPoly p;
    for (unsigned r = 0; r <= std::min(m, n); ++r) {
        GaussianRational c(Rational(pre, factorial(r) * factorial(m - r) * factorial(n - r)));
        MultiPoly term = c * (hkdf2(m - r, 2, "x", "y") * hkdf2(n - r, 2, "z", "w"));
        if (r > 0) term = term * MultiPoly::monomial("tau", r);
        p += term;
    }
    return p;
}

MultiPoly incomplete(unsigned m, unsigned n) {
    BigInt pre = factorial(m) * factorial(n);
    MultiPoly p;
    for (unsigned r = 0; r <= std::min(m, n); ++r) {
        GaussianRational c(Rational(pre, factorial(r) * factorial(m - r) * factorial(n - r)));
        MultiPoly term = MultiPoly::monomial("x", m - r, c) * MultiPoly::monomial("z", n - r);
        if (r > 0) term = term * MultiPoly::monomial("tau", r);
        p += term;
    }
    return p;
}

MultiPoly composite(unsigned m, unsigned n, unsigned p_ord, unsigned q_ord, unsigned s) {
    if (p_ord < 1 || q_ord < 1 || s < 1) {
        throw std::invalid_argument("composite requires p,q,s >= 1");
    }
    BigInt pre = factorial(m) * factorial(n);
    MultiPoly acc;
    for (unsigned r = 0; s * r <= m && s * r <= n; ++r) {
        GaussianRational c(
            Rational(pre, factorial(r) * factorial(m - s * r) * factorial(n - s * r)));
        MultiPoly term =
            c * (hkdf2(m - s * r, p_ord, "x1", "x2") * hkdf2(n - s * r, q_ord, "x3", "x4"));
        if (r > 0) term = term * MultiPoly::monomial("tau", r);
        acc += term;
    }
    return acc;
}

MultiPoly classical(unsigned n, Classical kind) {
    MultiPoly h = hkdf2(n, 2, "x", "y");
    switch (kind) {
        case Classical::He:
            return h.substitute("y", GaussianRational(Rational(-1, 2)));
        case Classical::HPhys:
            return h.substitute("x", GaussianRational(2) * MultiPoly::variable("x"))
                .substitute("y", GaussianRational(-1));
    }
    throw std::invalid_argument("unknown classical kind");
}

MultiPoly ladder_lower(const MultiPoly& p, unsigned n, const std::string& x) {
    if (n == 0) return MultiPoly::zero();
    return GaussianRational(Rational(BigInt(1), BigInt(n))) * p.diff(x);
}

MultiPoly ladder_raise(const MultiPoly& p, const std::string& x, const std::string& y) {
    return MultiPoly::variable(x) * p + GaussianRational(2) * (MultiPoly::variable(y) * p.diff(x));
}

MultiPoly family_from_id(const std::string& id) {
    auto colon = id.find(':');
    std::string head = colon == std::string::npos ? id : id.substr(0, colon);
    auto kv = colon == std::string::npos ? std::map<std::string, std::string>{}
                                         : parse_kv(id.substr(colon + 1));
    if (head == "hkdf2") return hkdf2(get_u(kv, "n"), get_u(kv, "m"));
    if (head == "hkdf_multi") return hkdf_multi(get_u(kv, "n"), get_u(kv, "m"));
    if (head == "two_index") return two_index(get_u(kv, "m"), get_u(kv, "n"));
    if (head == "incomplete") return incomplete(get_u(kv, "m"), get_u(kv, "n"));
    if (head == "composite") {
        return composite(get_u(kv, "m"), get_u(kv, "n"), get_u(kv, "p"), get_u(kv, "q"),
                         get_u(kv, "s"));
    }
    if (head == "classical") {
        auto it = kv.find("kind");
        if (it == kv.end()) throw std::invalid_argument("classical needs kind=He|H");
        if (it->second == "He") return classical(get_u(kv, "n"), Classical::He);
        if (it->second == "H") return classical(get_u(kv, "n"), Classical::HPhys);
        throw std::invalid_argument("unknown classical kind: " + it->second);
    }
    throw std::invalid_argument("unknown family: " + head);
}

}  // namespace hkdf
