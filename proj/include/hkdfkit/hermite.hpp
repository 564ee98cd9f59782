#pragma once

#include "hkdfkit/multipoly.hpp"

#include <string>

namespace hkdf {

/// H_n^(m)(x,y) = n! sum_r x^{n-mr} y^r / ((n-mr)! r!), in variables (x, y).
MultiPoly hkdf2(unsigned n, unsigned m, const std::string& x = "x", const std::string& y = "y");

/// m-variable one-index Hermite in (x1..xm), generating function e^{sum x_s t^s}.
MultiPoly hkdf_multi(unsigned n, unsigned m);

/// Two-index two-variable Hermite H_{m,n}(x,y;z,w|tau) in (x,y,z,w,tau).
MultiPoly two_index(unsigned m, unsigned n);

/// Incomplete Hermite h_{m,n}(x,z|tau) in (x,z,tau).
MultiPoly incomplete(unsigned m, unsigned n);

/// H^{(p,q,s)}_{m,n}(x1,x2;x3,x4|tau): order-p and order-q factors coupled
/// through tau at stride s.
MultiPoly composite(unsigned m, unsigned n, unsigned p, unsigned q, unsigned s);

enum class Classical { He, HPhys };

/// He_n(x) = H_n(x,-1/2); physicists' H_n(x) = H_n(2x,-1). Exact substitution.
MultiPoly classical(unsigned n, Classical kind);

/// P-hat: (1/n) d/dx p, the degree-lowering map (returns H_{n-1} when p = H_n).
MultiPoly ladder_lower(const MultiPoly& p, unsigned n, const std::string& x = "x");

/// M-hat: (x + 2y d/dx) p.
MultiPoly ladder_raise(const MultiPoly& p, const std::string& x = "x", const std::string& y = "y");

/// Parse a canonical family id like "hkdf2:n=5,m=3" or "two_index:m=1,n=1".
/// Recognized heads: hkdf2, hkdf_multi, two_index, incomplete, composite,
/// classical (kind=He|H). Throws std::invalid_argument on malformed ids.
MultiPoly family_from_id(const std::string& id);

}  // namespace hkdf
