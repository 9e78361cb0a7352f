#pragma once

#include <string>
#include <vector>

#include "polyfunc/oracle.hpp"
#include "polyfunc/parse.hpp"

namespace testutil {

using namespace polyfunc;

inline Ring Z() { return RingInstance::integers(); }

inline BaseElement zi(long long v) { return BaseElement::integer(Z(), BigInt(v)); }

inline IdealGen zideal(long long v) { return IdealGen(zi(v)); }

inline BaseElement el(const Ring& r, const std::string& text) { return parse_element(text, r); }

inline IdealGen ideal(const Ring& r, const std::string& text) {
    return IdealGen(parse_element(text, r));
}

inline ProblemSpec zspec(const std::vector<long long>& ns, long long m) {
    std::vector<IdealGen> sources;
    for (long long n : ns) sources.push_back(zideal(n));
    return ProblemSpec(Z(), std::move(sources), zideal(m));
}

inline ProblemSpec gfspec(const Ring& r, const std::vector<std::string>& fs,
                          const std::string& g) {
    std::vector<IdealGen> sources;
    for (const auto& f : fs) sources.push_back(ideal(r, f));
    return ProblemSpec(r, std::move(sources), ideal(r, g));
}

inline MVPoly poly(const Ring& r, uint32_t arity, const std::string& text) {
    return parse_poly(text, r, arity);
}

/// All monic non-constant polynomials of degree <= maxdeg as ideal strings.
inline std::vector<IdealGen> monic_ideals(const Ring& r, long maxdeg) {
    std::vector<IdealGen> out;
    BigInt q = r->field_order();
    for (long d = 1; d <= maxdeg; ++d) {
        BigInt lead = boost::multiprecision::pow(q, (unsigned)d);
        for (BigInt low = 0; low < lead; ++low)
            out.push_back(IdealGen(element_at_index(r, lead + low)));
    }
    return out;
}

}  // namespace testutil
