#pragma once

#include <numeric>
#include <optional>

#include "orbifold.hpp"
#include "presentation.hpp"
#include "todd_coxeter.hpp"

namespace braidcov {

/// Outcome of the central-extension check on the two-strand group over
/// weights (a, b, c): enumerate the group and its quotient by the central
/// element (ts)^2, then compare the quotient with the triangle group of
/// weights (2, a, gcd(b, c)).
struct CentralExtensionReport {
    enum class Status { OK, INCONCLUSIVE } status = Status::INCONCLUSIVE;
    std::optional<std::size_t> group_order;
    std::optional<std::size_t> quotient_order;
    std::optional<Integer> triangle_order;  // set when the triangle is spherical
    bool quotient_matches_triangle = false;
    bool quotient_divides_group = false;
};

inline CentralExtensionReport central_extension_check(const Weight& a, unsigned long b,
                                                      unsigned long c,
                                                      std::size_t max_cosets = 2'000'000) {
    CentralExtensionReport rep;
    Presentation g = braid_group_b2(a, Weight(b), Weight(c));
    const Word delta = (Word::gen(0) * Word::gen(1)).pow(2);  // (t s)^2
    Presentation q = g.with_relator(delta);

    EnumerationResult ge = todd_coxeter(g, max_cosets);
    EnumerationResult qe = todd_coxeter(q, max_cosets);
    const unsigned long d = std::gcd(b, c);
    rep.triangle_order = triangle_group_order(Weight(2), a, Weight(d));
    if (!ge.closed || !qe.closed) return rep;  // INCONCLUSIVE

    rep.group_order = ge.order;
    rep.quotient_order = qe.order;
    rep.quotient_divides_group = qe.order != 0 && ge.order % qe.order == 0;
    if (rep.triangle_order.has_value())
        rep.quotient_matches_triangle = Integer(static_cast<unsigned long>(qe.order)) ==
                                        *rep.triangle_order;
    rep.status = CentralExtensionReport::Status::OK;
    return rep;
}

}  // namespace braidcov
