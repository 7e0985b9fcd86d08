#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace braidcov {

using ExponentVec = std::vector<unsigned>;

/// Canonical monomial order: descending lexicographic on exponent vectors.
/// Map iteration therefore starts at the leading term.
struct MonomialOrder {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const { return a > b; }
};

/// Sparse homogeneous polynomial over Q. Every stored coefficient is nonzero
/// and every exponent vector sums to the stated degree; the zero polynomial
/// is an empty term map with a nominal degree.
class HomogeneousPoly {
public:
    using TermMap = std::map<ExponentVec, Rational, MonomialOrder>;

    HomogeneousPoly(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}

    static HomogeneousPoly monomial(unsigned nvars, ExponentVec e, const Rational& c) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        HomogeneousPoly p(nvars, d);
        p.add_term(std::move(e), c);
        return p;
    }
    /// The variable x_i as a degree-1 polynomial.
    static HomogeneousPoly variable(unsigned nvars, unsigned i, const Rational& c = Rational(1)) {
        ExponentVec e(nvars, 0);
        e.at(i) = 1;
        return monomial(nvars, std::move(e), c);
    }

    unsigned nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(ExponentVec e, const Rational& c) {
        if (c.is_zero()) return;
        if (e.size() != nvars_) throw std::invalid_argument("HomogeneousPoly: bad exponent width");
        unsigned d = 0;
        for (unsigned x : e) d += x;
        if (d != degree_) throw std::invalid_argument("HomogeneousPoly: term degree mismatch");
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        a.require_compatible(b);
        HomogeneousPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a + (-b);
    }
    HomogeneousPoly operator-() const {
        HomogeneousPoly r(nvars_, degree_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("HomogeneousPoly: nvars mismatch");
        HomogeneousPoly r(a.nvars_, a.degree_ + b.degree_);
        ExponentVec e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    HomogeneousPoly scaled(const Rational& s) const {
        HomogeneousPoly r(nvars_, degree_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return !(a == b);
    }
    /// Equality up to a nonzero scalar (projective equality of hypersurfaces).
    bool proportional_to(const HomogeneousPoly& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        const Rational ratio = terms_.begin()->second / o.terms_.begin()->second;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || it->second != jt->second * ratio) return false;
        }
        return true;
    }

    /// Exact division by a polynomial that divides this one (leading-term
    /// algorithm in the canonical order); throws if the division is not exact.
    HomogeneousPoly exact_div(const HomogeneousPoly& d) const {
        if (d.is_zero()) throw std::domain_error("HomogeneousPoly: division by zero");
        if (is_zero()) return HomogeneousPoly(nvars_, 0);
        if (d.degree_ > degree_) throw std::domain_error("HomogeneousPoly: division not exact");
        HomogeneousPoly q(nvars_, degree_ - d.degree_);
        HomogeneousPoly r = *this;
        const auto& [de, dc] = *d.terms_.begin();
        ExponentVec qe(nvars_);
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.begin();
            for (unsigned i = 0; i < nvars_; ++i) {
                if (re[i] < de[i]) throw std::domain_error("HomogeneousPoly: division not exact");
                qe[i] = re[i] - de[i];
            }
            Rational qc = rc / dc;
            q.add_term(qe, qc);
            r = r - d * HomogeneousPoly::monomial(nvars_, qe, qc);
        }
        return q;
    }

    Rational eval(const std::vector<Rational>& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("HomogeneousPoly: bad point size");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Substitute x_i := args[i]; all args must be homogeneous of one common
    /// degree so the result is homogeneous again.
    HomogeneousPoly substitute(const std::vector<HomogeneousPoly>& args) const {
        if (args.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
        const unsigned anv = args[0].nvars();
        const unsigned adeg = args[0].degree();
        for (const auto& a : args)
            if (a.nvars() != anv || a.degree() != adeg)
                throw std::invalid_argument("substitute: arguments not of uniform shape");
        // Power tables per variable up to the needed exponent.
        std::vector<std::vector<HomogeneousPoly>> pw(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            unsigned maxe = 0;
            for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[i]);
            pw[i].reserve(maxe + 1);
            HomogeneousPoly one(anv, 0);
            one.add_term(ExponentVec(anv, 0), Rational(1));
            pw[i].push_back(one);
            for (unsigned k = 1; k <= maxe; ++k) pw[i].push_back(pw[i].back() * args[i]);
        }
        HomogeneousPoly acc(anv, degree_ * adeg);
        for (const auto& [e, c] : terms_) {
            HomogeneousPoly t(anv, 0);
            t.add_term(ExponentVec(anv, 0), c);
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i] > 0) t = t * pw[i][e[i]];
            acc = acc + t;
        }
        return acc;
    }

    /// Substitute x_i := x_i^b (exponent scaling); degree multiplies by b.
    HomogeneousPoly power_substitute(unsigned b) const {
        if (b == 0) throw std::invalid_argument("power_substitute: b must be positive");
        HomogeneousPoly r(nvars_, degree_ * b);
        for (const auto& [e, c] : terms_) {
            ExponentVec be(e);
            for (auto& x : be) x *= b;
            r.terms_.emplace(std::move(be), c);
        }
        return r;
    }

    /// Canonical text form: terms "c * x0^e0 x2^e2" joined by " + ", in the
    /// canonical monomial order; a degree-0 term prints as the bare coefficient.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            std::string vars;
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i] > 0) {
                    vars += vars.empty() ? "" : " ";
                    vars += "x" + std::to_string(i) + "^" + std::to_string(e[i]);
                }
            if (!vars.empty()) out += " * " + vars;
        }
        return out;
    }

private:
    void require_compatible(const HomogeneousPoly& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_)
            throw std::invalid_argument("HomogeneousPoly: shape mismatch");
    }

    unsigned nvars_;
    unsigned degree_;
    TermMap terms_;
};

template <>
struct RingTraits<HomogeneousPoly> {
    static HomogeneousPoly zero() { return HomogeneousPoly(0, 0); }
    static HomogeneousPoly one() {
        HomogeneousPoly p(0, 0);
        p.add_term({}, Rational(1));
        return p;
    }
    static bool is_zero(const HomogeneousPoly& a) { return a.is_zero(); }
    static HomogeneousPoly exact_div(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.exact_div(b);
    }
};

}  // namespace braidcov
