#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbifold.hpp"

namespace braidcov {

/// One letter of a group word: a generator index with exponent +1 or -1.
struct Letter {
    unsigned gen;
    int sign;  // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
};

/// Freely reduced word in the generators. The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) {
        for (const auto& l : letters) append(l);
    }

    static Word gen(unsigned g, int exponent = 1) {
        Word w;
        const Letter l{g, exponent >= 0 ? 1 : -1};
        for (int k = 0; k < (exponent >= 0 ? exponent : -exponent); ++k) w.append(l);
        return w;
    }

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    void append(const Letter& l) {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Word: bad exponent");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();  // free reduction
        else
            letters_.push_back(l);
    }

    Word& operator*=(const Word& o) {
        for (const auto& l : o.letters_) append(l);
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    Word inverse() const {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.append(Letter{it->gen, -it->sign});
        return w;
    }

    Word pow(unsigned e) const {
        Word w;
        for (unsigned k = 0; k < e; ++k) w *= *this;
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
};

inline Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

/// Finitely presented group: named generators plus freely reduced relators.
class Presentation {
public:
    explicit Presentation(std::vector<std::string> generator_names)
        : names_(std::move(generator_names)) {
        for (const auto& n : names_)
            if (n.empty() || !std::islower(static_cast<unsigned char>(n[0])))
                throw std::invalid_argument("Presentation: generator names start lowercase");
    }

    std::size_t num_generators() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<Word>& relators() const { return relators_; }

    void add_relator(Word w) {
        for (const auto& l : w.letters())
            if (l.gen >= names_.size()) throw std::invalid_argument("Presentation: bad generator");
        if (!w.empty()) relators_.push_back(std::move(w));
    }
    /// Relation u = v stored as the relator u v^(-1).
    void add_relation(const Word& lhs, const Word& rhs) { add_relator(lhs * rhs.inverse()); }

    /// Same generators, one more relator.
    Presentation with_relator(const Word& w) const {
        Presentation p = *this;
        p.add_relator(w);
        return p;
    }

    /// Text form, one item per line: "gen a b c" then "rel a b A B" per
    /// relator, uppercase first letter marking an inverse.
    std::string to_text() const {
        std::ostringstream out;
        out << "gen";
        for (const auto& n : names_) out << ' ' << n;
        out << '\n';
        for (const auto& r : relators_) {
            out << "rel";
            for (const auto& l : r.letters()) {
                std::string t = names_[l.gen];
                if (l.sign < 0) t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
                out << ' ' << t;
            }
            out << '\n';
        }
        return out.str();
    }

private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

inline Presentation presentation_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rel_tokens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "gen") {
            std::string t;
            while (ls >> t) names.push_back(t);
        } else if (head == "rel") {
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            rel_tokens.push_back(std::move(toks));
        } else {
            throw std::invalid_argument("presentation text: unknown line head '" + head + "'");
        }
    }
    if (names.empty()) throw std::invalid_argument("presentation text: no generators");
    Presentation p(names);
    for (const auto& toks : rel_tokens) {
        Word w;
        for (std::string t : toks) {
            const bool inv = std::isupper(static_cast<unsigned char>(t[0])) != 0;
            if (inv) t[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(t[0])));
            auto it = std::find(names.begin(), names.end(), t);
            if (it == names.end())
                throw std::invalid_argument("presentation text: unknown generator '" + t + "'");
            w.append(Letter{static_cast<unsigned>(it - names.begin()), inv ? -1 : 1});
        }
        p.add_relator(std::move(w));
    }
    return p;
}

/// Whether the mixed relations with the first marked generator t0 are
/// included. AsPrinted keeps them starting at t1; IncludeTau0 extends every
/// mixed relation family to t0.
enum class MixedRange { AsPrinted, IncludeTau0 };

/// The braid group of the weighted sphere on n strands:
/// generators s1..s(n-1), t0..tm; braid, mixed, projective and power relators.
/// Infinite exponents omit the corresponding power relator.
inline Presentation braid_group(unsigned n, const Weight& a, const std::vector<Weight>& bs,
                                MixedRange range = MixedRange::AsPrinted) {
    if (n < 2) throw std::invalid_argument("braid_group: n must be >= 2");
    const std::size_t m_plus_1 = bs.size();
    std::vector<std::string> names;
    for (unsigned i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
    for (std::size_t i = 0; i < m_plus_1; ++i) names.push_back("t" + std::to_string(i));
    Presentation p(names);

    auto s = [&](unsigned i) { return Word::gen(i - 1); };          // sigma_i, 1-based
    auto t = [&](std::size_t i) { return Word::gen(static_cast<unsigned>(n - 1 + i)); };

    // Braid relations.
    for (unsigned i = 1; i + 1 <= n - 1; ++i)
        for (unsigned j = i + 2; j <= n - 1; ++j) p.add_relator(commutator(s(i), s(j)));
    for (unsigned i = 1; i + 1 <= n - 1; ++i)
        p.add_relation(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1));

    // Mixed relations.
    if (m_plus_1 > 0) {
        const std::size_t start = range == MixedRange::IncludeTau0 ? 0 : 1;
        for (std::size_t i = start; i < m_plus_1; ++i) {
            p.add_relation((s(1) * t(i)).pow(2), (t(i) * s(1)).pow(2));
            for (unsigned j = 2; j <= n - 1; ++j) p.add_relator(commutator(t(i), s(j)));
        }
        for (std::size_t i = start; i < m_plus_1; ++i)
            for (std::size_t j = i + 1; j < m_plus_1; ++j)
                p.add_relator(commutator(s(1) * t(i) * s(1).inverse(), t(j)));
    }

    // Projective relation: s1..s(n-1) t0..tm s(n-1)..s1 = 1.
    Word proj;
    for (unsigned i = 1; i <= n - 1; ++i) proj *= s(i);
    for (std::size_t i = 0; i < m_plus_1; ++i) proj *= t(i);
    for (unsigned i = n - 1; i >= 1; --i) proj *= s(i);
    p.add_relator(proj);

    // Orbifold power relations.
    for (std::size_t i = 0; i < m_plus_1; ++i)
        if (bs[i].is_finite()) p.add_relator(t(i).pow(static_cast<unsigned>(bs[i].value())));
    if (a.is_finite()) p.add_relator(s(1).pow(static_cast<unsigned>(a.value())));
    return p;
}

/// One-strand braid group of the weighted sphere:
/// < t0..tm | t_i^{b_i} = t0 t1 ... tm = 1 >.
inline Presentation braid_group_b1(const std::vector<Weight>& bs) {
    if (bs.empty()) throw std::invalid_argument("braid_group_b1: need at least one weight");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < bs.size(); ++i) names.push_back("t" + std::to_string(i));
    Presentation p(names);
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (bs[i].is_finite()) p.add_relator(Word::gen(static_cast<unsigned>(i))
                                                 .pow(static_cast<unsigned>(bs[i].value())));
    Word prod;
    for (std::size_t i = 0; i < bs.size(); ++i) prod *= Word::gen(static_cast<unsigned>(i));
    p.add_relator(prod);
    return p;
}

/// Two-strand braid group over one tangent line and two marked points:
/// < t, s | (ts)^2 = (st)^2, t^b = (t s^2)^c = s^a = 1 >.
inline Presentation braid_group_b2(const Weight& a, const Weight& b, const Weight& c) {
    Presentation p({"t", "s"});
    const Word t = Word::gen(0), s = Word::gen(1);
    p.add_relation((t * s).pow(2), (s * t).pow(2));
    if (b.is_finite()) p.add_relator(t.pow(static_cast<unsigned>(b.value())));
    if (c.is_finite()) p.add_relator((t * s * s).pow(static_cast<unsigned>(c.value())));
    if (a.is_finite()) p.add_relator(s.pow(static_cast<unsigned>(a.value())));
    return p;
}

/// Two-strand braid group over three marked points:
/// < t, r, s | (ts)^2=(st)^2, (rs)^2=(sr)^2, [r,t]=1,
///   t^b = (s t s r)^d = r^c = s^a = 1 >.
inline Presentation braid_group_b2(const Weight& a, const Weight& b, const Weight& c,
                                   const Weight& d) {
    Presentation p({"t", "r", "s"});
    const Word t = Word::gen(0), r = Word::gen(1), s = Word::gen(2);
    p.add_relation((t * s).pow(2), (s * t).pow(2));
    p.add_relation((r * s).pow(2), (s * r).pow(2));
    p.add_relator(commutator(r, t));
    if (b.is_finite()) p.add_relator(t.pow(static_cast<unsigned>(b.value())));
    if (d.is_finite()) p.add_relator((s * t * s * r).pow(static_cast<unsigned>(d.value())));
    if (c.is_finite()) p.add_relator(r.pow(static_cast<unsigned>(c.value())));
    if (a.is_finite()) p.add_relator(s.pow(static_cast<unsigned>(a.value())));
    return p;
}

/// Triangle group < x, y | x^p = y^q = (xy)^r = 1 >, infinite exponents omitted.
inline Presentation triangle_presentation(const Weight& p_, const Weight& q_, const Weight& r_) {
    Presentation p({"x", "y"});
    const Word x = Word::gen(0), y = Word::gen(1);
    if (p_.is_finite()) p.add_relator(x.pow(static_cast<unsigned>(p_.value())));
    if (q_.is_finite()) p.add_relator(y.pow(static_cast<unsigned>(q_.value())));
    if (r_.is_finite()) p.add_relator((x * y).pow(static_cast<unsigned>(r_.value())));
    return p;
}

/// A parsed CLI group spec: which family plus its parameters.
struct GroupSpec {
    enum class Kind { Bn, B2abc, B2abcd, Triangle, B1 } kind;
    unsigned n = 0;                  // Bn only
    Weight a = Weight::infinity();   // Bn only
    std::vector<Weight> weights;     // bs for Bn/B1, (a,b,c[,d]) or (p,q,r) otherwise
    std::string label;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline Weight parse_weight(const std::string& tok) {
    std::string t = trim(tok);
    if (t == "inf") return Weight::infinity();
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(t, &pos);
        if (pos != t.size() || v == 0) throw std::invalid_argument("");
        return Weight(v);
    } catch (...) {
        throw std::invalid_argument("group spec: bad weight '" + tok + "'");
    }
}

inline std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && seps.find(c) != std::string::npos) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

}  // namespace detail

/// Grammar: B(n=3; a=4; b=[inf]) | B2(a,b,c) | B2(a,b,c,d) | T(p,q,r)
/// | B1(b0,...,bm), with the token `inf` for infinite weights.
inline GroupSpec parse_group_spec(const std::string& text) {
    using detail::parse_weight;
    using detail::split;
    using detail::trim;
    const std::string s = trim(text);
    const std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw std::invalid_argument("group spec: expected NAME(...)");
    const std::string name = trim(s.substr(0, open));
    const std::string body = s.substr(open + 1, s.size() - open - 2);

    GroupSpec spec;
    spec.label = s;
    if (name == "B") {
        spec.kind = GroupSpec::Kind::Bn;
        bool have_n = false, have_a = false, have_b = false;
        for (const std::string& item : split(body, ";,")) {
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("group spec: expected key=value in B(...)");
            const std::string key = trim(item.substr(0, eq));
            const std::string val = trim(item.substr(eq + 1));
            if (key == "n") {
                spec.n = static_cast<unsigned>(std::stoul(val));
                have_n = true;
            } else if (key == "a") {
                spec.a = parse_weight(val);
                have_a = true;
            } else if (key == "b") {
                if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                    throw std::invalid_argument("group spec: b expects a [list]");
                const std::string inner = trim(val.substr(1, val.size() - 2));
                if (!inner.empty())
                    for (const std::string& w : split(inner, ","))
                        spec.weights.push_back(parse_weight(w));
                have_b = true;
            } else {
                throw std::invalid_argument("group spec: unknown key '" + key + "'");
            }
        }
        if (!have_n || !have_a || !have_b)
            throw std::invalid_argument("group spec: B(...) needs n=, a=, b=[...]");
        return spec;
    }
    std::vector<Weight> ws;
    for (const std::string& tok : split(body, ",")) ws.push_back(parse_weight(tok));
    spec.weights = std::move(ws);
    if (name == "B2") {
        if (spec.weights.size() == 3)
            spec.kind = GroupSpec::Kind::B2abc;
        else if (spec.weights.size() == 4)
            spec.kind = GroupSpec::Kind::B2abcd;
        else
            throw std::invalid_argument("group spec: B2 takes 3 or 4 weights");
    } else if (name == "T") {
        if (spec.weights.size() != 3) throw std::invalid_argument("group spec: T takes 3 weights");
        spec.kind = GroupSpec::Kind::Triangle;
    } else if (name == "B1") {
        if (spec.weights.empty()) throw std::invalid_argument("group spec: B1 takes weights");
        spec.kind = GroupSpec::Kind::B1;
    } else {
        throw std::invalid_argument("group spec: unknown family '" + name + "'");
    }
    return spec;
}

inline Presentation build_presentation(const GroupSpec& spec,
                                       MixedRange range = MixedRange::AsPrinted) {
    switch (spec.kind) {
        case GroupSpec::Kind::Bn: return braid_group(spec.n, spec.a, spec.weights, range);
        case GroupSpec::Kind::B2abc:
            return braid_group_b2(spec.weights[0], spec.weights[1], spec.weights[2]);
        case GroupSpec::Kind::B2abcd:
            return braid_group_b2(spec.weights[0], spec.weights[1], spec.weights[2],
                                  spec.weights[3]);
        case GroupSpec::Kind::Triangle:
            return triangle_presentation(spec.weights[0], spec.weights[1], spec.weights[2]);
        default: return braid_group_b1(spec.weights);
    }
}

}  // namespace braidcov
