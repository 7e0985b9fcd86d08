#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "presentation.hpp"

namespace braidcov {

/// Closed coset table over the trivial subgroup: rows are cosets, columns are
/// generators and their inverses (generator g forward in column 2g, inverse
/// in column 2g+1). Row 0 is the subgroup coset.
class CosetTable {
public:
    CosetTable() : gens_(0) {}
    CosetTable(std::size_t gens, std::size_t rows)
        : gens_(gens), entries_(rows * 2 * gens, -1) {}

    std::size_t num_generators() const { return gens_; }
    std::size_t rows() const { return gens_ == 0 ? 0 : entries_.size() / (2 * gens_); }

    std::int32_t entry(std::size_t row, std::size_t col) const {
        return entries_[row * 2 * gens_ + col];
    }
    std::int32_t& entry(std::size_t row, std::size_t col) {
        return entries_[row * 2 * gens_ + col];
    }

    /// Action of generator g on the cosets, as a permutation image vector.
    std::vector<std::int32_t> generator_permutation(std::size_t g) const {
        std::vector<std::int32_t> image(rows());
        for (std::size_t r = 0; r < rows(); ++r) image[r] = entry(r, 2 * g);
        return image;
    }

private:
    std::size_t gens_;
    std::vector<std::int32_t> entries_;
};

struct EnumerationResult {
    bool closed = false;
    std::size_t order = 0;           // live cosets when closed
    std::size_t cosets_defined = 0;  // total definitions over the run
    CosetTable table;                // compacted closed table (empty if not closed)
};

/// Verify a closed table: every column total on live rows is a bijection and
/// every relator traces to the identity from every coset.
inline bool table_satisfies(const Presentation& p, const CosetTable& t) {
    const std::size_t n = t.rows();
    const std::size_t g = t.num_generators();
    if (g != p.num_generators()) return false;
    std::vector<bool> seen(n);
    for (std::size_t col = 0; col < 2 * g; ++col) {
        seen.assign(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            std::int32_t im = t.entry(r, col);
            if (im < 0 || static_cast<std::size_t>(im) >= n || seen[im]) return false;
            seen[im] = true;
            // Paired inverse entry must point back.
            if (t.entry(static_cast<std::size_t>(im), col ^ 1u) !=
                static_cast<std::int32_t>(r))
                return false;
        }
    }
    for (const Word& w : p.relators()) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t cur = r;
            for (const Letter& l : w.letters())
                cur = static_cast<std::size_t>(
                    t.entry(cur, 2 * l.gen + (l.sign < 0 ? 1 : 0)));
            if (cur != r) return false;
        }
    }
    return true;
}

namespace detail {

/// HLT-style coset enumerator over the trivial subgroup: relator-driven
/// scan-and-fill with immediate coincidence merging through a union-find,
/// plus periodic table compaction. Deterministic for fixed input.
class Enumerator {
public:
    Enumerator(const Presentation& p, std::size_t max_cosets)
        : ngens_(p.num_generators()), ncols_(2 * ngens_), max_cosets_(max_cosets) {
        if (ngens_ == 0) throw std::invalid_argument("todd_coxeter: no generators");
        if (max_cosets_ < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
        for (const Word& w : p.relators()) {
            std::vector<std::uint32_t> cols;
            cols.reserve(w.size());
            for (const Letter& l : w.letters())
                cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
            if (!cols.empty()) relators_.push_back(std::move(cols));
        }
    }

    EnumerationResult run() {
        new_coset();  // coset 0 = the subgroup
        std::size_t alpha = 0;
        while (alpha < num_rows()) {
            if (dead(alpha)) {
                ++alpha;
                continue;
            }
            // Process alpha to completion: every relator scanned and closed,
            // every column defined. On table overflow, recover capacity by a
            // lookahead pass plus compaction and redo alpha's relators (the
            // already-closed ones trace through in place).
            for (;;) {
                bool overflow = false;
                for (const auto& rel : relators_) {
                    if (!scan_and_fill(alpha, rel, overflow)) break;  // alpha died
                    if (overflow) break;
                }
                if (dead(alpha)) break;
                if (!overflow) {
                    for (std::size_t col = 0; col < ncols_ && !overflow; ++col)
                        if (tab(alpha, col) < 0 && !define(alpha, col)) overflow = true;
                }
                if (!overflow) break;  // alpha complete
                if (!recover(alpha)) return exceeded();
                if (dead(alpha)) break;
            }
            ++alpha;
            maybe_compact(alpha);
        }
        return closed_result();
    }

private:
    std::size_t num_rows() const { return parent_.size(); }
    bool dead(std::size_t c) const { return parent_[c] != c; }
    std::int32_t tab(std::size_t row, std::size_t col) const {
        return table_[row * ncols_ + col];
    }
    void set(std::size_t row, std::size_t col, std::int32_t v) { table_[row * ncols_ + col] = v; }

    std::size_t rep(std::size_t c) {
        std::size_t root = c;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[c] != root) {
            std::size_t up = parent_[c];
            parent_[c] = root;
            c = up;
        }
        return root;
    }

    // max_cosets_ bounds the physical table (rows allocated at one time);
    // dead rows are reclaimed by compaction, so total definitions over a run
    // may exceed it.
    bool new_coset_allowed() const { return num_rows() < max_cosets_; }

    std::size_t new_coset() {
        table_.resize(table_.size() + ncols_, -1);
        parent_.push_back(parent_.size());
        ++defined_;
        ++alive_;
        return parent_.size() - 1;
    }

    /// Define tab(alpha, col) with a fresh coset; false on overflow.
    bool define(std::size_t alpha, std::size_t col) {
        if (!new_coset_allowed()) return false;
        std::size_t beta = new_coset();
        set(alpha, col, static_cast<std::int32_t>(beta));
        set(beta, col ^ 1u, static_cast<std::int32_t>(alpha));
        return true;
    }

    /// Scan relator rel from coset alpha, filling gaps with new cosets.
    /// Returns false if alpha died during coincidence processing; sets
    /// overflow when the coset limit is hit.
    bool scan_and_fill(std::size_t alpha, const std::vector<std::uint32_t>& rel, bool& overflow) {
        return scan(alpha, rel, /*fill=*/true, overflow);
    }

    bool scan(std::size_t alpha, const std::vector<std::uint32_t>& rel, bool fill,
              bool& overflow) {
        std::size_t f = alpha;
        std::size_t i = 0;
        std::size_t b = alpha;
        std::size_t j = rel.size();
        for (;;) {
            while (i < j && tab(f, rel[i]) >= 0) f = static_cast<std::size_t>(tab(f, rel[i])), ++i;
            if (i == j) {
                if (f != b) coincidence(f, b);
                return !dead(alpha);
            }
            while (j > i && tab(b, rel[j - 1] ^ 1u) >= 0)
                b = static_cast<std::size_t>(tab(b, rel[j - 1] ^ 1u)), --j;
            if (j == i) {
                if (f != b) coincidence(f, b);
                return !dead(alpha);
            }
            if (j == i + 1) {
                // Single gap: deduction.
                deduce(f, rel[i], b);
                return !dead(alpha);
            }
            if (!fill) return true;  // lookahead mode: leave wide gaps alone
            // Fill the first gap position and keep scanning.
            if (!define(f, rel[i])) {
                overflow = true;
                return true;
            }
        }
    }

    /// Lookahead pass: scan every relator at every live coset without
    /// defining anything, harvesting deductions and coincidences only.
    void lookahead() {
        bool overflow = false;
        for (std::size_t beta = 0; beta < num_rows(); ++beta) {
            if (dead(beta)) continue;
            for (const auto& rel : relators_)
                if (!scan(beta, rel, /*fill=*/false, overflow)) break;
        }
    }

    /// Try to free table capacity: compact away dead rows, then run a
    /// lookahead pass and compact again. Returns false when the freed margin
    /// is too small to make progress.
    bool recover(std::size_t& alpha) {
        const std::size_t margin = std::max<std::size_t>(256, max_cosets_ / 100);
        compact(alpha);
        if (num_rows() + margin <= max_cosets_) return true;
        lookahead();
        compact(alpha);
        return num_rows() + margin <= max_cosets_;
    }

    /// Record f . col = b (and the inverse pair), merging on clashes.
    void deduce(std::size_t f, std::size_t col, std::size_t b) {
        std::int32_t existing = tab(f, col);
        if (existing >= 0) {
            if (static_cast<std::size_t>(existing) != b)
                coincidence(static_cast<std::size_t>(existing), b);
            return;
        }
        std::int32_t back = tab(b, col ^ 1u);
        if (back >= 0) {
            if (static_cast<std::size_t>(back) != f) coincidence(static_cast<std::size_t>(back), f);
            return;
        }
        set(f, col, static_cast<std::int32_t>(b));
        set(b, col ^ 1u, static_cast<std::int32_t>(f));
    }

    void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --alive_;
        queue.push_back(b);
    }

    /// Immediate coincidence processing: transfer the dead coset's row to its
    /// representative, cascading merges until the queue drains.
    void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::size_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            std::size_t gamma = queue.front();
            queue.pop_front();
            for (std::size_t col = 0; col < ncols_; ++col) {
                std::int32_t delta_raw = tab(gamma, col);
                if (delta_raw < 0) continue;
                std::size_t delta = static_cast<std::size_t>(delta_raw);
                if (tab(delta, col ^ 1u) == static_cast<std::int32_t>(gamma))
                    set(delta, col ^ 1u, -1);
                std::size_t mu = rep(gamma);
                std::size_t nu = rep(delta);
                std::int32_t mu_img = tab(mu, col);
                if (mu_img >= 0) {
                    merge(nu, static_cast<std::size_t>(mu_img), queue);
                } else {
                    std::int32_t nu_pre = tab(nu, col ^ 1u);
                    if (nu_pre >= 0) {
                        merge(mu, static_cast<std::size_t>(nu_pre), queue);
                    } else {
                        set(mu, col, static_cast<std::int32_t>(nu));
                        set(nu, col ^ 1u, static_cast<std::int32_t>(mu));
                    }
                }
            }
        }
    }

    /// Drop dead rows once they dominate the table, renumbering live cosets
    /// in order; alpha is an in/out scan position.
    void maybe_compact(std::size_t& alpha) {
        const std::size_t deadc = num_rows() - alive_;
        if (deadc < (1u << 18) || deadc < alive_) return;
        compact(alpha);
    }

    void compact(std::size_t& alpha) {
        if (num_rows() == alive_) return;
        std::vector<std::int32_t> remap(num_rows(), -1);
        std::size_t next = 0;
        std::size_t new_alpha = 0;
        for (std::size_t c = 0; c < num_rows(); ++c) {
            if (!dead(c)) {
                if (c < alpha) ++new_alpha;
                remap[c] = static_cast<std::int32_t>(next++);
            }
        }
        std::vector<std::int32_t> fresh(next * ncols_, -1);
        for (std::size_t c = 0; c < num_rows(); ++c) {
            if (dead(c)) continue;
            for (std::size_t col = 0; col < ncols_; ++col) {
                std::int32_t v = tab(c, col);
                fresh[static_cast<std::size_t>(remap[c]) * ncols_ + col] =
                    v < 0 ? -1 : remap[static_cast<std::size_t>(v)];
            }
        }
        table_ = std::move(fresh);
        parent_.resize(next);
        std::iota(parent_.begin(), parent_.end(), 0);
        alpha = new_alpha;
    }

    EnumerationResult exceeded() const {
        EnumerationResult r;
        r.closed = false;
        r.cosets_defined = defined_;
        return r;
    }

    EnumerationResult closed_result() {
        EnumerationResult r;
        r.closed = true;
        r.cosets_defined = defined_;
        // Compact into the result table.
        std::vector<std::int32_t> remap(num_rows(), -1);
        std::size_t next = 0;
        for (std::size_t c = 0; c < num_rows(); ++c)
            if (!dead(c)) remap[c] = static_cast<std::int32_t>(next++);
        r.order = next;
        r.table = CosetTable(ngens_, next);
        for (std::size_t c = 0; c < num_rows(); ++c) {
            if (dead(c)) continue;
            for (std::size_t col = 0; col < ncols_; ++col) {
                std::int32_t v = tab(c, col);
                r.table.entry(static_cast<std::size_t>(remap[c]), col) =
                    v < 0 ? -1 : remap[static_cast<std::size_t>(v)];
            }
        }
        return r;
    }

    std::size_t ngens_;
    std::size_t ncols_;
    std::size_t max_cosets_;
    std::vector<std::vector<std::uint32_t>> relators_;
    std::vector<std::int32_t> table_;
    std::vector<std::size_t> parent_;
    std::size_t defined_ = 0;
    std::size_t alive_ = 0;
};

}  // namespace detail

/// Coset enumeration of the presentation over the trivial subgroup. A closed
/// return certifies the group order (the final table is verified against
/// every relator before reporting); hitting the coset limit returns
/// closed = false and certifies nothing.
inline EnumerationResult todd_coxeter(const Presentation& p,
                                      std::size_t max_cosets = 2'000'000) {
    detail::Enumerator e(p, max_cosets);
    EnumerationResult r = e.run();
    if (r.closed && !table_satisfies(p, r.table))
        throw std::logic_error("todd_coxeter: closed table failed relator verification");
    return r;
}

}  // namespace braidcov
