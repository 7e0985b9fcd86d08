#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace braidcov {

/// Point of projective space: a nonzero homogeneous coordinate vector over an
/// exact scalar field. Equality means proportionality, decided exactly by
/// cross products (no divisions).
template <typename T>
class ProjectivePointT {
public:
    explicit ProjectivePointT(std::vector<T> coords) : x_(std::move(coords)) {
        if (x_.empty()) throw std::invalid_argument("ProjectivePoint: empty coordinates");
        bool all_zero = true;
        for (const auto& c : x_)
            if (!RingTraits<T>::is_zero(c)) {
                all_zero = false;
                break;
            }
        if (all_zero) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
    }

    std::size_t dim() const { return x_.size() - 1; }
    const std::vector<T>& coords() const { return x_; }
    const T& operator[](std::size_t i) const { return x_[i]; }

    friend bool operator==(const ProjectivePointT& a, const ProjectivePointT& b) {
        if (a.x_.size() != b.x_.size()) return false;
        for (std::size_t i = 0; i < a.x_.size(); ++i)
            for (std::size_t j = i + 1; j < a.x_.size(); ++j) {
                T cross = a.x_[i] * b.x_[j] - a.x_[j] * b.x_[i];
                if (!RingTraits<T>::is_zero(cross)) return false;
            }
        return true;
    }
    friend bool operator!=(const ProjectivePointT& a, const ProjectivePointT& b) {
        return !(a == b);
    }

    /// Canonical representative: coordinates divided by the first nonzero one.
    ProjectivePointT normalized() const {
        std::size_t k = 0;
        while (RingTraits<T>::is_zero(x_[k])) ++k;
        std::vector<T> c;
        c.reserve(x_.size());
        for (const auto& v : x_) c.push_back(RingTraits<T>::exact_div(v, x_[k]));
        return ProjectivePointT(std::move(c));
    }

    /// Coordinate-wise b-th power (the abelian self-covering of P^n).
    ProjectivePointT power_map(unsigned b) const {
        if (b == 0) throw std::invalid_argument("power_map: exponent must be positive");
        std::vector<T> c;
        c.reserve(x_.size());
        for (const auto& v : x_) {
            T p = v;
            for (unsigned k = 1; k < b; ++k) p = p * v;
            c.push_back(p);
        }
        return ProjectivePointT(std::move(c));
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (i) out += " : ";
            out += x_[i].str();
        }
        return out + "]";
    }

private:
    std::vector<T> x_;
};

using ProjectivePoint = ProjectivePointT<Rational>;
using CyclotomicPoint = ProjectivePointT<Cyclotomic>;

inline ProjectivePoint p1_point(long u, long v) {
    return ProjectivePoint({Rational(u), Rational(v)});
}

}  // namespace braidcov
