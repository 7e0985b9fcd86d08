#pragma once

#include <concepts>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace braidcov {

/// Customization point for the scalar rings the linear algebra works over. A
/// specialization must provide zero/one, is_zero, and exact_div (division
/// that is known to leave no remainder; for fields this is plain division).
template <typename T>
struct RingTraits;

template <typename T>
concept ExactRing = requires(const T& a, const T& b) {
    { RingTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
    { RingTraits<T>::exact_div(a, b) } -> std::convertible_to<T>;
    { RingTraits<T>::one() } -> std::convertible_to<T>;
};

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

// Cyclotomic values carry their field order at runtime; zero()/one() default
// to the rational field Q = Q(w_1) and are never mixed into arithmetic with
// higher-order elements (the algorithms derive in-field zeros from entries).
template <>
struct RingTraits<Cyclotomic> {
    static Cyclotomic zero() { return Cyclotomic(1); }
    static Cyclotomic one() { return Cyclotomic(1, Rational(1)); }
    static bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
    static Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b) { return a / b; }
};

template <>
struct RingTraits<Integer> {
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
};

}  // namespace braidcov
