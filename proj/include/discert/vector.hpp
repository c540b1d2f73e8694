#ifndef DISCERT_VECTOR_HPP
#define DISCERT_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "discert/rational.hpp"

namespace discert {

// Fixed-dimension vector of exact rationals. Dimension is set at
// construction; mixing dimensions raises DimensionMismatch.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Rational> vals) : entries_(vals) {}
  explicit Vector(std::vector<Rational> vals) : entries_(std::move(vals)) {}

  std::size_t dimension() const { return entries_.size(); }

  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  Rational dot(const Vector& o) const {
    check_same_dimension(o);
    Rational acc;
    for (std::size_t i = 0; i < entries_.size(); ++i) acc += entries_[i] * o.entries_[i];
    return acc;
  }

  Vector operator+(const Vector& o) const {
    check_same_dimension(o);
    Vector r(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) r[i] = entries_[i] + o[i];
    return r;
  }
  Vector operator-(const Vector& o) const {
    check_same_dimension(o);
    Vector r(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) r[i] = entries_[i] - o[i];
    return r;
  }
  Vector operator-() const {
    Vector r(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) r[i] = -entries_[i];
    return r;
  }
  friend Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.dimension());
    for (std::size_t i = 0; i < v.dimension(); ++i) r[i] = s * v[i];
    return r;
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.entries_ == b.entries_;
  }
  // Lexicographic order, first coordinate most significant. Used for all
  // deterministic tie-breaks.
  friend bool operator<(const Vector& a, const Vector& b) {
    a.check_same_dimension(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ", ";
      s += entries_[i].str();
    }
    return s + ")";
  }

 private:
  void check_same_dimension(const Vector& o) const {
    if (entries_.size() != o.entries_.size())
      throw DimensionMismatch("vector dimension mismatch: " +
                              std::to_string(entries_.size()) + " vs " +
                              std::to_string(o.entries_.size()));
  }

  std::vector<Rational> entries_;
};

}  // namespace discert

#endif
