#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ncp4/errors.hpp"
#include "ncp4/ring/series.hpp"

namespace ncp4 {

using SymbolWord = std::vector<std::string>;

/// Polynomial in noncommuting named symbols. The empty word is the unit.
template <Scalar T>
class WordPoly {
 public:
  using Terms = std::map<SymbolWord, T>;

  WordPoly() = default;

  static WordPoly symbol(const std::string& name) { return term({name}, T(1)); }
  static WordPoly constant(const T& c) { return term({}, c); }
  static WordPoly term(SymbolWord w, const T& c) {
    WordPoly p;
    p.add(std::move(w), c);
    return p;
  }

  /// Product of symbols in the given order, e.g. word({"p","q","p"}).
  static WordPoly word(const SymbolWord& w) { return term(w, T(1)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  T coefficient(const SymbolWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add(SymbolWord w, const T& c) {
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) it->second += c;
    if (ScalarTraits<T>::is_zero(it->second)) terms_.erase(it);
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
  }

  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.terms_ == b.terms_; }

  WordPoly& operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WordPoly& operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator-(const WordPoly& a) { return a * T(-1); }

  friend WordPoly operator*(const WordPoly& a, const T& s) {
    WordPoly r;
    if (ScalarTraits<T>::is_zero(s)) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, c * s);
    return r;
  }
  friend WordPoly operator*(const T& s, const WordPoly& a) { return a * s; }

  friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {
    WordPoly r;
    for (const auto& [u, x] : a.terms_)
      for (const auto& [v, y] : b.terms_) {
        SymbolWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        r.add(std::move(w), x * y);
      }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += ScalarTraits<T>::str(c);
      for (const auto& x : w) s += "*" + x;
    }
    return s;
  }

 private:
  Terms terms_;
};

template <Scalar T>
using Assignment = std::map<std::string, Series<T>>;

/// Sum of coefficient times the product of assigned series in word order.
template <Scalar T>
Series<T> eval(const WordPoly<T>& p, const Assignment<T>& as) {
  if (as.empty()) throw UnassignedSymbol("empty assignment");
  const std::size_t d = as.begin()->second.dim();
  int order = as.begin()->second.order();
  for (const auto& [k, v] : as) {
    if (v.dim() != d) throw DimensionMismatch("assigned series differ in dimension at '" + k + "'");
    order = std::min(order, v.order());
  }
  Series<T> r = Series<T>::zero(d, order);
  for (const auto& [w, c] : p.terms()) {
    Series<T> x = Series<T>::identity(d, order);
    for (const auto& sym : w) {
      auto it = as.find(sym);
      if (it == as.end()) throw UnassignedSymbol("symbol '" + sym + "' has no value");
      x = x * it->second;
    }
    r += x * c;
  }
  return r;
}

/// For each occurrence w = u x v emits v u.
template <Scalar T>
WordPoly<T> cyclic_gradient(const WordPoly<T>& p, const std::string& x) {
  WordPoly<T> r;
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == x) {
        SymbolWord g(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        g.insert(g.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        r.add(std::move(g), c);
      }
  return r;
}

/// For each occurrence w = u x v emits u v. Commutatively this is the ordinary partial.
template <Scalar T>
WordPoly<T> occurrence_derivative(const WordPoly<T>& p, const std::string& x) {
  WordPoly<T> r;
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == x) {
        SymbolWord g = w;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        r.add(std::move(g), c);
      }
  return r;
}

/// Replaces every occurrence of x by q.
template <Scalar T>
WordPoly<T> substitute(const WordPoly<T>& p, const std::string& x, const WordPoly<T>& q) {
  WordPoly<T> r;
  for (const auto& [w, c] : p.terms()) {
    WordPoly<T> acc = WordPoly<T>::constant(c);
    for (const auto& sym : w) acc = acc * (sym == x ? q : WordPoly<T>::symbol(sym));
    r += acc;
  }
  return r;
}

/// Every word rotated to its least rotation; two polynomials with equal
/// cyclic forms have equal traces under every matrix assignment.
template <Scalar T>
WordPoly<T> cyclic_form(const WordPoly<T>& p) {
  WordPoly<T> r;
  for (const auto& [w, c] : p.terms()) {
    SymbolWord best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
      SymbolWord rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      best = std::min(best, rot);
    }
    r.add(std::move(best), c);
  }
  return r;
}

/// Every word sorted; the commutative image.
template <Scalar T>
WordPoly<T> commutative_form(const WordPoly<T>& p) {
  WordPoly<T> r;
  for (const auto& [w, c] : p.terms()) {
    SymbolWord s = w;
    std::sort(s.begin(), s.end());
    r.add(std::move(s), c);
  }
  return r;
}

}  // namespace ncp4
