#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ncp4/painleve/p4.hpp"

namespace ncp4 {

enum class Gen { s0, s1, s2, pi };

/// A word in the generators. Words act as automorphisms: the leftmost
/// letter is applied to the state first, so "pi s2 s1" means pi, then s2,
/// then s1. With this reading pi s_i = s_{i+1} pi holds on the nose.
using Word = std::vector<Gen>;

inline std::string to_string(Gen g) {
  switch (g) {
    case Gen::s0: return "s0";
    case Gen::s1: return "s1";
    case Gen::s2: return "s2";
    case Gen::pi: return "pi";
  }
  return "?";
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
  return s;
}

/// Parses space-separated letters ("s0 s1 pi"); "id" or "" is the empty word.
inline Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "s0") w.push_back(Gen::s0);
    else if (tok == "s1") w.push_back(Gen::s1);
    else if (tok == "s2") w.push_back(Gen::s2);
    else if (tok == "pi") w.push_back(Gen::pi);
    else if (tok != "id") throw ScenarioError("unknown generator '" + tok + "'");
  }
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word power(const Word& w, int k) {
  Word r;
  for (int i = 0; i < k; ++i) r = concat(r, w);
  return r;
}

/// s_i^{-1} = s_i, pi^{-1} = pi pi.
inline Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == Gen::pi) {
      r.push_back(Gen::pi);
      r.push_back(Gen::pi);
    } else {
      r.push_back(*it);
    }
  }
  return r;
}

/// T1 = pi s2 s1, T2 = s1 pi s2, T3 = s2 s1 pi.
inline Word translation_word(int which) {
  switch (which) {
    case 1: return {Gen::pi, Gen::s2, Gen::s1};
    case 2: return {Gen::s1, Gen::pi, Gen::s2};
    case 3: return {Gen::s2, Gen::s1, Gen::pi};
  }
  throw ScenarioError("translation index must be 1, 2 or 3");
}

/// One generator. s_i sends alpha_i -> -alpha_i, alpha_{i+-1} -> alpha_{i+-1} + alpha_i
/// and f_{i+1} += alpha_i f_i^{-1}, f_{i+2} -= alpha_i f_i^{-1}; pi rotates both triples.
template <Scalar T>
P4State<T> backlund_apply(Gen g, const P4State<T>& s) {
  if (s.a != T(1)) throw InconsistentParameters("Backlund generators are defined for a = 1");
  P4State<T> r = s;
  if (g == Gen::pi) {
    for (std::size_t i = 0; i < 3; ++i) {
      r.f[i] = s.f[(i + 1) % 3];
      r.alpha[i] = s.alpha[i + 1];
    }
    return r;
  }
  const std::size_t i = static_cast<std::size_t>(g);
  const T ai = s.alpha[i];
  r.alpha[i] = -ai;
  r.alpha[i + 1] = s.alpha[i + 1] + ai;
  r.alpha[i + 2] = s.alpha[i + 2] + ai;
  if (ScalarTraits<T>::is_zero(ai)) return r;
  if (!has_invertible_constant_term(s.f[i]))
    throw NonInvertiblePivot("f" + std::to_string(i) + " has a singular constant term under " + to_string(g));
  const Series<T> shift = inv(s.f[i]) * ai;
  r.f[(i + 1) % 3] = s.f[(i + 1) % 3] + shift;
  r.f[(i + 2) % 3] = s.f[(i + 2) % 3] - shift;
  return r;
}

template <Scalar T>
P4State<T> backlund_apply(const Word& w, P4State<T> s) {
  for (Gen g : w) s = backlund_apply(g, s);
  return s;
}

/// T_which^k; negative k uses the inverse word.
template <Scalar T>
P4State<T> translation_apply(int which, int k, const P4State<T>& s) {
  const Word w = translation_word(which);
  return backlund_apply(k >= 0 ? power(w, k) : power(inverse(w), -k), s);
}

struct RelationCheck {
  std::string name;
  Word lhs, rhs;
};

/// The defining relations of the extended affine Weyl group, each as a pair
/// of words that must act identically.
inline std::vector<RelationCheck> weyl_relations() {
  std::vector<RelationCheck> out;
  const Gen s[3] = {Gen::s0, Gen::s1, Gen::s2};
  for (int i = 0; i < 3; ++i) {
    out.push_back({to_string(s[i]) + "^2 = id", {s[i], s[i]}, {}});
    out.push_back({"(" + to_string(s[i]) + " " + to_string(s[(i + 1) % 3]) + ")^3 = id",
                   power({s[i], s[(i + 1) % 3]}, 3), {}});
    out.push_back({"pi " + to_string(s[i]) + " = " + to_string(s[(i + 1) % 3]) + " pi",
                   {Gen::pi, s[i]}, {s[(i + 1) % 3], Gen::pi}});
  }
  out.push_back({"pi^3 = id", {Gen::pi, Gen::pi, Gen::pi}, {}});
  out.push_back({"T1 T2 T3 = id",
                 concat(concat(translation_word(1), translation_word(2)), translation_word(3)), {}});
  return out;
}

}  // namespace ncp4
