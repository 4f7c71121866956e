// Copyright 2026 The anisonorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "anisonorm/errors.hpp"
#include "anisonorm/exponent.hpp"

namespace anisonorm {

/// Hypothesis sets: the classic Prodi-Serrin class on u (PS), its gradient
/// analogue (BdV), and the one-component criteria T11i ... T15.
enum class Theorem { PS, BdV, T11i, T11ii, T13, T14, T15 };

/// Proof contexts with their own Lemma parameter selection. T14 and T15
/// share one selection (T145).
enum class LemmaContext { T11i, T11ii, T13, T145 };

inline std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::PS: return "PS";
    case Theorem::BdV: return "BdV";
    case Theorem::T11i: return "T11i";
    case Theorem::T11ii: return "T11ii";
    case Theorem::T13: return "T13";
    case Theorem::T14: return "T14";
    case Theorem::T15: return "T15";
  }
  return "?";
}

inline std::string_view context_name(LemmaContext c) {
  switch (c) {
    case LemmaContext::T11i: return "T11i";
    case LemmaContext::T11ii: return "T11ii";
    case LemmaContext::T13: return "T13";
    case LemmaContext::T145: return "T145";
  }
  return "?";
}

namespace detail {
inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}
}  // namespace detail

inline std::optional<Theorem> parse_theorem(std::string_view text) {
  const std::string s = detail::lower(text);
  for (Theorem t : {Theorem::PS, Theorem::BdV, Theorem::T11i, Theorem::T11ii, Theorem::T13,
                    Theorem::T14, Theorem::T15})
    if (s == detail::lower(theorem_name(t))) return t;
  return std::nullopt;
}

inline std::optional<LemmaContext> parse_context(std::string_view text) {
  const std::string s = detail::lower(text);
  if (s == "t11i") return LemmaContext::T11i;
  if (s == "t11ii") return LemmaContext::T11ii;
  if (s == "t13") return LemmaContext::T13;
  if (s == "t145" || s == "t14" || s == "t15") return LemmaContext::T145;
  return std::nullopt;
}

inline LemmaContext context_for(Theorem t) {
  switch (t) {
    case Theorem::T11i: return LemmaContext::T11i;
    case Theorem::T11ii: return LemmaContext::T11ii;
    case Theorem::T13: return LemmaContext::T13;
    case Theorem::T14:
    case Theorem::T15: return LemmaContext::T145;
    default: throw InvalidArgument("the classic criteria have no lemma parameters");
  }
}

/// Exponents of one hypothesis set. Only the exponents the theorem takes as
/// input may be present; the rest are derived by check_spec.
///
///   PS, BdV : s (space), q (time)
///   T11i/ii : alpha, beta
///   T13     : alpha, s            (beta, p derived)
///   T14     : alpha, beta, s, q   (p derived from 1/alpha + 2/beta + 2/p = 2)
///   T15     : alpha, beta, p, s   (q derived from 3/s + 2/q = 1)
template <class T>
struct CriterionSpecT {
  Theorem theorem = Theorem::T11i;
  std::optional<Extended<T>> alpha, beta, s, q, p;
};

/// Parameters (r, theta, a, t) of the anisotropic trilinear estimate.
template <class T>
struct LemmaParamsT {
  LemmaContext context = LemmaContext::T11i;
  Extended<T> r;
  T theta{};
  Extended<T> a;
  Extended<T> t;
};

template <class T>
struct AdmissibilityReportT {
  Theorem theorem = Theorem::T11i;
  bool admissible = false;
  std::vector<std::string> violated_conditions;
  /// Non-fatal remarks, e.g. boundary cases the hypothesis leaves ambiguous.
  std::vector<std::string> notes;
  std::optional<Extended<T>> beta;  // derived (T13)
  std::optional<Extended<T>> p;     // derived (T13, T14)
  std::optional<Extended<T>> q;     // derived (T15)
  std::optional<T> scaling_sum;
  std::optional<LemmaParamsT<T>> lemma;
};

using CriterionSpec = CriterionSpecT<double>;
using LemmaParams = LemmaParamsT<double>;
using AdmissibilityReport = AdmissibilityReportT<double>;
using ExactCriterionSpec = CriterionSpecT<Rational>;
using ExactLemmaParams = LemmaParamsT<Rational>;
using ExactAdmissibilityReport = AdmissibilityReportT<Rational>;

namespace detail {

template <class T>
T absval(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Equality for the equation-type constraints: exact for rationals, relative
/// 1e-12 for doubles.
template <class T>
bool nearly_equal(const std::type_identity_t<T>& a, const std::type_identity_t<T>& b) {
  if constexpr (std::is_floating_point_v<T>) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= 1e-12 * scale;
  } else {
    return a == b;
  }
}

template <class T>
struct ConditionLog {
  AdmissibilityReportT<T>& report;
  bool add(const char* name, bool ok) {
    if (!ok) report.violated_conditions.emplace_back(name);
    return ok;
  }
};

}  // namespace detail

/// 1/alpha + 2/beta + 2/p with 1/inf = 0. Inputs must be >= 1.
template <class T>
T scaling_sum(const Extended<T>& alpha, const Extended<T>& beta, const Extended<T>& p) {
  for (const auto* e : {&alpha, &beta, &p})
    if (e->is_finite() && e->value() < T(1))
      throw InvalidArgument("scaling_sum: exponents must be >= 1");
  return alpha.reciprocal() + T(2) * beta.reciprocal() + T(2) * p.reciprocal();
}

namespace detail {

template <class T>
void require_fields(const CriterionSpecT<T>& spec) {
  const bool has[5] = {spec.alpha.has_value(), spec.beta.has_value(), spec.s.has_value(),
                       spec.q.has_value(), spec.p.has_value()};
  static constexpr const char* names[5] = {"alpha", "beta", "s", "q", "p"};
  bool need[5] = {false, false, false, false, false};
  switch (spec.theorem) {
    case Theorem::PS:
    case Theorem::BdV: need[2] = need[3] = true; break;
    case Theorem::T11i:
    case Theorem::T11ii: need[0] = need[1] = true; break;
    case Theorem::T13: need[0] = need[2] = true; break;
    case Theorem::T14: need[0] = need[1] = need[2] = need[3] = true; break;
    case Theorem::T15: need[0] = need[1] = need[2] = need[4] = true; break;
  }
  const std::string th(theorem_name(spec.theorem));
  for (int i = 0; i < 5; ++i) {
    if (need[i] && !has[i]) throw InvalidArgument(th + " requires exponent " + names[i]);
    if (!need[i] && has[i])
      throw InvalidArgument("exponent " + std::string(names[i]) + " is not an input of " + th);
  }
}

/// 1/alpha + 2/beta < 2 with infinite exponents allowed.
template <class T>
bool below_critical_line(const Extended<T>& alpha, const Extended<T>& beta) {
  if (alpha.is_finite() && beta.is_finite()) {
    const T& a = alpha.value();
    const T& b = beta.value();
    return b + T(2) * a < T(2) * a * b;
  }
  if (alpha.is_infinite() && beta.is_infinite()) return true;
  if (alpha.is_infinite()) return T(1) < beta.value();
  return T(1) < T(2) * alpha.value();
}

}  // namespace detail

namespace detail {

template <class T>
AdmissibilityReportT<T> evaluate_conditions(const CriterionSpecT<T>& spec) {
  detail::require_fields(spec);
  using E = Extended<T>;
  AdmissibilityReportT<T> rep;
  rep.theorem = spec.theorem;
  detail::ConditionLog<T> log{rep};
  const T one(1), two(2), three(3);

  // Every present exponent lives in [1, inf].
  bool in_range = true;
  auto at_least_one = [&](const std::optional<E>& e, const char* name) {
    if (e && e->is_finite() && e->value() < one) in_range = log.add(name, false) && in_range;
  };
  at_least_one(spec.alpha, "1≤α");
  at_least_one(spec.beta, "1≤β");
  at_least_one(spec.s, "1≤s");
  at_least_one(spec.q, "1≤q");
  at_least_one(spec.p, "1≤p");
  if (!in_range) return rep;

  switch (spec.theorem) {
    case Theorem::PS: {
      const E& s = *spec.s;
      const E& q = *spec.q;
      log.add("3<s≤∞", s > E(three));
      bool eq = false;
      if (s.is_finite() && q.is_finite())
        eq = detail::nearly_equal<T>(two * s.value() + three * q.value(), s.value() * q.value());
      else if (s.is_infinite() && q.is_finite())
        eq = detail::nearly_equal<T>(q.value(), two);
      else if (q.is_infinite() && s.is_finite())
        eq = detail::nearly_equal<T>(s.value(), three);
      log.add("2/q+3/s=1", eq);
      break;
    }
    case Theorem::BdV: {
      const E& s = *spec.s;
      const E& q = *spec.q;
      log.add("3/2≤s≤∞", s.is_infinite() || two * s.value() >= three);
      bool eq = false;
      if (s.is_finite() && q.is_finite())
        eq = detail::nearly_equal<T>(two * s.value() + three * q.value(), two * s.value() * q.value());
      else if (s.is_infinite() && q.is_finite())
        eq = detail::nearly_equal<T>(q.value(), one);
      else if (q.is_infinite() && s.is_finite())
        eq = detail::nearly_equal<T>(two * s.value(), three);
      log.add("2/q+3/s=2", eq);
      break;
    }
    case Theorem::T11i: {
      const E& a = *spec.alpha;
      const E& b = *spec.beta;
      log.add("α≤β", a <= b);
      log.add("2<β≤∞", b > E(two));
      rep.scaling_sum = scaling_sum(a, b, E::infinity());
      break;
    }
    case Theorem::T11ii: {
      const E& a = *spec.alpha;
      const E& b = *spec.beta;
      log.add("1/α+2/β<2", detail::below_critical_line(a, b));
      log.add("1<α", a > E(one));
      log.add("α≤β", a <= b);
      log.add("3/2<β≤2", b.is_finite() && two * b.value() > three && b.value() <= two);
      rep.scaling_sum = scaling_sum(a, b, E::infinity());
      break;
    }
    case Theorem::T13: {
      const E& a = *spec.alpha;
      const E& s = *spec.s;
      if (!log.add("1<α<∞", a.is_finite() && a.value() > one)) break;
      const T& al = a.value();
      const bool lower = s.is_infinite() ||
                         (s.value() > three && T(11) * al - T(12) < three * s.value() * (al - one));
      log.add("max{(11α−12)/(3(α−1)),3}<s", lower);
      const bool upper = s.is_finite() && three * s.value() * (al - one) <= T(11) * al - T(10);
      log.add("s≤(11α−10)/(3(α−1))", upper);
      if (lower && upper) {
        const T& sv = s.value();
        rep.beta = E::from_reciprocal(((T(11) * al - T(10)) - three * sv * (al - one)) / (two * al));
        rep.p = E::from_reciprocal(three * (al - one) * (sv - three) / (two * al));
        rep.scaling_sum = scaling_sum(a, *rep.beta, *rep.p);
      }
      break;
    }
    case Theorem::T14: {
      const E& a = *spec.alpha;
      const E& b = *spec.beta;
      const E& s = *spec.s;
      const E& q = *spec.q;
      bool sq = false;
      if (s.is_finite() && q.is_finite())
        sq = three * q.value() + two * s.value() < s.value() * q.value();
      else if (s.is_infinite() && q.is_finite())
        sq = two < q.value();
      else if (q.is_infinite() && s.is_finite())
        sq = three < s.value();
      else
        sq = true;
      log.add("3/s+2/q<1", sq);
      if (!log.add("3/2<β<2", b.is_finite() && two * b.value() > three && b.value() < two)) break;
      const T& bv = b.value();
      const bool lower = a.is_infinite() || bv < a.value() * (two * bv - two);
      log.add("β/(2β−2)<α", lower);
      if (!log.add("α≤β", a <= b) || !lower) break;
      const T& av = a.value();
      if (s.is_infinite()) {
        rep.notes.emplace_back("boundary: ambiguous (s=∞ admitted)");
      } else {
        log.add("(11αβ−10β−2α)/(3(α−1)β)≤s≤∞",
                T(11) * av * bv - T(10) * bv - two * av <= three * s.value() * (av - one) * bv);
      }
      // 1/p = 1 - 1/(2 alpha) - 1/beta from the critical identity.
      const T inv_p = (two * av * bv - bv - two * av) / (two * av * bv);
      if (log.add("1≤p", inv_p >= T(0) && inv_p <= one)) {
        rep.p = E::from_reciprocal(inv_p);
        rep.scaling_sum = scaling_sum(a, b, *rep.p);
      }
      break;
    }
    case Theorem::T15: {
      const E& a = *spec.alpha;
      const E& b = *spec.beta;
      const E& s = *spec.s;
      const E& p = *spec.p;
      if (!log.add("3/2≤β≤2", b.is_finite() && two * b.value() >= three && b.value() <= two)) break;
      const T& bv = b.value();
      const bool lower = a.is_infinite() || bv < a.value() * (two * bv - two);
      log.add("β/(2β−2)<α", lower);
      if (!log.add("α≤β", a <= b) || !lower) break;
      const T& av = a.value();
      log.add("3≤s", s >= E(three));
      log.add("s≤(9αβ−6β−6α)/((α−1)β)",
              s.is_finite() && s.value() * (av - one) * bv <= T(9) * av * bv - T(6) * bv - T(6) * av);
      bool sub = false;
      if (p.is_infinite())
        sub = bv + two * av < two * av * bv;
      else
        sub = bv * p.value() + two * av * p.value() + two * av * bv < two * av * bv * p.value();
      log.add("1/α+2/β+2/p<2", sub);
      if (s.is_infinite())
        rep.q = E(two);
      else if (s.value() >= three)
        rep.q = E::from_reciprocal((s.value() - three) / (two * s.value()));
      rep.scaling_sum = scaling_sum(a, b, p);
      break;
    }
  }
  rep.admissible = rep.violated_conditions.empty();
  return rep;
}

}  // namespace detail

/// Inputs of derive_lemma_params. For T11i / T11ii the inner exponent s is
/// fixed (2 and 3); for T13 beta is derived from (alpha, s).
template <class T>
struct LemmaInputsT {
  Extended<T> alpha;
  std::optional<Extended<T>> beta;
  std::optional<Extended<T>> s;
};

using LemmaInputs = LemmaInputsT<double>;
using ExactLemmaInputs = LemmaInputsT<Rational>;

namespace detail {

template <class T>
[[noreturn]] void inadmissible(LemmaContext c, const std::vector<std::string>& violated) {
  throw PreconditionError("exponents are not admissible for " + std::string(context_name(c)) +
                          ": violated " + (violated.empty() ? std::string("?") : violated.front()));
}

/// First violated condition of the T14 or T15 exponent ranges for (alpha, beta, s),
/// or nullopt when the triple lies in either range.
template <class T>
std::optional<std::string> t145_violation(const T& al, const T& be, const T& s) {
  const T one(1), two(2), three(3);
  std::optional<std::string> first14, first15;
  auto note = [](std::optional<std::string>& slot, bool ok, const char* name) {
    if (!ok && !slot) slot = name;
  };
  // T14 ranges
  note(first14, two * be > three && be < two, "3/2<β<2");
  note(first14, be < al * (two * be - two), "β/(2β−2)<α");
  note(first14, al <= be, "α≤β");
  note(first14, al > one && T(11) * al * be - T(10) * be - two * al <= three * s * (al - one) * be,
       "(11αβ−10β−2α)/(3(α−1)β)≤s");
  // T15 ranges
  note(first15, two * be >= three && be <= two, "3/2≤β≤2");
  note(first15, be < al * (two * be - two), "β/(2β−2)<α");
  note(first15, al <= be, "α≤β");
  note(first15, s >= three, "3≤s");
  note(first15, al > one && s * (al - one) * be <= T(9) * al * be - T(6) * be - T(6) * al,
       "s≤(9αβ−6β−6α)/((α−1)β)");
  if (!first14 || !first15) return std::nullopt;
  return first14;
}

}  // namespace detail

/// Closed-form (r, theta, a, t) for a proof context.
///
/// Formulas are evaluated through reciprocals so that infinite exponents
/// (beta = inf, t = inf when alpha = beta, a = inf when alpha = 1) come out
/// exactly instead of as inf/inf.
template <class T>
LemmaParamsT<T> derive_lemma_params(LemmaContext context, const LemmaInputsT<T>& in) {
  using E = Extended<T>;
  const T one(1), two(2), three(3);
  LemmaParamsT<T> out;
  out.context = context;
  switch (context) {
    case LemmaContext::T11i:
    case LemmaContext::T11ii: {
      const bool first = context == LemmaContext::T11i;
      const T fixed_s = first ? two : three;
      if (!in.beta) throw InvalidArgument("context requires beta");
      if (in.s && !(*in.s == E(fixed_s)))
        throw InvalidArgument(std::string("the inner exponent s is fixed to ") + (first ? "2" : "3") +
                              " in this context");
      CriterionSpecT<T> spec{first ? Theorem::T11i : Theorem::T11ii, in.alpha, in.beta, {}, {}, {}};
      auto rep = detail::evaluate_conditions(spec);
      if (!rep.admissible) detail::inadmissible<T>(context, rep.violated_conditions);
      const T ia = in.alpha.reciprocal();
      const T ib = in.beta->reciprocal();
      const T shared = one + ib - ia;  // (alpha beta + alpha - beta) / (alpha beta)
      if (first) {
        out.r = E::from_reciprocal(shared / (three - two * ia));
        out.theta = (ia - ib) / ((one - ib) + (one - ia));  // grouped so alpha = 1 gives exactly 1
      } else {
        out.r = E::from_reciprocal(shared / (T(4) - three * ia));
        out.theta = (ia - ib) / ((one - ib) + two * (one - ia));
      }
      if (ia == one) {
        // alpha = 1: shared = 1/beta cancels, which keeps beta = inf finite.
        out.a = E::infinity();
        out.t = E::from_reciprocal(one - ib);
      } else {
        out.a = E::from_reciprocal((one - ia) / shared);
        out.t = E::from_reciprocal(ib * (ia - ib) / shared);
      }
      break;
    }
    case LemmaContext::T13: {
      if (!in.s) throw InvalidArgument("context T13 requires s");
      CriterionSpecT<T> spec{Theorem::T13, in.alpha, {}, in.s, {}, {}};
      auto rep = detail::evaluate_conditions(spec);
      if (!rep.admissible) detail::inadmissible<T>(context, rep.violated_conditions);
      if (in.beta) {
        const bool same = in.beta->is_infinite() == rep.beta->is_infinite() &&
                          (rep.beta->is_infinite() ||
                           detail::nearly_equal<T>(in.beta->value(), rep.beta->value()));
        if (!same) throw PreconditionError("beta does not match the value derived from (alpha, s)");
      }
      const T& al = in.alpha.value();
      const T& s = in.s->value();
      const T d_beta = (T(11) * al - T(10)) - three * s * (al - one);  // 2 alpha / beta
      const T d_theta = three * s * (al - one) - T(11) * al + T(12);
      const T d_r = (T(13) * al - T(12)) - three * s * (al - one);
      out.r = E((two * s * (al - one) + two * al) / d_r);
      out.theta = d_theta / (T(5) * s * (al - one) - T(11) * al + T(12));
      out.a = E(d_r / (two * (al - one)));
      out.t = E::from_reciprocal(d_beta * d_theta / (two * al * d_r));
      break;
    }
    case LemmaContext::T145: {
      if (!in.beta || !in.s) throw InvalidArgument("context T145 requires beta and s");
      if (in.alpha.is_infinite() || in.beta->is_infinite() || in.s->is_infinite())
        throw PreconditionError("context T145 needs finite alpha, beta and s");
      const T& al = in.alpha.value();
      const T& be = in.beta->value();
      const T& s = in.s->value();
      if (auto v = detail::t145_violation(al, be, s)) detail::inadmissible<T>(context, {*v});
      const T n = al * be + al - be;
      out.r = E((s * al + al - s) * be / n);
      out.theta = (be - al) / (s * al * be - s * be - al + be);
      out.a = E::from_reciprocal((al - one) * be / n);
      out.t = E::from_reciprocal((be - al) / (n * be));
      break;
    }
  }
  return out;
}

/// The exponent triple (alpha, beta, s) a lemma parameter set refers to.
template <class T>
struct ContextExponentsT {
  Extended<T> alpha, beta, s;
};

/// Resolves fixed and derived exponents of a context (s = 2 / 3 for T11,
/// derived beta for T13).
template <class T>
ContextExponentsT<T> context_exponents(LemmaContext context, const LemmaInputsT<T>& in) {
  using E = Extended<T>;
  switch (context) {
    case LemmaContext::T11i: return {in.alpha, *in.beta, E(T(2))};
    case LemmaContext::T11ii: return {in.alpha, *in.beta, E(T(3))};
    case LemmaContext::T13: {
      CriterionSpecT<T> spec{Theorem::T13, in.alpha, {}, in.s, {}, {}};
      auto rep = detail::evaluate_conditions(spec);
      if (!rep.admissible) detail::inadmissible<T>(context, rep.violated_conditions);
      return {in.alpha, *rep.beta, *in.s};
    }
    case LemmaContext::T145: return {in.alpha, *in.beta, *in.s};
  }
  throw InvalidArgument("unknown context");
}

/// Evaluates every inequality of the named hypothesis set, derives the
/// dependent exponents and, for the one-component criteria, the lemma
/// parameters. Inadmissible input yields admissible = false, never a throw;
/// only a structurally invalid spec (missing or extra exponents) throws.
template <class T>
AdmissibilityReportT<T> check_spec(const CriterionSpecT<T>& spec) {
  AdmissibilityReportT<T> rep = detail::evaluate_conditions(spec);
  if (!rep.admissible || spec.theorem == Theorem::PS || spec.theorem == Theorem::BdV) return rep;
  if (spec.theorem == Theorem::T14 && spec.s->is_infinite()) {
    rep.notes.emplace_back("lemma parameters need finite s");
    return rep;
  }
  LemmaInputsT<T> in{*spec.alpha, spec.beta, spec.s};
  if (spec.theorem == Theorem::T11i || spec.theorem == Theorem::T11ii) in.s.reset();
  if (spec.theorem == Theorem::T13) in.beta = rep.beta;
  try {
    rep.lemma = derive_lemma_params(context_for(spec.theorem), in);
  } catch (const PreconditionError& e) {
    rep.notes.emplace_back(e.what());
  }
  return rep;
}

/// (1-theta)/s + theta(1-alpha)/alpha - (alpha-1)/(alpha(r-1)), in absolute value.
template <class T>
T interpolation_balance_residual(const Extended<T>& alpha, const Extended<T>& s, const T& theta,
                                 const Extended<T>& r) {
  const T one(1);
  const T ia = alpha.reciprocal();
  const T ir = r.reciprocal();
  const T lhs = (one - theta) * s.reciprocal() + theta * (ia - one);
  const T rhs = (one - ia) * ir / (one - ir);
  return detail::absval(T(lhs - rhs));
}

/// The interpolation condition in its original form,
/// 1/((r-1)alpha) + theta/alpha = (1-theta)/(s(alpha-1)); needs alpha > 1.
template <class T>
T interpolation_condition_residual(const Extended<T>& alpha, const Extended<T>& s, const T& theta,
                                   const Extended<T>& r) {
  const T one(1);
  const T ia = alpha.reciprocal();
  if (ia == one) throw InvalidArgument("interpolation condition is undefined at alpha = 1");
  const T ir = r.reciprocal();
  const T lhs = ia * ir / (one - ir) + theta * ia;
  const T rhs = (one - theta) * s.reciprocal() * ia / (one - ia);
  return detail::absval(T(lhs - rhs));
}

/// Absolute residuals of the four parameter identities
///   theta(r-1)t = beta,  (1-theta)(r-1)a = s,  1/a + 1/t = (beta-1)/beta,
///   (1-theta)/s + theta(1-alpha)/alpha = (alpha-1)/(alpha(r-1)).
/// The first is vacuous when theta = 0 and the second when theta = 1; both are
/// reported as 0 then.
template <class T>
std::array<T, 4> lemma_identity_residuals(const LemmaParamsT<T>& p, const Extended<T>& alpha,
                                          const Extended<T>& beta, const Extended<T>& s) {
  const T zero(0), one(1);
  const T& th = p.theta;
  const T ir = p.r.reciprocal();
  std::array<T, 4> res{zero, zero, zero, zero};
  if (!(th == zero)) {
    if (p.r.is_finite() && p.t.is_finite() && beta.is_finite())
      res[0] = detail::absval(T(th * (p.r.value() - one) * p.t.value() - beta.value()));
    else
      res[0] = detail::absval(T(th * (one - ir) * beta.reciprocal() - ir * p.t.reciprocal()));
  }
  if (!(th == one)) {
    if (p.r.is_finite() && p.a.is_finite() && s.is_finite())
      res[1] = detail::absval(T((one - th) * (p.r.value() - one) * p.a.value() - s.value()));
    else
      res[1] = detail::absval(T((one - th) * (one - ir) * s.reciprocal() - ir * p.a.reciprocal()));
  }
  res[2] = detail::absval(T(p.a.reciprocal() + p.t.reciprocal() - (one - beta.reciprocal())));
  res[3] = interpolation_balance_residual(alpha, s, th, p.r);
  return res;
}

/// Violated hypotheses of the trilinear estimate for a parameter set:
/// ranges of every exponent plus the two balance conditions to `tol`.
template <class T>
std::vector<std::string> lemma_hypothesis_violations(const LemmaParamsT<T>& p, const Extended<T>& alpha,
                                                     const Extended<T>& beta, const Extended<T>& s,
                                                     double tol = 1e-10) {
  using E = Extended<T>;
  const T zero(0), one(1), two(2);
  std::vector<std::string> v;
  auto need = [&](bool ok, const char* name) {
    if (!ok) v.emplace_back(name);
  };
  need(alpha >= E(one), "1≤α≤∞");
  need(beta >= E(one), "1≤β≤∞");
  need(s >= E(one), "1≤s≤∞");
  need(p.a >= E(one), "1≤a≤∞");
  need(p.t >= E(one), "1≤t≤∞");
  need(p.r > E(two), "2<r≤∞");
  need(p.theta >= zero && p.theta <= one, "0≤θ≤1");
  auto res = lemma_identity_residuals(p, alpha, beta, s);
  need(to_double(res[2]) <= tol, "1/a+1/t=(β−1)/β");
  need(to_double(res[3]) <= tol, "1/((r−1)α)+θ/α=(1−θ)/(s(α−1))");
  return v;
}

/// Admissible alpha-interval of the epsilon construction for T14 / T15,
/// together with the paired s at the interval midpoint.
struct EpsilonFamily {
  Theorem theorem = Theorem::T14;
  double beta = 0, epsilon = 0;
  double alpha_min = 0, alpha_max = 0;
  bool min_inclusive = false;
  bool admissible = false;
  double alpha_mid = 0;
  double s_mid = 0;
  double slack_residual_mid = 0;
};

/// s paired with alpha by the epsilon construction.
inline double epsilon_family_s(Theorem th, double alpha, double beta, double eps) {
  if (th == Theorem::T14)
    return (alpha * beta - 2 * beta + 2 * alpha) / ((1 - eps) * (alpha - 1) * beta);
  if (th == Theorem::T15)
    return ((1 + eps) * alpha * beta - 2 * beta + 2 * alpha) / ((alpha - 1) * beta);
  throw InvalidArgument("epsilon family exists for T14 and T15 only");
}

/// |slack(alpha, beta, s) - target(eps)| of the Gronwall exponent identity:
///   T14: 3/s + (3αβs−11αβ−3βs+10β+2α)/(4(α−1)βs) = 1 − ε/4
///   T15: 1/α + 2/β + (9αβ−αβs+βs−6β−6α)/(4αβ) = 2 − ε/4
inline double epsilon_slack_residual(Theorem th, double a, double b, double s, double eps) {
  if (th == Theorem::T14) {
    const double lhs =
        3 / s + (3 * a * b * s - 11 * a * b - 3 * b * s + 10 * b + 2 * a) / (4 * (a - 1) * b * s);
    return std::abs(lhs - (1 - eps / 4));
  }
  if (th == Theorem::T15) {
    const double lhs = 1 / a + 2 / b + (9 * a * b - a * b * s + b * s - 6 * b - 6 * a) / (4 * a * b);
    return std::abs(lhs - (2 - eps / 4));
  }
  throw InvalidArgument("epsilon family exists for T14 and T15 only");
}

inline EpsilonFamily epsilon_family(Theorem th, double beta, double eps) {
  EpsilonFamily fam;
  fam.theorem = th;
  fam.beta = beta;
  fam.epsilon = eps;
  const double floor_alpha = beta / (2 * beta - 2);  // strict lower bound from the hypothesis
  if (th == Theorem::T14) {
    if (!(beta > 1.5 && beta < 2)) throw InvalidArgument("T14 epsilon family needs 3/2 < beta < 2");
    const double cap = std::min(0.4, (8 * beta - 12) / (11 * beta - 12));
    if (!(eps > 0 && eps < cap))
      throw InvalidArgument("epsilon must satisfy 0 < epsilon < min{4/10, (8β−12)/(11β−12)} = " +
                            format_double(cap));
    const double den = (8 - 11 * eps) * beta + 2 * eps - 8;
    const double upper = den > 0 ? (4 - 10 * eps) * beta / den : beta;
    fam.alpha_min = floor_alpha;
    fam.min_inclusive = false;
    fam.alpha_max = std::min(upper, beta);
  } else if (th == Theorem::T15) {
    if (!(beta >= 1.5 && beta <= 2)) throw InvalidArgument("T15 epsilon family needs 3/2 <= beta <= 2");
    const double cap = std::min(2.0 / 9.0, (2 * beta - 2) / beta);
    if (!(eps > 0 && eps < cap))
      throw InvalidArgument("epsilon must satisfy 0 < epsilon < min{2/9, (2β−2)/β} = " +
                            format_double(cap));
    const double lo = 4 * beta / ((8 - eps) * beta - 8);
    const double den = (2 - eps) * beta - 2;
    const double upper = den > 0 ? beta / den : beta;
    if (lo > floor_alpha) {
      fam.alpha_min = lo;
      fam.min_inclusive = true;
    } else {
      fam.alpha_min = floor_alpha;
      fam.min_inclusive = false;
    }
    fam.alpha_max = std::min(upper, beta);
  } else {
    throw InvalidArgument("epsilon family exists for T14 and T15 only");
  }
  fam.admissible = fam.min_inclusive ? fam.alpha_min <= fam.alpha_max : fam.alpha_min < fam.alpha_max;
  if (fam.admissible) {
    fam.alpha_mid = 0.5 * (fam.alpha_min + fam.alpha_max);
    fam.s_mid = epsilon_family_s(th, fam.alpha_mid, beta, eps);
    fam.slack_residual_mid = epsilon_slack_residual(th, fam.alpha_mid, beta, fam.s_mid, eps);
  }
  return fam;
}

/// Converts an exact report's exponent to floating point.
template <class T>
Exponent to_exponent(const Extended<T>& e) {
  if constexpr (std::is_same_v<T, double>)
    return e;
  else
    return to_double(e);
}

inline LemmaParams to_double(const ExactLemmaParams& p) {
  return LemmaParams{p.context, to_double(p.r), to_double(p.theta), to_double(p.a), to_double(p.t)};
}

}  // namespace anisonorm
