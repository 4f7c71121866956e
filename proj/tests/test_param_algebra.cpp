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

#include <gtest/gtest.h>

#include <random>

#include "anisonorm/params.hpp"
#include "anisonorm/region.hpp"
#include "param_samplers.hpp"

namespace an = anisonorm;
using an::ExactExponent;
using an::Exponent;
using an::LemmaContext;
using an::Rational;
using an::Theorem;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }
const Exponent inf = Exponent::infinity();
const ExactExponent qinf = ExactExponent::infinity();

/// Parameter selections written exactly as printed, valid for finite
/// exponents with alpha != beta and alpha > 1.
struct DirectForm {
  Rational r, theta, a, t;
};

DirectForm direct(LemmaContext c, const Rational& al, const Rational& be, const Rational& s) {
  switch (c) {
    case LemmaContext::T11i:
      return {be * (3 * al - 2) / (al * (be + 1) - be), (be - al) / (2 * al * be - al - be),
              (al * be + al - be) / (al * be - be), be * (al * be + al - be) / (be - al)};
    case LemmaContext::T11ii:
      return {be * (4 * al - 3) / (al * (be + 1) - be), (be - al) / (3 * al * be - al - 2 * be),
              (al * be + al - be) / (al * be - be), be * (al * be + al - be) / (be - al)};
    case LemmaContext::T13: {
      const Rational d1 = (11 * al - 10) - 3 * s * (al - 1);
      const Rational d3 = (13 * al - 12) - 3 * s * (al - 1);
      const Rational d2 = 3 * s * (al - 1) - 11 * al + 12;
      return {(2 * s * (al - 1) + 2 * al) / d3, d2 / (5 * s * (al - 1) - 11 * al + 12), d3 / (2 * (al - 1)),
              2 * al * d3 / (d1 * d2)};
    }
    case LemmaContext::T145:
      return {(s * al + al - s) * be / (al * be + al - be), (be - al) / (s * al * be - s * be - al + be),
              (al * be + al - be) / ((al - 1) * be), (al * be + al - be) * be / (be - al)};
  }
  return {};
}

}  // namespace

TEST(ScalingSum, Examples) {
  EXPECT_EQ(an::scaling_sum<Rational>(q(2), q(8, 3), q(8, 3)), q(2));
  EXPECT_EQ(an::scaling_sum<double>(inf, inf, inf), 0.0);
  EXPECT_EQ(an::scaling_sum<double>(1.0, 2.0, 2.0), 3.0);
  EXPECT_THROW(an::scaling_sum<double>(0.5, 2.0, 2.0), an::InvalidArgument);
}

TEST(CheckSpec, PaperAndDerivedExamples) {
  auto r1 = an::check_spec(an::CriterionSpec{Theorem::T11i, 3.0, 3.0, {}, {}, {}});
  EXPECT_TRUE(r1.admissible);

  auto r2 = an::check_spec(an::ExactCriterionSpec{Theorem::T13, ExactExponent(q(2)), {}, ExactExponent(q(7, 2)), {}, {}});
  ASSERT_TRUE(r2.admissible);
  EXPECT_EQ(r2.beta->value(), q(8, 3));
  EXPECT_EQ(r2.p->value(), q(8, 3));
  EXPECT_EQ(*r2.scaling_sum, q(2));
  ASSERT_TRUE(r2.lemma.has_value());
  EXPECT_EQ(r2.lemma->r.value(), q(22, 7));

  auto r3 = an::check_spec(an::CriterionSpec{Theorem::T11ii, 3.0, 2.0, {}, {}, {}});
  EXPECT_FALSE(r3.admissible);
  ASSERT_EQ(r3.violated_conditions.size(), 1u);
  EXPECT_EQ(r3.violated_conditions[0], "α≤β");
}

TEST(CheckSpec, StructuralErrorsThrowButInadmissibleNeverDoes) {
  EXPECT_THROW(an::check_spec(an::CriterionSpec{Theorem::T13, 2.0, 3.0, 3.5, {}, {}}), an::InvalidArgument);
  EXPECT_THROW(an::check_spec(an::CriterionSpec{Theorem::T14, 2.0, 1.8, {}, {}, {}}), an::InvalidArgument);
  EXPECT_NO_THROW(an::check_spec(an::CriterionSpec{Theorem::T13, 0.5, {}, 1e9, {}, {}}));
  auto r = an::check_spec(an::CriterionSpec{Theorem::T11i, 0.5, 3.0, {}, {}, {}});
  EXPECT_FALSE(r.admissible);
  EXPECT_EQ(r.violated_conditions[0], "1≤α");
}

TEST(CheckSpec, ClassicCriteria) {
  EXPECT_TRUE(an::check_spec(an::CriterionSpec{Theorem::PS, {}, {}, 6.0, 4.0, {}}).admissible);
  EXPECT_TRUE(an::check_spec(an::CriterionSpec{Theorem::PS, {}, {}, inf, 2.0, {}}).admissible);
  EXPECT_FALSE(an::check_spec(an::CriterionSpec{Theorem::PS, {}, {}, 3.0, inf, {}}).admissible);
  EXPECT_FALSE(an::check_spec(an::CriterionSpec{Theorem::PS, {}, {}, 6.0, 5.0, {}}).admissible);
  EXPECT_TRUE(an::check_spec(an::CriterionSpec{Theorem::BdV, {}, {}, 3.0, 2.0, {}}).admissible);
  EXPECT_TRUE(an::check_spec(an::CriterionSpec{Theorem::BdV, {}, {}, 1.5, inf, {}}).admissible);
}

TEST(CheckSpec, T14DerivesCriticalPAndFlagsInfiniteS) {
  // alpha = beta = 1.8: 1/p = 1 - 1/3.6 - 1/1.8 = 1/6.
  auto r = an::check_spec(an::ExactCriterionSpec{Theorem::T14, ExactExponent(q(9, 5)), ExactExponent(q(9, 5)),
                                                  ExactExponent(q(10)), ExactExponent(q(5)), {}});
  ASSERT_TRUE(r.admissible) << r.violated_conditions.front();
  EXPECT_EQ(r.p->value(), q(6));
  EXPECT_EQ(*r.scaling_sum, q(2));
  auto b = an::check_spec(an::CriterionSpec{Theorem::T14, 1.8, 1.8, inf, 3.0, {}});
  EXPECT_TRUE(b.admissible);
  ASSERT_FALSE(b.notes.empty());
  EXPECT_NE(b.notes[0].find("boundary: ambiguous"), std::string::npos);
}

TEST(CheckSpec, T14CriticalPIsAtLeastOneWhenAdmissible) {
  an::testing::AdmissibleSampler smp(41);
  for (int i = 0; i < 500; ++i) {
    auto in = smp.draw(LemmaContext::T145);
    auto r = an::check_spec(an::CriterionSpec{Theorem::T14, in.alpha, in.beta, in.s, inf, {}});
    if (!r.admissible) continue;
    ASSERT_TRUE(r.p.has_value());
    EXPECT_GE(*r.p, Exponent(1.0));
  }
}

TEST(CheckSpec, T15DerivesQ) {
  auto r = an::check_spec(an::CriterionSpec{Theorem::T15, 2.0, 2.0, 6.0, {}, 6.0});
  ASSERT_TRUE(r.admissible) << r.violated_conditions.front();
  EXPECT_NEAR(r.q->value(), 4.0, 1e-15);
}

TEST(DeriveLemmaParams, WorkedExamplesAreExact) {
  auto p1 = an::derive_lemma_params<Rational>(LemmaContext::T11i, {q(2), ExactExponent(q(4)), {}});
  EXPECT_EQ(p1.r.value(), q(8, 3));
  EXPECT_EQ(p1.theta, q(1, 5));
  EXPECT_EQ(p1.a.value(), q(3, 2));
  EXPECT_EQ(p1.t.value(), q(12));
  EXPECT_EQ(p1.theta * (p1.r.value() - 1) * p1.t.value(), q(4));
  EXPECT_EQ((1 - p1.theta) * (p1.r.value() - 1) * p1.a.value(), q(2));

  auto p2 = an::derive_lemma_params<Rational>(LemmaContext::T13, {q(2), ExactExponent(q(8, 3)), ExactExponent(q(7, 2))});
  EXPECT_EQ(p2.r.value(), q(22, 7));
  EXPECT_EQ(p2.theta, q(1, 15));
  EXPECT_EQ(p2.a.value(), q(7, 4));
  EXPECT_EQ(p2.t.value(), q(56, 3));
  EXPECT_EQ(p2.a.reciprocal() + p2.t.reciprocal(), q(5, 8));

  auto p3 = an::derive_lemma_params<Rational>(LemmaContext::T11ii, {q(2), ExactExponent(q(2)), {}});
  EXPECT_EQ(p3.r.value(), q(5, 2));
  EXPECT_EQ(p3.theta, q(0));
  EXPECT_EQ(p3.a.value(), q(2));
  EXPECT_TRUE(p3.t.is_infinite());
}

TEST(DeriveLemmaParams, ErrorsNameFirstViolation) {
  try {
    an::derive_lemma_params<double>(LemmaContext::T11ii, {3.0, Exponent(2.0), {}});
    FAIL();
  } catch (const an::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("α≤β"), std::string::npos);
  }
  EXPECT_THROW(an::derive_lemma_params<double>(LemmaContext::T11i, {2.0, Exponent(4.0), Exponent(3.0)}),
               an::InvalidArgument);
  EXPECT_THROW(an::derive_lemma_params<double>(LemmaContext::T13, {2.0, Exponent(3.0), Exponent(3.5)}),
               an::PreconditionError);
  EXPECT_THROW(an::derive_lemma_params<double>(LemmaContext::T145, {1.0, Exponent(1.8), Exponent(5.0)}),
               an::PreconditionError);
}

TEST(DeriveLemmaParams, AgreesWithPrintedFormulasOnRandomRationals) {
  std::mt19937_64 rng(77);
  auto pick = [&](long lo_num, long hi_num, long den) {
    return q(std::uniform_int_distribution<long>(lo_num, hi_num)(rng), den);
  };
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const LemmaContext c = static_cast<LemmaContext>(i % 4);
    Rational al, be, s;
    switch (c) {
      case LemmaContext::T11i: be = pick(129, 1000, 64); al = pick(65, 1000, 64); break;
      case LemmaContext::T11ii: be = pick(97, 128, 64); al = pick(65, 128, 64); break;
      case LemmaContext::T13: al = pick(65, 640, 64); s = pick(193, 1000, 64); break;
      case LemmaContext::T145: be = pick(97, 127, 64); al = pick(65, 127, 64); s = pick(192, 2000, 64); break;
    }
    an::ExactLemmaInputs in{al, ExactExponent(be), ExactExponent(s)};
    if (c == LemmaContext::T11i || c == LemmaContext::T11ii) in.s.reset();
    if (c == LemmaContext::T13) in.beta.reset();
    an::ExactLemmaParams p;
    try {
      p = an::derive_lemma_params(c, in);
    } catch (const an::PreconditionError&) {
      continue;
    }
    const auto e = an::context_exponents(c, in);
    if (e.beta.is_infinite() || e.alpha.value() == e.beta.value() || e.alpha.value() == 1) continue;
    const DirectForm d = direct(c, al, e.beta.value(), s);
    EXPECT_EQ(p.r.value(), d.r);
    EXPECT_EQ(p.theta, d.theta);
    EXPECT_EQ(p.a.value(), d.a);
    EXPECT_EQ(p.t.value(), d.t);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(DeriveLemmaParams, RandomAdmissibleDrawsSatisfyIdentitiesAndHypotheses) {
  an::testing::AdmissibleSampler smp(2026);
  for (LemmaContext c : {LemmaContext::T11i, LemmaContext::T11ii, LemmaContext::T13, LemmaContext::T145}) {
    for (int i = 0; i < 1000; ++i) {
      const auto in = smp.draw(c);
      const auto p = an::derive_lemma_params(c, in);
      const auto e = an::context_exponents(c, in);
      const auto res = an::lemma_identity_residuals(p, e.alpha, e.beta, e.s);
      for (double r : res) ASSERT_LE(r, 1e-10) << an::context_name(c) << " draw " << i;
      const auto bad = an::lemma_hypothesis_violations(p, e.alpha, e.beta, e.s);
      ASSERT_TRUE(bad.empty()) << an::context_name(c) << " draw " << i << ": " << bad.front() << " theta=" << p.theta
                               << " alpha=" << an::to_string(e.alpha) << " beta=" << an::to_string(e.beta);
    }
  }
}

TEST(LemmaIdentityResiduals, ExactZeroAndCorruptionDetection) {
  auto p = an::derive_lemma_params<Rational>(LemmaContext::T13, {q(2), {}, ExactExponent(q(7, 2))});
  for (const auto& r : an::lemma_identity_residuals<Rational>(p, q(2), q(8, 3), q(7, 2))) EXPECT_EQ(r, 0);

  auto p1 = an::derive_lemma_params<Rational>(LemmaContext::T11i, {q(2), ExactExponent(q(4)), {}});
  for (const auto& r : an::lemma_identity_residuals<Rational>(p1, q(2), q(4), q(2))) EXPECT_EQ(r, 0);
  // Both sides of the balance identity are 3/10 here.
  EXPECT_EQ((1 - p1.theta) / 2 + p1.theta * (1 - q(2)) / 2, q(3, 10));
  EXPECT_EQ((q(2) - 1) / (q(2) * (p1.r.value() - 1)), q(3, 10));

  auto d = an::to_double(p);
  d.r = Exponent(d.r.value() + 1e-3);
  EXPECT_GE(an::lemma_identity_residuals(d, Exponent(2.0), Exponent(8.0 / 3.0), Exponent(3.5))[0], 1e-4);
}

TEST(LemmaIdentityResiduals, BalanceAndOriginalInterpolationConditionAgree) {
  an::testing::AdmissibleSampler smp(9);
  for (int i = 0; i < 300; ++i) {
    const auto in = smp.draw(LemmaContext::T13);
    const auto p = an::derive_lemma_params(LemmaContext::T13, in);
    EXPECT_LE(an::interpolation_balance_residual(in.alpha, *in.s, p.theta, p.r), 1e-10);
    EXPECT_LE(an::interpolation_condition_residual(in.alpha, *in.s, p.theta, p.r), 1e-10);
  }
}

TEST(T13, CriticalScalingAndBetaBlowUpAtRightEndpoint) {
  an::testing::AdmissibleSampler smp(13);
  for (int i = 0; i < 1000; ++i) {
    const auto in = smp.draw(LemmaContext::T13);
    auto r = an::check_spec(an::CriterionSpec{Theorem::T13, in.alpha, {}, in.s, {}, {}});
    ASSERT_TRUE(r.admissible);
    EXPECT_NEAR(*r.scaling_sum, 2.0, 1e-12);
  }
  const Rational al = q(3);
  const Rational top = (11 * al - 10) / (3 * (al - 1));
  Rational prev_beta = 0;
  for (int k = 1; k <= 12; ++k) {
    const Rational s = top - Rational(1) / (Rational(2) * (1 << k));
    auto r = an::check_spec(an::ExactCriterionSpec{Theorem::T13, ExactExponent(al), {}, ExactExponent(s), {}, {}});
    ASSERT_TRUE(r.admissible);
    EXPECT_GT(r.beta->value(), prev_beta);
    prev_beta = r.beta->value();
  }
  auto end = an::check_spec(an::ExactCriterionSpec{Theorem::T13, ExactExponent(al), {}, ExactExponent(top), {}, {}});
  ASSERT_TRUE(end.admissible);
  EXPECT_TRUE(end.beta->is_infinite());
}

TEST(CheckSpec, FloatingAndExactPathsAgreeOnDyadicPoints) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> num(48, 800);
  auto dy = [&] { return q(num(rng), 32); };
  auto maybe_inf = [&](const Rational& v) {
    return std::uniform_int_distribution<int>(0, 19)(rng) == 0 ? qinf : ExactExponent(v);
  };
  for (int i = 0; i < 3000; ++i) {
    const Theorem th = static_cast<Theorem>(i % 7);
    an::ExactCriterionSpec e{th, {}, {}, {}, {}, {}};
    switch (th) {
      case Theorem::PS:
      case Theorem::BdV: e.s = maybe_inf(dy()); e.q = maybe_inf(dy()); break;
      case Theorem::T11i:
      case Theorem::T11ii: e.alpha = maybe_inf(dy()); e.beta = maybe_inf(dy()); break;
      case Theorem::T13: e.alpha = maybe_inf(dy()); e.s = maybe_inf(dy()); break;
      case Theorem::T14: e.alpha = dy(); e.beta = dy(); e.s = maybe_inf(dy()); e.q = maybe_inf(dy()); break;
      case Theorem::T15: e.alpha = dy(); e.beta = dy(); e.s = maybe_inf(dy()); e.p = maybe_inf(dy()); break;
    }
    auto conv = [](const std::optional<ExactExponent>& x) -> std::optional<Exponent> {
      if (!x) return std::nullopt;
      return an::to_double(*x);
    };
    const an::CriterionSpec f{th, conv(e.alpha), conv(e.beta), conv(e.s), conv(e.q), conv(e.p)};
    const auto re = an::check_spec(e);
    const auto rf = an::check_spec(f);
    ASSERT_EQ(re.admissible, rf.admissible) << an::theorem_name(th) << " point " << i;
    ASSERT_EQ(re.violated_conditions, rf.violated_conditions);
  }
}

TEST(EpsilonFamily, T14Interval) {
  const auto fam = an::epsilon_family(Theorem::T14, 1.8, 0.1);
  ASSERT_TRUE(fam.admissible);
  EXPECT_DOUBLE_EQ(fam.alpha_min, 1.125);
  EXPECT_FALSE(fam.min_inclusive);
  EXPECT_NEAR(fam.alpha_max, 5.4 / 4.62, 1e-14);
  EXPECT_LE(fam.slack_residual_mid, 1e-10);
  for (double a : {fam.alpha_min + 1e-9, fam.alpha_max}) {
    const double s = an::epsilon_family_s(Theorem::T14, a, 1.8, 0.1);
    EXPECT_LE(an::epsilon_slack_residual(Theorem::T14, a, 1.8, s, 0.1), 1e-10);
  }
  EXPECT_THROW(an::epsilon_family(Theorem::T14, 1.8, 0.5), an::InvalidArgument);
  EXPECT_THROW(an::epsilon_family(Theorem::T14, 2.0, 0.1), an::InvalidArgument);
}

TEST(EpsilonFamily, T15Interval) {
  const auto fam = an::epsilon_family(Theorem::T15, 2.0, 0.1);
  ASSERT_TRUE(fam.admissible);
  EXPECT_NEAR(fam.alpha_min, 8 / 7.8, 1e-14);
  EXPECT_TRUE(fam.min_inclusive);
  EXPECT_NEAR(fam.alpha_max, 2 / 1.8, 1e-14);
  EXPECT_LE(fam.slack_residual_mid, 1e-10);
  for (double a : {fam.alpha_min, fam.alpha_max}) {
    const double s = an::epsilon_family_s(Theorem::T15, a, 2.0, 0.1);
    EXPECT_LE(an::epsilon_slack_residual(Theorem::T15, a, 2.0, s, 0.1), 1e-10);
  }
  EXPECT_THROW(an::epsilon_family(Theorem::T15, 2.0, 0.25), an::InvalidArgument);
}

TEST(EpsilonFamily, EmptyIntervalIsReportedNotClamped) {
  // At beta = 3/2 the lower end 4β/((8−ε)β−8) exceeds alpha <= beta.
  const auto fam = an::epsilon_family(Theorem::T15, 1.5, 0.1);
  EXPECT_FALSE(fam.admissible);
  EXPECT_GT(fam.alpha_min, fam.alpha_max);
  EXPECT_EQ(fam.alpha_max, 1.5);
}

TEST(Region, MembershipExamples) {
  const auto g1 = an::region_sample(Theorem::T11i, q(6), q(6), q(1, 20));
  auto member = [](const an::RegionGrid& g, Rational a, Rational b) {
    for (const auto& p : g.points)
      if (p.alpha == a && p.beta == b) return static_cast<int>(p.member);
    return -1;
  };
  EXPECT_EQ(g1.alpha_count, 101u);
  EXPECT_EQ(member(g1, q(1), q(3)), 1);
  EXPECT_EQ(member(g1, q(3), q(3)), 1);
  EXPECT_EQ(member(g1, q(3), q(2)), 0);
  const auto g2 = an::region_sample(Theorem::T11ii, q(6), q(6), q(1, 20));
  EXPECT_EQ(member(g2, q(3, 2), q(9, 5)), 1);
  EXPECT_EQ(member(g2, q(6, 5), q(7, 5)), 0);
}

TEST(Region, MembershipIsStableUnderRefinement) {
  for (Theorem th : {Theorem::T11i, Theorem::T11ii}) {
    const auto coarse = an::region_sample(th, q(4), q(4), q(1, 4));
    const auto fine = an::region_sample(th, q(4), q(4), q(1, 8));
    for (const auto& p : coarse.points) {
      bool found = false;
      for (const auto& r : fine.points)
        if (r.alpha == p.alpha && r.beta == p.beta) {
          EXPECT_EQ(r.member, p.member);
          found = true;
        }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Region, CsvAndSvgShape) {
  const auto g = an::region_sample(Theorem::T11i, q(2), q(3), q(1, 2));
  const std::string csv = an::region_csv(g);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,beta,member");
  EXPECT_NE(csv.find("\n1,3,1\n"), std::string::npos);
  EXPECT_NE(csv.find("\n2,1.5,0\n"), std::string::npos);
  const std::string svg = an::region_svg(g);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("α</text>"), std::string::npos);
  EXPECT_NE(svg.find("β</text>"), std::string::npos);
  EXPECT_NE(svg.find("data-equation=\"alpha=beta\""), std::string::npos);
  EXPECT_THROW(an::region_sample(Theorem::T13, q(2), q(2), q(1)), an::InvalidArgument);
  EXPECT_THROW(an::region_sample(Theorem::T11i, q(2), q(2), q(0)), an::InvalidArgument);
}

TEST(ExponentParsing, ExactForms) {
  using an::Rational;
  EXPECT_EQ(an::parse_exact("3.5")->value(), Rational(7, 2));
  EXPECT_EQ(an::parse_exact("8/3")->value(), Rational(8, 3));
  EXPECT_EQ(an::parse_exact("-2")->value(), Rational(-2));
  EXPECT_EQ(an::parse_exact("1e-3")->value(), Rational(1, 1000));
  EXPECT_EQ(an::parse_exact("2.5e1")->value(), Rational(25));
  EXPECT_TRUE(an::parse_exact("inf")->is_infinite());
  EXPECT_TRUE(an::parse_exact(" ∞ ")->is_infinite());
  for (const char* bad : {"", "abc", "1/0", "3.5.1", "1e", "inf/2", "."}) EXPECT_FALSE(an::parse_exact(bad)) << bad;
}

TEST(ExponentParsing, LeadingZerosAreDecimal) {
  using an::Rational;
  EXPECT_EQ(an::parse_exact("010")->value(), Rational(10));
  EXPECT_EQ(an::parse_exact("0.08")->value(), Rational(2, 25));
  EXPECT_EQ(an::parse_exact("0.0073")->value(), Rational(73, 10000));
  EXPECT_EQ(an::parse_exact("0")->value(), Rational(0));
  EXPECT_EQ(an::parse_exact("0.000")->value(), Rational(0));
  EXPECT_EQ(an::parse_exponent("0.007344564737218431")->value(), 0.007344564737218431);
}

TEST(ExponentParsing, FloatFallbackAndRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 2.6666666666666665, 1e-300, 123456.789}) {
    const auto e = an::parse_exponent(an::format_double(x));
    ASSERT_TRUE(e);
    EXPECT_EQ(e->value(), x);
  }
  EXPECT_FALSE(an::parse_exponent("nan"));
}
