#include "adhm/sweep.hpp"

#include <sstream>

#include "adhm/classify.hpp"
#include "adhm/io.hpp"
#include "adhm/monad.hpp"
#include "adhm/strata.hpp"
#include "adhm/uhlenbeck.hpp"

namespace adhm::sweep {

AdhmDatum borderline_family_one() {
  return parse_datum(R"({"c":2,"r":2,
      "A":[["0","0"],["0","1"]],
      "B":[["0","0"],["0","1"]],
      "I":[["1","1"],["0","0"]],
      "J":[["0","1"],["0","-1"]]})");
}

AdhmDatum borderline_family_two() {
  return parse_datum(R"({"c":2,"r":2,
      "A":[["1","1"],["0","1"]],
      "B":[["1","1"],["0","1"]],
      "I":[["1","1"],["0","0"]],
      "J":[["0","1"],["0","-1"]]})");
}

namespace {

// Collects the first failure; later ones add nothing new and the loops are
// cheap enough to let run to completion.
struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string tag(std::size_t r, std::size_t c, std::size_t s, int sample) {
  std::ostringstream out;
  out << "(r=" << r << ", c=" << c << ", s=" << s << ", sample " << sample << ")";
  return out.str();
}

// --- 1: the two dimension computations agree on the audited grid ----------

CheckResult check_dimension_audit() {
  Check check;
  const auto audits = audit_dimensions(5, 6);
  check.expect(audits.size() == 5 * 28, "unexpected audit row count");
  for (const DimensionAudit& audit : audits) {
    check.expect(audit.consistent, "formula/parametrization mismatch at " +
                                       tag(audit.r, audit.c, audit.s, 0));
  }
  // Two frozen rows as a guard against consistent-but-wrong arithmetic.
  check.expect(stratum_dimension(2, 3, 1).formula == 19, "frozen value (2,3,1) != 19");
  check.expect(stratum_dimension(1, 1, 1).formula == 3, "frozen value (1,1,1) != 3");
  return {"dimension-formula-audit", check.ok, check.detail};
}

// --- 2: full-rank derivative at stable points ------------------------------

CheckResult check_stable_smoothness(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t c = 0; c <= 4; ++c) {
      for (int sample = 0; sample < 50; ++sample) {
        const AdhmDatum x = sample_stable(r, c, rng);
        const std::size_t jacobian_rank = rank(jacobian(x));
        check.expect(jacobian_rank == c * c,
                     "derivative not surjective at " + tag(r, c, c, sample));
        const std::size_t tangent = 2 * c * c + 2 * r * c - jacobian_rank;
        check.expect(tangent == 2 * r * c + c * c,
                     "tangent dimension off at " + tag(r, c, c, sample));
      }
    }
  }
  return {"stable-tangent-smoothness", check.ok, check.detail};
}

// --- 3: iterated closure equals the reachability column space --------------

CheckResult check_closure_reachability(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 0; c <= 5; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 50; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          const Subspace sigma = stabilizing_subspace(x);
          const Matrix reach = r_map(x);
          check.expect(Subspace::column_space(reach).same_as(sigma),
                       "closure != reachability span at " + tag(r, c, s, sample));
          check.expect((rank(reach) == c) == (sigma.dim() == c),
                       "full-rank criterion mismatch at " + tag(r, c, s, sample));
        }
      }
    }
  }
  return {"closure-matches-reachability", check.ok, check.detail};
}

// --- 4: the middle block constraint has constant rank ----------------------

CheckResult check_fiber_rank(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 0; c <= 5; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 50; ++sample) {
          const AdhmDatum x1 = sample_stable(r, s, rng);
          const CommutingPair pair = sample_commuting(c - s, rng);
          const Matrix fiber = fiber_map(x1, pair);
          const std::size_t m = c - s;
          check.expect(rank(fiber) == s * m, "fiber map not surjective at " + tag(r, c, s, sample));
          check.expect(fiber.cols() - rank(fiber) == (r + s) * m,
                       "fiber kernel dimension off at " + tag(r, c, s, sample));
        }
      }
    }
  }
  return {"fiber-constraint-rank", check.ok, check.detail};
}

// --- 5: stratum sampler hits the equation and the intended stratum ---------

CheckResult check_sampler_exactness(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 0; c <= 5; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 50; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          check.expect(mu(x).is_zero(), "sampler left the equation at " + tag(r, c, s, sample));
          check.expect(stabilizing_subspace(x).dim() == s,
                       "sampler missed the stratum at " + tag(r, c, s, sample));
        }
      }
    }
  }
  return {"stratum-sampler-exactness", check.ok, check.detail};
}

// --- 6: composition of the two complex maps --------------------------------

CheckResult check_monad_composition(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
    const std::size_t c = static_cast<std::size_t>(k % 6);
    const AdhmDatum x(c, r, random_matrix(c, c, 5, rng), random_matrix(c, c, 5, rng),
                      random_matrix(c, r, 5, rng), random_matrix(r, c, 5, rng));
    const auto composition = monad_composition(x);
    for (int term = 0; term < 5; ++term) {
      check.expect(composition[static_cast<std::size_t>(term)].is_zero(),
                   "nonzero low-order term in beta*alpha (random datum " + std::to_string(k) + ")");
    }
    check.expect(composition[5] == mu(x),
                 "z^2 term of beta*alpha differs from the moment map (random datum " +
                     std::to_string(k) + ")");
  }
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 0; c <= 3; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 5; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          const auto composition = monad_composition(x);
          for (const Matrix& term : composition) {
            check.expect(term.is_zero(),
                         "beta*alpha != 0 on a solution at " + tag(r, c, s, sample));
          }
        }
      }
    }
  }
  return {"monad-composition-identity", check.ok, check.detail};
}

// --- 7: twisted section counts only see the stable restriction -------------

CheckResult check_sections_match_restriction(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 0; c <= 3; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 20; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          const AdhmDatum restriction = stable_restriction(x);
          for (int n = 0; n <= 3; ++n) {
            check.expect(h0_twisted(x, n) == h0_twisted(restriction, n),
                         "section count differs from restriction at " + tag(r, c, s, sample) +
                             ", n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return {"twisted-sections-match-restriction", check.ok, check.detail};
}

// --- 8: singular support sits under the quotient pair ----------------------

CheckResult check_support_and_quotient(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 0; c <= 3; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 20; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          const SupportReport support = singular_support(x);
          check.expect(support.residue.empty(),
                       "sampler support should be rational at " + tag(r, c, s, sample));
          std::size_t total = 0;
          for (const SupportPoint& point : support.points) total += point.multiplicity;
          check.expect(total == c - s, "support mass != c - s at " + tag(r, c, s, sample));

          const AdhmDatum quotient = datum_from_pair(quotient_representation(x));
          const MonadMatrices quotient_monad = monad_matrices(quotient);
          for (const SupportPoint& point : support.points) {
            const Matrix beta = beta_at(quotient_monad, PointP2(point.p, point.q, Rational(1)));
            check.expect(rank(beta) < c - s,
                         "no rank drop at a support point at " + tag(r, c, s, sample));
          }
          // Control point away from the finite support: no rank drop.
          if (c - s > 0) {
            Rational off(1000);
            for (const SupportPoint& point : support.points) {
              if (point.p == off) off += 1;
            }
            const Matrix beta = beta_at(quotient_monad, PointP2(off, off, Rational(1)));
            check.expect(rank(beta) == c - s,
                         "rank drop off the support at " + tag(r, c, s, sample));
          }
          for (int n = 0; n <= 3; ++n) {
            check.expect(h0_twisted(quotient, n) == 0,
                         "quotient sections nonzero at " + tag(r, c, s, sample) +
                             ", n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return {"singular-support-and-quotient-sections", check.ok, check.detail};
}

// --- 9: fiber injectivity detects costability ------------------------------

CheckResult check_injectivity_costability(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t c = 0; c <= 4; ++c) {
      for (std::size_t s = 0; s <= c; ++s) {
        for (int sample = 0; sample < 10; ++sample) {
          const AdhmDatum x = sample_stratum(r, c, s, rng).x;
          const SupportReport locus = non_costable_locus(x);
          check.expect(locus.residue.empty(),
                       "sampler locus should be rational at " + tag(r, c, s, sample));
          check.expect(locus.points.empty() == is_costable(x),
                       "locus emptiness != costability at " + tag(r, c, s, sample));

          const MonadMatrices monad = monad_matrices(x);
          for (const SupportPoint& point : locus.points) {
            const Matrix alpha = alpha_at(monad, PointP2(point.p, point.q, Rational(1)));
            check.expect(rank(alpha) < c,
                         "alpha full rank on the locus at " + tag(r, c, s, sample));
          }
          const PointP2 infinity[] = {PointP2(Rational(1), Rational(0), Rational(0)),
                                      PointP2(Rational(0), Rational(1), Rational(0)),
                                      PointP2(Rational(1), Rational(1), Rational(0))};
          for (const PointP2& point : infinity) {
            check.expect(rank(alpha_at(monad, point)) == c,
                         "alpha degenerate on the far line at " + tag(r, c, s, sample));
          }
          int tested = 0;
          while (tested < 20) {
            const Rational px(rng.uniform_int(-30, 30));
            const Rational py(rng.uniform_int(-30, 30));
            bool on_locus = false;
            for (const SupportPoint& point : locus.points) {
              if (point.p == px && point.q == py) on_locus = true;
            }
            if (on_locus) continue;
            check.expect(rank(alpha_at(monad, PointP2(px, py, Rational(1)))) == c,
                         "alpha degenerate off the locus at " + tag(r, c, s, sample));
            ++tested;
          }
        }
      }
    }
  }
  return {"fiber-injectivity-costability", check.ok, check.detail};
}

// --- 10: the duality involution ---------------------------------------------

CheckResult check_duality(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
    const std::size_t c = static_cast<std::size_t>(k % 6);
    const AdhmDatum x(c, r, random_matrix(c, c, 5, rng), random_matrix(c, c, 5, rng),
                      random_matrix(c, r, 5, rng), random_matrix(r, c, 5, rng));
    const AdhmDatum negated(c, r, -x.A, -x.B, -x.I, -x.J);
    check.expect(star(star(x)) == negated, "star o star != -id (datum " + std::to_string(k) + ")");
    const AdhmDatum dual = star(x);
    check.expect(is_stable(x) == is_costable(dual),
                 "stability not swapped by star (datum " + std::to_string(k) + ")");
    check.expect(is_costable(x) == is_stable(dual),
                 "costability not swapped by star (datum " + std::to_string(k) + ")");
    check.expect(costabilizing_subspace(x).dim() == c - stabilizing_subspace(dual).dim(),
                 "complementary dimensions fail (datum " + std::to_string(k) + ")");
  }
  return {"duality-involution", check.ok, check.detail};
}

// --- 11: splitting off the point cloud --------------------------------------

CheckResult check_uhlenbeck(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 0; c <= 4; ++c) {
      for (int sample = 0; sample < 10; ++sample) {
        const AdhmDatum x = sample_stable(r, c, rng);
        const UhlenbeckImage image = uhlenbeck_image(x);
        check.expect(image.regular_part.c + image.cloud.size() == c,
                     "size not conserved at " + tag(r, c, c, sample));
        check.expect(is_regular(image.regular_part),
                     "regular part not regular at " + tag(r, c, c, sample));
        std::size_t mass = image.residue.mass;
        for (const SupportPoint& point : image.points) mass += point.multiplicity;
        check.expect(mass == image.cloud.size(),
                     "cloud mass mismatch at " + tag(r, c, c, sample));

        const UhlenbeckImage again = uhlenbeck_image(image.regular_part);
        check.expect(again.regular_part == image.regular_part && again.cloud.size() == 0,
                     "image not idempotent at " + tag(r, c, c, sample));

        const UhlenbeckInvariants fingerprint = uhlenbeck_invariants(image);
        for (int conjugation = 0; conjugation < 10; ++conjugation) {
          const Matrix g = random_invertible(c, 3, rng);
          const UhlenbeckInvariants moved =
              uhlenbeck_invariants(uhlenbeck_image(group_action(g, x)));
          check.expect(moved == fingerprint,
                       "fingerprint not conjugation-invariant at " + tag(r, c, c, sample));
        }
      }
    }
  }
  return {"uhlenbeck-decomposition", check.ok, check.detail};
}

// --- 12: the two hand-built borderline families -----------------------------

CheckResult check_borderline_families() {
  Check check;
  const AdhmDatum family_one = borderline_family_one();
  const ClassificationReport one = classify(family_one);
  check.expect(one.is_solution, "family one is not a solution");
  check.expect(!one.stable, "family one unexpectedly stable");
  check.expect(!one.costable, "family one unexpectedly costable");
  check.expect(one.sj, "family one derivative not surjective");

  // Family two: the classification and stabilizer witness are reported;
  // only the report's existence is asserted.
  const AdhmDatum family_two = borderline_family_two();
  const ClassificationReport two = classify(family_two);
  check.expect(two.is_solution, "family two is not a solution");
  std::ostringstream report;
  report << "family two: sj=" << (two.sj ? "true" : "false")
         << " ts=" << (two.ts ? "true" : "false") << " stabilizer_dim=" << two.stabilizer_dim;
  const auto witness = stabilizer_nontrivial_witness(family_two);
  if (witness) {
    report << " witness fixes datum: "
           << ((group_action(*witness, family_two) == family_two) ? "yes" : "no");
  }
  check.expect(!report.str().empty(), "family two report missing");
  return {"borderline-families", check.ok, check.ok ? report.str() : check.detail};
}

// --- 13: section counts of the basic one-point datum ------------------------

CheckResult check_one_point_sections() {
  Check check;
  const AdhmDatum x = parse_datum(
      R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["1"]],"J":[["0"]]})");
  const std::size_t expected[3] = {0, 2, 5};

  const SupportReport locus = non_costable_locus(x);
  check.expect(locus.points.size() == 1 && locus.points[0].p == 0 && locus.points[0].q == 0,
               "unexpected degeneracy locus");

  for (int n = 0; n <= 2; ++n) {
    check.expect(h0_twisted(x, n) == expected[n],
                 "frozen section count differs at n=" + std::to_string(n));

    // Interpolation oracle: forms of degree n modulo the evaluation
    // condition at the single locus point, enumerated directly.
    const Rational px = locus.points[0].p;
    const Rational py = locus.points[0].q;
    Matrix evaluation(1, dim_forms(n));
    std::size_t index = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        Rational value(1);
        for (int e = 0; e < i; ++e) value *= px;
        for (int e = 0; e < j; ++e) value *= py;
        evaluation.at(0, index++) = value;
      }
    }
    const std::size_t oracle = dim_forms(n) - rank(evaluation);
    check.expect(h0_twisted(x, n) == oracle,
                 "oracle disagrees with section count at n=" + std::to_string(n));
  }
  return {"one-point-section-counts", check.ok, check.detail};
}

// --- 14: size-one data reduce to one bilinear equation ----------------------

CheckResult check_rank_one_quadric(std::uint64_t seed) {
  Check check;
  Rng rng(seed);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
    const AdhmDatum x(1, r, random_matrix(1, 1, 9, rng), random_matrix(1, 1, 9, rng),
                      random_matrix(1, r, 9, rng), random_matrix(r, 1, 9, rng));
    Rational pairing(0);
    for (std::size_t i = 0; i < r; ++i) pairing += x.I.at(0, i) * x.J.at(i, 0);
    const Matrix m = mu(x);
    check.expect(m.rows() == 1 && m.cols() == 1 && m.at(0, 0) == pairing,
                 "moment map differs from the pairing (datum " + std::to_string(k) + ")");
    check.expect(is_solution(x) == (pairing == 0),
                 "solution test differs from the pairing (datum " + std::to_string(k) + ")");
  }
  // A couple of constructed solutions with orthogonal pairing.
  for (std::size_t r = 2; r <= 4; ++r) {
    Matrix i(1, r), j(r, 1);
    for (std::size_t k = 0; k < r; ++k) i.at(0, k) = Rational(static_cast<long>(k + 1));
    j.at(0, 0) = -2;
    j.at(1, 0) = 1;
    const AdhmDatum x(1, r, random_matrix(1, 1, 9, rng), random_matrix(1, 1, 9, rng), i, j);
    check.expect(is_solution(x), "orthogonal pairing should solve (r=" + std::to_string(r) + ")");
  }
  return {"rank-one-quadric-reduction", check.ok, check.detail};
}

}  // namespace

std::vector<CheckResult> run_all(const Options& options, std::ostream& out) {
  std::vector<CheckResult> results;
  results.push_back(check_dimension_audit());
  results.push_back(check_stable_smoothness(options.seed + 2));
  results.push_back(check_closure_reachability(options.seed + 3));
  results.push_back(check_fiber_rank(options.seed + 4));
  results.push_back(check_sampler_exactness(options.seed + 5));
  results.push_back(check_monad_composition(options.seed + 6));
  results.push_back(check_sections_match_restriction(options.seed + 7));
  results.push_back(check_support_and_quotient(options.seed + 8));
  results.push_back(check_injectivity_costability(options.seed + 9));
  results.push_back(check_duality(options.seed + 10));
  results.push_back(check_uhlenbeck(options.seed + 11));
  results.push_back(check_borderline_families());
  results.push_back(check_one_point_sections());
  results.push_back(check_rank_one_quadric(options.seed + 14));

  std::size_t passed = 0;
  for (const CheckResult& result : results) {
    if (result.passed) {
      ++passed;
      out << "PASS " << result.name;
      if (!result.detail.empty()) out << " [" << result.detail << "]";
      out << "\n";
    } else {
      out << "FAIL " << result.name << ": " << result.detail << "\n";
    }
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& result : results) {
    if (!result.passed) return false;
  }
  return true;
}

}  // namespace adhm::sweep
