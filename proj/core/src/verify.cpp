#include <klm/ekl.hpp>
#include <klm/errors.hpp>
#include <klm/kl.hpp>
#include <klm/verify.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace klm {

namespace {

// Every check body receives a fail(witness) sink; the first witness is kept
// and the rest only counted, so output stays bounded and deterministic.
class Runner {
 public:
  explicit Runner(std::vector<CheckResult>& out) : out_(out) {}

  template <class Body>
  void check(const std::string& name, Body&& body) {
    CheckResult result;
    result.name = name;
    result.pass = true;
    auto fail = [&result](const std::string& witness) {
      if (result.failures == 0) result.witness = witness;
      ++result.failures;
      result.pass = false;
    };
    try {
      body(fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    out_.push_back(std::move(result));
  }

 private:
  std::vector<CheckResult>& out_;
};

std::string nm_witness(int n, int m) {
  std::ostringstream os;
  os << "(n=" << n << ",m=" << m << ")";
  return os.str();
}

std::string nmi_witness(int n, int m, int i) {
  std::ostringstream os;
  os << "(n=" << n << ",m=" << m << ",i=" << i << ")";
  return os.str();
}

QPoly random_qpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5), c(-9, 9);
  std::vector<BigInt> coeffs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng));
  return QPoly(std::move(coeffs));
}

QTPoly random_qtpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<QPoly> coeffs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_qpoly(rng));
  return QTPoly(std::move(coeffs));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  Runner runner(results);
  const int max_n = std::max(0, options.max_n);
  // Partition-indexed sweeps grow like p(n); keep them at desk scale even
  // when the matroid sweeps are pushed higher.
  const int wcap = std::min(max_n, 12);

  runner.check("exact_poly/q_unit_values_at_one", [&](auto&& fail) {
    BigInt expected_factorial = 1;
    for (int k = 1; k <= std::max(max_n, 12); ++k) {
      expected_factorial *= k;
      if (evaluate(q_int(k), 1) != k) fail("q_int(" + std::to_string(k) + ")");
      if (evaluate(q_factorial(k), 1) != expected_factorial)
        fail("q_factorial(" + std::to_string(k) + ")");
    }
  });

  runner.check("exact_poly/gaussian_symmetry", [&](auto&& fail) {
    for (int n = 0; n <= std::max(max_n, 12); ++n)
      for (int k = 0; k <= n; ++k)
        if (gaussian_binomial(n, k) != gaussian_binomial(n, n - k))
          fail(nm_witness(n, k));
  });

  runner.check("exact_poly/gaussian_q_pascal", [&](auto&& fail) {
    for (int n = 1; n <= std::max(max_n, 12); ++n)
      for (int k = 1; k < n; ++k)
        if (gaussian_binomial(n, k) !=
            gaussian_binomial(n - 1, k - 1) +
                gaussian_binomial(n - 1, k).shifted(k))
          fail(nm_witness(n, k));
  });

  runner.check("exact_poly/gaussian_nonnegative", [&](auto&& fail) {
    for (int n = 0; n <= std::max(max_n, 12); ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& c : gaussian_binomial(n, k).coeffs())
          if (c < 0) fail(nm_witness(n, k));
  });

  runner.check("exact_poly/ring_axioms_random", [&](auto&& fail) {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
      const QPoly a = random_qpoly(rng), b = random_qpoly(rng),
                  c = random_qpoly(rng);
      if ((a + b) + c != a + (b + c)) fail("q-assoc-add trial " + std::to_string(trial));
      if ((a * b) * c != a * (b * c)) fail("q-assoc-mul trial " + std::to_string(trial));
      if (a * (b + c) != a * b + a * c) fail("q-distrib trial " + std::to_string(trial));
      if (a * b != b * a) fail("q-comm trial " + std::to_string(trial));
      if (!b.is_zero() && (a * b).div_exact(b) != a)
        fail("q-div-cancel trial " + std::to_string(trial));
      const QTPoly x = random_qtpoly(rng), y = random_qtpoly(rng),
                   z = random_qtpoly(rng);
      if (x * (y + z) != x * y + x * z) fail("t-distrib trial " + std::to_string(trial));
      if (!y.is_zero() && (x * y).div_exact(y) != x)
        fail("t-div-cancel trial " + std::to_string(trial));
    }
  });

  runner.check("partitions/qdim_at_one_equals_dim", [&](auto&& fail) {
    for (int n = 0; n <= wcap; ++n)
      for (const auto& lambda : partitions_of(n))
        if (evaluate(dim_unipotent(lambda), 1) != dim_symmetric(lambda))
          fail(lambda.to_string());
  });

  runner.check("partitions/dim_conjugation_invariance", [&](auto&& fail) {
    for (int n = 0; n <= wcap; ++n)
      for (const auto& lambda : partitions_of(n))
        if (dim_symmetric(lambda) != dim_symmetric(lambda.conjugate()))
          fail(lambda.to_string());
  });

  runner.check("partitions/hooks_conjugation_multiset", [&](auto&& fail) {
    for (int n = 0; n <= wcap; ++n)
      for (const auto& lambda : partitions_of(n)) {
        auto a = lambda.hook_lengths();
        auto b = lambda.conjugate().hook_lengths();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) fail(lambda.to_string());
      }
  });

  runner.check("partitions/dim_squares_sum_to_factorial", [&](auto&& fail) {
    for (int n = 0; n <= std::min(max_n, 10); ++n) {
      BigInt sum = 0;
      for (const auto& lambda : partitions_of(n)) {
        const BigInt d = dim_symmetric(lambda);
        sum += d * d;
      }
      if (sum != factorial(n)) fail("n=" + std::to_string(n));
    }
  });

  runner.check("partitions/qdim_trailing_power", [&](auto&& fail) {
    for (int n = 1; n <= wcap; ++n)
      for (const auto& lambda : partitions_of(n)) {
        const QPoly d = dim_unipotent(lambda);
        for (const auto& c : d.coeffs())
          if (c < 0) fail(lambda.to_string());
        int expected = 0;
        for (int k = 0; k < lambda.length(); ++k)
          expected += k * lambda.part(k);
        int trailing = 0;
        while (trailing <= d.degree() && d.coeff(trailing).is_zero())
          ++trailing;
        if (trailing != expected) fail(lambda.to_string());
        if (lambda.length() > 1 && !d.coeff(0).is_zero())
          fail(lambda.to_string());
      }
  });

  runner.check("rep_ring/lr_symmetry", [&](auto&& fail) {
    const int cap = std::min(max_n, 8);
    for (int n = 0; n <= cap; ++n)
      for (const auto& lambda : partitions_of(n))
        for (int k = 0; k <= n; ++k)
          for (const auto& mu : partitions_of(k))
            for (const auto& nu : partitions_of(n - k))
              if (lr_coefficient(lambda, mu, nu) !=
                  lr_coefficient(lambda, nu, mu))
                fail(lambda.to_string() + "/" + mu.to_string() + "," +
                     nu.to_string());
  });

  runner.check("rep_ring/induction_dimension_identity", [&](auto&& fail) {
    const int cap = std::min(max_n, 10);
    for (int n = 0; n <= cap; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k))
          for (const auto& nu : partitions_of(n - k)) {
            const auto product = induce_product(
                VirtualRep::irreducible(mu), VirtualRep::irreducible(nu));
            if (rep_dim(product) !=
                binomial(n, k) * dim_symmetric(mu) * dim_symmetric(nu))
              fail(mu.to_string() + "*" + nu.to_string());
          }
  });

  runner.check("rep_ring/induction_qdimension_identity", [&](auto&& fail) {
    const int cap = std::min(max_n, 8);
    for (int n = 0; n <= cap; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k))
          for (const auto& nu : partitions_of(n - k)) {
            const auto product = induce_product(
                VirtualRep::irreducible(mu), VirtualRep::irreducible(nu));
            if (rep_qdim(product) != gaussian_binomial(n, k) *
                                         dim_unipotent(mu) *
                                         dim_unipotent(nu))
              fail(mu.to_string() + "*" + nu.to_string());
          }
  });

  runner.check("rep_ring/induction_associativity", [&](auto&& fail) {
    const int cap = std::min(max_n, 7);
    for (int n = 0; n <= cap; ++n)
      for (int k1 = 0; k1 <= n; ++k1)
        for (int k2 = 0; k2 + k1 <= n; ++k2)
          for (const auto& a : partitions_of(k1))
            for (const auto& b : partitions_of(k2))
              for (const auto& c : partitions_of(n - k1 - k2)) {
                const auto ra = VirtualRep::irreducible(a);
                const auto rb = VirtualRep::irreducible(b);
                const auto rc = VirtualRep::irreducible(c);
                if (induce_product(induce_product(ra, rb), rc) !=
                    induce_product(ra, induce_product(rb, rc)))
                  fail(a.to_string() + "*" + b.to_string() + "*" +
                       c.to_string());
              }
  });

  runner.check("rep_ring/induction_unit", [&](auto&& fail) {
    for (int n = 0; n <= wcap; ++n)
      for (const auto& lambda : partitions_of(n)) {
        const auto rep = VirtualRep::irreducible(lambda);
        if (induce_product(VirtualRep::unit(), rep) != rep)
          fail(lambda.to_string());
      }
  });

  runner.check("os_matroid/qniform_boolean_charpoly_factorization",
               [&](auto&& fail) {
                 for (int k = 0; k <= std::min(max_n, 8); ++k) {
                   QTPoly expected(QPoly(1));
                   for (int j = 0; j < k; ++j) {
                     const QTPoly factor{-QPoly::monomial(j), QPoly(1)};
                     expected *= factor;
                   }
                   if (char_poly(QNiform(k, 0)) != expected)
                     fail("k=" + std::to_string(k));
                 }
               });

  runner.check("os_matroid/charpoly_vanishes_at_one", [&](auto&& fail) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m < n; ++m) {
        TPoly chi_z = char_poly(Uniform(n, m));
        if (!evaluate(chi_z, 1).is_zero()) fail("uniform " + nm_witness(n, m));
        QTPoly chi_q = char_poly(QNiform(n, m));
        QPoly at_one;
        for (const auto& c : chi_q.coeffs()) at_one += c;
        if (!at_one.is_zero()) fail("qniform " + nm_witness(n, m));
      }
  });

  runner.check("os_matroid/qniform_charpoly_q1_degeneration", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        if (substitute_q_one(char_poly(QNiform(n, m))) !=
            char_poly(Uniform(n, m)))
          fail(nm_witness(n, m));
  });

  runner.check("os_matroid/explicit_lattice_charpoly_agrees", [&](auto&& fail) {
    for (int n = 0; n <= std::min(max_n, 6); ++n)
      for (int m = 0; m <= n; ++m)
        if (uniform_lattice(n, m).char_poly() != char_poly(Uniform(n, m)))
          fail(nm_witness(n, m));
  });

  runner.check("os_matroid/full_os_dimension_splitting", [&](auto&& fail) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m < n; ++m)
        for (int i = 0; i <= n - m; ++i)
          if (rep_dim(full_os_rep(n, m, i)) !=
              rep_dim(reduced_os_rep(n, m, i)) +
                  rep_dim(reduced_os_rep(n, m, i - 1)))
            fail(nmi_witness(n, m, i));
  });

  runner.check("kl/oracle_equivalence_explicit", [&](auto&& fail) {
    for (int n = 0; n <= std::min(max_n, 6); ++n)
      for (int m = 0; m <= n; ++m)
        if (kl_explicit_lattice(uniform_lattice(n, m)).poly !=
            kl_polynomial(Uniform(n, m)).poly)
          fail(nm_witness(n, m));
  });

  runner.check("kl/degree_bound_and_constant_term", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto scalar = kl_polynomial(Uniform(n, m));
        if (2 * scalar.poly.degree() >= scalar.rank && scalar.rank > 0)
          fail("uniform degree " + nm_witness(n, m));
        if (scalar.poly.coeff(0) != 1) fail("uniform unit " + nm_witness(n, m));
        const auto qside = kl_polynomial(QNiform(n, m));
        if (2 * qside.poly.degree() >= qside.rank && qside.rank > 0)
          fail("qniform degree " + nm_witness(n, m));
        if (qside.poly.coeff(0) != QPoly(1))
          fail("qniform unit " + nm_witness(n, m));
      }
  });

  runner.check("kl/palindromic_defect", [&](auto&& fail) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m < n; ++m) {
        if (!palindromic_defect(Uniform(n, m)).ok)
          fail("uniform " + nm_witness(n, m));
        if (!palindromic_defect(QNiform(n, m)).ok)
          fail("qniform " + nm_witness(n, m));
      }
    for (int n = 1; n <= std::min(max_n, 6); ++n)
      for (int m = 0; m < n; ++m)
        if (!palindromic_defect(uniform_lattice(n, m)).ok)
          fail("lattice " + nm_witness(n, m));
  });

  runner.check("kl/q1_degeneration", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        if (substitute_q_one(kl_polynomial(QNiform(n, m)).poly) !=
            kl_polynomial(Uniform(n, m)).poly)
          fail(nm_witness(n, m));
  });

  runner.check("kl/positivity", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m) {
        for (const auto& c : kl_polynomial(Uniform(n, m)).poly.coeffs())
          if (c < 0) fail("uniform " + nm_witness(n, m));
        for (const auto& c : kl_polynomial(QNiform(n, m)).poly.coeffs())
          for (const auto& cc : c.coeffs())
            if (cc < 0) fail("qniform " + nm_witness(n, m));
      }
  });

  runner.check("ekl/closed_form_equals_recursion", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m) {
        const EKLTable table = ekl_recursive(n, m);
        for (int i = 0; i < table.degree_count(); ++i)
          if (table.entries[static_cast<size_t>(i)] !=
              ekl_closed_form(n, m, i))
            fail(nmi_witness(n, m, i));
      }
  });

  runner.check("ekl/closed_form_shapes_valid", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        for (int i = 0; 2 * i < n - m; ++i) {
          try {
            ekl_closed_form(n, m, i);
          } catch (const InvalidPartitionError&) {
            fail(nmi_witness(n, m, i));
          }
        }
  });

  runner.check("ekl/scalar_consistency", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m) {
        const EKLTable table = ekl_recursive(n, m);
        const auto scalar = kl_polynomial(Uniform(n, m));
        for (int i = 0; i < table.degree_count(); ++i) {
          const BigInt d = rep_dim(table.entries[static_cast<size_t>(i)]);
          if (d != scalar.poly.coeff(i)) fail(nmi_witness(n, m, i));
          if (d != ekl_scalar_closed_form(n, m, i))
            fail("closed " + nmi_witness(n, m, i));
        }
      }
  });

  runner.check("ekl/q_consistency", [&](auto&& fail) {
    for (int n = 0; n <= std::min(max_n, 10); ++n)
      for (int m = 0; m <= n; ++m) {
        const EKLTable table = ekl_unipotent(n, m);
        const auto qside = kl_polynomial(QNiform(n, m));
        for (int i = 0; i < table.degree_count(); ++i)
          if (rep_qdim(table.entries[static_cast<size_t>(i)]) !=
              qside.poly.coeff(i))
            fail(nmi_witness(n, m, i));
      }
  });

  runner.check("ekl/q_closed_form_matches_qdim", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        for (int i = 0; 2 * i < n - m; ++i)
          if (ekl_q_closed_form(n, m, i) !=
              rep_qdim(ekl_closed_form(n, m, i)))
            fail(nmi_witness(n, m, i));
  });

  runner.check("ekl/q_closed_form_at_one", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        for (int i = 0; 2 * i < n - m; ++i)
          if (evaluate(ekl_q_closed_form(n, m, i), 1) !=
              ekl_scalar_closed_form(n, m, i))
            fail(nmi_witness(n, m, i));
  });

  runner.check("ekl/positivity", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        for (const auto& entry : ekl_recursive(n, m).entries)
          for (const auto& [lambda, mult] : entry.terms())
            if (mult < 0) fail(nm_witness(n, m) + " " + lambda.to_string());
  });

  runner.check("ekl/unipotent_table_matches_symmetric", [&](auto&& fail) {
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m)
        if (ekl_unipotent(n, m).entries != ekl_recursive(n, m).entries)
          fail(nm_witness(n, m));
  });

  for (const BigInt& q_value : options.q_values) {
    const std::string suffix = " at q=" + to_decimal(q_value);
    runner.check("numeric/gaussian_subspace_count" + suffix, [&](auto&& fail) {
      for (int n = 0; n <= std::min(max_n, 10); ++n)
        for (int k = 0; k <= n; ++k) {
          // Independent route: [n choose k]_q = Π (q^{n-j} - 1)/(q^{k-j} - 1).
          BigInt numerator = 1, denominator = 1;
          for (int j = 0; j < k; ++j) {
            numerator *= boost::multiprecision::pow(
                             q_value, static_cast<unsigned>(n - j)) -
                         1;
            denominator *= boost::multiprecision::pow(
                               q_value, static_cast<unsigned>(k - j)) -
                           1;
          }
          if (evaluate(gaussian_binomial(n, k), q_value) !=
              detail::ring_div_exact(numerator, denominator))
            fail(nm_witness(n, k) + suffix);
        }
    });

    runner.check("numeric/boolean_charpoly_roots" + suffix, [&](auto&& fail) {
      for (int k = 0; k <= std::min(max_n, 8); ++k) {
        TPoly expected(1);
        BigInt power = 1;
        for (int j = 0; j < k; ++j) {
          expected = expected * TPoly{BigInt(-power), BigInt(1)};
          power *= q_value;
        }
        if (substitute_q(char_poly(QNiform(k, 0)), q_value) != expected)
          fail("k=" + std::to_string(k) + suffix);
      }
    });

    runner.check("numeric/kl_positivity" + suffix, [&](auto&& fail) {
      for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= n; ++m)
          for (const auto& c :
               substitute_q(kl_polynomial(QNiform(n, m)).poly, q_value)
                   .coeffs())
            if (c < 0) fail(nm_witness(n, m) + suffix);
    });
  }

  return results;
}

}  // namespace klm
