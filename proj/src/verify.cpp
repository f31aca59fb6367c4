#include <functional>
#include <random>
#include <sstream>

#include "dbgf/cli.hpp"
#include "dbgf/formula.hpp"
#include "dbgf/mtt.hpp"
#include "dbgf/oracle.hpp"

namespace dbgf::cli {

namespace {

constexpr int kMaxVerifyOrder = 12;
constexpr int kMaxVerifyMttOrder = 6;
constexpr int kCharpolyPoints = 5;

std::string spec_name(const LinearSpec& spec) { return "n=" + std::to_string(spec.n) + " l=" + describe(spec); }

FeedbackFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> table(std::size_t{1} << (n - 1));
  for (auto& b : table) b = static_cast<std::uint8_t>(rng() & 1u);
  return FeedbackFunction(n, std::move(table));
}

// Collects the first counterexample of a family of checks.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  void commit(Report& report, const std::string& name, const std::string& unit) {
    report.add(name, failure_.empty(), failure_.empty() ? std::to_string(count_) + " " + unit : failure_);
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

std::string mismatch(const std::string& what, const IntPolynomial& a, const IntPolynomial& b) {
  return what + ": " + a.to_pretty_string() + " vs " + b.to_pretty_string();
}

}  // namespace

Report verify_suite(int n_min, int n_max, std::size_t samples, std::uint64_t seed, unsigned workers) {
  check_order(n_min, kMaxVerifyOrder);
  check_order(n_max, kMaxVerifyOrder);
  Report report;
  std::mt19937_64 rng(seed);

  for (int n = n_min; n <= n_max; ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    const std::uint32_t tap_sets = 1u << (n - 1);
    const BigInt total = pow2((std::size_t{1} << (n - 1)) - static_cast<std::size_t>(n));

    Check counts, profiles, fryers, oracle_route, mtt_route, complement, charpoly;
    for (std::uint32_t mask = 0; mask < tap_sets; ++mask) {
      const LinearSpec spec = LinearSpec::from_mask(n, mask);
      const FeedbackFunction f = make_linear(spec);
      const CycleProfile fib = fibonacci_cycles(f);
      const IntPolynomial g = g_from_profile(n, fib);

      counts.expect(g.evaluate(1) == total, [&] { return spec_name(spec) + ": G(1) = " + g.evaluate(1).get_str(); });

      const CycleProfile gal = galois_cycles(spec);
      const CycleProfile rev = fibonacci_cycles(make_linear(reverse_taps(spec)));
      profiles.expect(fib == gal && fib == rev, [&] {
        return spec_name(spec) + ": fibonacci " + to_string(fib) + ", galois " + to_string(gal) + ", reversed " +
               to_string(rev);
      });

      if (fib.is_maximal(n)) {
        const IntPolynomial fr = g_fryers(n);
        fryers.expect(g == fr, [&] { return mismatch(spec_name(spec), g, fr); });
      }

      if (n <= kMaxOracleOrder) {
        const IntPolynomial brute = g_bruteforce(f, workers);
        oracle_route.expect(g == brute, [&] { return mismatch(spec_name(spec) + " formula vs oracle", g, brute); });

        LinearSpec one = spec;
        one.constant = true;
        const IntPolynomial brute1 = g_bruteforce(make_linear(one), workers);
        const IntPolynomial flipped = reciprocal_transform(g, std::size_t{1} << (n - 1));
        complement.expect(brute1 == flipped, [&] { return mismatch(spec_name(one), brute1, flipped); });
      }

      if (n <= kMaxVerifyMttOrder) {
        const IntPolynomial det = g_mtt(f, workers);
        mtt_route.expect(g == det, [&] { return mismatch(spec_name(spec) + " formula vs mtt", g, det); });

        std::uniform_int_distribution<int> point(-6, 6);
        for (int k = 0; k < kCharpolyPoints; ++k) {
          const BigInt z0 = point(rng);
          const BigInt y0 = point(rng);
          const CharpolyCheck cc = charpoly_factor_values(spec, z0, y0);
          charpoly.expect(cc.pass, [&] {
            return spec_name(spec) + " at z=" + z0.get_str() + ", y=" + y0.get_str() + ": det " +
                   cc.determinant.get_str() + " vs product " + cc.cycle_product.get_str();
          });
        }
      }
    }

    counts.commit(report, "total_count" + tag, "tap sets");
    profiles.commit(report, "cycle_profiles" + tag, "tap sets");
    fryers.commit(report, "maximal_period_formula" + tag, "maximal tap sets");
    {
      const IntPolynomial z = g_zero(n);
      const IntPolynomial l = g_linear(LinearSpec{n, {}, false});
      report.add("zero_function" + tag, z == l, z == l ? "agree, degree " + std::to_string(z.degree()) : mismatch("g_zero vs g_linear", z, l));
    }
    if (n <= kMaxOracleOrder) {
      oracle_route.commit(report, "formula_eq_oracle" + tag, "tap sets");
      complement.commit(report, "constant_one_reversal" + tag, "tap sets");
    }
    if (n <= kMaxVerifyMttOrder) {
      mtt_route.commit(report, "formula_eq_mtt" + tag, "tap sets");
      charpoly.commit(report, "charpoly_factorization" + tag, "points");
    }

    if (n <= kMaxOracleOrder) {
      Check nonlinear;
      for (std::size_t i = 0; i < samples; ++i) {
        const FeedbackFunction f = random_function(n, rng);
        const IntPolynomial a = g_mtt(f, workers);
        const IntPolynomial b = g_bruteforce(f, workers);
        nonlinear.expect(a == b, [&] { return mismatch("f=0x" + f.to_hex() + " mtt vs oracle", a, b); });
      }
      nonlinear.commit(report, "mtt_eq_oracle_random" + tag, "random functions");
    }

    if (n <= kMaxTreeEnumOrder) {
      const PartitionReport p = verify_partition(n, workers);
      for (const auto& a : p.report.assertions) report.add("partition." + a.name + tag, a.pass, a.detail);

      Check tree_sum;
      for (std::size_t i = 0; i < samples; ++i) {
        const FeedbackFunction f = random_function(n, rng);
        const IntPolynomial a = weighted_tree_sum(n, f, workers);
        const IntPolynomial b = reduced_determinant(weighted_adjacency(f), workers);
        tree_sum.expect(a == b, [&] { return mismatch("f=0x" + f.to_hex() + " tree sum vs determinant", a, b); });
      }
      tree_sum.commit(report, "tree_sum_eq_determinant" + tag, "random functions");
    }
  }
  return report;
}

}  // namespace dbgf::cli
