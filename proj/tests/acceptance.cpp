// Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion; every
// comparison is exact (tolerance 0). Exit code is the number of failures.

#include "ribbonlab/cli.hpp"
#include "ribbonlab/conormal.hpp"
#include "ribbonlab/families.hpp"
#include "ribbonlab/fitting.hpp"
#include "ribbonlab/groebner.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"
#include "ribbonlab/syzygy.hpp"
#include "ribbonlab/xg.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace ribbonlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    note << (pass ? "failures: " : "; ") << why;
    pass = false;
  }
};

std::string sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void criterion1(Outcome& o) {
  for (int g = 3; g <= 8; ++g) {
    const std::size_t dim = ideal_slice(g, 2).dimension();
    if (dim != static_cast<std::size_t>((g - 1) * (g - 2) / 2)) o.fail("g=" + std::to_string(g) + " dim " + std::to_string(dim));
  }
  if (o.pass) o.note << "g=3..8";
}

void criterion2(Outcome& o) {
  for (int g = 3; g <= 6; ++g) {
    Sampler s = Sampler::stream(kSeed, 200 + static_cast<std::uint64_t>(g));
    for (int k = 0; k < 50; ++k) {
      const QuadForm q = s.quad_form(g, k % 5 == 0);
      if (!(phi_d(q_to_quadric(q), 2).matrix == q.matrix())) o.fail("g=" + std::to_string(g) + " sample " + std::to_string(k));
    }
  }
  if (o.pass) o.note << "50 samples per g=3..6";
}

void criterion3(Outcome& o) {
  std::size_t degenerate = 0;
  for (int g = 3; g <= 6; ++g) {
    Sampler s = Sampler::stream(kSeed, 300 + static_cast<std::uint64_t>(g));
    for (int k = 0; k < 100; ++k) {
      const QuadForm q = s.quad_form(g, k % 2 == 0);
      const WPoly x = q_to_quadric(q);
      const bool det_zero = det(q.matrix()) == 0;
      const bool rank_drop = rank(phi_d(x, 2).matrix) < static_cast<std::size_t>(g - 2);
      // A nonzero lambda with psi_2(lambda, x) = 0 is a nonzero left kernel vector of phi_2.
      const auto left = kernel_basis(phi_d(x, 2).matrix.transposed());
      bool lambda_exists = false;
      if (!left.empty()) lambda_exists = psi_d(LambdaFunctional(g, left.front()), x, 2).is_zero();
      degenerate += det_zero ? 1 : 0;
      if (det_zero != rank_drop || rank_drop != lambda_exists) o.fail("g=" + std::to_string(g) + " sample " + std::to_string(k));
    }
  }
  o.note << (o.pass ? "" : "; ") << "400 samples, " << degenerate << " degenerate";
}

void criterion4(Outcome& o) {
  for (int g = 4; g <= 6; ++g)
    for (int d = 3; d <= 4; ++d) {
      const std::size_t rk = rank(phi_on_slice(ideal_slice(g, d)));
      const std::size_t want = static_cast<std::size_t>(g - 2) * conormal_cols(g, d);
      if (rk != want) o.fail("g=" + std::to_string(g) + " d=" + std::to_string(d) + " rank " + std::to_string(rk) + " want " + std::to_string(want));
    }
  if (o.pass) o.note << "g=4..6, d=3,4";
}

void criterion5(Outcome& o) {
  for (int g = 3; g <= 5; ++g)
    for (int d = 3; d <= 4; ++d) {
      const IdealSlice slice = ideal_slice(g, d);
      std::vector<WPoly> kernel;
      for (const RatVector& c : kernel_basis(phi_on_slice(slice))) {
        WPoly x(g);
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0) x += slice.basis[k] * c[k];
        kernel.push_back(std::move(x));
      }
      const IdealSlice ker = make_slice(g, d, kernel);
      const IdealSlice square = d >= 4 ? ideal_square_slice(g, d) : make_slice(g, d, {});
      if (!(ker == square)) {
        o.fail("g=" + std::to_string(g) + " d=" + std::to_string(d) + ": dim ker " + std::to_string(ker.dimension()) +
               " vs dim square " + std::to_string(square.dimension()));
        if (!ker.basis.empty()) o.note << " (kernel spanned by " << ker.basis.front().to_string() << ")";
      }
    }
  if (o.pass) o.note << "g=3..5, d=3,4";
}

void criterion6(Outcome& o) {
  for (int g = 3; g <= 6; ++g) {
    Sampler s = Sampler::stream(kSeed, 600 + static_cast<std::uint64_t>(g));
    std::vector<std::size_t> expected;
    for (int d = 0; d <= 6; ++d) expected.push_back(d >= 2 ? static_cast<std::size_t>((2 * d - 1) * (g - 1)) : expected_ribbon_hilbert(g, d));
    const auto check = [&](const XgIdeal& ideal, const std::string& name) {
      const auto hf = hilbert_function(ideal, Grading::weighted, 6);
      for (int d = 2; d <= 6; ++d)
        if (hf[static_cast<std::size_t>(d)] != expected[static_cast<std::size_t>(d)]) {
          o.fail(name + " g=" + std::to_string(g) + ": " + sizes(hf));
          return;
        }
    };
    check(split_ribbon_ideal(g), "split ribbon");
    check(hyperelliptic_model(g, s.squarefree_form(2 * g + 2)), "hyperelliptic");
    check(canonical_ribbon_ideal(g, ribbon_ell(s.lambda(g))), "canonical ribbon");
  }
  if (o.pass) o.note << "d=2..6, g=3..6; split, hyperelliptic with random squarefree h, canonical with random ribbon-compatible directions";
}

void criterion7(Outcome& o) {
  for (int g = 3; g <= 6; ++g) {
    const XgIdeal ideal = split_ribbon_ideal(g);
    const auto hf = hilbert_function(ideal, Grading::weighted, 7);
    std::string certified;
    for (MonomialOrder order : {MonomialOrder::graded_lex, MonomialOrder::graded_revlex}) {
      const GroebnerResult gb = buchberger(ideal, order, 7);
      if (gb.input_is_groebner && normal_monomial_counts(gb, 7) == hf) {
        certified = order_name(order);
        break;
      }
    }
    if (certified.empty()) o.fail("g=" + std::to_string(g) + " not certified");
    else o.note << "g=" << g << ":" << certified << " ";

    const auto koszul = hilbert_function(ideal, Grading::koszul, 6);
    std::vector<std::size_t> series{1}, with_g_minus_2{1, static_cast<std::size_t>(g)}, with_g_minus_1{1, static_cast<std::size_t>(g)};
    for (int n = 1; n <= 6; ++n) series.push_back(static_cast<std::size_t>(2 * n * (g - 1)));
    for (int n = 2; n <= 7; ++n) {
      with_g_minus_2.push_back(static_cast<std::size_t>((g - 2) * (2 * n - 1)));
      with_g_minus_1.push_back(static_cast<std::size_t>((g - 1) * (2 * n - 1)));
    }
    if (koszul != series) o.fail("g=" + std::to_string(g) + " Koszul series " + sizes(koszul));
    if (hf != with_g_minus_1) o.fail("g=" + std::to_string(g) + " weighted series does not have coefficient g-1");
    if (hf == with_g_minus_2) o.fail("g=" + std::to_string(g) + " weighted series has coefficient g-2");
    if (g == 4) o.note << "[g=4 Koszul " << sizes(koszul) << "; weighted " << sizes(hf) << " = 1+gt+(g-1)sum(2n-1)t^n, not (g-2)] ";
  }
}

void criterion8(Outcome& o) {
  const std::set<int> allowed{3, 4, 5, 6};
  for (int g = 3; g <= 4; ++g) {
    const SyzygyReport rep = syzygies_by_degree(split_ribbon_ideal(g), 6, ShapeFamily::split_ribbon);
    std::string shapes;
    for (const SyzygyRecord& r : rep.minimal) {
      shapes += (shapes.empty() ? "" : ", ") + std::to_string(r.degree) + ":" + r.shape;
      if (!allowed.contains(r.degree)) o.fail("g=" + std::to_string(g) + " minimal syzygy in degree " + std::to_string(r.degree));
    }
    if (!rep.all_shapes_match) o.fail("g=" + std::to_string(g) + " split ribbon shapes {" + shapes + "}");
    o.note << " [g=" << g << " split: " << rep.minimal.size() << " minimal]";
  }
  Sampler s = Sampler::stream(kSeed, 800);
  const SyzygyReport hyp = syzygies_by_degree(hyperelliptic_model(3, s.squarefree_form(8)), 7, ShapeFamily::hyperelliptic);
  bool found = false;
  std::string shapes;
  for (const SyzygyRecord& r : hyp.minimal) {
    shapes += (shapes.empty() ? "" : ", ") + std::to_string(r.degree) + ":" + r.shape;
    if (r.degree == 5 && r.shape.find("uuu(uu)") != std::string::npos) found = true;
  }
  if (!found) o.fail("hyperelliptic g=3 has no degree-5 uuu(uu) syzygy; minimal {" + shapes + "}");
}

void criterion9(Outcome& o) {
  std::size_t total = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    const PowerIdealReport rep = verify_power_ideal(m, m, FittingMode::phi2);
    total += rep.monomials_checked;
    if (!rep.all_realized) o.fail("phi2 m=" + std::to_string(m));
  }
  for (auto [m, r] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 5}, {2, 7}}) {
    const PowerIdealReport rep = verify_power_ideal(m, r, FittingMode::blocks);
    total += rep.monomials_checked;
    if (!rep.all_realized) o.fail("blocks m=" + std::to_string(m) + " r=" + std::to_string(r));
  }
  if (o.pass) o.note << total << " monomials realized";
}

void criterion10(Outcome& o) {
  for (int g = 3; g <= 5; ++g)
    for (int d = 1; d <= 3; ++d) {
      Sampler s = Sampler::stream(kSeed, 1000 + 10 * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(d));
      const BinaryForm h = s.squarefree_form(2 * g + 2);
      const OrderDoublingReport rep = order_doubling_experiment(g, h, d, ribbon_ell(s.lambda(g)));
      if (rep.hyperell_order != static_cast<std::size_t>(d) || rep.ribbon_order_after_rescale != static_cast<std::size_t>(2 * d) ||
          !(rep.section == h))
        o.fail("g=" + std::to_string(g) + " d=" + std::to_string(d));
    }
  if (o.pass) o.note << "g=3..5, d=1..3";
}

void criterion11(Outcome& o) {
  const WPoly f = WPoly::u(3, 0) * WPoly::u(3, 2) - WPoly::u(3, 1) * WPoly::u(3, 1);
  const IdealSlice s = eliminate_v(canonical_ribbon_ideal(3, {WPoly::v(3, 0)}), 4)[4];
  if (!(s == make_slice(3, 4, {f * f}))) o.fail("degree-4 slice has dimension " + std::to_string(s.dimension()));
  else o.note << "span of " << (f * f).to_string();
}

void criterion12(Outcome& o) {
  const std::string split_family = to_json(constant_family(split_ribbon_ideal(4), 5)).dump();
  const std::vector<std::vector<std::string>> commands{
      {"limit-quadric", "--g", "4", "--q", "[[1,0],[0,0]]"},
      {"limit-relation", "--g", "4", "--d", "3", "--poly", "u0*u0*u2 - u0*u1^2"},
      {"verify", "--suite", "all", "--gmax", "4", "--dmax", "3", "--seed", "7"},
      {"family", "build", "--g", "4", "--d", "1", "--seed", "7"},
      {"family", "order", "--family", split_family},
      {"xg", "--model", "hyperelliptic", "--g", "4", "--op", "syzygies", "--seed", "7"},
      {"xg", "--model", "canonical", "--g", "5", "--op", "eliminate", "--max-degree", "3", "--seed", "7"},
      {"xg", "--model", "split", "--g", "5", "--op", "groebner", "--order", "graded_revlex"},
      {"xg", "--model", "split", "--g", "4", "--op", "hilbert"},
      {"xg", "--model", "split", "--g", "4", "--op", "ideal"},
      {"fitting", "--m", "3", "--r", "5", "--mode", "blocks"},
  };
  std::size_t compared = 0;
  for (const auto& cmd : commands) {
    const CliOutcome a = run_cli(cmd), b = run_cli(cmd);
    if (a.text != b.text || a.exit_code != b.exit_code) o.fail(cmd.front());
    ++compared;
  }
  // The family pipeline, fed with the output of the previous step.
  const Json built = run_cli({"family", "build", "--g", "3", "--d", "2", "--seed", "7"}).result;
  const std::string fam = built["payload"]["family"].dump();
  const std::vector<std::vector<std::string>> chained{{"family", "rescale", "--family", fam, "--k", "2"}};
  for (const auto& cmd : chained) {
    const CliOutcome a = run_cli(cmd), b = run_cli(cmd);
    if (a.text != b.text) o.fail("family rescale");
    const std::string rescaled = a.result["payload"]["family"].dump();
    if (run_cli({"family", "discriminant", "--family", rescaled}).text != run_cli({"family", "discriminant", "--family", rescaled}).text)
      o.fail("family discriminant");
    compared += 2;
  }
  if (o.pass) o.note << compared << " commands byte-identical on rerun";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"quadric-space dimension", criterion1},   {"phi_2 identity", criterion2},
      {"limit-criterion agreement", criterion3}, {"phi_d surjectivity", criterion4},
      {"kernel identification", criterion5},     {"ribbon Hilbert function", criterion6},
      {"Groebner certificate", criterion7},      {"syzygy shapes", criterion8},
      {"Fitting minors", criterion9},            {"order doubling", criterion10},
      {"g=3 elimination", criterion11},          {"determinism", criterion12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " [" << criteria[i].first
              << "; exact, tolerance 0] " << o.note.str() << " (" << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures;
}
