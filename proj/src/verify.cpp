#include "ribbonlab/verify.hpp"

#include "ribbonlab/conormal.hpp"
#include "ribbonlab/families.hpp"
#include "ribbonlab/fitting.hpp"
#include "ribbonlab/groebner.hpp"
#include "ribbonlab/ideal_span.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"
#include "ribbonlab/syzygy.hpp"
#include "ribbonlab/xg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

namespace ribbonlab {

unsigned thread_cap() {
  if (const char* env = std::getenv("RIBBONLAB_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PropertyResult> run_tasks(const std::vector<std::function<PropertyResult()>>& tasks) {
  std::vector<PropertyResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const unsigned n = std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"rnc", "conormal", "xg", "fitting", "families"};
  return suites;
}

namespace {

using Task = std::function<PropertyResult()>;

Task make_task(std::string name, Json params, std::function<void(PropertyResult&)> body) {
  return [name = std::move(name), params = std::move(params), body = std::move(body)] {
    PropertyResult r;
    r.name = name;
    r.params = params;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexample = Json{{"exception", e.what()}};
    }
    return r;
  };
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

// ---------------------------------------------------------------------------

void rnc_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  for (int g = 3; g <= o.gmax; ++g) {
    tasks.push_back(make_task("quadric_space_dimension", {{"g", g}}, [g](PropertyResult& r) {
      const IdealSlice s = ideal_slice(g, 2);
      const std::size_t expected = static_cast<std::size_t>((g - 1) * (g - 2) / 2);
      const bool spans = make_slice(g, 2, hankel_generators(g)) == s;
      r.details = {{"dimension", s.dimension()}, {"expected", expected}, {"hankel_quadrics_span", spans}};
      r.pass = s.dimension() == expected && spans;
    }));
    for (int d = 2; d <= o.dmax; ++d) {
      tasks.push_back(make_task("ideal_dimension", {{"g", g}, {"d", d}}, [g, d](PropertyResult& r) {
        const IdealSlice s = ideal_slice(g, d);
        bool vanish = true;
        for (const WPoly& p : s.basis) vanish = vanish && veronese_pullback(p, d).is_zero();
        r.details = {{"dimension", s.dimension()}, {"expected", expected_ideal_dimension(g, d)}, {"vanishes_on_curve", vanish}};
        r.pass = vanish && s.dimension() == expected_ideal_dimension(g, d);
      }));
      if (d >= 4) {
        tasks.push_back(make_task("square_inside_ideal", {{"g", g}, {"d", d}}, [g, d](PropertyResult& r) {
          const IdealSlice sq = ideal_square_slice(g, d);
          r.details = {{"square_dimension", sq.dimension()}};
          r.pass = sq.is_subspace_of(ideal_slice(g, d));
        }));
      }
      if (d >= 3) {
        tasks.push_back(make_task("conormal_quotient_dimension", {{"g", g}, {"d", d}}, [g, d](PropertyResult& r) {
          const std::size_t ideal = ideal_slice(g, d).dimension();
          const std::size_t square = d >= 4 ? ideal_square_slice(g, d).dimension() : 0;
          const std::size_t expected = static_cast<std::size_t>(g - 2) * conormal_cols(g, d);
          r.details = {{"ideal_dimension", ideal}, {"square_dimension", square}, {"difference", ideal - square}, {"expected", expected}};
          r.pass = ideal - square == expected;
        }));
      }
    }
  }
}

void conormal_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::uint64_t seed = o.seed;
  for (int g = 3; g <= o.gmax; ++g) {
    tasks.push_back(make_task("phi2_inverts_q_to_quadric", {{"g", g}, {"samples", 20}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 1000 + static_cast<std::uint64_t>(g));
      r.pass = true;
      for (int k = 0; k < 20 && r.pass; ++k) {
        const QuadForm q = s.quad_form(g, k % 2 == 1);
        const ConormalMatrix phi = phi_d(q_to_quadric(q), 2);
        if (!(phi.matrix == q.matrix())) {
          r.pass = false;
          r.counterexample = {{"q", to_json(q.matrix())}, {"phi2", to_json(phi.matrix)}};
        }
      }
    }));
    tasks.push_back(make_task("limit_criterion_agreement", {{"g", g}, {"samples", 40}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 2000 + static_cast<std::uint64_t>(g));
      r.pass = true;
      std::size_t degenerate = 0;
      for (int k = 0; k < 40 && r.pass; ++k) {
        const QuadForm q = s.quad_form(g, k % 2 == 1);
        const QuadricVerdict qv = is_limit_quadric(q);
        const WPoly x = q_to_quadric(q);
        const RelationVerdict rv = is_limit_relation(x, 2);
        bool lambda_kills = false;
        if (rv.witness) lambda_kills = psi_d(LambdaFunctional(g, *rv.witness), x, 2).is_zero();
        if (qv.witness) lambda_kills = lambda_kills && psi_d(LambdaFunctional(g, *qv.witness), x, 2).is_zero();
        degenerate += qv.degenerate ? 1 : 0;
        if (qv.degenerate != rv.limit || rv.limit != lambda_kills) {
          r.pass = false;
          r.counterexample = {{"q", to_json(q.matrix())}, {"det_zero", qv.degenerate}, {"rank_drop", rv.limit}, {"lambda", lambda_kills}};
        }
      }
      r.details = {{"degenerate_samples", degenerate}};
    }));
    tasks.push_back(make_task("phi2_rank_equals_q_rank", {{"g", g}, {"samples", 20}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 2500 + static_cast<std::uint64_t>(g));
      r.pass = true;
      for (int k = 0; k < 20 && r.pass; ++k) {
        const QuadForm q = s.quad_form(g, k % 2 == 1);
        const std::size_t rk = rank(phi_d(q_to_quadric(q), 2).matrix);
        if (rk != rank(q.matrix())) {
          r.pass = false;
          r.counterexample = {{"q", to_json(q.matrix())}, {"phi2_rank", rk}};
        }
      }
    }));
    for (int d = 2; d < o.dmax; ++d) {
      tasks.push_back(make_task("ribbon_slice_ideal_property", {{"g", g}, {"d", d}}, [g, d, seed](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 2700 + 10 * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(d));
        const LambdaFunctional lambda = s.lambda(g);
        const IdealSlice lower = ribbon_slice(lambda, d), upper = ribbon_slice(lambda, d + 1);
        r.pass = true;
        for (const WPoly& x : lower.basis)
          for (int j = 0; j < g && r.pass; ++j)
            if (!upper.contains(WPoly::u(g, j) * x)) {
              r.pass = false;
              r.counterexample = {{"lambda", to_json(lambda.coords())}, {"x", x.to_string()}, {"j", j}};
            }
        r.details = {{"dimension_d", lower.dimension()}, {"dimension_d_plus_1", upper.dimension()}};
      }));
    }
    if (g >= 4) {
      tasks.push_back(make_task("phi_module_property", {{"g", g}}, [g, seed](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 3000 + static_cast<std::uint64_t>(g));
        const WPoly x = q_to_quadric(s.quad_form(g, false));
        const ConormalMatrix phi3 = phi_d(WPoly::u(g, 0) * x, 3);
        const ConormalMatrix phi2 = phi_d(x, 2);
        const BinaryForm factor = veronese_pullback(WPoly::u(g, 0));
        r.pass = true;
        for (std::size_t i = 0; i < phi2.matrix.rows(); ++i)
          r.pass = r.pass && phi3.row_form(i) == phi2.row_form(i) * factor;
      }));
    }
    for (int d = 3; d <= o.dmax; ++d) {
      if (g >= 4) {
        tasks.push_back(make_task("phi_surjective", {{"g", g}, {"d", d}}, [g, d](PropertyResult& r) {
          const std::size_t rk = rank(phi_on_slice(ideal_slice(g, d)));
          const std::size_t expected = static_cast<std::size_t>(g - 2) * conormal_cols(g, d);
          r.details = {{"rank", rk}, {"expected", expected}};
          r.pass = rk == expected;
        }));
      }
      if (g <= 5) {
        tasks.push_back(make_task("phi_kernel_is_square", {{"g", g}, {"d", d}}, [g, d](PropertyResult& r) {
          const IdealSlice slice = ideal_slice(g, d);
          std::vector<WPoly> kernel;
          for (const RatVector& c : kernel_basis(phi_on_slice(slice))) {
            WPoly x(g);
            for (std::size_t k = 0; k < c.size(); ++k)
              if (c[k] != 0) x += slice.basis[k] * c[k];
            kernel.push_back(std::move(x));
          }
          const IdealSlice ker = make_slice(g, d, kernel);
          const IdealSlice sq = d >= 4 ? ideal_square_slice(g, d) : make_slice(g, d, {});
          r.details = {{"kernel_dimension", ker.dimension()}, {"square_dimension", sq.dimension()}};
          r.pass = ker == sq;
        }));
      }
    }
  }
}

void xg_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::uint64_t seed = o.seed;
  for (int g = 3; g <= o.gmax; ++g) {
    tasks.push_back(make_task("split_ribbon_hilbert", {{"g", g}, {"degrees", "0..6"}}, [g](PropertyResult& r) {
      const auto hf = hilbert_function(split_ribbon_ideal(g), Grading::weighted, 6);
      std::vector<std::size_t> expected;
      for (int d = 0; d <= 6; ++d) expected.push_back(expected_ribbon_hilbert(g, d));
      r.details = {{"computed", sizes(hf)}, {"expected", sizes(expected)}};
      r.pass = hf == expected;
    }));
    tasks.push_back(make_task("groebner_certificate", {{"g", g}, {"degree_cap", 7}}, [g](PropertyResult& r) {
      const XgIdeal ideal = split_ribbon_ideal(g);
      const auto hf = hilbert_function(ideal, Grading::weighted, 7);
      for (MonomialOrder order : {MonomialOrder::graded_lex, MonomialOrder::graded_revlex}) {
        const GroebnerResult gb = buchberger(ideal, order, 7);
        const auto counts = normal_monomial_counts(gb, 7);
        r.details[order_name(order)] = {{"input_is_groebner", gb.input_is_groebner},
                                        {"normal_counts_match_hilbert", counts == hf}};
        if (gb.input_is_groebner && counts == hf && !r.pass) {
          r.pass = true;
          r.details["certified_order"] = order_name(order);
        }
      }
    }));
    tasks.push_back(make_task("koszul_hilbert_series", {{"g", g}, {"degrees", "0..5"}}, [g](PropertyResult& r) {
      const auto hk = hilbert_function(split_ribbon_ideal(g), Grading::koszul, 5);
      const auto hw = hilbert_function(split_ribbon_ideal(g), Grading::weighted, 5);
      std::vector<std::size_t> koszul_expected{1}, displayed{1, static_cast<std::size_t>(g)}, corrected{1, static_cast<std::size_t>(g)};
      for (int n = 1; n <= 5; ++n) koszul_expected.push_back(static_cast<std::size_t>(2 * n * (g - 1)));
      for (int n = 2; n <= 5; ++n) {
        displayed.push_back(static_cast<std::size_t>((g - 2) * (2 * n - 1)));
        corrected.push_back(static_cast<std::size_t>((g - 1) * (2 * n - 1)));
      }
      r.details = {{"koszul_grading", sizes(hk)},
                   {"weighted_grading", sizes(hw)},
                   {"weighted_matches_coefficient_g_minus_2", hw == displayed},
                   {"weighted_matches_coefficient_g_minus_1", hw == corrected},
                   {"koszul_matches_2n(g-1)", hk == koszul_expected}};
      r.pass = hk == koszul_expected && hw == corrected;
    }));
    if (g <= 5) {
      tasks.push_back(make_task("evaluation_oracle", {{"g", g}, {"degrees", "0..6"}}, [g](PropertyResult& r) {
        const XgIdeal ideal = split_ribbon_ideal(g);
        const GradedIdealSpan span(g, ideal.generators(), Grading::weighted, 6);
        r.pass = true;
        for (int d = 0; d <= 6 && r.pass; ++d) {
          for (const WPoly& p : span.basis(d)) {
            const auto [a, b] = split_ribbon_evaluation(p, d);
            if (!a.is_zero() || !b.is_zero()) {
              r.pass = false;
              r.counterexample = {{"degree", d}, {"polynomial", p.to_string()}};
              break;
            }
          }
          const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d);
          const int base_deg = d * (g - 1);
          const int eps_deg = std::max(0, (d - 2) * (g - 1) + (g - 3));
          RatMatrix eval(static_cast<std::size_t>(base_deg + eps_deg + 2), mb.size());
          for (std::size_t c = 0; c < mb.size(); ++c) {
            const auto [a, b] = split_ribbon_evaluation(WPoly::term(g, mb.monomials[c]), d);
            for (int k = 0; k <= a.degree(); ++k) eval(static_cast<std::size_t>(k), c) = a[k];
            for (int k = 0; k <= b.degree(); ++k) eval(static_cast<std::size_t>(base_deg + 1 + k), c) = b[k];
          }
          if (mb.size() - rank(eval) != span.ideal_dimension(d)) {
            r.pass = false;
            r.counterexample = {{"degree", d}, {"kernel", mb.size() - rank(eval)}, {"ideal", span.ideal_dimension(d)}};
          }
        }
      }));
    }
    tasks.push_back(make_task("hyperelliptic_hilbert", {{"g", g}, {"degrees", "2..6"}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 4000 + static_cast<std::uint64_t>(g));
      const BinaryForm h = s.squarefree_form(2 * g + 2);
      const auto hf = hilbert_function(hyperelliptic_model(g, h), Grading::weighted, 6);
      r.pass = true;
      for (int d = 2; d <= 6; ++d) r.pass = r.pass && hf[static_cast<std::size_t>(d)] == expected_ribbon_hilbert(g, d);
      r.details = {{"h", h.to_string()}, {"computed", sizes(hf)}};
    }));
    tasks.push_back(make_task("canonical_ribbon_hilbert", {{"g", g}, {"degrees", "0..6"}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 5000 + static_cast<std::uint64_t>(g));
      const LambdaFunctional lambda = s.lambda(g);
      const XgIdeal ideal = canonical_ribbon_ideal(g, ribbon_ell(lambda));
      const auto hf = hilbert_function(ideal, Grading::weighted, 6);
      const auto split = hilbert_function(split_ribbon_ideal(g), Grading::weighted, 6);
      r.details = {{"lambda", to_json(lambda.coords())}, {"computed", sizes(hf)}};
      r.pass = hf == split;
    }));
    tasks.push_back(make_task("rescaling_invariance", {{"g", g}, {"degrees", "0..5"}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 6000 + static_cast<std::uint64_t>(g));
      const XgIdeal ideal = canonical_ribbon_ideal(g, ribbon_ell(s.lambda(g)));
      Rational t = 0;
      while (t == 0) t = s.rational();
      const XgIdeal scaled = scale_v(ideal, t);
      const auto a = eliminate_v(ideal, 5), b = eliminate_v(scaled, 5);
      r.pass = hilbert_function(ideal, Grading::weighted, 5) == hilbert_function(scaled, Grading::weighted, 5);
      for (int d = 0; d <= 5; ++d) r.pass = r.pass && a[static_cast<std::size_t>(d)].dimension() == b[static_cast<std::size_t>(d)].dimension();
      r.details = {{"t", to_string(t)}};
    }));
    if (g >= 4 && g <= 5) {
      tasks.push_back(make_task("lambda_dictionary", {{"g", g}}, [g, seed](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 7000 + static_cast<std::uint64_t>(g));
        const LambdaFunctional lambda = s.lambda(g);
        const LambdaMatch m = match_lambda(canonical_ribbon_ideal(g, ribbon_ell(lambda)));
        r.details = {{"lambda", to_json(lambda.normalized().coords())}, {"solution_dimension", m.solution_dimension}};
        r.pass = m.lambda && m.slices_equal && m.lambda->coords() == lambda.normalized().coords();
      }));
    }
    if (g <= 4) {
      tasks.push_back(make_task("syzygies_exact", {{"g", g}, {"degree_cap", 6}}, [g](PropertyResult& r) {
        const XgIdeal ideal = split_ribbon_ideal(g);
        const SyzygyReport rep = syzygies_by_degree(ideal, 6, ShapeFamily::split_ribbon);
        r.pass = true;
        for (const SyzygyRecord& rec : rep.minimal) r.pass = r.pass && is_syzygy(ideal, rec.coefficients);
        r.details = {{"minimal_generators", rep.minimal.size()}};
      }));
      tasks.push_back(make_task("syzygy_shapes", {{"g", g}, {"degree_cap", 6}}, [g](PropertyResult& r) {
        r.informational = true;
        const SyzygyReport rep = syzygies_by_degree(split_ribbon_ideal(g), 6, ShapeFamily::split_ribbon);
        r.details = to_json(rep);
        r.pass = rep.all_shapes_match;
      }));
    }
  }
  if (o.gmax >= 3) {
    tasks.push_back(make_task("g3_elimination", {{"g", 3}, {"degree", 4}}, [](PropertyResult& r) {
      const XgIdeal ideal = canonical_ribbon_ideal(3, {WPoly::v(3, 0)});
      const IdealSlice s = eliminate_v(ideal, 4)[4];
      const WPoly f = uu_binomial(3, uu_relations(3).front());
      r.pass = s == make_slice(3, 4, {f * f});
      r.details = to_json(s);
    }));
  }
}

void fitting_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  for (int g = 3; g <= o.gmax; ++g) {
    const std::size_t m = static_cast<std::size_t>(g - 2);
    tasks.push_back(make_task("power_ideal_phi2", {{"g", g}, {"m", m}, {"r", m}}, [m](PropertyResult& r) {
      const PowerIdealReport rep = verify_power_ideal(m, m, FittingMode::phi2);
      r.details = to_json(rep, false);
      r.pass = rep.all_realized;
    }));
    if (m <= 4) {
      tasks.push_back(make_task("phi2_minors_homogeneous", {{"m", m}}, [m](PropertyResult& r) {
        const LinFormMatrix mat = phi2_symbolic(m);
        std::size_t minors = 0;
        r.pass = true;
        std::vector<std::size_t> cols;
        std::function<void(std::size_t)> choose = [&](std::size_t start) {
          if (cols.size() == m) {
            ++minors;
            for (const auto& [e, c] : symbolic_minor(mat, cols)) {
              int deg = 0;
              for (int x : e) deg += x;
              if (deg != static_cast<int>(m)) r.pass = false;
            }
            return;
          }
          for (std::size_t c = start; c < mat.cols; ++c) {
            cols.push_back(c);
            choose(c + 1);
            cols.pop_back();
          }
        };
        choose(0);
        r.details = {{"minors", minors}};
      }));
    }
    for (int d = 3; d <= o.dmax; ++d) {
      const std::size_t rr = conormal_cols(g, d);
      tasks.push_back(make_task("power_ideal_blocks", {{"g", g}, {"d", d}, {"m", m}, {"r", rr}}, [m, rr](PropertyResult& r) {
        const PowerIdealReport rep = verify_power_ideal(m, rr, FittingMode::blocks);
        r.details = to_json(rep, false);
        r.pass = rep.all_realized;
      }));
    }
  }
}

void families_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::uint64_t seed = o.seed;
  const int dtop = std::min(o.dmax, 3);
  for (int g = 3; g <= o.gmax; ++g) {
    for (int d = 1; d <= dtop; ++d) {
      const std::uint64_t idx = 100 * static_cast<std::uint64_t>(g) + static_cast<std::uint64_t>(d);
      tasks.push_back(make_task("order_doubling", {{"g", g}, {"d", d}}, [g, d, seed, idx](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 8000 + idx);
        const BinaryForm h = s.squarefree_form(2 * g + 2);
        const auto ell = ribbon_ell(s.lambda(g));
        const OrderDoublingReport rep = order_doubling_experiment(g, h, d, ell);
        r.details = {{"h", h.to_string()},
                     {"N", rep.order_bound},
                     {"hyperell_order", rep.hyperell_order},
                     {"ribbon_order_after_rescale", rep.ribbon_order_after_rescale},
                     {"section_equals_h", rep.section_matches},
                     {"discriminant", to_string(rep.discriminant)}};
        r.pass = rep.passed && rep.discriminant != 0;
      }));
      tasks.push_back(make_task("rescale_round_trip", {{"g", g}, {"d", d}}, [g, d, seed, idx](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 9000 + idx);
        const BinaryForm h = s.squarefree_form(2 * g + 2);
        const TruncatedFamily f = perturb_hyperelliptic(g, h, d, static_cast<std::size_t>(5 * d + 1), ribbon_ell(s.lambda(g)));
        const TruncatedFamily back = rescale_v(rescale_v(f, d), -d);
        r.details = {{"N", f.order_bound}, {"N_after", back.order_bound}};
        r.pass = back == f.truncated(back.order_bound) && rescale_v(f, 0) == f;
      }));
      tasks.push_back(make_task("even_odd_split", {{"g", g}, {"d", d}}, [g, d, seed, idx](PropertyResult& r) {
        Sampler s = Sampler::stream(seed, 10000 + idx);
        const BinaryForm h = s.squarefree_form(2 * g + 2);
        const auto ell = ribbon_ell(s.lambda(g));
        const TruncatedFamily f = perturb_hyperelliptic(g, h, d, static_cast<std::size_t>(3 * d + 1), ell);
        const XgIdeal base = hyperelliptic_model(g, h);
        const EvenOddParts parts = even_odd_split(f, base);
        const TruncatedFamily zero = constant_family(XgIdeal{g, std::vector<WPoly>(base.uu.size(), WPoly(g)),
                                                             std::vector<WPoly>(base.uv.size(), WPoly(g)),
                                                             std::vector<WPoly>(base.vv.size(), WPoly(g))},
                                                     f.order_bound);
        bool odd_is_ell = true;
        for (std::size_t e = 0; e < ell.size(); ++e) odd_is_ell = odd_is_ell && parts.odd.uu[e].digit(static_cast<std::size_t>(d)) == ell[e];
        const bool even_fixed = involution(parts.even) == parts.even;
        const TruncatedFamily odd_image = involution(parts.odd);
        bool odd_negated = true;
        for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV})
          for (std::size_t e = 0; e < odd_image.group(tag).size(); ++e)
            odd_negated = odd_negated && odd_image.group(tag)[e] == TruncatedPoly(g, f.order_bound) - parts.odd.group(tag)[e];
        const bool twice = involution(involution(f)) == f;
        r.details = {{"odd_equals_direction", odd_is_ell}, {"even_is_zero", parts.even == zero}, {"sigma_squared_identity", twice}};
        r.pass = odd_is_ell && parts.even == zero && even_fixed && odd_negated && twice;
      }));
      if (g <= 4 && d <= 2) {
        tasks.push_back(make_task("flatness_through_order", {{"g", g}, {"d", d}, {"degrees", "0..4"}}, [g, d, seed, idx](PropertyResult& r) {
          Sampler s = Sampler::stream(seed, 11000 + idx);
          const BinaryForm h = s.squarefree_form(2 * g + 2);
          const TruncatedFamily f = perturb_hyperelliptic(g, h, d, static_cast<std::size_t>(3 * d + 1), ribbon_ell(s.lambda(g)));
          const TruncatedFamily rescaled = rescale_v(f, d);
          Json levels = Json::array();
          r.pass = true;
          std::size_t flat_f = 0, flat_r = 0;
          for (std::size_t m = 1; m <= rescaled.order_bound; ++m) {
            const bool ff = is_flat_up_to(f, m, 4), fr = is_flat_up_to(rescaled, m, 4);
            if (ff && flat_f == m - 1) flat_f = m;
            if (fr && flat_r == m - 1) flat_r = m;
          }
          r.details = {{"perturbation_flat_through", flat_f}, {"rescaled_flat_through", flat_r}};
          r.pass = flat_f >= static_cast<std::size_t>(d) && flat_r >= static_cast<std::size_t>(2 * d);
        }));
      }
    }
    tasks.push_back(make_task("discriminant_detects_square_factors", {{"g", g}}, [g, seed](PropertyResult& r) {
      Sampler s = Sampler::stream(seed, 12000 + static_cast<std::uint64_t>(g));
      const BinaryForm h = s.squarefree_form(2 * g + 2);
      BinaryForm lin(1);
      lin[1] = 1;
      lin[0] = Rational(s.integer(-3, 3));
      RatVector rest(static_cast<std::size_t>(2 * g + 1));
      for (Rational& x : rest) x = Rational(s.integer(-3, 3));
      const BinaryForm squared = lin * lin * BinaryForm(2 * g, rest);
      r.pass = binary_discriminant(h) != 0 && binary_discriminant(squared) == 0;
      r.details = {{"generic", h.to_string()}, {"with_square", squared.to_string()}};
    }));
    tasks.push_back(make_task("constant_split_family", {{"g", g}}, [g](PropertyResult& r) {
      const TruncatedFamily f = constant_family(split_ribbon_ideal(g), 6);
      bool rejected = false;
      try {
        discriminant_section(f);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      r.details = {{"ribbon_order", ribbon_order(f)}, {"hyperell_order", hyperell_order(f)}, {"section_rejected", rejected}};
      r.pass = ribbon_order(f) == 6 && hyperell_order(f) == 6 && rejected;
    }));
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& suites = verify_suites();
  if (options.suite != "all" && std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    throw std::invalid_argument("unknown suite: " + options.suite);
  }
  if (options.gmax < 3 || options.gmax > kMaxGenus) throw std::invalid_argument("gmax must be in 3..10");
  if (options.dmax < 2 || options.dmax > 6) throw std::invalid_argument("dmax must be in 2..6");
  std::vector<Task> tasks;
  auto want = [&](const char* s) { return options.suite == "all" || options.suite == s; };
  if (want("rnc")) rnc_tasks(options, tasks);
  if (want("conormal")) conormal_tasks(options, tasks);
  if (want("xg")) xg_tasks(options, tasks);
  if (want("fitting")) fitting_tasks(options, tasks);
  if (want("families")) families_tasks(options, tasks);

  VerifyReport report;
  report.options = options;
  report.properties = run_tasks(tasks);
  for (const PropertyResult& p : report.properties)
    if (!p.informational && !p.pass) report.all_pass = false;
  return report;
}

Json to_json(const VerifyReport& report) {
  Json props = Json::array();
  std::size_t passed = 0, counted = 0;
  for (const PropertyResult& p : report.properties) {
    Json j{{"property", p.name}, {"params", p.params}, {"pass", p.pass}};
    if (p.informational) j["informational"] = true;
    j["details"] = p.details;
    j["counterexample"] = p.counterexample;
    props.push_back(std::move(j));
    if (!p.informational) {
      ++counted;
      passed += p.pass ? 1 : 0;
    }
  }
  return Json{{"suite", report.options.suite},
              {"gmax", report.options.gmax},
              {"dmax", report.options.dmax},
              {"seed", report.options.seed},
              {"properties_checked", counted},
              {"properties_passed", passed},
              {"all_pass", report.all_pass},
              {"properties", props}};
}

}  // namespace ribbonlab
