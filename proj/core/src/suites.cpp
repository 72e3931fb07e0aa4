#include "kernelalg/suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kernelalg/deriv.hpp"
#include "kernelalg/oprep.hpp"
#include "kernelalg/rng.hpp"
#include "kernelalg/structure.hpp"
#include "kernelalg/units.hpp"

namespace kernelalg {

namespace {

int scaled_count(const DiscreteSpace& space, int base) {
    // keep the heavier suites proportionate on large grids
    return space.size() > 192 ? std::max(4, base / 2) : base;
}

void axioms_suite(Report& rep, const DiscreteSpace::Ptr& space, const ExperimentConfig& cfg) {
    Rng rng(cfg.seed);
    const int n = space->size();
    const int count = scaled_count(*space, 10);
    const double tol = cfg.tol.algebraic;

    double assoc = 0.0, submult = -1.0, invol_id = 0.0, invol_prod = 0.0, invol_norm = 0.0;
    double adjointness = 0.0, sep_cont = -1.0;
    for (int t = 0; t < count; ++t) {
        const Kernel f(space, rng.complex_grid(n, n));
        const Kernel g(space, rng.complex_grid(n, n));
        const Kernel h(space, rng.complex_grid(n, n));

        const Kernel fg = convolve(f, g);
        assoc = std::max(assoc, sup_norm(convolve(fg, h) - convolve(f, convolve(g, h))));
        submult = std::max(submult, sup_norm(fg) - sup_norm(f) * sup_norm(g));
        invol_id = std::max(invol_id, sup_norm(involve(involve(f)) - f));
        invol_prod = std::max(invol_prod, sup_norm(involve(fg) - convolve(involve(g), involve(f))));
        invol_norm = std::max(invol_norm, std::abs(sup_norm(involve(f)) - sup_norm(f)));
        for (int i = 0; i < n; ++i)
            adjointness =
                std::max(adjointness, std::abs(rc_seminorm(involve(f), i) - cc_seminorm(f, i)));

        // separate continuity proxy: cc(c*a - c*a', y) <= |c| cc(a - a', y)
        const Kernel ca = convolve(h, f);
        const Kernel cap = convolve(h, g);
        for (int y = 0; y < n; ++y) {
            const double lhs = cc_seminorm(ca - cap, y);
            const double rhs = sup_norm(h) * cc_seminorm(f - g, y);
            sep_cont = std::max(sep_cont, lhs - rhs);
        }
    }
    auto add = [&](const char* name, double value, double bound) {
        CheckRecord rec;
        rec.name = name;
        rec.value = value;
        rec.bound = bound;
        rec.pass = value <= bound;
        rep.add(rec);
    };
    add("associativity", assoc, tol);
    add("submultiplicativity_margin", submult, tol);
    add("involution_involutive", invol_id, 0.0);
    add("involution_antihomomorphism", invol_prod, tol);
    add("involution_isometry", invol_norm, 0.0);
    add("seminorm_adjointness", adjointness, 0.0);
    add("separate_continuity_margin", sep_cont, tol);
}

void units_suite(Report& rep, const DiscreteSpace::Ptr& space, const ExperimentConfig& cfg) {
    const auto deltas = default_delta_sequence();
    const auto battery = make_test_battery(space, cfg.seed);

    if (space->kind() == SpaceKind::finite) {
        Report probe = unboundedness_probe(space, deltas);
        for (auto& c : probe.checks) rep.add(c);
        return;
    }

    const ConditionCheck cc = check_conditions(*space, deltas);
    {
        CheckRecord rec;
        rec.name = "conditions";
        rec.pass = cc.c1;
        rec.note = cc.describe();
        rep.add(rec);
    }
    if (cc.c1) {
        const UnitNet right = norm_unit_seq(space, deltas, Side::right);
        const UnitNet left = norm_unit_seq(space, deltas, Side::left);
        for (const auto& tk : battery) {
            Report conv = convergence_report(tk.kernel, right, Side::right, Topology::norm,
                                             tk.lipschitz);
            CheckRecord rec = conv.checks.front();
            rec.name = "right_norm_defects_" + tk.name;
            bool mono = true;
            for (std::size_t i = 0; i + 1 < rec.values.size(); ++i)
                mono = mono && rec.values[i + 1] <= rec.values[i] + 1e-12;
            rec.pass = rec.pass && mono;
            if (!mono) rec.note = "defects not monotone";
            rep.add(rec);

            Report lconv =
                convergence_report(tk.kernel, left, Side::left, Topology::norm, tk.lipschitz);
            CheckRecord lrec = lconv.checks.front();
            lrec.name = "left_norm_defects_" + tk.name;
            rep.add(lrec);

            // every norm-approximate unit is a pc-approximate unit
            Report pconv = convergence_report(tk.kernel, right, Side::right, Topology::pc);
            CheckRecord prec;
            prec.name = "pc_below_norm_" + tk.name;
            double margin = -1.0;
            for (std::size_t i = 0; i < rec.values.size(); ++i)
                margin = std::max(margin, pconv.checks.front().values[i] - rec.values[i]);
            prec.value = margin;
            prec.bound = 0.0;
            prec.pass = margin <= 0.0;
            rep.add(prec);
        }
    }
    // two-sided: requires center-independent ball masses
    try {
        const UnitNet two = norm_unit_seq(space, deltas, Side::two_sided);
        const UnitNet left = norm_unit_seq(space, deltas, Side::left);
        double worst = 0.0;
        for (int i = 0; i < two.count(); ++i)
            worst = std::max(worst, sup_norm(two.elements[i] - left.elements[i]));
        CheckRecord rec;
        rec.name = "two_sided_left_right_identical";
        rec.value = worst;
        rec.bound = 0.0;
        rec.pass = worst == 0.0;
        rep.add(rec);

        CheckRecord comm;
        comm.name = "two_sided_commutator_decay";
        const auto& f = battery.back().kernel;  // band-limited random kernel
        for (int i = 0; i < two.count(); ++i)
            comm.values.push_back(
                sup_norm(convolve(f, two.elements[i]) - convolve(two.elements[i], f)));
        comm.value = comm.values.back();
        comm.pass = comm.values.back() <= comm.values.front() + 1e-12;
        rep.add(comm);
    } catch (const ConditionFailed& e) {
        CheckRecord rec;
        rec.name = "two_sided_unit";
        rec.pass = false;
        rec.note = e.what();
        rep.add(rec);
    }

    // the (S, eps) net: self-adjoint blocks, shrinking cc/rc defects, the
    // displayed pointwise bound at the finest stage
    try {
        const int n = space->size();
        std::vector<std::pair<std::vector<int>, double>> stages;
        stages.push_back({{0}, 0.2});
        stages.push_back({{0, n / 2}, 0.1});
        stages.push_back({{0, n / 4, n / 2}, 0.05});
        const UnitNet net = net_chain(space, stages);

        double sa = 0.0;
        for (const auto& u : net.elements) sa = std::max(sa, sup_norm(involve(u) - u));
        CheckRecord rec;
        rec.name = "net_self_adjoint";
        rec.value = sa;
        rec.bound = 0.0;
        rec.pass = sa == 0.0;
        rep.add(rec);

        for (const auto& tk : battery) {
            Report conv = convergence_report(tk.kernel, net, Side::right, Topology::cc);
            CheckRecord crec = conv.checks.front();
            crec.name = "net_right_cc_defects_" + tk.name;
            bool dec = true;
            for (std::size_t i = 0; i + 1 < crec.values.size(); ++i)
                dec = dec && crec.values[i + 1] <= crec.values[i] + 1e-12;
            crec.pass = crec.pass && dec;
            rep.add(crec);

            Report pconv = convergence_report(tk.kernel, net, Side::right, Topology::pc);
            CheckRecord prec = pconv.checks.front();
            prec.name = "net_pc_bound_" + tk.name;
            rep.add(prec);
        }
    } catch (const DisjointBallsImpossible& e) {
        CheckRecord rec;
        rec.name = "net_construction";
        rec.pass = false;
        rec.note = e.what();
        rep.add(rec);
    }

    Report probe = unboundedness_probe(space, deltas);
    for (auto& c : probe.checks) rep.add(c);
}

void center_suite(Report& rep, const DiscreteSpace::Ptr& space, const ExperimentConfig& cfg) {
    if (space->kind() == SpaceKind::finite) {
        const auto basis = center_exact(space);
        CheckRecord rec;
        rec.name = "center_dimension";
        rec.value = static_cast<double>(basis.size());
        rec.bound = 1.0;
        rec.pass = basis.size() == 1;
        rep.add(rec);
        if (basis.size() == 1) {
            const Kernel u = unit_kernel(space);
            const std::complex<double> scale = basis[0](0, 0) / u(0, 0);
            CheckRecord prec;
            prec.name = "center_spans_unit";
            prec.value = sup_norm(basis[0] - u * scale);
            prec.bound = cfg.tol.rank;
            prec.pass = prec.value <= prec.bound;
            rep.add(prec);
        }
        return;
    }
    {
        CheckRecord rec;
        rec.name = "center_defect_constant_kernel";
        rec.value = center_defect(Kernel::constant(space, 1.0), 2);
        rec.bound = 0.9;
        rec.pass = rec.value >= 0.9;
        rec.note = "lower bound: localized commutators witness non-centrality";
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "center_defect_zero_kernel";
        rec.value = center_defect(Kernel::zero(space), 1);
        rec.bound = 0.0;
        rec.pass = rec.value == 0.0;
        rep.add(rec);
    }
}

void ideals_suite(Report& rep, const DiscreteSpace::Ptr& space, const ExperimentConfig& cfg) {
    Rng rng(cfg.seed);
    const int n = space->size();
    const double tol = cfg.tol.rank;

    // a low-rank right ideal: V = span of two random sampled functions
    Eigen::MatrixXcd raw(n, 2);
    raw.col(0) = rng.complex_vector(n);
    raw.col(1) = rng.complex_vector(n);
    const Subspace v = subspace_span(space, raw);

    const Kernel probe(space, rng.complex_grid(n, n));
    const Kernel member = rv_project(v, probe);
    {
        CheckRecord rec;
        rec.name = "rv_projector_idempotent";
        rec.value = sup_norm(rv_project(v, member) - member);
        rec.bound = tol;
        rec.pass = rec.value <= tol;
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "rv_right_ideal_closed_under_convolution";
        const Kernel g(space, rng.complex_grid(n, n));
        rec.value = rv_residual(v, convolve(member, g));
        rec.bound = tol;
        rec.pass = rec.value <= tol;
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "involution_swaps_rv_lv";
        rec.value = lv_residual(conj_subspace(v), involve(member));
        rec.bound = tol;
        rec.pass = rec.value <= tol;
        rep.add(rec);
    }
    {
        // correspondence round-trip: members of R_V regenerate V as their column span
        CheckRecord rec;
        rec.name = "column_space_roundtrip";
        std::vector<Kernel> members;
        for (int t = 0; t < 3; ++t)
            members.push_back(rv_project(v, Kernel(space, rng.complex_grid(n, n))));
        const Subspace w = column_space(members);
        double worst = std::abs(static_cast<double>(w.dim() - v.dim()));
        for (int t = 0; t < 5; ++t) {
            const Eigen::VectorXcd g = rng.complex_vector(n);
            worst = std::max(worst, (project(w, g) - project(v, g)).cwiseAbs().maxCoeff());
        }
        rec.value = worst;
        rec.bound = tol;
        rec.pass = worst <= tol;
        rep.add(rec);
    }
    if (space->kind() == SpaceKind::finite) {
        std::vector<Kernel> gens;
        gens.emplace_back(space, rng.complex_grid(n, n));
        Report closure = ideal_closure_check(gens, space, 20, cfg.seed);
        for (auto& c : closure.checks) rep.add(c);
    }
}

void representation_suite(Report& rep, const DiscreteSpace::Ptr& space,
                          const ExperimentConfig& cfg) {
    Rng rng(cfg.seed);
    const int n = space->size();
    const double tol = cfg.tol.algebraic;

    const Kernel f(space, rng.complex_grid(n, n));
    const Kernel g(space, rng.complex_grid(n, n));
    {
        CheckRecord rec;
        rec.name = "representation_multiplicative";
        const SampledFunction u = SampledFunction::scalar(space, rng.complex_vector(n));
        rec.value = (rep_apply(convolve(f, g), u).values -
                     rep_apply(f, rep_apply(g, u)).values)
                        .cwiseAbs()
                        .maxCoeff();
        rec.bound = tol * std::max(1.0, sup_norm(f) * sup_norm(g));
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }
    {
        Report adj = adjoint_check(f, 10, cfg.seed);
        rep.add(adj.checks.front());
    }
    {
        CheckRecord rec;
        rec.name = "op_norms_below_sup_norm";
        double margin = -1.0;
        for (OpNormMode m : {OpNormMode::cx, OpNormMode::l1, OpNormMode::l2, OpNormMode::linf})
            margin = std::max(margin, op_norm(f, m) - sup_norm(f));
        rec.value = margin;
        rec.bound = tol;
        rec.pass = margin <= tol;
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "l2_norm_involution_invariant";
        rec.value = std::abs(op_norm(involve(f), OpNormMode::l2) - op_norm(f, OpNormMode::l2));
        rec.bound = 1e-9 * std::max(1.0, op_norm(f, OpNormMode::l2));
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "rank_one_spectral_decay";
        const Kernel r1 = Kernel::outer(space, rng.complex_vector(n), rng.complex_vector(n));
        const SpectralDecay sd = spectral_decay(r1, 1);
        rec.value = sd.tail_mass;
        rec.bound = 1e-10;
        rec.pass = sd.tail_mass <= rec.bound;
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "module_action_associative";
        Eigen::MatrixXcd vv = rng.complex_grid(n, 2);
        const SampledFunction v2(space, vv);
        rec.value = (act_left(convolve(f, g), v2).values -
                     act_left(f, act_left(g, v2)).values)
                        .cwiseAbs()
                        .maxCoeff();
        rec.bound = tol * std::max(1.0, sup_norm(f) * sup_norm(g));
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }
}

void derivation_suite(Report& rep, const DiscreteSpace::Ptr& space,
                      const ExperimentConfig& cfg) {
    const auto deltas = default_delta_sequence();
    const ConditionCheck cc = check_conditions(*space, deltas);
    if (!cc.c2) {
        CheckRecord rec;
        rec.name = "derivation_hypotheses";
        rec.pass = false;
        rec.note = "center-independent ball masses required: " + cc.describe();
        rep.add(rec);
        return;
    }

    Rng rng(cfg.seed);
    const int n = space->size();
    const auto battery = make_test_battery(space, cfg.seed);
    const Kernel omega = battery.back().kernel;  // band-limited seeded kernel
    const Derivation di = Derivation::inner(omega);
    Eigen::VectorXd phi(n);
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    for (int i = 0; i < n; ++i) phi(i) = std::cos(two_pi * space->node_coordinates(i)[0]);
    const Derivation dg = Derivation::gauge_generator(space, phi);

    {
        // derivation law for both kinds
        CheckRecord rec;
        rec.name = "derivation_law";
        double worst = 0.0;
        for (int t = 0; t < 3; ++t) {
            const Kernel a(space, rng.complex_grid(n, n));
            const Kernel b(space, rng.complex_grid(n, n));
            for (const Derivation* d : {&di, &dg}) {
                worst = std::max(worst, sup_norm((*d)(convolve(a, b)) - convolve(a, (*d)(b)) -
                                                 convolve((*d)(a), b)));
            }
        }
        rec.value = worst;
        rec.bound = cfg.tol.algebraic * 10.0;
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }
    {
        // the two tensor identities on a seeded two-term tensor
        TensorKernel tk;
        tk.space = space;
        for (int t = 0; t < 2; ++t)
            tk.terms.emplace_back(Kernel(space, rng.complex_grid(n, n)),
                                  Kernel(space, rng.complex_grid(n, n)));
        const Kernel h(space, rng.complex_grid(n, n));

        CheckRecord rec;
        rec.name = "gamma_left_identity";
        rec.value = sup_norm(tensor_gamma(left_convolve(h, tk), di) -
                             convolve(h, tensor_gamma(tk, di)));
        rec.bound = 1e-10;
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);

        CheckRecord rec2;
        rec2.name = "gamma_right_identity";
        rec2.value = sup_norm(tensor_gamma(right_convolve(tk, h), di) -
                              convolve(tensor_lambda(tk), di(h)) -
                              convolve(tensor_gamma(tk, di), h));
        rec2.bound = 1e-10;
        rec2.pass = rec2.value <= rec2.bound;
        rep.add(rec2);
    }
    {
        // the tensor lift multiplies back to the normalized ramp
        const int idx = 1;
        const TensorKernel gh = gn_hat(space, deltas, idx);
        const double dp = find_delta_prime(*space, deltas[idx]);
        const double alpha = ball_measure(*space, 0, deltas[idx], Ball::open);
        const Eigen::MatrixXd g = ramp_kernel(*space, deltas[idx], dp);
        CheckRecord rec;
        rec.name = "tensor_lift_reconstruction";
        rec.value = (tensor_lambda(gh).values() - (g / alpha).cast<std::complex<double>>())
                        .cwiseAbs()
                        .maxCoeff();
        rec.bound = 1e-10;
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }

    // the quarter-decay criterion needs the full radius sequence
    const int n_max = static_cast<int>(deltas.size()) - 1;
    Report inner_run = approx_inner_run(space, di, battery, deltas, n_max);
    for (auto& c : inner_run.checks) {
        c.name = "inner_" + c.name;
        rep.add(c);
    }
    Report gauge_run = approx_inner_run(space, dg, battery, deltas, n_max);
    for (auto& c : gauge_run.checks) {
        c.name = "gauge_" + c.name;
        rep.add(c);
    }
}

}  // namespace

Report run_suite(const DiscreteSpace::Ptr& space, const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = to_string(config.suite);
    rep.space_summary = space->summary();
    rep.seed = config.seed;

    const auto dispatch = [&](Suite s) {
        switch (s) {
            case Suite::axioms: axioms_suite(rep, space, config); break;
            case Suite::units: units_suite(rep, space, config); break;
            case Suite::center: center_suite(rep, space, config); break;
            case Suite::ideals: ideals_suite(rep, space, config); break;
            case Suite::representation: representation_suite(rep, space, config); break;
            case Suite::derivation: derivation_suite(rep, space, config); break;
            case Suite::all: break;
        }
    };
    if (config.suite == Suite::all) {
        for (Suite s : {Suite::axioms, Suite::units, Suite::center, Suite::ideals,
                        Suite::representation, Suite::derivation})
            dispatch(s);
    } else {
        dispatch(config.suite);
    }

    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

}  // namespace kernelalg
