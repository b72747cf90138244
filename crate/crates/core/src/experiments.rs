//! Named verification experiments. Each one drives library operations on
//! fixed or seeded instances and records every inequality it checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::constructions::{
    clique_union, clique_union_parts, furedi_graph, furedi_square_identity, polarity_graph, ConstructionError,
    LoopedConstruction,
};
use crate::graph::families::{complete, cycle, gnp_with, random_cycle_free_with};
use crate::graph::{layer_chromatic_check, nonisomorphic_graphs, Graph, GraphError, Pattern, DEFAULT_SUBSET_CAP};
use crate::linalg::{eigenvalues_sym, LinalgError, SymMatrix};
use crate::ortho::{
    basis_rep_from_clique_cover, gram, msr_lower_chain_check, msr_upper_certificate, random_rep, rep_sum_length,
    schnirelmann_check, trace_power_certificate, umbrella_c5, umbrella_handle, OrthoError, Parity,
};
use crate::report::{Check, ExperimentReport};
use crate::theta::{
    bound_formula_check, spectral_lower_bound, sum_length_bounds, theta_lower_from_rep, theta_sdp,
    theta_spectral_lower_of_complement, theta_upper_from_rep, transitive_identity_check, CycleFamily, ThetaError,
};

pub const EXPERIMENTS: [&str; 9] = [
    "furedi-spectral",
    "polarity-c4",
    "theta-sandwich",
    "schnirelmann",
    "msr-cycle",
    "trace-power",
    "claim1-sandwich",
    "layer-coloring",
    "even-cycle-bound",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExperimentError {
    #[error("unknown experiment '{0}'")]
    Unknown(String),
    #[error(transparent)]
    Theta(#[from] ThetaError),
    #[error(transparent)]
    Ortho(#[from] OrthoError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Outcome = Result<ExperimentReport, ExperimentError>;

pub fn run_experiment(name: &str, seed: u64) -> Outcome {
    match name {
        "furedi-spectral" => furedi_spectral(seed),
        "polarity-c4" => polarity_c4(seed),
        "theta-sandwich" => theta_sandwich(seed),
        "schnirelmann" => schnirelmann(seed),
        "msr-cycle" => msr_cycle(seed),
        "trace-power" => trace_power(seed),
        "claim1-sandwich" => claim1_sandwich(seed),
        "layer-coloring" => layer_coloring(seed),
        "even-cycle-bound" => even_cycle_bound(seed),
        other => Err(ExperimentError::Unknown(other.into())),
    }
}

/// Runs several experiments, on separate threads when `parallel`; results are
/// keyed by name so the merge does not depend on completion order.
pub fn run_many(names: &[&str], seed: u64, parallel: bool) -> BTreeMap<String, Outcome> {
    if !parallel {
        return names.iter().map(|&n| (n.to_string(), run_experiment(n, seed))).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = names.iter().map(|&n| (n, scope.spawn(move || run_experiment(n, seed)))).collect();
        handles.into_iter().map(|(n, h)| (n.to_string(), h.join().expect("experiment thread panicked"))).collect()
    })
}

fn nontrivial_spectral_radius(eig: &[f64]) -> f64 {
    eig[1..].iter().fold(0.0f64, |m, l| m.max(l.abs()))
}

fn random_unit(d: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 1e-3 {
            return v.into_iter().map(|x| x / len).collect();
        }
    }
}

fn furedi_spectral(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("furedi-spectral", seed);
    r.param("instances", "q=5,t=2; q=13,t=4");
    for (q, t) in [(5u64, 2u64), (13, 4)] {
        let tag = format!("q{q}_t{t}");
        let fg = furedi_graph(q, t)?;
        let g = fg.graph();
        let n_expected = ((q * q - 1) / t) as usize;
        r.push(Check::new(&format!("{tag}.vertex_count"), "furedi_graph", "n = (q^2 - 1)/t").equal(n_expected, g.n()));
        let sq = furedi_square_identity(&fg);
        r.push(
            Check::new(&format!("{tag}.loop_included_regular"), "furedi_square_identity", "every row of A sums to q")
                .result(q, sq.degrees.iter().copied().max().unwrap_or(0), sq.regular),
        );
        r.push(
            Check::new(&format!("{tag}.square_identity"), "furedi_square_identity", "A^2 = (q-t)I + tJ - tQ")
                .equal(0, sq.max_abs_residual),
        );
        r.push(
            Check::new(&format!("{tag}.q_row_sums"), "furedi_square_identity", "Q has (q-1-t)/t ones per row").result(
                sq.expected_q_row_sum,
                sq.q_row_sums.iter().copied().max().unwrap_or(0),
                sq.row_sums_ok,
            ),
        );
        let counts_ok = sq.common_neighbour_counts.iter().all(|&c| c == 0 || c == t as i64);
        r.push(
            Check::new(
                &format!("{tag}.common_neighbours"),
                "furedi_square_identity",
                "distinct vertices share 0 or t neighbours",
            )
            .result(format!("subset of [0, {t}]"), format!("{:?}", sq.common_neighbour_counts), counts_ok),
        );
        let has = g.contains_complete_bipartite(2, (t + 1) as usize, DEFAULT_SUBSET_CAP)?;
        r.push(Check::new(&format!("{tag}.k2_free"), "contains_complete_bipartite", "no K_{2,t+1}").equal(false, has));

        let s = ((2 * q - 2 * t - 1) as f64).sqrt();
        let looped = fg.loop_included_adjacency();
        let eig_looped = eigenvalues_sym(&looped)?;
        r.push(
            Check::new(&format!("{tag}.looped_lambda1"), "eigen_sym", "lambda_1 = q")
                .tol(1e-9)
                .close(q as f64, eig_looped[0]),
        );
        r.push(
            Check::new(&format!("{tag}.looped_gap"), "eigen_sym", "max_{i>=2} |lambda_i| <= sqrt(2q-2t-1)")
                .tol(1e-9)
                .at_most(s, nontrivial_spectral_radius(&eig_looped)),
        );
        let eig = eigenvalues_sym(&SymMatrix::adjacency(g))?;
        r.push(
            Check::new(&format!("{tag}.simple_gap"), "eigen_sym", "max_{i>=2} |lambda_i| <= sqrt(2q-2t-1) + 1")
                .tol(1e-9)
                .at_most(s + 1.0, nontrivial_spectral_radius(&eig)),
        );
        r.push(
            Check::new(
                &format!("{tag}.looped_spectral_lower"),
                "spectral_lower_bound",
                "theta(complement) >= 1 + q/sqrt(2q-2t-1)",
            )
            .tol(1e-9)
            .at_least(1.0 + q as f64 / s, spectral_lower_bound(&looped)?),
        );
        r.push(
            Check::new(
                &format!("{tag}.simple_spectral_lower"),
                "theta_spectral_lower_of_complement",
                "theta(complement) >= 1 + (q-1)/(sqrt(2q-2t-1) + 1)",
            )
            .tol(1e-9)
            .at_least(1.0 + (q - 1) as f64 / (s + 1.0), theta_spectral_lower_of_complement(g)?),
        );
    }
    Ok(r)
}

fn polarity_c4(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("polarity-c4", seed);
    r.param("q", "2,3,4");
    for q in [2u64, 3, 4] {
        let tag = format!("q{q}");
        let pg = polarity_graph(q)?;
        let g = pg.graph();
        r.push(
            Check::new(&format!("{tag}.vertex_count"), "polarity_graph", "n = q^2 + q + 1")
                .equal((q * q + q + 1) as usize, g.n()),
        );
        r.push(Check::new(&format!("{tag}.c4_free"), "contains_cycle", "no C_4").equal(false, g.contains_cycle(4)));
        let degrees = g.degrees();
        let q_us = q as usize;
        let in_range = degrees.iter().all(|&d| d == q_us || d == q_us + 1);
        r.push(Check::new(&format!("{tag}.degrees"), "polarity_graph", "degrees in {q, q+1}").result(
            format!("[{q}, {}]", q + 1),
            format!("[{}, {}]", degrees.iter().min().unwrap_or(&0), degrees.iter().max().unwrap_or(&0)),
            in_range,
        ));
        let low = degrees.iter().filter(|&&d| d == q_us).count();
        r.push(
            Check::new(&format!("{tag}.absolute_points"), "polarity_graph", "q + 1 vertices of degree q")
                .equal(q_us + 1, low),
        );
        let eig_looped = eigenvalues_sym(&pg.loop_included_adjacency())?;
        r.push(
            Check::new(&format!("{tag}.looped_gap"), "eigen_sym", "nontrivial |lambda| = sqrt(q)")
                .tol(1e-9)
                .close((q as f64).sqrt(), nontrivial_spectral_radius(&eig_looped)),
        );
        let eig = eigenvalues_sym(&SymMatrix::adjacency(g))?;
        r.push(
            Check::new(&format!("{tag}.simple_gap"), "eigen_sym", "nontrivial |lambda| <= sqrt(q) + 1")
                .tol(1e-9)
                .at_most((q as f64).sqrt() + 1.0, nontrivial_spectral_radius(&eig)),
        );
    }
    Ok(r)
}

fn theta_sandwich(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("theta-sandwich", seed);
    let sqrt5 = 5f64.sqrt();
    r.param("solver_tol", 1e-8).param("random_graphs", 50).param("reps_per_graph", 20).param("handles_per_rep", 5);

    let mut worst_complete = 0.0f64;
    let mut worst_empty = 0.0f64;
    for n in 1..=10 {
        let a = theta_sdp(&complete(n), 1e-8)?;
        worst_complete = worst_complete.max((a.lower - 1.0).abs()).max((a.upper - 1.0).abs());
        let b = theta_sdp(&Graph::empty(n), 1e-8)?;
        worst_empty = worst_empty.max((b.lower - n as f64).abs()).max((b.upper - n as f64).abs());
    }
    r.push(
        Check::new("complete_graphs", "theta_sdp", "theta(K_n) = 1, n <= 10").tol(1e-8).at_most(0.0, worst_complete),
    );
    r.push(Check::new("empty_graphs", "theta_sdp", "theta(empty_n) = n, n <= 10").tol(1e-8).at_most(0.0, worst_empty));

    let c5 = theta_sdp(&cycle(5), 1e-8)?;
    r.push(Check::new("c5_gap", "theta_sdp", "upper - lower <= 1e-5").at_most(1e-5, c5.gap));
    r.push(Check::new("c5_lower", "theta_sdp", "lower <= sqrt(5)").tol(1e-12).at_most(sqrt5, c5.lower));
    r.push(Check::new("c5_upper", "theta_sdp", "upper >= sqrt(5)").tol(1e-12).at_least(sqrt5, c5.upper));
    let ti = transitive_identity_check(&cycle(5), 1e-4 / 5.0)?;
    r.push(
        Check::new("c5_transitive_product", "transitive_identity_check", "theta(G) theta(complement) = n")
            .tol(1e-4)
            .close(5.0, ti.product),
    );

    // consistency of every definitional bound with the SDP bracket
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = 1e-5;
    let (mut spectral_excess, mut upper_excess, mut lower_excess, mut max_gap) =
        (f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY, 0.0f64);
    for _ in 0..50 {
        let n = rng.random_range(3..=10);
        let p = rng.random_range(0.2..0.8);
        let g = gnp_with(n, p, &mut rng);
        let gc = g.complement();
        let th = theta_sdp(&g, 1e-7)?;
        max_gap = max_gap.max(th.gap);
        if gc.edge_count() > 0 {
            spectral_excess = spectral_excess.max(theta_spectral_lower_of_complement(&gc)? - th.upper);
        }
        for _ in 0..20 {
            let rep_c = random_rep(&gc, rng.random());
            let rep_g = random_rep(&g, rng.random());
            for _ in 0..5 {
                let x = random_unit(n, &mut rng);
                lower_excess = lower_excess.max(theta_lower_from_rep(&g, &rep_c, &x)? - th.upper);
                match theta_upper_from_rep(&rep_g, &x) {
                    Ok(u) => upper_excess = upper_excess.max(th.lower - u),
                    Err(ThetaError::HandleOrthogonalToVector { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    r.push(Check::new("random_gap", "theta_sdp", "upper - lower <= 1e-5").at_most(1e-5, max_gap));
    r.push(
        Check::new("spectral_lower", "theta_spectral_lower_of_complement", "1 - lambda_1/lambda_n <= theta")
            .tol(tol)
            .at_most(0.0, spectral_excess),
    );
    r.push(
        Check::new("rep_lower", "theta_lower_from_rep", "sum_v <x, f(v)>^2 <= theta")
            .tol(tol)
            .at_most(0.0, lower_excess),
    );
    r.push(
        Check::new("rep_upper", "theta_upper_from_rep", "max_v <x, f(v)>^-2 >= theta")
            .tol(tol)
            .at_most(0.0, upper_excess),
    );
    Ok(r)
}

fn schnirelmann(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("schnirelmann", seed);
    r.param("representations", 100).param("random_psd", 100);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_rel_slack = f64::INFINITY;
    let mut all_pass = true;
    for _ in 0..100 {
        let n = rng.random_range(2..=20);
        let p = rng.random_range(0.1..0.9);
        let g = gnp_with(n, p, &mut rng);
        let s = schnirelmann_check(&gram(&random_rep(&g, rng.random())))?;
        all_pass &= s.pass;
        min_rel_slack = min_rel_slack.min(s.slack / s.rhs.max(1.0));
    }
    r.push(
        Check::new("representation_grams", "schnirelmann_check", "tr(M)^2 <= rk(M) tr(M^2)")
            .tol(1e-6)
            .at_least(0.0, if all_pass { min_rel_slack.max(-1e-6) } else { min_rel_slack }),
    );
    let mut min_rel_slack = f64::INFINITY;
    for _ in 0..100 {
        let n = rng.random_range(1..=20);
        let k = rng.random_range(1..=n);
        let f: Vec<Vec<f64>> = (0..k).map(|_| (0..n).map(|_| StandardNormal.sample(&mut rng)).collect()).collect();
        let m = SymMatrix::from_fn(n, |i, j| (0..k).map(|a| f[a][i] * f[a][j]).sum());
        let s = schnirelmann_check(&m)?;
        min_rel_slack = min_rel_slack.min(s.slack / s.rhs.max(1.0));
    }
    r.push(
        Check::new("random_psd", "schnirelmann_check", "tr(M)^2 <= rk(M) tr(M^2)")
            .tol(1e-6)
            .at_least(0.0, min_rel_slack),
    );
    let mut worst_eq = 0.0f64;
    for n in 1..=10 {
        worst_eq = worst_eq.max(schnirelmann_check(&SymMatrix::identity(n))?.slack.abs());
    }
    for (n, t) in [(4, 2), (9, 3), (12, 4), (10, 5), (6, 1)] {
        let g = clique_union(n, t)?;
        let rep = basis_rep_from_clique_cover(&g, &clique_union_parts(n, t))?;
        worst_eq = worst_eq.max(schnirelmann_check(&gram(&rep))?.slack.abs());
    }
    worst_eq = worst_eq.max(schnirelmann_check(&SymMatrix::diag(&[1.0, 0.0]))?.slack.abs());
    r.push(
        Check::new("equality_cases", "schnirelmann_check", "identity and block-constant Grams are tight")
            .tol(1e-6)
            .at_most(0.0, worst_eq),
    );
    Ok(r)
}

fn msr_cycle(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("msr-cycle", seed);
    r.param("n", "5..=30").param("t", "3..=5");
    let (mut total, mut free, mut valid, mut dims, mut traces, mut chains) = (0usize, 0, 0, 0, 0, 0);
    for t in 3..=5usize {
        for n in 5..=30usize {
            total += 1;
            let cert = msr_upper_certificate(n, Pattern::Cycle(t))?;
            free += usize::from(cert.pattern_free && !cert.graph.contains_cycle(t));
            valid += usize::from(cert.rep_valid);
            dims += usize::from(cert.d == n.div_ceil(t - 1));
            let chain = msr_lower_chain_check(&cert.rep, t - 1, 0.0)?;
            // sum of squared clique sizes; n(t-1) exactly when t-1 divides n
            let sizes: usize = clique_union_parts(n, t - 1).iter().map(|p| p.len() * p.len()).sum();
            let exact = chain.trace_of_square == sizes as f64
                && chain.trace_of_square <= (n * (t - 1)) as f64
                && (n % (t - 1) != 0 || chain.trace_of_square == (n * (t - 1)) as f64);
            traces += usize::from(exact);
            chains += usize::from(chain.pass);
        }
    }
    r.push(
        Check::new("clique_union_cycle_free", "contains_cycle", "clique_union(n, t-1) has no C_t").equal(total, free),
    );
    r.push(
        Check::new("representation_valid", "basis_rep_from_clique_cover", "orthonormal representation")
            .equal(total, valid),
    );
    r.push(Check::new("dimension", "msr_upper_certificate", "d = ceil(n/(t-1))").equal(total, dims));
    r.push(
        Check::new("trace_of_square", "msr_lower_chain_check", "tr(M^2) = sum of squared clique sizes <= n(t-1)")
            .equal(total, traces),
    );
    r.push(Check::new("chain", "msr_lower_chain_check", "n^2 <= rk(M) tr(M^2) <= d n (t-1)").equal(total, chains));
    Ok(r)
}

fn trace_power(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("trace-power", seed);
    r.param("triangle_free_reps", 50).param("c4_free_reps", 20);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst_trace, mut worst_lambda) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for _ in 0..50 {
        let n = rng.random_range(3..=16);
        let p = rng.random_range(0.3..1.0);
        let g = random_cycle_free_with(n, 3, p, &mut rng);
        let c = trace_power_certificate(&random_rep(&g, rng.random()), 1, Parity::Odd)?;
        worst_trace = worst_trace.max(c.trace / c.bound);
        worst_lambda = worst_lambda.max(c.lambda_max / c.lambda_bound);
    }
    r.push(Check::new("odd_trace", "trace_power_certificate", "tr(M^3) <= 36 n").at_most(1.0, worst_trace));
    r.push(
        Check::new("odd_lambda", "trace_power_certificate", "lambda_1(M) <= (36 n)^(1/3)").at_most(1.0, worst_lambda),
    );
    let (mut worst_trace, mut worst_lambda) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut graphs: Vec<Graph> = vec![polarity_graph(2)?.graph().clone(), polarity_graph(3)?.graph().clone()];
    while graphs.len() < 20 {
        let n = rng.random_range(4..=16);
        let p = rng.random_range(0.3..1.0);
        graphs.push(random_cycle_free_with(n, 4, p, &mut rng));
    }
    for g in &graphs {
        let c = trace_power_certificate(&random_rep(g, rng.random()), 2, Parity::Even)?;
        worst_trace = worst_trace.max(c.trace / c.bound);
        worst_lambda = worst_lambda.max(c.lambda_max / c.lambda_bound);
    }
    r.push(Check::new("even_trace", "trace_power_certificate", "tr(M^4) <= 24^4 n").at_most(1.0, worst_trace));
    r.push(
        Check::new("even_lambda", "trace_power_certificate", "lambda_1(M) <= (24^4 n)^(1/4)")
            .at_most(1.0, worst_lambda),
    );
    Ok(r)
}

fn claim1_sandwich(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("claim1-sandwich", seed);
    r.param("reps", 30);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst_upper, mut worst_agree) = (f64::NEG_INFINITY, 0.0f64);
    for _ in 0..30 {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.2..0.8);
        let g = gnp_with(n, p, &mut rng);
        let theta_c = theta_sdp(&g.complement(), 1e-7)?.upper;
        let len = rep_sum_length(&random_rep(&g, rng.random()), None)?;
        worst_upper = worst_upper.max(len.raw - (n as f64 * theta_c).sqrt());
        worst_agree = worst_agree.max((len.raw - len.via_gram).abs());
    }
    r.push(
        Check::new("random_upper", "rep_sum_length", "L(G) <= sqrt(n theta(complement))")
            .tol(1e-4)
            .at_most(0.0, worst_upper),
    );
    r.push(
        Check::new("gram_agreement", "rep_sum_length", "||sum f(v)||^2 = 1^T M 1").tol(1e-8).at_most(0.0, worst_agree),
    );

    let target = 5f64.powf(0.75);
    let g = cycle(5);
    let (lo, hi) = sum_length_bounds(5, theta_sdp(&g, 1e-8)?.value(), theta_sdp(&g.complement(), 1e-8)?.value())?;
    r.push(Check::new("c5_lower_bound", "sum_length_bounds", "n/sqrt(theta(G)) = 5^(3/4)").tol(1e-4).close(target, lo));
    r.push(
        Check::new("c5_upper_bound", "sum_length_bounds", "sqrt(n theta(complement)) = 5^(3/4)")
            .tol(1e-4)
            .close(target, hi),
    );
    let aligned = rep_sum_length(&umbrella_c5(), Some(&umbrella_handle()))?.aligned.expect("handle supplied");
    r.push(
        Check::new("c5_umbrella_reaches_lower", "rep_sum_length", "aligned length >= n/sqrt(theta(G))")
            .tol(1e-4)
            .at_least(lo, aligned),
    );
    r.push(
        Check::new("c5_umbrella_below_upper", "rep_sum_length", "aligned length <= sqrt(n theta(complement))")
            .tol(1e-4)
            .at_most(hi, aligned),
    );
    Ok(r)
}

fn layer_coloring(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("layer-coloring", seed);
    r.param("k", 5).param("max_n", 7);
    let (mut graphs, mut checked, mut passed, mut max_chi) = (0usize, 0usize, 0usize, 0usize);
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            graphs += 1;
            if g.contains_cycle(5) {
                continue;
            }
            checked += 1;
            let rep = layer_chromatic_check(&g, 5)?;
            passed += usize::from(rep.pass);
            max_chi = max_chi.max(rep.max_chromatic);
        }
    }
    r.param("graphs_enumerated", graphs).param("graphs_without_c5", checked);
    r.push(
        Check::new("all_layers_bounded", "layer_chromatic_check", "chi(G[A_i]) <= k - 2 for i <= 2")
            .equal(checked, passed),
    );
    r.push(
        Check::new("max_layer_chromatic", "chromatic_number_exact", "max chi(G[A_i]) <= 3")
            .at_most(3.0, max_chi as f64),
    );
    Ok(r)
}

fn even_cycle_bound(seed: u64) -> Outcome {
    let mut r = ExperimentReport::new("even-cycle-bound", seed);
    r.param("q", "2,3,4").param("t", 2);
    for q in [2u64, 3, 4] {
        let pg = polarity_graph(q)?;
        let b = bound_formula_check(pg.graph(), CycleFamily::even(2))?;
        r.push(
            Check::new(&format!("polarity_q{q}.solver"), "bound_formula_check", "theta from the SDP bracket")
                .equal("sdp".to_string(), b.source.clone()),
        );
        r.push(
            Check::new(&format!("polarity_q{q}.bound"), "bound_formula_check", "theta(complement) <= 12 t n^(1/(2t))")
                .at_most(b.formula, b.theta_complement),
        );
    }
    for (name, g) in [("c5", cycle(5)), ("matching_12", clique_union(12, 2)?)] {
        let b = bound_formula_check(&g, CycleFamily::odd(1))?;
        r.push(
            Check::new(
                &format!("{name}.odd_bound"),
                "bound_formula_check",
                "theta(complement) <= ((6t)^(2t) n)^(1/(2t+1))",
            )
            .at_most(b.formula, b.theta_complement),
        );
    }
    Ok(r)
}
