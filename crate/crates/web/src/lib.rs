//! Browser bindings. Each exported function takes plain arguments and returns
//! a JSON string; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use thetalab::constructions::{furedi_graph, polarity_graph, LoopedConstruction};
use thetalab::graph::families::random_cycle_free;
use thetalab::graph::{Graph, Pattern};
use thetalab::linalg::{eigenvalues_sym, SymMatrix};
use thetalab::ortho::{random_rep, rep_sum_length, trace_power_certificate, Parity};
use thetalab::report::round9;
use thetalab::theta::{spectral_lower_bound, theta_sdp};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest graph the spectrum panel builds.
pub const MAX_SPECTRUM_N: usize = 400;
/// Largest graph the theta panel solves; keeps the page responsive.
pub const MAX_THETA_N: usize = 40;

fn rounded(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| round9(x)).collect()
}

fn nontrivial_radius(eig: &[f64]) -> f64 {
    eig[1..].iter().fold(0.0, |m, l| m.max(l.abs()))
}

/// Spectrum of a Füredi or polarity graph, before and after loop removal.
pub fn spectrum(family: &str, q: u64, t: u64) -> Result<Value, String> {
    let (built, bound, pattern): (Box<dyn LoopedConstruction>, f64, Pattern) = match family {
        "furedi" => {
            let fg = furedi_graph(q, t).map_err(|e| e.to_string())?;
            let bound = ((2 * q).saturating_sub(2 * t + 1) as f64).sqrt();
            (Box::new(fg), bound, Pattern::CompleteBipartite(2, t as usize + 1))
        }
        "polarity" => (Box::new(polarity_graph(q).map_err(|e| e.to_string())?), (q as f64).sqrt(), Pattern::Cycle(4)),
        other => return Err(format!("unknown family '{other}'")),
    };
    let g = built.graph();
    if g.n() > MAX_SPECTRUM_N {
        return Err(format!("{} vertices is more than the demo's limit of {MAX_SPECTRUM_N}", g.n()));
    }
    let simple_m = SymMatrix::adjacency(g);
    let looped_m = built.loop_included_adjacency();
    let simple = eigenvalues_sym(&simple_m).map_err(|e| e.to_string())?;
    let looped = eigenvalues_sym(&looped_m).map_err(|e| e.to_string())?;
    let lower = |m: &SymMatrix| spectral_lower_bound(m).ok().map(round9);
    Ok(json!({
        "family": family,
        "q": q,
        "t": if family == "furedi" { Some(t) } else { None },
        "n": g.n(),
        "edges": g.edge_count(),
        "loops": built.loops().len(),
        "pattern": pattern.to_string(),
        "pattern_free": !g.contains(pattern).map_err(|e| e.to_string())?,
        "eigenvalues": rounded(&simple),
        "looped_eigenvalues": rounded(&looped),
        "nontrivial_radius": round9(nontrivial_radius(&simple)),
        "looped_nontrivial_radius": round9(nontrivial_radius(&looped)),
        "looped_bound": round9(bound),
        // removing the loops moves each eigenvalue by at most 1
        "bound": round9(bound + 1.0),
        "theta_complement_lower": lower(&simple_m),
        "looped_theta_complement_lower": lower(&looped_m),
    }))
}

/// Certified ϑ brackets of a graph and of its complement. `text` is an edge
/// list (`n N` header, then `u v` lines) or graph JSON.
pub fn theta(text: &str, tol: f64) -> Result<Value, String> {
    let g = Graph::parse_any(text).map_err(|e| e.to_string())?;
    if g.n() > MAX_THETA_N {
        return Err(format!("{} vertices is more than the demo's limit of {MAX_THETA_N}", g.n()));
    }
    let r = theta_sdp(&g, tol).map_err(|e| e.to_string())?;
    let c = theta_sdp(&g.complement(), tol).map_err(|e| e.to_string())?;
    let alpha = (g.n() <= 24).then(|| g.independence_number());
    let bracket = |lower: f64, upper: f64| json!({ "lower": round9(lower), "upper": round9(upper) });
    Ok(json!({
        "n": g.n(),
        "edges": g.edges(),
        "theta": bracket(r.lower, r.upper),
        "gap": r.gap,
        "iterations": r.iterations,
        "theta_complement": bracket(c.lower, c.upper),
        "product": bracket(r.lower * c.lower, r.upper * c.upper),
        "independence_number": alpha,
    }))
}

/// Random `C_k`-free graph, a random orthonormal representation of it, the
/// trace-power certificate and the sum length of the representation.
pub fn trace_power(n: usize, k: usize, p: f64, seed: u64) -> Result<Value, String> {
    if !(3..=7).contains(&k) {
        return Err(format!("cycle length {k} outside 3..=7"));
    }
    if !(2..=MAX_THETA_N).contains(&n) {
        return Err(format!("n = {n} outside 2..={MAX_THETA_N}"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("edge probability {p} outside [0, 1]"));
    }
    let g = random_cycle_free(n, k, p, seed);
    let rep = random_rep(&g, seed);
    let (t, parity) = if k % 2 == 1 { ((k - 1) / 2, Parity::Odd) } else { (k / 2, Parity::Even) };
    let cert = trace_power_certificate(&rep, t, parity).map_err(|e| e.to_string())?;
    let len = rep_sum_length(&rep, None).map_err(|e| e.to_string())?;
    let theta_c = theta_sdp(&g.complement(), 1e-6).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "k": k,
        "edges": g.edges(),
        "exponent": cert.exponent,
        "trace": round9(cert.trace),
        "trace_bound": round9(cert.bound),
        "lambda_max": round9(cert.lambda_max),
        "lambda_bound": round9(cert.lambda_bound),
        "pass": cert.pass,
        "sum_length": round9(len.raw),
        "sum_length_bound": round9((n as f64 * theta_c.upper).sqrt()),
    }))
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

#[wasm_bindgen]
pub fn spectrum_json(family: &str, q: u32, t: u32) -> String {
    respond(spectrum(family, q.into(), t.into()))
}

#[wasm_bindgen]
pub fn theta_json(text: &str, tol: f64) -> String {
    respond(theta(text, tol))
}

#[wasm_bindgen]
pub fn trace_power_json(n: u32, k: u32, p: f64, seed: u32) -> String {
    respond(trace_power(n as usize, k as usize, p, seed.into()))
}
