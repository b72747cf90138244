use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thetalab::constructions::{
    clique_union, clique_union_provenance, furedi_graph, polarity_graph, LoopedConstruction,
};
use thetalab::experiments::{run_experiment, run_many, ExperimentError, EXPERIMENTS};
use thetalab::graph::{Graph, GraphJson, Pattern};
use thetalab::linalg::{eigen_sym, SymMatrix};
use thetalab::ortho::{
    gram, msr_lower_chain_check, schnirelmann_check, trace_power_certificate, OrthoRep, Parity, REP_TOL,
};
use thetalab::report::{canonicalize, fmt9, ExperimentReport};
use thetalab::theta::{theta_sdp_with, ThetaOptions};

#[derive(Parser)]
#[command(
    name = "thetalab",
    version,
    about = "Finite-field graph constructions, certified Lovász theta and representation checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family and print its JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Certified bracket on the Lovász theta function.
    Theta {
        #[arg(long)]
        graph: PathBuf,
        /// Work on the complement of the input graph.
        #[arg(long)]
        complement: bool,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        #[arg(long, default_value_t = 500)]
        max_iter: usize,
        #[arg(long)]
        json: bool,
    },
    /// Adjacency spectrum, sorted descending.
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        /// Restore the loops recorded in the provenance block.
        #[arg(long)]
        with_loops: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pattern-freeness checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Orthonormal representation tools.
    Rep {
        #[command(subcommand)]
        action: RepCommand,
    },
    /// Named verification experiments.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum Family {
    /// K_{2,t+1}-free graph on (q^2-1)/t vertices; needs t | q-1
    Furedi {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        out: Output,
    },
    /// C4-free polarity graph of the projective plane over GF(q)
    Polarity {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Disjoint cliques of size t covering n vertices
    Cliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plain "u v" edge list instead of JSON.
    #[arg(long)]
    edge_list: bool,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Does the graph avoid the pattern (C4, K3, K2,3, ...)?
    Free {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    Validate(RepArgs),
    Gram(RepArgs),
    Certify {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum)]
        check: CertifyCheck,
        /// t for trace-power and msr-chain.
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ParityArg::Odd)]
        parity: ParityArg,
    },
}

#[derive(Args)]
struct RepArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyCheck {
    Schnirelmann,
    TracePower,
    MsrChain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Subcommand)]
enum VerifyCommand {
    Paper {
        /// Experiment name, or "all".
        #[arg(long)]
        experiment: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run independent experiments on separate threads.
        #[arg(long)]
        parallel: bool,
        /// Include wall-clock runtime (output is then no longer reproducible).
        #[arg(long)]
        timing: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn verification(message: impl ToString) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Construct { family } => construct(family),
        Command::Theta { graph, complement, tol, max_iter, json } => theta(&graph, complement, tol, max_iter, json),
        Command::Spectrum { graph, with_loops, json } => spectrum(&graph, with_loops, json),
        Command::Check { what: CheckCommand::Free { pattern, graph, json } } => check_free(&pattern, &graph, json),
        Command::Rep { action } => rep(action),
        Command::Verify { what: VerifyCommand::Paper { experiment, json, seed, parallel, timing } } => {
            verify(&experiment, json, seed, parallel, timing)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Graph plus the provenance block, when the file is JSON and has one.
fn load_graph(path: &PathBuf) -> Result<(Graph, Option<Vec<usize>>), Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let model: GraphJson = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let loops = model.provenance.as_ref().map(|p| p.loops_removed.clone());
        Ok((model.into_graph().map_err(usage)?, loops))
    } else {
        Ok((Graph::parse_any(&text).map_err(usage)?, None))
    }
}

fn emit(text: &str, out: &Output) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(&canonicalize(value.clone())).expect("value serialises"));
}

fn construct(family: Family) -> Result<(), Failure> {
    let (graph, provenance, out) = match family {
        Family::Furedi { q, t, out } => {
            let fg = furedi_graph(q, t).map_err(usage)?;
            (fg.graph().clone(), fg.provenance(), out)
        }
        Family::Polarity { q, out } => {
            let pg = polarity_graph(q).map_err(usage)?;
            (pg.graph().clone(), pg.provenance(), out)
        }
        Family::Cliques { n, t, out } => (clique_union(n, t).map_err(usage)?, clique_union_provenance(n, t), out),
    };
    let text = if out.edge_list {
        graph.to_edge_list()
    } else {
        let mut model = graph.to_json_model();
        model.provenance = Some(provenance);
        serde_json::to_string(&model).expect("graph serialises") + "\n"
    };
    emit(&text, &out)
}

fn theta(path: &PathBuf, complement: bool, tol: f64, max_iter: usize, json: bool) -> Result<(), Failure> {
    let (g, _) = load_graph(path)?;
    let g = if complement { g.complement() } else { g };
    let r = theta_sdp_with(&g, &ThetaOptions { tol, max_iter }).map_err(usage)?;
    if json {
        print_json(&json!({
            "n": g.n(),
            "complement": complement,
            "lower": r.lower,
            "upper": r.upper,
            "gap": r.gap,
            "iterations": r.iterations,
            "gap_reached": r.gap_reached,
            "tol": tol,
            "primal_x": r.primal_x.rows(),
            "dual_b": r.dual_b.rows(),
        }));
    } else {
        println!("lower       {}", fmt9(r.lower));
        println!("upper       {}", fmt9(r.upper));
        println!("gap         {}", fmt9(r.gap));
        println!("iterations  {}", r.iterations);
    }
    if r.gap_reached {
        Ok(())
    } else {
        Err(verification(format!("gap {} did not reach tolerance {tol}", fmt9(r.gap))))
    }
}

fn spectrum(path: &PathBuf, with_loops: bool, json: bool) -> Result<(), Failure> {
    let (g, loops) = load_graph(path)?;
    let mut a = SymMatrix::adjacency(&g);
    if with_loops {
        let loops = loops.ok_or_else(|| usage("--with-loops needs a JSON graph with a provenance block"))?;
        for v in loops {
            if v >= g.n() {
                return Err(usage(format!("loop vertex {v} out of range")));
            }
            a.set(v, v, 1.0);
        }
    }
    let s = eigen_sym(&a).map_err(usage)?;
    if json {
        print_json(
            &json!({ "n": g.n(), "with_loops": with_loops, "eigenvalues": s.eigenvalues, "residual": s.residual }),
        );
    } else {
        for l in &s.eigenvalues {
            println!("{}", fmt9(*l));
        }
    }
    Ok(())
}

fn check_free(pattern: &str, path: &PathBuf, json: bool) -> Result<(), Failure> {
    let pattern: Pattern = pattern.parse().map_err(usage)?;
    let (g, _) = load_graph(path)?;
    let contains = g.contains(pattern).map_err(usage)?;
    if json {
        print_json(&json!({ "pattern": pattern.to_string(), "n": g.n(), "free": !contains }));
    } else {
        println!("free: {}", !contains);
    }
    Ok(())
}

fn rep(action: RepCommand) -> Result<(), Failure> {
    let load = |args: &RepArgs| -> Result<OrthoRep, Failure> { OrthoRep::from_json(&read(&args.file)?).map_err(usage) };
    match action {
        RepCommand::Validate(args) => {
            let rep = load(&args)?;
            let v = rep.validate(REP_TOL);
            if args.json {
                print_json(&serde_json::to_value(&v).expect("serialises"));
            } else {
                println!("valid: {}  (max residual {})", v.valid, fmt9(v.max_residual));
            }
            if v.valid {
                Ok(())
            } else {
                Err(verification("representation is invalid"))
            }
        }
        RepCommand::Gram(args) => {
            let m = gram(&load(&args)?);
            if args.json {
                print_json(&json!({ "gram": m.rows() }));
            } else {
                for row in m.rows() {
                    println!("{}", row.iter().map(|x| fmt9(*x)).collect::<Vec<_>>().join(" "));
                }
            }
            Ok(())
        }
        RepCommand::Certify { rep: args, check, t, parity } => {
            let rep = load(&args)?;
            let (value, pass) = match check {
                CertifyCheck::Schnirelmann => {
                    let r = schnirelmann_check(&gram(&rep)).map_err(usage)?;
                    (serde_json::to_value(&r), r.pass)
                }
                CertifyCheck::TracePower => {
                    let parity = match parity {
                        ParityArg::Odd => Parity::Odd,
                        ParityArg::Even => Parity::Even,
                    };
                    let r = trace_power_certificate(&rep, t, parity).map_err(usage)?;
                    (serde_json::to_value(&r), r.pass)
                }
                CertifyCheck::MsrChain => {
                    let r = msr_lower_chain_check(&rep, t, 1e-9).map_err(usage)?;
                    (serde_json::to_value(&r), r.pass)
                }
            };
            let value = value.expect("report serialises");
            if args.json {
                print_json(&value);
            } else {
                let Value::Object(map) = canonicalize(value) else { unreachable!("reports are objects") };
                for (k, v) in map {
                    println!("{k:<22} {v}");
                }
            }
            if pass {
                Ok(())
            } else {
                Err(verification("certificate check failed"))
            }
        }
    }
}

fn verify(experiment: &str, json: bool, seed: u64, parallel: bool, timing: bool) -> Result<(), Failure> {
    let names: Vec<&str> = if experiment == "all" {
        EXPERIMENTS.to_vec()
    } else if EXPERIMENTS.contains(&experiment) {
        vec![experiment]
    } else {
        return Err(usage(format!("unknown experiment '{experiment}' (known: {}, all)", EXPERIMENTS.join(", "))));
    };
    let start = Instant::now();
    let outcomes = if names.len() == 1 {
        let r = run_experiment(names[0], seed);
        std::iter::once((names[0].to_string(), r)).collect()
    } else {
        run_many(&names, seed, parallel)
    };
    let elapsed = start.elapsed().as_millis() as u64;
    let mut reports: Vec<ExperimentReport> = Vec::new();
    for name in &names {
        match outcomes.get(*name).expect("every experiment ran") {
            Ok(r) => reports.push(r.clone()),
            Err(ExperimentError::Unknown(n)) => return Err(usage(format!("unknown experiment '{n}'"))),
            Err(e) => return Err(verification(format!("{name}: {e}"))),
        }
    }
    if timing {
        // per-experiment timings are not separable when run in parallel
        for r in &mut reports {
            r.runtime_ms = Some(elapsed);
        }
    }
    if json {
        let value = if reports.len() == 1 {
            reports[0].to_value()
        } else {
            Value::Array(reports.iter().map(ExperimentReport::to_value).collect())
        };
        println!("{}", serde_json::to_string_pretty(&value).expect("value serialises"));
    } else {
        for r in &reports {
            print!("{}", r.to_text());
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.experiment.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(verification(format!("failed: {}", failed.join(", "))))
    }
}
