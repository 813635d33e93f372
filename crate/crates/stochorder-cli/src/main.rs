//! `stochorder`: check order relations between probability laws, build
//! extremal couplings, verify supermodular/concordance order on finite
//! lattices, evaluate optimal-transport extremes, and run scripted
//! scenario suites.
//!
//! Exit codes are a stable contract: 0 = Holds / success, 1 = Fails,
//! 2 = Inconclusive, 64 = usage error (bad flags, malformed JSON,
//! unknown names).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::str::FromStr;
use stochorder::couplings::{
    countermono_existence, expectation_of, sum_distribution, Coupling, CouplingError,
    CouplingSpec,
};
use stochorder::extmath::{ExtReal, MeanClass};
use stochorder::gallery::{run_all, run_scenario, GalleryError, ScenarioReport};
use stochorder::multiorder::{check_concordance, check_sm_lattice, LatticeDist};
use stochorder::orders::OrderResult;
use stochorder::ot::{ot_extremes_supermodular, CostFn};
use stochorder::{check_order, Distribution, OrderRelation, QuadConfig};

const EXIT_HOLDS: i32 = 0;
const EXIT_FAILS: i32 = 1;
const EXIT_INCONCLUSIVE: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(name = "stochorder", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Probe-grid size override for numeric checks and curve output.
    #[arg(long, global = true)]
    grid_n: Option<usize>,
    /// Numeric tolerance; beats the STOCHORDER_TOL environment variable.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for all randomized work; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide an order relation between two laws.
    Check {
        /// One of: cx, cx_dagger, icx, dcx, st.
        order: String,
        /// Law spec: inline JSON or a path to a JSON file.
        x: String,
        y: String,
    },
    /// Build a coupling and report existence, sums, and stop-loss values.
    Coupling {
        /// Coupling spec: inline JSON or a path.
        spec: String,
        /// Also report the law of the coordinate sum.
        #[arg(long)]
        sum: bool,
        /// Report E[(S-w)+] and E[(S-w)-] of the sum at this threshold.
        #[arg(long, value_name = "w")]
        stop_loss: Option<f64>,
    },
    /// Check supermodular order between two finite lattice laws.
    SmCheck { a: String, b: String },
    /// Extremes of E[c(X,Y)] over couplings, for a supermodular cost.
    Ot {
        x: String,
        y: String,
        /// Cost name: product, neg_sq_diff, abs_diff_neg, or cx_of_sum:<w>.
        #[arg(long)]
        cost: String,
    },
    /// Run a named scenario suite, or "all".
    Gallery {
        name: String,
        /// Also run the optional cross-checks of externally cited results.
        #[arg(long)]
        extended: bool,
    },
    /// Emit tail-integral and stop-loss curve data for two laws as CSV.
    Curves { x: String, y: String },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(EXIT_HOLDS);
            }
            _ => {
                eprint!("{e}");
                std::process::exit(EXIT_USAGE);
            }
        },
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let mut cfg = QuadConfig::default();
    if let Ok(env_tol) = std::env::var("STOCHORDER_TOL") {
        match env_tol.parse::<f64>() {
            Ok(t) if t > 0.0 => cfg.tol = t,
            _ => return usage("STOCHORDER_TOL must be a positive number"),
        }
    }
    if let Some(t) = cli.tol {
        if t <= 0.0 {
            return usage("--tol must be positive");
        }
        cfg.tol = t;
    }
    if let Some(n) = cli.grid_n {
        if n < 2 {
            return usage("--grid-n must be at least 2");
        }
        cfg.grid_n = n;
    }
    match &cli.command {
        Cmd::Check { order, x, y } => cmd_check(order, x, y, &cfg, &cli),
        Cmd::Coupling {
            spec,
            sum,
            stop_loss,
        } => cmd_coupling(spec, *sum, *stop_loss, &cfg, &cli),
        Cmd::SmCheck { a, b } => cmd_sm_check(a, b, &cfg, &cli),
        Cmd::Ot { x, y, cost } => cmd_ot(x, y, cost, &cfg, &cli),
        Cmd::Gallery { name, extended } => cmd_gallery(name, *extended, &cfg, &cli),
        Cmd::Curves { x, y } => cmd_curves(x, y, &cfg),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Treat an argument as inline JSON if it looks like one, else as a path.
fn load_text(arg: &str) -> Result<String, String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))
    }
}

fn load_dist(arg: &str) -> Result<Distribution, String> {
    let text = load_text(arg)?;
    serde_json::from_str(&text).map_err(|e| format!("bad law spec: {e}"))
}

fn ext_json(v: ExtReal) -> Value {
    match v {
        ExtReal::Finite(x) => json!(x),
        ExtReal::PosInf => json!("inf"),
        ExtReal::NegInf => json!("-inf"),
    }
}

fn mean_json(m: MeanClass) -> Value {
    match m {
        MeanClass::Finite(x) => json!(x),
        MeanClass::PlusInf => json!("inf"),
        MeanClass::MinusInf => json!("-inf"),
        MeanClass::Undefined => json!("undefined"),
    }
}

fn emit(cli: &Cli, report: &Value, text: &str) {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
        Format::Text => println!("{text}"),
    }
}

fn cmd_check(order: &str, x: &str, y: &str, cfg: &QuadConfig, cli: &Cli) -> i32 {
    let rel = match OrderRelation::from_str(order) {
        Ok(r) => r,
        Err(e) => return usage(&e),
    };
    let (dx, dy) = match (load_dist(x), load_dist(y)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage(&e),
    };
    let verdict = check_order(rel, &dx, &dy, cfg);
    let report = json!({
        "command": "check",
        "order": order,
        "seed": cli.seed,
        "tol": cfg.tol,
        "verdict": verdict,
    });
    let (word, code) = match &verdict.result {
        OrderResult::Holds => ("Holds", EXIT_HOLDS),
        OrderResult::Fails { .. } => ("Fails", EXIT_FAILS),
        OrderResult::Inconclusive => ("Inconclusive", EXIT_INCONCLUSIVE),
    };
    let mut text = format!("{order}: {word} ({:?})", verdict.certification);
    if let Some(w) = verdict.witness() {
        text.push_str(&format!(
            "\n  witness: param={} side={:?} lhs={} rhs={}",
            w.param,
            w.side,
            ext_json(w.lhs),
            ext_json(w.rhs)
        ));
    }
    emit(cli, &report, &text);
    code
}

fn cmd_coupling(spec: &str, sum: bool, stop_loss: Option<f64>, cfg: &QuadConfig, cli: &Cli) -> i32 {
    let text = match load_text(spec) {
        Ok(t) => t,
        Err(e) => return usage(&e),
    };
    let parsed: CouplingSpec = match serde_json::from_str(&text) {
        Ok(s) => s,
        Err(e) => return usage(&format!("bad coupling spec: {e}")),
    };
    let existence = match &parsed {
        CouplingSpec::Countermonotonic { marginals } => {
            Some(countermono_existence(marginals))
        }
        _ => None,
    };
    let coupling: Coupling = match parsed.build() {
        Ok(c) => c,
        Err(CouplingError::CtNotExists) => {
            let report = json!({
                "command": "coupling",
                "seed": cli.seed,
                "existence": existence,
                "error": "counter-monotonic coupling does not exist for these marginals",
            });
            emit(cli, &report, "counter-monotonic coupling does not exist");
            return EXIT_FAILS;
        }
        Err(e) => return usage(&format!("bad coupling: {e}")),
    };
    let mut report = json!({
        "command": "coupling",
        "seed": cli.seed,
        "dim": coupling.dim(),
        "existence": existence,
    });
    let mut lines = vec![format!("coupling: dim {}", coupling.dim())];
    if let Some(e) = existence {
        lines.push(format!("  existence: {e:?}"));
    }
    if sum || stop_loss.is_some() {
        let s = sum_distribution(&coupling, cfg);
        let mean = match expectation_of(&coupling, |p| p.iter().sum(), cfg) {
            Ok(m) => mean_json(m),
            Err(_) => json!("nonconvergent"),
        };
        let quantiles: Vec<f64> = [0.1, 0.25, 0.5, 0.75, 0.9]
            .iter()
            .map(|t| s.quantile(*t))
            .collect();
        report["sum"] = json!({ "mean": mean, "quantiles_at_deciles": quantiles });
        lines.push(format!(
            "  sum mean: {}, median: {}",
            report["sum"]["mean"], quantiles[2]
        ));
        if let Some(w) = stop_loss {
            let slp = s.stop_loss_plus(w, cfg).map(ext_json);
            let slm = s.stop_loss_minus(w, cfg).map(ext_json);
            match (slp, slm) {
                (Ok(p), Ok(m)) => {
                    lines.push(format!("  stop-loss at {w}: plus={p} minus={m}"));
                    report["stop_loss"] = json!({ "w": w, "plus": p, "minus": m });
                }
                _ => return usage("stop-loss quadrature did not converge"),
            }
        }
    }
    emit(cli, &report, &lines.join("\n"));
    EXIT_HOLDS
}

fn cmd_sm_check(a: &str, b: &str, cfg: &QuadConfig, cli: &Cli) -> i32 {
    let load = |arg: &str| -> Result<LatticeDist, String> {
        let text = load_text(arg)?;
        serde_json::from_str(&text).map_err(|e| format!("bad lattice spec: {e}"))
    };
    let (la, lb) = match (load(a), load(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return usage(&e),
    };
    let concordance = check_concordance(&la, &lb);
    let sm = match check_sm_lattice(&la, &lb, cfg.tol) {
        Ok(v) => v,
        Err(e) => return usage(&format!("supermodular check failed: {e}")),
    };
    let code = if sm.holds() { EXIT_HOLDS } else { EXIT_FAILS };
    let report = json!({
        "command": "sm-check",
        "seed": cli.seed,
        "tol": cfg.tol,
        "supermodular": sm,
        "concordance": concordance,
    });
    let text = format!(
        "supermodular: {}\nconcordance: {}",
        if sm.holds() { "Holds" } else { "Fails" },
        if concordance.holds() { "Holds" } else { "Fails" },
    );
    emit(cli, &report, &text);
    code
}

fn cmd_ot(x: &str, y: &str, cost: &str, cfg: &QuadConfig, cli: &Cli) -> i32 {
    let (dx, dy) = match (load_dist(x), load_dist(y)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage(&e),
    };
    let c = match CostFn::by_name(cost) {
        Ok(c) => c,
        Err(e) => return usage(&e.to_string()),
    };
    let (min, max) = match ot_extremes_supermodular(&dx, &dy, &c, cfg) {
        Ok(v) => v,
        Err(e) => return usage(&e.to_string()),
    };
    let report = json!({
        "command": "ot",
        "cost": cost,
        "seed": cli.seed,
        "min": mean_json(min),
        "max": mean_json(max),
    });
    let text = format!(
        "ot extremes for {cost}: min={} max={}",
        mean_json(min),
        mean_json(max)
    );
    emit(cli, &report, &text);
    EXIT_HOLDS
}

fn cmd_gallery(name: &str, extended: bool, cfg: &QuadConfig, cli: &Cli) -> i32 {
    let reports: Vec<ScenarioReport> = if name == "all" {
        match run_all(cfg, cli.seed, extended) {
            Ok(r) => r,
            Err(e) => return usage(&e.to_string()),
        }
    } else {
        match run_scenario(name, cfg, cli.seed, extended) {
            Ok(r) => vec![r],
            Err(GalleryError::UnknownScenario(n)) => {
                return usage(&format!("unknown scenario `{n}`"))
            }
            Err(e) => return usage(&e.to_string()),
        }
    };
    let all_pass = reports.iter().all(|r| r.overall);
    let report = json!({
        "command": "gallery",
        "seed": cli.seed,
        "reports": reports,
        "overall": all_pass,
    });
    let mut lines = Vec::new();
    for r in &reports {
        lines.push(format!(
            "{}: {}",
            r.name,
            if r.overall { "pass" } else { "FAIL" }
        ));
        for c in &r.claims {
            lines.push(format!(
                "  [{}] {} (expected {}, computed {})",
                if c.pass { "ok" } else { "FAIL" },
                c.description,
                c.expected,
                c.computed
            ));
        }
    }
    emit(cli, &report, &lines.join("\n"));
    if all_pass {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn csv_ext(v: Result<ExtReal, stochorder::extmath::NonConvergent>) -> String {
    match v {
        Ok(ExtReal::Finite(x)) => format!("{x}"),
        Ok(ExtReal::PosInf) => "inf".to_string(),
        Ok(ExtReal::NegInf) => "-inf".to_string(),
        Err(_) => "nan".to_string(),
    }
}

fn cmd_curves(x: &str, y: &str, cfg: &QuadConfig) -> i32 {
    let (dx, dy) = match (load_dist(x), load_dist(y)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage(&e),
    };
    let n = cfg.grid_n;
    println!("p,lower_tail_X,lower_tail_Y,upper_tail_X,upper_tail_Y");
    for k in 0..n {
        let p = (k as f64 + 1.0) / (n as f64 + 1.0);
        println!(
            "{p},{},{},{},{}",
            csv_ext(dx.lower_tail_integral(p, cfg)),
            csv_ext(dy.lower_tail_integral(p, cfg)),
            csv_ext(dx.upper_tail_integral(p, cfg)),
            csv_ext(dy.upper_tail_integral(p, cfg)),
        );
    }
    // Threshold block: span the central quantile range of both laws.
    let lo = dx.quantile(0.01).min(dy.quantile(0.01));
    let hi = dx.quantile(0.99).max(dy.quantile(0.99));
    let (lo, hi) = if lo < hi { (lo, hi) } else { (lo - 1.0, lo + 1.0) };
    println!("w,slp_X,slp_Y,slm_X,slm_Y");
    for k in 0..n {
        let w = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
        println!(
            "{w},{},{},{},{}",
            csv_ext(dx.stop_loss_plus(w, cfg)),
            csv_ext(dy.stop_loss_plus(w, cfg)),
            csv_ext(dx.stop_loss_minus(w, cfg)),
            csv_ext(dy.stop_loss_minus(w, cfg)),
        );
    }
    EXIT_HOLDS
}
