use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use grm_core::cyclic::{bch_root_run, cyclic_genmat, grm_generator_poly, LCyclicCode};
use grm_core::galois_ring::{build_tower, GaloisTower, LElem, TeichIndex};
use grm_core::grm::{distance_params, dual_order, puncture_first, standard_genmat};
use grm_core::oracle::{brute_min_weight, verify_dual, WeightReport, DEFAULT_GUARD};
use grm_core::ring_base::{CoeffRing, PolyRing, RingParams};
use grm_core::ring_linalg::{rank_free, Matrix};
use grm_core::trace_codes::kerdock_code;
use grm_core::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "grm", version, about = "Generalized Reed-Muller codes over Galois rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct TowerArgs {
    /// Residue characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Nilpotency index: the base ring is Z/p^s.
    #[arg(long)]
    s: u32,
    /// Degree of L = GR(p^s, r) over Z/p^s.
    #[arg(long)]
    r: u32,
    /// Degree of the extension R over L.
    #[arg(long)]
    m: u32,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Emit::Genmat)]
    emit: Emit,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Genmat,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ring tower: h_r, g0, the minimal polynomial of xi and n.
    Tower {
        #[command(flatten)]
        tower: TowerArgs,
    },
    /// Standard generator matrix of RM_L(nu, m).
    Code {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        nu: u32,
        /// Drop the coordinate at the evaluation point 0.
        #[arg(long)]
        shortened: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generator polynomial of the shortened code as a cyclic code.
    Cyclic {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        nu: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The Kerdock code RM_L(1, m) as a cyclic code and its extension.
    Kerdock {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        shortened: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dual order and a check that G_mu generates the dual of G_nu.
    Dual {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        nu: u32,
    },
    /// Minimum Hamming distance, from the formula or by enumeration.
    Mindist {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        nu: u32,
        #[arg(long)]
        shortened: bool,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long, value_enum, default_value_t = Emit::Genmat)]
        emit: Emit,
    },
    /// Run verification suites and print a PASS/FAIL report.
    Verify {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Text to print plus whether every check it reports held.
struct Outcome {
    text: String,
    verified: bool,
    output: Option<PathBuf>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, verified: true, output: None }
    }
}

#[derive(Serialize)]
struct ParamsJson {
    p: u64,
    s: u32,
    r: u32,
    m: u32,
}

#[derive(Serialize)]
struct MatrixJson {
    params: ParamsJson,
    nu: Option<u32>,
    column_labels: Vec<String>,
    rows: Vec<Vec<Vec<u64>>>,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    generator_poly: Option<String>,
}

#[derive(Serialize)]
struct WeightJson {
    params: ParamsJson,
    nu: u32,
    shortened: bool,
    min_weight: Option<usize>,
    method: String,
    enumerated: u64,
    distribution: Vec<(usize, u64)>,
    witness: Option<Vec<Vec<u64>>>,
}

fn tower_of(a: TowerArgs) -> Result<Arc<GaloisTower>> {
    Ok(Arc::new(build_tower(RingParams::new(a.p, a.s, a.r)?, a.m)?))
}

fn params_json(t: &GaloisTower) -> ParamsJson {
    let p = t.params();
    ParamsJson { p: p.p, s: p.s, r: p.r, m: t.m() }
}

fn render_matrix(t: &GaloisTower, m: &Matrix<LElem>) -> String {
    let base = t.base();
    m.rows().iter().map(|row| row.iter().map(|c| base.fmt_elem(c)).collect::<Vec<_>>().join(" ") + "\n").collect()
}

fn labels(t: &GaloisTower, shortened: bool) -> Vec<String> {
    t.positions().into_iter().filter(|i| !(shortened && *i == TeichIndex::Infinity)).map(|i| i.to_string()).collect()
}

fn emit_matrix(
    t: &GaloisTower,
    m: &Matrix<LElem>,
    nu: Option<u32>,
    shortened: bool,
    generator_poly: Option<String>,
    emit: Emit,
) -> Result<String> {
    Ok(match emit {
        Emit::Genmat => render_matrix(t, m),
        Emit::Json => {
            let doc = MatrixJson {
                params: params_json(t),
                nu,
                column_labels: labels(t, shortened),
                rows: m.rows().iter().map(|r| r.iter().map(|c| c.coeffs().to_vec()).collect()).collect(),
                rank: rank_free(t.base(), m)?,
                generator_poly,
            };
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    })
}

fn require_rm(t: &GaloisTower, what: &str) -> Result<()> {
    if !t.rm_at_least_s() {
        let p = t.params();
        bail!("{what} needs rm >= s, but rm = {} < s = {}", p.r * t.m(), p.s);
    }
    Ok(())
}

fn describe_cyclic(t: &GaloisTower, code: &LCyclicCode) -> String {
    let bch = bch_root_run(t, code);
    format!(
        "generator = {}\ncheck = {}\nn = {}\nrank = {}\nbch designed distance = {}\n",
        t.fmt_poly(code.gen()),
        t.fmt_poly(code.check()),
        code.n(),
        code.rank(),
        bch.designed
    )
}

fn weight_text(t: &GaloisTower, rep: &WeightReport<LElem>, nu: u32, shortened: bool, emit: Emit) -> Result<String> {
    let base = t.base();
    Ok(match emit {
        Emit::Genmat => {
            let mut s = format!(
                "min_weight = {}\nmethod = {}\nenumerated = {}\n",
                rep.min_weight.map_or_else(|| "none".to_string(), |w| w.to_string()),
                rep.method,
                rep.enumerated
            );
            if let Some(w) = &rep.witness {
                let word: Vec<String> = w.iter().map(|c| base.fmt_elem(c)).collect();
                writeln!(s, "witness = {}", word.join(" "))?;
            }
            s
        }
        Emit::Json => {
            let doc = WeightJson {
                params: params_json(t),
                nu,
                shortened,
                min_weight: rep.min_weight,
                method: rep.method.to_string(),
                enumerated: rep.enumerated,
                distribution: rep.distribution.iter().map(|(&w, &c)| (w, c)).collect(),
                witness: rep.witness.as_ref().map(|w| w.iter().map(|c| c.coeffs().to_vec()).collect()),
            };
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Tower { tower } => {
            let t = tower_of(tower)?;
            let zps = PolyRing::new(t.zps());
            let minpoly = t.minimal_polynomial(&t.xi())?;
            if !t.rm_at_least_s() {
                let p = t.params();
                eprintln!(
                    "warning: rm = {} < s = {}; the zero-sum, dual, cyclic and trace results do not apply",
                    p.r * t.m(),
                    p.s
                );
            }
            Ok(Outcome::ok(format!(
                "tower = {}, m = {}\nq = {}\nh_r = {}\ng0 = {}\nminpoly(xi) = {}\nn = {}\nlength = {}\nrm >= s: {}\n",
                t.params(),
                t.m(),
                t.q(),
                zps.display(t.h_r()),
                t.fmt_poly(t.g0()),
                t.fmt_poly(&minpoly),
                t.n(),
                t.length(),
                t.rm_at_least_s()
            )))
        }
        Command::Code { tower, nu, shortened, out } => {
            let t = tower_of(tower)?;
            let code = standard_genmat(&t, nu)?;
            let m = if shortened { puncture_first(code.genmat()) } else { code.genmat().clone() };
            let text = emit_matrix(&t, &m, Some(nu), shortened, None, out.emit)?;
            Ok(Outcome { text, verified: true, output: out.output })
        }
        Command::Cyclic { tower, nu, out } => {
            let t = tower_of(tower)?;
            let code = grm_generator_poly(&t, nu)?;
            let text = match out.emit {
                Emit::Genmat => describe_cyclic(&t, &code) + &render_matrix(&t, &cyclic_genmat(t.base(), &code)),
                Emit::Json => {
                    let m = cyclic_genmat(t.base(), &code);
                    emit_matrix(&t, &m, Some(nu), true, Some(t.fmt_poly(code.gen())), Emit::Json)?
                }
            };
            Ok(Outcome { text, verified: true, output: out.output })
        }
        Command::Kerdock { tower, shortened, out } => {
            let t = tower_of(tower)?;
            let pair = kerdock_code(&t)?;
            let gen = t.fmt_poly(pair.shortened.gen());
            let m = if shortened { cyclic_genmat(t.base(), &pair.shortened) } else { pair.extended.clone() };
            let text = match out.emit {
                Emit::Genmat => describe_cyclic(&t, &pair.shortened) + &render_matrix(&t, &m),
                Emit::Json => emit_matrix(&t, &m, Some(1), shortened, Some(gen), Emit::Json)?,
            };
            Ok(Outcome { text, verified: true, output: out.output })
        }
        Command::Dual { tower, nu } => {
            let t = tower_of(tower)?;
            require_rm(&t, "the duality check")?;
            let mu = dual_order(nu, t.m(), t.q())?;
            let g = standard_genmat(&t, nu)?;
            let h = standard_genmat(&t, mu)?;
            let ok = verify_dual(t.base(), g.genmat(), h.genmat())?;
            let verdict = if ok { "PASS" } else { "FAIL" };
            Ok(Outcome { text: format!("nu = {nu}\nmu = {mu}\nverdict = {verdict}\n"), verified: ok, output: None })
        }
        Command::Mindist { tower, nu, shortened, method, guard, emit } => {
            let t = tower_of(tower)?;
            let dp = distance_params(nu, t.m(), t.q())?;
            match method {
                Method::Formula => {
                    let mut text = format!("Q = {}\nrem = {}\ndesigned = {}\n", dp.quotient, dp.remainder, dp.designed);
                    if !shortened {
                        writeln!(text, "field value = {}", dp.field_extended())?;
                    }
                    Ok(Outcome::ok(text))
                }
                Method::Brute => {
                    let code = standard_genmat(&t, nu)?;
                    let m = if shortened { puncture_first(code.genmat()) } else { code.genmat().clone() };
                    let rep = brute_min_weight(t.base(), &m, guard)?;
                    Ok(Outcome::ok(weight_text(&t, &rep, nu, shortened, emit)?))
                }
            }
        }
        Command::Verify { tower, suite, guard, output } => {
            let t = tower_of(tower)?;
            let rep = run_suite(&t, suite, guard)?;
            Ok(Outcome { text: rep.render(), verified: !rep.has_failures(), output })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &outcome.output {
        Some(path) => std::fs::write(path, &outcome.text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
