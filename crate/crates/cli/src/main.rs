//! `geis`: command-line access to the root-datum, Kostant, bundle and
//! Eisenstein engines. Output is JSON (sorted keys) or CSV, with exact scalars.

mod table;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use geis_core::bun::{self, hecke_modifications_at, RationalPoint, SplitBundle};
use geis_core::curve::{self, is_prime_power, UnramifiedCharacter};
use geis_core::eis::{self, EisEngine, EisKind};
use geis_core::repcomb::{self, RepEngine};
use geis_core::ringtools::Scalar;
use geis_core::rootdata::{BasedRootDatum, Coweight};
use serde_json::{json, Value};

use table::{Format, TableFile};

#[derive(Parser, Debug)]
#[command(name = "geis", version, about = "Exact Eisenstein series on Bun_GL(n) of P^1 over F_q")]
struct Cli {
    /// Write the normalization conventions used by `eis` and `verify` to this file.
    #[arg(long, global = true, value_name = "FILE")]
    seed_manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple and positive (co)roots, 2ρ and the Weyl group order.
    Roots {
        #[arg(long, default_value = "gl2")]
        group: String,
    },
    /// Weight multiplicities of an irreducible representation.
    Weights {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Restriction of an irreducible representation to a standard Levi.
    Branch {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// 1-based simple roots of the Levi, comma separated; empty for the torus.
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Kostant partition count and its graded refinement.
    Kostant {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Also evaluate the graded count at this q.
        #[arg(long, value_parser = parse_q)]
        q: Option<u64>,
    },
    /// The abelian L-series along a positive coroot.
    Lseries {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, value_parser = parse_q)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// 1-based index into the positive coroots, or a coweight such as 1,-1.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        height: u32,
    },
    /// Split bundles and Hecke modifications.
    Bun {
        #[command(subcommand)]
        action: BunAction,
    },
    /// Eisenstein component tables.
    Eis {
        #[command(subcommand)]
        action: EisAction,
    },
    /// Exact identity checks. Exit 0 on PASS, 1 on FAIL.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
}

#[derive(Subcommand, Debug)]
enum BunAction {
    /// Split types of given rank and degree up to a spread, with |Aut|.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long)]
        spread: i64,
        #[arg(long, value_parser = parse_q, default_value_t = 2)]
        q: u64,
    },
    /// Lower modifications of colength k at a rational point.
    Hecke {
        #[arg(long, allow_hyphen_values = true)]
        bundle: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_q)]
        q: u64,
        #[arg(long, default_value = "0")]
        point: String,
    },
}

#[derive(Args, Debug, Clone)]
struct Setting {
    #[arg(long, default_value = "gl2")]
    group: String,
    #[arg(long, value_parser = parse_q)]
    q: u64,
    /// Character values s_1,...,s_n; entries like 3, -1/2 or 1+1*r (r = √q).
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Explicit bundles separated by ';', e.g. "0,0,0;1,0,-1".
    #[arg(long, allow_hyphen_values = true)]
    bundles: Option<String>,
    /// Without --bundles: all split types with spread at most this.
    #[arg(long, default_value_t = 0)]
    spread: i64,
    /// Without --bundles: degrees from -D to D.
    #[arg(long, default_value_t = 0)]
    max_degree: i64,
    #[arg(long)]
    height: u32,
}

#[derive(Subcommand, Debug)]
enum EisAction {
    /// Nonzero components up to a height, keyed by bundle and component μ = -d.
    Table {
        #[command(flatten)]
        setting: Setting,
        #[arg(long, value_enum, default_value_t = KindArg::Modified)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCheck {
    /// Modified components against the L-weighted classical convolution.
    Comparefinite {
        #[command(flatten)]
        setting: Setting,
    },
    /// Eis_cl · ∏ L = Eis_mod as series.
    Fullcompare {
        #[command(flatten)]
        setting: Setting,
    },
    /// Functional equation for one Weyl element or all of them.
    Fe {
        #[command(flatten)]
        setting: Setting,
        /// Reduced word in 1-based simple reflections, e.g. 1,2; all elements if omitted.
        #[arg(long)]
        w: Option<String>,
    },
    /// Constants of the functional equation over the orbit and their cocycle relation.
    Cocycle {
        #[command(flatten)]
        setting: Setting,
    },
    /// Minuscule Hecke eigenvalue, componentwise.
    Hecke {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "0")]
        point: String,
        #[arg(long, value_enum, default_value_t = KindArg::Modified)]
        kind: KindArg,
    },
    /// Recompute every entry of a table written by `eis table`.
    Table {
        file: PathBuf,
        /// Defaults to the file extension (.csv or anything else for JSON).
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Classical,
    Modified,
}

impl From<KindArg> for EisKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Classical => EisKind::Classical,
            KindArg::Modified => EisKind::Modified,
        }
    }
}

fn parse_q(s: &str) -> std::result::Result<u64, String> {
    let q: u64 = s.trim().parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if !is_prime_power(q) {
        return Err(format!("{q} is not a prime power"));
    }
    Ok(q)
}

/// How a command ended, other than with an error.
enum Status {
    Done,
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Done | Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn datum(group: &str) -> Result<BasedRootDatum> {
    BasedRootDatum::by_name(group).with_context(|| format!("unknown group `{group}`"))
}

fn coweight(datum: &BasedRootDatum, s: &str) -> Result<Coweight> {
    let c: Coweight = s.parse().with_context(|| format!("bad coweight `{s}`"))?;
    datum.validate(&c)?;
    Ok(c)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json(v: &Value) -> Result<()> {
    emit(&(serde_json::to_string_pretty(v)? + "\n"))
}

fn run(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Roots { group } => roots(group),
        Command::Weights { group, lambda, format } => weights(group, lambda, *format),
        Command::Branch { group, lambda, levi, format } => branch(group, lambda, levi, *format),
        Command::Kostant { group, lambda, q } => kostant(group, lambda, *q),
        Command::Lseries { group, q, s, alpha, height } => lseries(group, *q, s, alpha, *height),
        Command::Bun { action } => bundles(action),
        Command::Eis { action: EisAction::Table { setting, kind, format, out } } => {
            let (mut engine, chi, list) = prepare(setting)?;
            dump_manifest(cli, &engine)?;
            let t = engine.table((*kind).into(), &chi, &list, setting.height)?;
            let file = TableFile::from_table(&setting.group, &t);
            let text = file.render(*format)?;
            match out {
                Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => emit(&text)?,
            }
            Ok(Status::Done)
        }
        Command::Verify { check } => verify(cli, check),
    }
}

fn roots(group: &str) -> Result<Status> {
    let d = datum(group)?;
    let w = d.weyl_group()?;
    let list = |v: &[Coweight]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    print_json(&json!({
        "group": group,
        "rank": d.rank(),
        "simple_coroots": list(d.simple_coroots()),
        "simple_roots": d.simple_roots().iter().map(|r| Coweight(r.clone()).to_string()).collect::<Vec<_>>(),
        "positive_coroots": list(d.positive_coroots()),
        "two_rho": d.two_rho().to_string(),
        "weyl_order": w.len(),
        "longest_element": w.longest().to_string(),
    }))?;
    Ok(Status::Done)
}

fn weights(group: &str, lambda: &str, format: Format) -> Result<Status> {
    let d = datum(group)?;
    let l = coweight(&d, lambda)?;
    let ch = RepEngine::new(&d)?.character_of(&l)?;
    let rows: Vec<(String, String)> = ch.entries().iter().map(|(k, m)| (k.to_string(), m.to_string())).collect();
    match format {
        Format::Json => print_json(&json!({
            "group": group,
            "lambda": l.to_string(),
            "dimension": ch.mass(),
            "weights": rows.iter().map(|(k, m)| json!({"weight": k, "multiplicity": m.parse::<u64>().unwrap()})).collect::<Vec<_>>(),
        }))?,
        Format::Csv => emit(&table::csv_rows(&["weight", "multiplicity"], &rows)?)?,
    }
    Ok(Status::Done)
}

fn branch(group: &str, lambda: &str, levi: &str, format: Format) -> Result<Status> {
    let d = datum(group)?;
    let l = coweight(&d, lambda)?;
    let vertices: Vec<usize> = levi
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| match p.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(anyhow!("bad Levi vertex `{p}` (1-based)")),
        })
        .collect::<Result<_>>()?;
    let b = repcomb::branch_to_levi(&d, &vertices, &l)?;
    let rows: Vec<(String, String)> = b.iter().map(|(k, m)| (k.to_string(), m.to_string())).collect();
    match format {
        Format::Json => print_json(&json!({
            "group": group,
            "lambda": l.to_string(),
            "levi": vertices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "components": b.iter().map(|(k, m)| json!({"levi_weight": k.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
        }))?,
        Format::Csv => emit(&table::csv_rows(&["levi_weight", "multiplicity"], &rows)?)?,
    }
    Ok(Status::Done)
}

fn kostant(group: &str, lambda: &str, q: Option<u64>) -> Result<Status> {
    let d = datum(group)?;
    let l = coweight(&d, lambda)?;
    let v = repcomb::q_kostant(&d, &l)?;
    let mut out = json!({
        "group": group,
        "lambda": l.to_string(),
        "count": v.total().to_string(),
        "graded": v.to_poly_string(),
    });
    if let Some(q) = q {
        out["q"] = json!(q);
        out["value"] = json!(v.funct_value(q).to_string());
    }
    print_json(&out)?;
    Ok(Status::Done)
}

fn lseries(group: &str, q: u64, s: &str, alpha: &str, height: u32) -> Result<Status> {
    let d = datum(group)?;
    let s = Scalar::parse(q, s)?;
    let a = match alpha.trim().parse::<usize>() {
        Ok(i) if i >= 1 && i <= d.positive_coroots().len() => d.positive_coroots()[i - 1].clone(),
        Ok(i) => bail!("alpha index {i} out of range 1..={}", d.positive_coroots().len()),
        Err(_) => coweight(&d, alpha)?,
    };
    let ctx = curve::point_counts(q, 1)?;
    let series = curve::l_series(&ctx, &d, &s, &a, height)?;
    let step = d.height(&a).unwrap_or(1).max(1) as u32;
    let terms: Vec<Value> = (0..=height / step)
        .map(|n| {
            let mu = a.scale(i64::from(n));
            json!({"n": n, "coweight": mu.to_string(), "value": series.coeff(&mu).to_string()})
        })
        .collect();
    print_json(&json!({"group": group, "q": q, "s": s.to_string(), "alpha": a.to_string(), "terms": terms}))?;
    Ok(Status::Done)
}

fn point(s: &str) -> Result<RationalPoint> {
    Ok(s.parse::<RationalPoint>()?)
}

fn bundles(action: &BunAction) -> Result<Status> {
    match action {
        BunAction::Enumerate { n, degree, spread, q } => {
            let list = bun::enumerate_split(*n, *degree, *spread);
            let entries: Vec<Value> = list
                .iter()
                .map(|m| json!({"bundle": m.to_string(), "pretty": m.pretty(), "aut_order": bun::aut_order(m, *q).to_string()}))
                .collect();
            let mass = bun::mass(*n, *degree, *spread, *q);
            print_json(&json!({"n": n, "degree": degree, "spread": spread, "q": q, "mass": mass.to_string(), "bundles": entries}))?;
        }
        BunAction::Hecke { bundle, k, q, point: p } => {
            let m: SplitBundle = bundle.parse()?;
            let r = hecke_modifications_at(&m, *k, *q, point(p)?)?;
            let entries: Vec<Value> =
                r.entries.iter().map(|(b, c)| json!({"bundle": b.to_string(), "count": c})).collect();
            print_json(&json!({"bundle": m.to_string(), "k": k, "q": q, "point": p, "total": r.total(), "modifications": entries}))?;
        }
    }
    Ok(Status::Done)
}

fn prepare(s: &Setting) -> Result<(EisEngine, UnramifiedCharacter, Vec<SplitBundle>)> {
    let d = datum(&s.group)?;
    if !d.is_gl() {
        bail!("Eisenstein tables are implemented for gl<n> only");
    }
    let engine = EisEngine::new(d.rank(), s.q)?;
    let chi = UnramifiedCharacter::parse(s.q, &s.s)?;
    if chi.rank() != d.rank() {
        bail!("character has {} values, {} needs {}", chi.rank(), s.group, d.rank());
    }
    let list: Vec<SplitBundle> = match &s.bundles {
        Some(b) => b.split(';').filter(|p| !p.trim().is_empty()).map(|p| p.parse()).collect::<geis_core::Result<_>>()?,
        None => (-s.max_degree..=s.max_degree).flat_map(|deg| bun::enumerate_split(d.rank(), deg, s.spread)).collect(),
    };
    if let Some(bad) = list.iter().find(|m| m.rank() != d.rank()) {
        bail!("bundle {bad} does not have rank {}", d.rank());
    }
    if list.is_empty() {
        bail!("no bundles selected");
    }
    Ok((engine, chi, list))
}

fn dump_manifest(cli: &Cli, engine: &EisEngine) -> Result<()> {
    if let Some(path) = &cli.seed_manifest {
        let text = serde_json::to_string_pretty(&engine.ledger().to_json())?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn verdict(passed: bool) -> Status {
    if passed {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn verify(cli: &Cli, check: &VerifyCheck) -> Result<Status> {
    match check {
        VerifyCheck::Comparefinite { setting } => {
            let (mut e, chi, list) = prepare(setting)?;
            dump_manifest(cli, &e)?;
            let r = eis::check_comparefinite(&mut e, &chi, &list, setting.height)?;
            println!("{r}");
            Ok(verdict(r.passed))
        }
        VerifyCheck::Fullcompare { setting } => {
            let (mut e, chi, list) = prepare(setting)?;
            dump_manifest(cli, &e)?;
            let r = eis::check_fullcompare(&mut e, &chi, &list, setting.height)?;
            println!("{r}");
            Ok(verdict(r.passed))
        }
        VerifyCheck::Fe { setting, w } => {
            let (mut e, chi, list) = prepare(setting)?;
            dump_manifest(cli, &e)?;
            let group = e.datum().weyl_group()?;
            let elements: Vec<_> = match w {
                Some(word) => {
                    let letters: Vec<usize> = word
                        .split(',')
                        .filter(|p| !p.trim().is_empty())
                        .map(|p| p.trim().parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1))
                        .collect::<Option<_>>()
                        .ok_or_else(|| anyhow!("bad Weyl word `{word}`"))?;
                    vec![group.from_word(&letters).ok_or_else(|| anyhow!("bad Weyl word `{word}`"))?.clone()]
                }
                None => group.elements().to_vec(),
            };
            let mut constants = Vec::new();
            for x in &elements {
                let r = eis::check_functional_equation(&mut e, &chi, x, &list, setting.height)?;
                println!("{r}");
                match r.constant {
                    Some(c) if r.passed => constants.push(c),
                    _ => {
                        println!("FAIL");
                        return Ok(Status::Fail);
                    }
                }
            }
            let mut distinct: Vec<String> = constants.iter().map(|c| c.to_string()).collect();
            distinct.dedup();
            println!("PASS constant={}", distinct.join("/"));
            Ok(Status::Pass)
        }
        VerifyCheck::Cocycle { setting } => {
            let (mut e, chi, list) = prepare(setting)?;
            dump_manifest(cli, &e)?;
            let r = eis::fe_cocycle(&mut e, &chi, &list, setting.height)?;
            for (w, v, c) in &r.constants {
                println!("c({w}; chi^{v}) = {c}");
            }
            match &r.failure {
                None => println!("PASS cocycle"),
                Some(f) => println!("FAIL {f}"),
            }
            Ok(verdict(r.passed))
        }
        VerifyCheck::Hecke { setting, k, point: p, kind } => {
            let (mut e, chi, list) = prepare(setting)?;
            dump_manifest(cli, &e)?;
            let r = eis::check_hecke_eigen(&mut e, (*kind).into(), &chi, *k, point(p)?, &list, setting.height)?;
            println!("{r}");
            Ok(verdict(r.passed))
        }
        VerifyCheck::Table { file, format } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let fmt = format.unwrap_or_else(|| {
                if file.extension().is_some_and(|x| x.eq_ignore_ascii_case("csv")) {
                    Format::Csv
                } else {
                    Format::Json
                }
            });
            let table = TableFile::parse(&text, fmt)?;
            let (mut e, chi, kind) = table.engine()?;
            dump_manifest(cli, &e)?;
            let mut checked = 0;
            for entry in &table.entries {
                let (m, d, value) = table.decode(entry)?;
                let ours = e.component(kind, &chi, &m, &d)?;
                if ours != value {
                    println!("FAIL bundle {m} component {}: table={value} recomputed={ours}", entry.component);
                    return Ok(Status::Fail);
                }
                checked += 1;
            }
            println!("PASS entries={checked}");
            Ok(Status::Pass)
        }
    }
}
