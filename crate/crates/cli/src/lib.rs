//! Command dispatch for the `lieklein` binary. Every command returns a
//! serializable document and an exit status: 0 on success, 1 on usage
//! errors, 2 when a reproduced claim fails to match.

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lieklein_core::autgrp::{
    chevalley_involution, compose, diagram_automorphism, fixed_dim_by_trace, inner_involution, parity_vectors, torus_involution, AutoMap,
};
use lieklein_core::casebook::{self, render_text, CaseReport};
use lieklein_core::crit;
use lieklein_core::fixpoint::{fixed_subalgebra, reductive_decompose, ComplexType};
use lieklein_core::realform::{noncompact_root_split, real_fixed_form, BetaConvention, RealFormDescriptor};
use lieklein_core::{build_chevalley, ChevalleyAlgebra, Root, TypeLabel, Q};

/// Version of every JSON document emitted by the CLI.
pub const SCHEMA_VERSION: u32 = casebook::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lieklein", version, about = "Exact computations with involutions of simple Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Sign convention for `beta` on the command line.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaArg {
    /// Highest weight of `p+`.
    Plus,
    /// Lowest weight of `p-`.
    Minus,
}

impl From<BetaArg> for BetaConvention {
    fn from(b: BetaArg) -> Self {
        match b {
            BetaArg::Plus => BetaConvention::Plus,
            BetaArg::Minus => BetaConvention::Minus,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct TypeArg {
    /// Cartan type such as E6, F4 or A5.
    #[arg(long = "type", default_value = "E6")]
    pub ty: TypeLabel,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Roots, positive roots and the highest root.
    Rootsys(TypeArg),
    /// Chevalley basis certificates: Jacobi identity, Killing invariance, compact signature.
    Algebra(TypeArg),
    /// Torus involutions with their fixed dimensions.
    Involutions(TypeArg),
    /// Fixed subalgebra of a set of commuting involutions.
    Fixalg {
        #[command(flatten)]
        ty: TypeArg,
        /// Automorphism: a preset, comma-separated coweight parities, or a `*`-product.
        #[arg(long = "auto", required = true)]
        autos: Vec<String>,
    },
    /// Real form fixed by involutions inside the real form of a Cartan involution.
    Realform {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value = "x4")]
        theta: String,
        #[arg(long = "auto")]
        autos: Vec<String>,
    },
    /// Root criteria for a Klein four group `<sigma, tau>`.
    Criteria {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value = "x4")]
        theta: String,
        #[arg(long, default_value = "x0")]
        sigma: String,
        #[arg(long, default_value = "x1")]
        tau: String,
        #[arg(long, value_enum, default_value_t = BetaArg::Plus)]
        beta: BetaArg,
    },
    /// Full case study report for e6(-14).
    E6report,
}

/// Emitted document with the status it implies.
pub struct Outcome {
    pub status: i32,
    pub text: String,
    pub json: serde_json::Value,
}

fn outcome<T: Serialize>(status: i32, text: String, doc: &T) -> anyhow::Result<Outcome> {
    Ok(Outcome { status, text, json: serde_json::to_value(doc)? })
}

/// Parses an automorphism argument.
///
/// Presets: `id`, `omega`, `chev`, `sigma1`..`sigma4`, `x0`, `x1`, `x4`.
/// Raw vectors `e_1,...,e_r` give `exp(i pi ad sum e_k omega_k^vee)` with
/// parities taken mod 2. Factors joined by `*` compose right to left.
pub fn parse_auto(alg: &ChevalleyAlgebra, text: &str) -> anyhow::Result<AutoMap> {
    let factors: Vec<&str> = text.split('*').map(str::trim).collect();
    if factors.len() > 1 {
        let mut acc = parse_auto(alg, factors[0])?;
        for f in &factors[1..] {
            acc = compose(alg, &acc, &parse_auto(alg, f)?);
        }
        return Ok(acc.with_name(text));
    }
    let e6_only = |name: &str| -> anyhow::Result<()> {
        if alg.label().to_string() != "E6" {
            bail!("preset {name} is defined only for E6");
        }
        Ok(())
    };
    let coroot = |idx: &[usize]| -> anyhow::Result<AutoMap> {
        let mut h = vec![Q::from_integer(0.into()); alg.rank()];
        for &i in idx {
            h[i] = Q::from_integer(1.into());
        }
        Ok(inner_involution(alg, &h)?)
    };
    let omega = || -> anyhow::Result<AutoMap> {
        let perm = alg.rs.diagram_involution().ok_or_else(|| anyhow!("{} has no diagram involution", alg.label()))?;
        Ok(diagram_automorphism(alg, &perm)?.with_name("omega"))
    };
    let m = match text {
        "id" => AutoMap::identity(alg),
        "omega" => omega()?,
        "chev" => chevalley_involution(alg)?,
        "sigma1" => {
            e6_only(text)?;
            coroot(&[1])?.with_name("sigma1")
        }
        "sigma2" => {
            e6_only(text)?;
            coroot(&[0, 5])?.with_name("sigma2")
        }
        "sigma3" | "x0" => {
            e6_only(text)?;
            omega()?.with_name(text)
        }
        "sigma4" => {
            e6_only(text)?;
            compose(alg, &omega()?, &coroot(&[1])?).with_name("sigma4")
        }
        "x4" => {
            e6_only(text)?;
            casebook::x4(alg)?
        }
        "x1" => {
            e6_only(text)?;
            casebook::find_x1(alg, &omega()?, &casebook::x4(alg)?)?
        }
        raw => {
            let eps: Vec<u8> =
                raw.split(',').map(|s| s.trim().parse::<i64>().map(|v| v.rem_euclid(2) as u8)).collect::<std::result::Result<_, _>>().map_err(
                    |_| anyhow!("unknown automorphism {raw:?}; presets: id, omega, chev, sigma1..sigma4, x0, x1, x4, or comma-separated integers"),
                )?;
            if eps.len() != alg.rank() {
                bail!("torus vector {raw:?} needs {} entries", alg.rank());
            }
            torus_involution(alg, &eps)?
        }
    };
    Ok(m)
}

#[derive(Serialize)]
struct RootsysDoc {
    schema_version: u32,
    r#type: String,
    rank: usize,
    dimension: usize,
    root_count: usize,
    positive_count: usize,
    highest_root: Root,
    cartan_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
}

#[derive(Serialize)]
struct AlgebraDoc {
    schema_version: u32,
    r#type: String,
    dimension: usize,
    jacobi_triples_checked: usize,
    killing_invariance_triples_checked: usize,
    compact_killing_signature: (usize, usize),
}

#[derive(Serialize)]
struct InvolutionRow {
    name: String,
    parities: Vec<u8>,
    fixed_dim: usize,
}

#[derive(Serialize)]
struct InvolutionsDoc {
    schema_version: u32,
    r#type: String,
    torus: Vec<InvolutionRow>,
    distinct_fixed_dims: Vec<usize>,
    outer: Vec<InvolutionRow>,
}

#[derive(Serialize)]
struct FixalgDoc {
    schema_version: u32,
    r#type: String,
    automorphisms: Vec<String>,
    dimension: usize,
    rank: usize,
    complex_type: ComplexType,
    complex_type_text: String,
}

#[derive(Serialize)]
struct RealformDoc {
    schema_version: u32,
    theta: String,
    automorphisms: Vec<String>,
    descriptor: RealFormDescriptor,
}

#[derive(Serialize)]
struct CriteriaDoc {
    schema_version: u32,
    theta: String,
    beta: Root,
    sigma: String,
    tau: String,
    sigma_beta: Vec<Root>,
    single: Vec<bool>,
    pair_obstruction: bool,
    three_condition: crit::CriterionVerdict,
    witness: Option<crit::ProjectionWitness>,
}

fn algebra(ty: &TypeArg) -> anyhow::Result<ChevalleyAlgebra> {
    build_chevalley(ty.ty).with_context(|| format!("building {}", ty.ty))
}

fn fmt_root(r: &[i64]) -> String {
    format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Rootsys(ty) => {
            let rs = lieklein_core::build_root_system(ty.ty);
            let doc = RootsysDoc {
                schema_version: SCHEMA_VERSION,
                r#type: ty.ty.to_string(),
                rank: rs.rank(),
                dimension: ty.ty.dimension(),
                root_count: rs.roots.len(),
                positive_count: rs.num_positive(),
                highest_root: rs.highest_root(),
                cartan_matrix: rs.cartan.clone(),
                positive_roots: rs.positive_roots().to_vec(),
            };
            let mut text = format!(
                "{}: rank {}, {} roots ({} positive), highest root {}\n",
                doc.r#type,
                doc.rank,
                doc.root_count,
                doc.positive_count,
                fmt_root(&doc.highest_root)
            );
            for r in &doc.positive_roots {
                text.push_str(&format!("  {}\n", fmt_root(r)));
            }
            outcome(EXIT_OK, text, &doc)
        }
        Command::Algebra(ty) => {
            let alg = algebra(ty)?;
            let doc = AlgebraDoc {
                schema_version: SCHEMA_VERSION,
                r#type: ty.ty.to_string(),
                dimension: alg.dim(),
                jacobi_triples_checked: alg.jacobi_check()?,
                killing_invariance_triples_checked: alg.killing_invariance_check()?,
                compact_killing_signature: alg.compact_form_basis().killing_signature(),
            };
            let text = format!(
                "{}: dimension {}\n  Jacobi identity: {} ordered basis triples, no violations\n  Killing invariance: {} triples\n  compact form Killing signature (+, -): {:?}\n",
                doc.r#type, doc.dimension, doc.jacobi_triples_checked, doc.killing_invariance_triples_checked, doc.compact_killing_signature
            );
            outcome(EXIT_OK, text, &doc)
        }
        Command::Involutions(ty) => {
            let alg = algebra(ty)?;
            let mut torus = Vec::new();
            for eps in parity_vectors(alg.rank()).into_iter().filter(|e| e.iter().any(|&x| x != 0)) {
                let t = torus_involution(&alg, &eps)?;
                torus.push(InvolutionRow { name: t.name.clone(), fixed_dim: fixed_dim_by_trace(&alg, &[&t]), parities: eps });
            }
            let mut dims: Vec<usize> = torus.iter().map(|r| r.fixed_dim).collect();
            dims.sort_unstable();
            dims.dedup();
            let mut outer = Vec::new();
            let chev = chevalley_involution(&alg)?;
            let mut extra = vec![chev];
            if let Some(p) = alg.rs.diagram_involution() {
                extra.push(diagram_automorphism(&alg, &p)?.with_name("omega"));
            }
            for m in extra.into_iter().filter(|m| !m.inner) {
                outer.push(InvolutionRow { name: m.name.clone(), fixed_dim: fixed_dim_by_trace(&alg, &[&m]), parities: vec![] });
            }
            let doc = InvolutionsDoc { schema_version: SCHEMA_VERSION, r#type: ty.ty.to_string(), torus, distinct_fixed_dims: dims, outer };
            let mut text = format!("{}: {} torus involutions, fixed dimensions {:?}\n", doc.r#type, doc.torus.len(), doc.distinct_fixed_dims);
            for r in doc.torus.iter().chain(&doc.outer) {
                text.push_str(&format!("  {:<16} fixed dim {}\n", r.name, r.fixed_dim));
            }
            outcome(EXIT_OK, text, &doc)
        }
        Command::Fixalg { ty, autos } => {
            let alg = algebra(ty)?;
            let maps = autos.iter().map(|s| parse_auto(&alg, s)).collect::<anyhow::Result<Vec<_>>>()?;
            let refs: Vec<&AutoMap> = maps.iter().collect();
            let l = fixed_subalgebra(&alg, &refs)?;
            let dec = reductive_decompose(&alg, &l)?;
            let ct = dec.complex_type();
            let doc = FixalgDoc {
                schema_version: SCHEMA_VERSION,
                r#type: ty.ty.to_string(),
                automorphisms: maps.iter().map(|m| m.name.clone()).collect(),
                dimension: l.dim(),
                rank: dec.rank(),
                complex_type_text: ct.to_string(),
                complex_type: ct,
            };
            let text = format!(
                "fixed subalgebra of {} in {}: dimension {}, rank {}, type {}\n",
                doc.automorphisms.join(", "),
                doc.r#type,
                doc.dimension,
                doc.rank,
                doc.complex_type_text
            );
            outcome(EXIT_OK, text, &doc)
        }
        Command::Realform { ty, theta, autos } => {
            let alg = algebra(ty)?;
            let th = parse_auto(&alg, theta)?;
            let maps = autos.iter().map(|s| parse_auto(&alg, s)).collect::<anyhow::Result<Vec<_>>>()?;
            let refs: Vec<&AutoMap> = maps.iter().collect();
            let d = real_fixed_form(&alg, &th, &refs)?;
            let text = format!(
                "{}: dimension {}, signature {}, maximal compact {} ({}, dim {}), Hermitian {}\n",
                d.label, d.dim, d.signature, d.maximal_compact_label, d.maximal_compact, d.maximal_compact_dim, d.hermitian
            );
            let doc = RealformDoc {
                schema_version: SCHEMA_VERSION,
                theta: th.name.clone(),
                automorphisms: maps.iter().map(|m| m.name.clone()).collect(),
                descriptor: d,
            };
            outcome(EXIT_OK, text, &doc)
        }
        Command::Criteria { ty, theta, sigma, tau, beta } => {
            let alg = algebra(ty)?;
            let th = parse_auto(&alg, theta)?;
            let s = parse_auto(&alg, sigma)?;
            let t = parse_auto(&alg, tau)?;
            let conv = (*beta).into();
            let data = noncompact_root_split(&alg, &th)?;
            let st = compose(&alg, &s, &t).with_name(format!("{}*{}", s.name, t.name));
            let group = [&s, &t, &st];
            let single = group.iter().map(|g| crit::single_involution_check(&alg, &th, &data, g, conv)).collect::<Result<Vec<_>, _>>()?;
            let sigma_beta = group.iter().map(|g| crit::sigma_beta(&alg, &th, &data, g, conv)).collect::<Result<Vec<_>, _>>()?;
            let pair = crit::klein_four_obstruction(&alg, &th, &data, &s, &t, conv)?;
            let verdict = crit::three_condition_verdict(single[0], single[1], single[2]).with_subject(format!("<{}, {}>", s.name, t.name));
            let witness = if pair { Some(crit::projection_witness(&alg, &th, &s, &t, &data, conv)?) } else { None };
            let doc = CriteriaDoc {
                schema_version: SCHEMA_VERSION,
                theta: th.name.clone(),
                beta: data.beta_for(conv).unwrap_or_default(),
                sigma: s.name.clone(),
                tau: t.name.clone(),
                sigma_beta,
                single,
                pair_obstruction: pair,
                three_condition: verdict,
                witness,
            };
            let mut text = format!("beta = {} for Cartan involution {}\n", fmt_root(&doc.beta), doc.theta);
            for ((g, b), p) in group.iter().zip(&doc.sigma_beta).zip(&doc.single) {
                text.push_str(&format!("  {:<20} g(beta) = {:<22} g(beta) != -beta: {}\n", g.name, fmt_root(b), p));
            }
            text.push_str(&format!("  sigma beta = -tau beta != +-beta: {}\n", doc.pair_obstruction));
            text.push_str(&format!("  three-condition verdict: {}\n", casebook::verdict_name(doc.three_condition.result)));
            if let Some(w) = &doc.witness {
                text.push_str(&format!(
                    "  witness (x = {} e_beta): projection nonzero {}, Gamma-fixed {}, real {}, in p {}, nilpotent {}\n",
                    w.scale,
                    !w.projection.is_zero(),
                    w.gamma_fixed,
                    w.real,
                    w.in_p,
                    w.nilpotent
                ));
            }
            outcome(EXIT_OK, text, &doc)
        }
        Command::E6report => {
            let rep: CaseReport = casebook::case_report()?;
            outcome(report_status(&rep), render_text(&rep), &rep)
        }
    }
}

/// Exit status of a case report: 2 iff some match flag is false.
pub fn report_status(rep: &CaseReport) -> i32 {
    if rep.all_matched && rep.mismatches().is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Parses arguments, runs, writes output; returns the process exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_USAGE;
        }
    };
    let body = match cli.output.format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n",
    };
    match &cli.output.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, body) {
                eprintln!("error: writing {}: {e}", p.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{body}"),
    }
    out.status
}
