//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest
//! harness so the lines reach the console; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use lieklein_core::autgrp::{
    certify_automorphism, compose, diagram_automorphism, fixed_dim_by_trace, inner_involution, parity_vectors, torus_involution, AutoMap,
};
use lieklein_core::casebook::{realize_case_study, CaseReport, Realizations};
use lieklein_core::crit::{is_nilpotent, non_nilpotency_certificate, projection_witness, single_involution_check, three_condition_verdict, Verdict};
use lieklein_core::fixpoint::{fixed_subalgebra, identify_complex_type, reductive_decompose, ComplexType, Subalgebra};
use lieklein_core::linalg::{q, qf, Matrix};
use lieklein_core::realform::BetaConvention;
use lieklein_core::{build_chevalley, ChevalleyAlgebra, TypeLabel, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e6() -> &'static ChevalleyAlgebra {
    static ALG: OnceLock<ChevalleyAlgebra> = OnceLock::new();
    ALG.get_or_init(|| build_chevalley("E6".parse().unwrap()).unwrap())
}

fn ct(simple: &[&str], center: usize) -> ComplexType {
    ComplexType::new(simple.iter().map(|s| s.parse::<TypeLabel>().unwrap()).collect(), center)
}

fn omega(alg: &ChevalleyAlgebra) -> AutoMap {
    diagram_automorphism(alg, &alg.rs.diagram_involution().unwrap()).unwrap()
}

fn coroot_sum(alg: &ChevalleyAlgebra, idx: &[usize]) -> Vec<Q> {
    (0..alg.rank()).map(|i| if idx.contains(&i) { q(1) } else { Q::zero() }).collect()
}

/// The `e6report` run through the binary: exit status and parsed report.
fn report() -> &'static (Option<i32>, Result<CaseReport, String>) {
    static REP: OnceLock<(Option<i32>, Result<CaseReport, String>)> = OnceLock::new();
    REP.get_or_init(|| {
        let out = Command::new(env!("CARGO_BIN_EXE_lieklein")).args(["e6report", "--format", "json"]).output().expect("binary runs");
        let parsed = serde_json::from_slice::<CaseReport>(&out.stdout).map_err(|e| e.to_string());
        (out.status.code(), parsed)
    })
}

fn case() -> &'static Realizations {
    static R: OnceLock<Realizations> = OnceLock::new();
    R.get_or_init(|| realize_case_study().unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let alg = e6();
    let jac = alg.jacobi_check().map_err(|e| e.to_string())?;
    let kil = alg.killing_invariance_check().map_err(|e| e.to_string())?;
    let sig = alg.compact_form_basis().killing_signature();
    ensure(sig == (0, 78), format!("compact signature {sig:?}"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(120), format!("took {t:?}"))?;
    Ok(format!("Jacobi on {jac} triples, Killing invariance on {kil} triples, compact signature (0, 78), {:.1}s", t.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let alg = e6();
    let w = omega(alg);
    certify_automorphism(alg, &w.matrix).map_err(|e| e.to_string())?;
    ensure(w.is_involution(), "omega^2 != id")?;
    let mut inner = 0;
    for eps in parity_vectors(alg.rank()).into_iter().filter(|e| e.contains(&1)) {
        let idx: Vec<usize> = (0..alg.rank()).filter(|&i| eps[i] == 1).collect();
        let m = inner_involution(alg, &coroot_sum(alg, &idx)).map_err(|e| e.to_string())?;
        certify_automorphism(alg, &m.matrix).map_err(|e| e.to_string())?;
        ensure(m.is_involution(), format!("inner involution {idx:?} does not square to id"))?;
        inner += 1;
    }
    Ok(format!("omega preserves the bracket and squares to id; {inner} inner involutions square to id"))
}

fn criterion_3() -> Outcome {
    let alg = e6();
    let check = |m: &AutoMap, dim: usize, want: ComplexType| -> Result<(), String> {
        let l = fixed_subalgebra(alg, &[m]).map_err(|e| e.to_string())?;
        let got = reductive_decompose(alg, &l).map_err(|e| e.to_string())?.complex_type();
        ensure(l.dim() == dim && got == want, format!("{}: dim {} type {got}", m.name, l.dim()))
    };
    let w = omega(alg);
    check(&w, 52, ct(&["F4"], 0))?;
    let l = fixed_subalgebra(alg, &[&w]).unwrap();
    ensure(reductive_decompose(alg, &l).unwrap().rank() == 4, "fixed(omega) rank")?;
    check(&inner_involution(alg, &coroot_sum(alg, &[1])).unwrap(), 38, ct(&["A5", "A1"], 0))?;
    check(&inner_involution(alg, &coroot_sum(alg, &[0, 5])).unwrap(), 46, ct(&["D5"], 1))?;
    let mut dims: Vec<usize> = parity_vectors(alg.rank())
        .into_iter()
        .filter(|e| e.iter().any(|&x| x != 0))
        .map(|e| fixed_dim_by_trace(alg, &[&torus_involution(alg, &e).unwrap()]))
        .collect();
    dims.sort_unstable();
    dims.dedup();
    ensure(dims == [38, 46], format!("inner scan dims {dims:?}"))?;
    Ok("fixed(omega) = F4 (52, rank 4); fixed(sigma1) = A5+A1 (38); fixed(sigma2) = D5+T1 (46); inner dims {38, 46}".into())
}

fn report_ok() -> Result<&'static CaseReport, String> {
    report().1.as_ref().map_err(|e| format!("report did not parse: {e}"))
}

fn ident(rep: &CaseReport, subject: &str) -> Result<lieklein_core::realform::RealFormDescriptor, String> {
    rep.identifications.iter().find(|i| i.subject == subject).map(|i| i.computed.clone()).ok_or_else(|| format!("no identification for {subject}"))
}

fn criterion_4() -> Outcome {
    let rep = report_ok()?;
    let a = ident(rep, "g^x0")?;
    let b = ident(rep, "g^x1")?;
    let c = ident(rep, "g^(x0 x1)")?;
    ensure(a.label == "f4(-20)" && a.maximal_compact_label == "so(9)", format!("g^x0 = {} / {}", a.label, a.maximal_compact_label))?;
    ensure(b.label == "su(4,2)+su(2)", format!("g^x1 = {}", b.label))?;
    ensure(c.label == "sp(2,2)" && c.maximal_compact == ct(&["B2", "B2"], 0), format!("g^(x0 x1) = {} / {}", c.label, c.maximal_compact))?;
    Ok("f4(-20) [so(9)], su(4,2)+su(2), sp(2,2) [sp(2)+sp(2)]".into())
}

fn criterion_5() -> Outcome {
    let g = ident(report_ok()?, "g^Gamma")?;
    // so(5) = B2 carries the same complex type as sp(2) = C2.
    let want = ct(&["B2", "A1", "A1"], 0);
    ensure(
        g.dim == 24 && g.signature == -8 && g.label == "sp(2,1)+su(2)" && g.maximal_compact_dim == 16 && g.maximal_compact == want,
        format!("{} dim {} sig {} k {} ({})", g.label, g.dim, g.signature, g.maximal_compact, g.maximal_compact_dim),
    )?;
    Ok("g^Gamma = sp(2,1)+su(2), dim 24, signature -8, k = B2+A1+A1 of dim 16".into())
}

fn criterion_6() -> Outcome {
    let rep = report_ok()?;
    let mut got: Vec<&str> = rep.holomorphic_pairs.iter().map(|p| p.descriptor.label.as_str()).collect();
    got.sort_unstable();
    let want = ["so(8,2)+so(2)", "so*(10)+so(2)", "su(4,2)+su(2)", "su(5,1)+sl(2,R)"];
    ensure(got == want, format!("{got:?}"))?;
    Ok(format!("exactly four: {}", got.join(", ")))
}

fn criterion_7() -> Outcome {
    let r = case();
    let x01 = compose(&r.alg, &r.x0, &r.x1);
    let mut triples = Vec::new();
    for conv in [BetaConvention::Plus, BetaConvention::Minus] {
        let t = [&r.x0, &r.x1, &x01].map(|s| single_involution_check(&r.alg, &r.x4, &r.data, s, conv).unwrap());
        triples.push(t);
    }
    ensure(triples[0] == [true, true, false], format!("triple {:?}", triples[0]))?;
    ensure(triples[0] == triples[1], "triple depends on the beta convention")?;
    let v = three_condition_verdict(triples[0][0], triples[0][1], triples[0][2]);
    ensure(v.result == Verdict::Obstructed, "three-condition rule did not obstruct")?;
    Ok("(true, true, false) under beta and -beta; OBSTRUCTED".into())
}

fn criterion_8() -> Outcome {
    let r = case();
    let start = Instant::now();
    let w = projection_witness(&r.alg, &r.x4, &r.x0, &r.x1, &r.data, BetaConvention::Plus).map_err(|e| e.to_string())?;
    let p = w.projection.to_qi();
    ensure(!w.projection.is_zero(), "projection is zero")?;
    for (name, m) in [("x0", &r.x0), ("x1", &r.x1)] {
        let (re, im) = (m.apply(&w.projection.re.coords), m.apply(&w.projection.im.coords));
        ensure(re == w.projection.re.coords && im == w.projection.im.coords, format!("projection not fixed by {name}"))?;
    }
    ensure(non_nilpotency_certificate(&r.alg, &p).is_some() && !is_nilpotent(&r.alg, &p), "projection is nilpotent")?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), format!("took {t:?}"))?;
    Ok(format!("projection nonzero, fixed by Gamma, ad^78 nonzero, {:.2}s", t.as_secs_f64()))
}

fn criterion_9() -> Outcome {
    let (code, _) = report();
    ensure(*code == Some(0), format!("e6report exit status {code:?}"))?;
    let rep = report_ok()?;
    ensure(rep.all_matched, "report has mismatches")?;
    ensure(rep.surviving_pairs == ["(e6(-14), so(8,1))"], format!("surviving {:?}", rep.surviving_pairs))?;
    ensure(rep.final_verdict.contains("(e6(-14), so(8,1))"), "verdict does not name the surviving pair")?;
    let g = ident(rep, "g^Gamma'")?;
    ensure(
        g.dim == 36 && g.signature == -20 && g.complex_type == ct(&["B4"], 0),
        format!("Gamma' gives {} {} {}", g.dim, g.signature, g.complex_type),
    )?;
    ensure(!rep.imported.is_empty() && rep.imported.iter().all(|f| f.imported), "imported facts not flagged")?;
    Ok(format!("exit 0, unique survivor (e6(-14), so(8,1)), Gamma' = (36, -20, B4), {} imported facts flagged", rep.imported.len()))
}

fn char_poly_nilpotent(alg: &ChevalleyAlgebra, x: &[Q]) -> bool {
    let c = Matrix::<Q>::char_poly(&alg.ad_matrix(x));
    c[..c.len() - 1].iter().all(Zero::is_zero)
}

fn criterion_10() -> Outcome {
    let alg = e6();
    let w = omega(alg);
    let image = |l: &Subalgebra| Subalgebra::from_vectors(alg, l.basis().iter().map(|v| w.apply(v)).collect());
    let mut checked = 0;
    for eps in [[0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 1], [1, 0, 0, 1, 0, 0], [1, 0, 0, 0, 0, 0]] {
        let l = fixed_subalgebra(alg, &[&torus_involution(alg, &eps).unwrap()]).unwrap();
        let dec = reductive_decompose(alg, &l).unwrap();
        for ideal in &dec.ideals {
            let s = &ideal.sub;
            let t = identify_complex_type(alg, s).map_err(|e| e.to_string())?;
            ensure(t == ideal.label, format!("{t} != {}", ideal.label))?;
            ensure(identify_complex_type(alg, &image(s)).map_err(|e| e.to_string())? == t, format!("{t} moved by omega"))?;
            checked += 1;
        }
        let sub = fixed_subalgebra(alg, &[&torus_involution(alg, &eps).unwrap(), &w]).unwrap();
        ensure(l.contains_sub(&sub) && sub.dim() <= l.dim(), "fixed subalgebras not monotone")?;
    }
    let mut basis_cases = 0;
    for i in 0..alg.dim() {
        let mut x = vec![Q::zero(); alg.dim()];
        x[i] = q(1);
        ensure(is_nilpotent(alg, &x) == char_poly_nilpotent(alg, &x), format!("basis element {}", alg.basis_name(i)))?;
        basis_cases += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let mut nilpotent = 0;
    for trial in 0..50 {
        let mut x = vec![Q::zero(); alg.dim()];
        let pool = if trial % 2 == 0 { alg.dim() } else { alg.rank() + alg.rs.num_positive() };
        for _ in 0..8 {
            let i = rng.gen_range(0..pool);
            let i = if trial % 2 == 0 || i >= alg.rank() { i } else { i + alg.rank() };
            x[i] = qf(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        }
        let oracle = char_poly_nilpotent(alg, &x);
        ensure(is_nilpotent(alg, &x) == oracle, format!("random element {trial}"))?;
        nilpotent += usize::from(oracle);
    }
    Ok(format!("{checked} ideals omega-invariant, monotonicity, nilpotency on {basis_cases} basis + 50 random elements ({nilpotent} nilpotent)"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exactness suite", criterion_1),
        ("automorphism certificates", criterion_2),
        ("identifications of omega, sigma1, sigma2", criterion_3),
        ("fixed forms of x0, x1, x0 x1", criterion_4),
        ("fixed form of Gamma = <x0, x1>", criterion_5),
        ("holomorphic enumeration", criterion_6),
        ("criterion triple", criterion_7),
        ("projection witness", criterion_8),
        ("end-to-end report", criterion_9),
        ("property suite", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.1}s]", i + 1, start.elapsed().as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria pass");
}
