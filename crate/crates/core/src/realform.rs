//! Real forms `g^Gamma` of fixed subalgebras: signature, maximal compact
//! subalgebra, Hermitian flag and a catalog label per simple ideal; and the
//! compact/noncompact split of roots for torus Cartan involutions.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::autgrp::{commute, AutoMap};
use crate::chevalley::ChevalleyAlgebra;
use crate::error::{LieError, Result};
use crate::fixpoint::{fixed_subalgebra, reductive_decompose, ComplexType, Subalgebra};
use crate::linalg::{q, Matrix, Q};
use crate::rootsys::{height, Letter, Root, TypeLabel};

/// One simple ideal of a real form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealIdeal {
    pub complex: TypeLabel,
    pub dim: usize,
    pub signature: i64,
    pub compact: ComplexType,
    pub label: String,
    pub compact_label: String,
}

/// Invariants and label of a real reductive Lie algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealFormDescriptor {
    pub complex_type: ComplexType,
    pub dim: usize,
    /// Killing signature `dim - 2 dim k`.
    pub signature: i64,
    pub maximal_compact: ComplexType,
    pub maximal_compact_dim: usize,
    pub maximal_compact_label: String,
    pub hermitian: bool,
    pub label: String,
    pub ideals: Vec<RealIdeal>,
    pub center_compact: usize,
    pub center_split: usize,
}

impl RealFormDescriptor {
    pub fn is_compact(&self) -> bool {
        self.signature == -(self.dim as i64)
    }
}

/// Catalog entry: a real form of a simple complex type and its maximal compact.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub compact: ComplexType,
    pub compact_pieces: Vec<String>,
}

fn piece(label: Option<TypeLabel>, center: usize, name: String) -> (Vec<TypeLabel>, usize, Vec<String>) {
    (label.into_iter().collect(), center, if label.is_some() || center > 0 { vec![name] } else { vec![] })
}

fn a(n: usize) -> TypeLabel {
    TypeLabel::new(Letter::A, n).expect("valid")
}

/// Compact `so(m)` as a complex type piece.
fn so_c(m: usize) -> (Vec<TypeLabel>, usize, Vec<String>) {
    let name = format!("so({m})");
    match m {
        0 | 1 => (vec![], 0, vec![]),
        2 => piece(None, 1, name),
        3 => piece(Some(a(1)), 0, name),
        4 => (vec![a(1), a(1)], 0, vec![name]),
        5 => piece(Some(TypeLabel::new(Letter::B, 2).unwrap()), 0, name),
        6 => piece(Some(a(3)), 0, name),
        m if m % 2 == 1 => piece(Some(TypeLabel::new(Letter::B, m / 2).unwrap()), 0, name),
        m => piece(Some(TypeLabel::new(Letter::D, m / 2).unwrap()), 0, name),
    }
}

/// Compact `sp(m)`.
fn sp_c(m: usize) -> (Vec<TypeLabel>, usize, Vec<String>) {
    match m {
        0 => (vec![], 0, vec![]),
        1 => piece(Some(a(1)), 0, "su(2)".into()),
        2 => piece(Some(TypeLabel::new(Letter::B, 2).unwrap()), 0, "sp(2)".into()),
        m => piece(Some(TypeLabel::new(Letter::C, m).unwrap()), 0, format!("sp({m})")),
    }
}

/// Compact `su(m)` or `u(m)`.
fn su_c(m: usize, with_center: bool) -> (Vec<TypeLabel>, usize, Vec<String>) {
    let c = usize::from(with_center);
    match (m, with_center) {
        (0, _) => (vec![], 0, vec![]),
        (1, false) => (vec![], 0, vec![]),
        (1, true) => piece(None, 1, "u(1)".into()),
        (m, false) => piece(Some(a(m - 1)), 0, format!("su({m})")),
        (m, true) => piece(Some(a(m - 1)), c, format!("u({m})")),
    }
}

fn join(parts: &[(Vec<TypeLabel>, usize, Vec<String>)]) -> (ComplexType, Vec<String>) {
    let mut simple = Vec::new();
    let mut center = 0;
    let mut names = Vec::new();
    for (s, c, n) in parts {
        simple.extend(s.iter().copied());
        center += c;
        names.extend(n.iter().cloned());
    }
    (ComplexType::new(simple, center), names)
}

fn entry(name: String, parts: &[(Vec<TypeLabel>, usize, Vec<String>)]) -> CatalogEntry {
    let (compact, compact_pieces) = join(parts);
    CatalogEntry { name, compact, compact_pieces }
}

fn exceptional(name: &str, simple: &[&str], center: usize, pieces: &[&str]) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        compact: ComplexType::new(simple.iter().map(|s| s.parse().unwrap()).collect(), center),
        compact_pieces: pieces.iter().map(|s| (*s).to_string()).collect(),
    }
}

/// Real forms of a simple complex Lie algebra, compact form first.
pub fn catalog(t: TypeLabel) -> Vec<CatalogEntry> {
    let n = t.rank;
    let mut out = Vec::new();
    match t.letter {
        Letter::A => {
            let big_n = n + 1;
            out.push(entry(format!("su({big_n})"), &[su_c(big_n, false)]));
            for qq in 1..=big_n / 2 {
                let p = big_n - qq;
                let name = if big_n == 2 { "sl(2,R)".to_string() } else { format!("su({p},{qq})") };
                out.push(entry(name, &[su_c(p, false), su_c(qq, false), piece(None, 1, "u(1)".into())]));
            }
            if big_n >= 3 {
                out.push(entry(format!("sl({big_n},R)"), &[so_c(big_n)]));
            }
            if big_n >= 4 && big_n.is_multiple_of(2) {
                out.push(entry(format!("su*({big_n})"), &[sp_c(big_n / 2)]));
            }
        }
        Letter::B | Letter::D => {
            let m = if t.letter == Letter::B { 2 * n + 1 } else { 2 * n };
            out.push(entry(format!("so({m})"), &[so_c(m)]));
            for qq in 1..=m / 2 {
                out.push(entry(format!("so({},{qq})", m - qq), &[so_c(m - qq), so_c(qq)]));
            }
            if t.letter == Letter::D {
                out.push(entry(format!("so*({m})"), &[su_c(n, true)]));
            }
        }
        Letter::C => {
            out.push(entry(format!("sp({n})"), &[sp_c(n)]));
            for qq in 1..=n / 2 {
                out.push(entry(format!("sp({},{qq})", n - qq), &[sp_c(n - qq), sp_c(qq)]));
            }
            out.push(entry(format!("sp({n},R)"), &[su_c(n, true)]));
        }
        Letter::E if n == 6 => {
            out.push(exceptional("e6(-78)", &["E6"], 0, &["e6"]));
            out.push(exceptional("e6(6)", &["C4"], 0, &["sp(4)"]));
            out.push(exceptional("e6(2)", &["A5", "A1"], 0, &["su(6)", "su(2)"]));
            out.push(exceptional("e6(-14)", &["D5"], 1, &["so(10)", "so(2)"]));
            out.push(exceptional("e6(-26)", &["F4"], 0, &["f4"]));
        }
        Letter::E if n == 7 => {
            out.push(exceptional("e7(-133)", &["E7"], 0, &["e7"]));
            out.push(exceptional("e7(7)", &["A7"], 0, &["su(8)"]));
            out.push(exceptional("e7(-5)", &["D6", "A1"], 0, &["so(12)", "su(2)"]));
            out.push(exceptional("e7(-25)", &["E6"], 1, &["e6", "so(2)"]));
        }
        Letter::E => {
            out.push(exceptional("e8(-248)", &["E8"], 0, &["e8"]));
            out.push(exceptional("e8(8)", &["D8"], 0, &["so(16)"]));
            out.push(exceptional("e8(-24)", &["E7", "A1"], 0, &["e7", "su(2)"]));
        }
        Letter::F => {
            out.push(exceptional("f4(-52)", &["F4"], 0, &["f4"]));
            out.push(exceptional("f4(4)", &["C3", "A1"], 0, &["sp(3)", "su(2)"]));
            out.push(exceptional("f4(-20)", &["B4"], 0, &["so(9)"]));
        }
        Letter::G => {
            out.push(exceptional("g2(-14)", &["G2"], 0, &["g2"]));
            out.push(exceptional("g2(2)", &["A1", "A1"], 0, &["su(2)", "su(2)"]));
        }
    }
    out
}

/// Catalog name of the real form of `t` with maximal compact of type `k`.
pub fn label_simple_real_form(t: TypeLabel, k: &ComplexType) -> Option<CatalogEntry> {
    catalog(t).into_iter().find(|e| e.compact == *k)
}

/// Name of a complex simple Lie algebra viewed as a real one.
fn complex_name(t: TypeLabel) -> String {
    let n = t.rank;
    match t.letter {
        Letter::A => format!("sl({},C)", n + 1),
        Letter::B => format!("so({},C)", 2 * n + 1),
        Letter::C => format!("sp({n},C)"),
        Letter::D => format!("so({},C)", 2 * n),
        _ => format!("{}(C)", t.to_string().to_lowercase()),
    }
}

fn check_involution(m: &AutoMap) -> Result<()> {
    if m.is_involution() {
        Ok(())
    } else {
        Err(LieError::NotInvolution(m.name.clone()))
    }
}

/// Real form `g^Gamma` for the real form `g` of Cartan involution `theta`.
/// All maps must be commuting involutions; `gamma` may be empty.
pub fn real_fixed_form(alg: &ChevalleyAlgebra, theta: &AutoMap, gamma: &[&AutoMap]) -> Result<RealFormDescriptor> {
    check_involution(theta)?;
    for g in gamma {
        check_involution(g)?;
    }
    let mut all: Vec<&AutoMap> = gamma.to_vec();
    all.push(theta);
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if !commute(all[i], all[j]) {
                return Err(LieError::NotCommuting(all[i].name.clone(), all[j].name.clone()));
            }
        }
    }
    let l = fixed_subalgebra(alg, gamma)?;
    let k = fixed_subalgebra(alg, &all)?;
    describe(alg, theta, &l, &k)
}

/// Real form of the whole algebra for a Cartan involution.
pub fn real_form(alg: &ChevalleyAlgebra, theta: &AutoMap) -> Result<RealFormDescriptor> {
    real_fixed_form(alg, theta, &[])
}

fn describe(alg: &ChevalleyAlgebra, theta: &AutoMap, l: &Subalgebra, k: &Subalgebra) -> Result<RealFormDescriptor> {
    let dec_l = reductive_decompose(alg, l)?;
    let dec_k = reductive_decompose(alg, k)?;
    let mut ideals = Vec::new();
    let mut used = vec![false; dec_l.ideals.len()];
    let mut pieces: Vec<(usize, String)> = Vec::new();
    for (i, ideal) in dec_l.ideals.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let image = Subalgebra::from_vectors(alg, ideal.sub.basis().iter().map(|b| theta.apply(b)).collect());
        if image == ideal.sub {
            let ki = ideal.sub.intersect(k);
            let ct = reductive_decompose(alg, &ki)?.complex_type();
            let signature = ideal.sub.dim() as i64 - 2 * ki.dim() as i64;
            let (label, compact_label, names) = match label_simple_real_form(ideal.label, &ct) {
                Some(e) => (e.name.clone(), e.compact_pieces.join("+"), e.compact_pieces.clone()),
                None => {
                    let raw = format!("unidentified({}, sig {signature}, k {ct})", ideal.label);
                    (raw.clone(), ct.to_string(), vec![ct.to_string()])
                }
            };
            for nm in names {
                pieces.push((piece_dim(&nm), nm));
            }
            ideals.push(RealIdeal { complex: ideal.label, dim: ideal.sub.dim(), signature, compact: ct, label, compact_label });
        } else {
            // theta swaps this ideal with another: a complex simple algebra viewed as real.
            let j = dec_l
                .ideals
                .iter()
                .position(|o| o.sub == image)
                .ok_or_else(|| LieError::NotReductive("Cartan involution does not permute the ideals".into()))?;
            used[j] = true;
            let dim = 2 * ideal.sub.dim();
            let name = complex_name(ideal.label);
            let compact_name = catalog(ideal.label)[0].name.clone();
            pieces.push((ideal.sub.dim(), compact_name.clone()));
            ideals.push(RealIdeal {
                complex: ideal.label,
                dim,
                signature: 0,
                compact: ComplexType::new(vec![ideal.label], 0),
                label: name,
                compact_label: compact_name,
            });
        }
    }
    let zc = dec_l.center.intersect(k).dim();
    let zs = dec_l.center.dim() - zc;
    for _ in 0..zc {
        pieces.push((1, "so(2)".into()));
    }
    pieces.sort_by_key(|p| std::cmp::Reverse(p.0));
    let mut label_parts: Vec<String> = ideals.iter().map(|i| i.label.clone()).collect();
    label_parts.extend(std::iter::repeat_n("so(2)".to_string(), zc));
    label_parts.extend(std::iter::repeat_n("R".to_string(), zs));
    let maximal_compact = dec_k.complex_type();
    let hermitian = dec_l.ideals.len() == 1 && dec_l.center.dim() == 0 && maximal_compact.center >= 1;
    Ok(RealFormDescriptor {
        complex_type: dec_l.complex_type(),
        dim: l.dim(),
        signature: l.dim() as i64 - 2 * k.dim() as i64,
        maximal_compact_dim: k.dim(),
        maximal_compact_label: if pieces.is_empty() { "0".into() } else { pieces.into_iter().map(|p| p.1).collect::<Vec<_>>().join("+") },
        maximal_compact,
        hermitian,
        label: if label_parts.is_empty() { "0".into() } else { label_parts.join("+") },
        ideals,
        center_compact: zc,
        center_split: zs,
    })
}

/// Dimension of a compact piece name, used only to order label parts.
fn piece_dim(name: &str) -> usize {
    let num = |s: &str| -> usize { s.trim_matches(|c: char| !c.is_ascii_digit()).parse().unwrap_or(0) };
    if let Some(r) = name.strip_prefix("so(") {
        let m = num(r);
        m * m.saturating_sub(1) / 2
    } else if let Some(r) = name.strip_prefix("su(") {
        let m = num(r);
        (m * m).saturating_sub(1)
    } else if let Some(r) = name.strip_prefix("u(") {
        let m = num(r);
        m * m
    } else if let Some(r) = name.strip_prefix("sp(") {
        let m = num(r);
        m * (2 * m + 1)
    } else {
        match name {
            "e6" => 78,
            "e7" => 133,
            "e8" => 248,
            "f4" => 52,
            "g2" => 14,
            _ => 0,
        }
    }
}

/// Compact/noncompact split of roots for a torus Cartan involution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoncompactRootData {
    pub theta: String,
    /// Root indices with `theta e_alpha = e_alpha`.
    pub compact: Vec<usize>,
    pub noncompact: Vec<usize>,
    pub hermitian: bool,
    /// Element spanning the center of `k`, in the simple-coroot basis.
    #[serde(with = "crate::serde_q::vec")]
    pub center: Vec<Q>,
    pub p_plus: Vec<usize>,
    pub p_minus: Vec<usize>,
    /// Highest weight of `p+` relative to the compact positive roots; the
    /// highest noncompact positive root when `k` has no center.
    pub beta: Option<Root>,
}

/// Which sign of the highest noncompact root is called `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BetaConvention {
    /// Highest weight of `p+`.
    Plus,
    /// Its negative, the lowest weight of `p-`.
    Minus,
}

impl NoncompactRootData {
    pub fn beta_for(&self, conv: BetaConvention) -> Option<Root> {
        self.beta.as_ref().map(|b| match conv {
            BetaConvention::Plus => b.clone(),
            BetaConvention::Minus => b.iter().map(|x| -x).collect(),
        })
    }
}

pub fn noncompact_root_split(alg: &ChevalleyAlgebra, theta: &AutoMap) -> Result<NoncompactRootData> {
    if theta.torus_parities(alg).is_none() {
        return Err(LieError::NotTorusInvolution(theta.name.clone()));
    }
    let rs = &alg.rs;
    let r = rs.rank();
    let (mut compact, mut noncompact) = (Vec::new(), Vec::new());
    for k in 0..rs.roots.len() {
        let i = alg.e(k);
        if theta.matrix.get(i, i).is_positive() {
            compact.push(k);
        } else {
            noncompact.push(k);
        }
    }
    if noncompact.is_empty() {
        return Err(LieError::DegenerateCartanInvolution);
    }
    let rows: Vec<Vec<Q>> = compact.iter().map(|&k| (0..r).map(|j| q(rs.pairing_simple_coroot(&rs.roots[k], j))).collect()).collect();
    let kernel = if rows.is_empty() { Matrix::<Q>::identity(r).row_vecs() } else { Matrix::from_rows(&rows).kernel() };
    let mut data = NoncompactRootData {
        theta: theta.name.clone(),
        compact,
        noncompact,
        hermitian: false,
        center: vec![Q::zero(); r],
        p_plus: Vec::new(),
        p_minus: Vec::new(),
        beta: None,
    };
    let top = *data
        .noncompact
        .iter()
        .filter(|&&k| rs.is_positive_index(k))
        .max_by(|&&a, &&b| height(&rs.roots[a]).cmp(&height(&rs.roots[b])).then(b.cmp(&a)))
        .expect("a positive noncompact root");
    match kernel.len() {
        0 => {
            data.beta = Some(rs.roots[top].clone());
            return Ok(data);
        }
        1 => {}
        d => return Err(LieError::Invalid(format!("center of k has dimension {d}; the algebra is not simple"))),
    }
    let mut z = kernel.into_iter().next().unwrap();
    if rs.evaluate(&rs.roots[top], &z).is_negative() {
        z = z.iter().map(|x| -x.clone()).collect();
    }
    for &k in &data.noncompact {
        let v = rs.evaluate(&rs.roots[k], &z);
        if v.is_zero() {
            return Err(LieError::Invalid("noncompact root vanishes on the center of k".into()));
        }
        if v.is_positive() {
            data.p_plus.push(k);
        } else {
            data.p_minus.push(k);
        }
    }
    let compact_pos: Vec<&Root> = data.compact.iter().filter(|&&k| rs.is_positive_index(k)).map(|&k| &rs.roots[k]).collect();
    let highest: Vec<usize> =
        data.p_plus.iter().copied().filter(|&k| compact_pos.iter().all(|g| !rs.is_root(&crate::rootsys::add(&rs.roots[k], g)))).collect();
    if highest.len() != 1 {
        return Err(LieError::Invalid(format!("p+ has {} highest weights", highest.len())));
    }
    data.beta = Some(rs.roots[highest[0]].clone());
    data.hermitian = true;
    data.center = z;
    Ok(data)
}
