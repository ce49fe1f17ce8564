//! Fixed subalgebras of automorphism groups and their decomposition into
//! center plus simple ideals with Cartan-Killing labels.
//!
//! A Cartan subalgebra of a fixed algebra need not meet the standard torus, so
//! it is grown greedily from semisimple elements whose adjoint eigenvalues lie
//! in `Q(i)`; weights and root vectors are then computed exactly over `Q(i)`.

use std::collections::BTreeSet;
use std::fmt;

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::autgrp::AutoMap;
use crate::chevalley::ChevalleyAlgebra;
use crate::error::{LieError, Result};
use crate::linalg::{denominator_lcm, is_zero_vec, lift, q, q_to_f64, round_gaussian, scale_vec, split, to_qi, Matrix, Span, Q, QI};
use crate::rootsys::{Letter, TypeLabel};

/// Subalgebra of a Chevalley algebra, held as an echelon basis of ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Subalgebra {
    pub span: Span<Q>,
}

impl Subalgebra {
    pub fn full(alg: &ChevalleyAlgebra) -> Self {
        Subalgebra { span: Span::full(alg.dim()) }
    }

    pub fn from_vectors(alg: &ChevalleyAlgebra, vs: Vec<Vec<Q>>) -> Self {
        Subalgebra { span: Span::from_vectors(alg.dim(), vs) }
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.span.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.span.contains(v)
    }

    pub fn contains_sub(&self, other: &Subalgebra) -> bool {
        self.span.contains_span(&other.span)
    }

    pub fn intersect(&self, other: &Subalgebra) -> Subalgebra {
        Subalgebra { span: self.span.intersect(&other.span) }
    }

    /// Matrix of `ad x` restricted to the subalgebra, in its echelon basis.
    pub fn ad_restricted(&self, alg: &ChevalleyAlgebra, x: &[Q]) -> Result<Matrix<Q>> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (k, b) in self.basis().iter().enumerate() {
            let c = self.span.coords(&alg.bracket_vec(x, b)).ok_or(LieError::NotSubalgebra)?;
            for (i, v) in c.into_iter().enumerate() {
                m.set(i, k, v);
            }
        }
        Ok(m)
    }
}

/// Checks that the span is closed under the bracket.
pub fn certify_closed(alg: &ChevalleyAlgebra, sub: &Subalgebra) -> Result<()> {
    let b = sub.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !sub.contains(&alg.bracket_vec(&b[i], &b[j])) {
                return Err(LieError::NotSubalgebra);
            }
        }
    }
    Ok(())
}

/// Common fixed points of a set of automorphisms, certified to be a subalgebra.
pub fn fixed_subalgebra(alg: &ChevalleyAlgebra, maps: &[&AutoMap]) -> Result<Subalgebra> {
    let n = alg.dim();
    if maps.is_empty() {
        return Ok(Subalgebra::full(alg));
    }
    let mut rows = Vec::with_capacity(n * maps.len());
    for m in maps {
        if m.matrix.n != n {
            return Err(LieError::DimensionMismatch { expected: n, found: m.matrix.n });
        }
        rows.extend(m.matrix.minus_identity_rows());
    }
    let kernel = Matrix::from_rows(&rows).kernel();
    let sub = Subalgebra::from_vectors(alg, kernel);
    certify_closed(alg, &sub)?;
    Ok(sub)
}

/// Complex type of a reductive algebra: simple labels plus center dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplexType {
    /// Sorted by dimension, largest first.
    pub simple: Vec<TypeLabel>,
    pub center: usize,
}

impl ComplexType {
    pub fn new(mut simple: Vec<TypeLabel>, center: usize) -> Self {
        sort_labels(&mut simple);
        ComplexType { simple, center }
    }

    pub fn dimension(&self) -> usize {
        self.simple.iter().map(TypeLabel::dimension).sum::<usize>() + self.center
    }
}

pub fn sort_labels(v: &mut [TypeLabel]) {
    v.sort_by(|a, b| b.dimension().cmp(&a.dimension()).then(a.cmp(b)));
}

impl fmt::Display for ComplexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple.iter().map(ToString::to_string).collect();
        if self.center > 0 {
            parts.push(format!("T{}", self.center));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Simple ideal of a reductive subalgebra.
#[derive(Clone, Debug)]
pub struct SimpleIdeal {
    pub label: TypeLabel,
    pub sub: Subalgebra,
}

/// Root of a reductive subalgebra relative to a chosen Cartan subalgebra.
#[derive(Clone, Debug)]
pub struct WeightVector {
    /// Values on the Cartan basis.
    pub weight: Vec<QI>,
    /// Root vector in ambient coordinates.
    pub vector: Vec<QI>,
}

/// Center plus simple ideals, with the Cartan data used to find them.
#[derive(Clone, Debug)]
pub struct ReductiveDecomposition {
    pub dim: usize,
    pub center: Subalgebra,
    pub ideals: Vec<SimpleIdeal>,
    /// Rational basis of the Cartan subalgebra, ambient coordinates.
    pub cartan: Vec<Vec<Q>>,
    pub roots: Vec<WeightVector>,
}

impl ReductiveDecomposition {
    pub fn complex_type(&self) -> ComplexType {
        ComplexType::new(self.ideals.iter().map(|i| i.label).collect(), self.center.dim())
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }
}

/// Eigenvalues in `Q(i)` with exact eigenspaces (local coordinates), or `None`
/// when the matrix is not diagonalizable over `Q(i)`. Eigenvalues must be
/// Gaussian integers; callers scale accordingly.
pub fn gaussian_eigendecomposition(a: &Matrix<Q>) -> Option<Vec<(QI, Vec<Vec<QI>>)>> {
    let n = a.rows;
    if n == 0 {
        return Some(Vec::new());
    }
    let fm = DMatrix::from_fn(n, n, |i, j| q_to_f64(a.get(i, j)));
    let ev = Schur::try_new(fm, f64::EPSILON, 20_000)?.complex_eigenvalues();
    let mut cands: Vec<QI> = Vec::new();
    for z in ev.iter() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return None;
        }
        let g = round_gaussian(z.re, z.im);
        if !cands.contains(&g) {
            cands.push(g);
        }
    }
    let aq = Matrix::from_rows(&a.row_vecs().iter().map(|r| lift(r)).collect::<Vec<_>>());
    let mut total = 0;
    let mut out = Vec::new();
    for lam in cands {
        let ker = aq.sub_scalar_identity(&lam).kernel();
        if !ker.is_empty() {
            total += ker.len();
            out.push((lam, ker));
        }
    }
    (total == n).then_some(out)
}

/// Centralizer in `sub` of a set of elements.
fn centralizer(alg: &ChevalleyAlgebra, sub: &Subalgebra, elems: &[Vec<Q>]) -> Subalgebra {
    if elems.is_empty() {
        return sub.clone();
    }
    let n = alg.dim();
    let d = sub.dim();
    let mut rows = vec![vec![Q::zero(); d]; n * elems.len()];
    for (k, b) in sub.basis().iter().enumerate() {
        for (t, e) in elems.iter().enumerate() {
            let br = alg.bracket_vec(e, b);
            for (i, v) in br.into_iter().enumerate() {
                rows[t * n + i][k] = v;
            }
        }
    }
    let rows: Vec<Vec<Q>> = rows.into_iter().filter(|r| !is_zero_vec(r)).collect();
    let kernel = if rows.is_empty() { Matrix::<Q>::identity(d).row_vecs() } else { Matrix::from_rows(&rows).kernel() };
    Subalgebra::from_vectors(alg, kernel.iter().map(|c| sub.span.combine(c)).collect())
}

/// Integral multiple of a rational vector.
fn integral(v: &[Q]) -> Vec<Q> {
    let l = Q::from_integer(denominator_lcm(v));
    scale_vec(&l, v)
}

/// Whether `ad x` is diagonalizable on `sub` with eigenvalues in `Q(i)`.
fn is_gaussian_semisimple(alg: &ChevalleyAlgebra, sub: &Subalgebra, x: &[Q]) -> Result<bool> {
    let m = sub.ad_restricted(alg, &integral(x))?;
    if m.is_zero() {
        return Ok(true);
    }
    Ok(gaussian_eigendecomposition(&m).is_some())
}

/// Rational basis of a Cartan subalgebra of a reductive subalgebra.
pub fn cartan_subalgebra(alg: &ChevalleyAlgebra, sub: &Subalgebra) -> Result<Vec<Vec<Q>>> {
    let r = alg.rank();
    let h = Span::from_vectors(alg.dim(), (0..r).map(|j| crate::chevalley::basis_vector(alg.dim(), j)).collect());
    let mut torus: Vec<Vec<Q>> = sub.span.intersect(&h).basis;
    loop {
        let z = centralizer(alg, sub, &torus);
        if z.dim() == torus.len() {
            return Ok(torus);
        }
        let tspan = Span::from_vectors(alg.dim(), torus.clone());
        let zb = z.basis().to_vec();
        let mut cands: Vec<Vec<Q>> = zb.iter().filter(|b| !tspan.contains(b)).cloned().collect();
        for i in 0..zb.len() {
            for j in i + 1..zb.len() {
                cands.push(crate::linalg::add_vec(&zb[i], &zb[j]));
                cands.push(crate::linalg::sub_vec(&zb[i], &zb[j]));
            }
        }
        let mut found = None;
        for c in cands {
            if tspan.contains(&c) {
                continue;
            }
            if is_gaussian_semisimple(alg, &z, &c)? && is_gaussian_semisimple(alg, sub, &c)? {
                found = Some(c);
                break;
            }
        }
        let s = found.ok_or_else(|| LieError::NotReductive("no semisimple element with Gaussian spectrum in the centralizer".into()))?;
        torus.push(s);
        torus = Span::from_vectors(alg.dim(), torus).basis;
    }
}

/// Roots and root vectors relative to a Cartan subalgebra.
fn root_decomposition(alg: &ChevalleyAlgebra, sub: &Subalgebra, cartan: &[Vec<Q>]) -> Result<Vec<WeightVector>> {
    let r = alg.rank();
    let in_h = cartan.iter().all(|t| t[r..].iter().all(Zero::is_zero));
    if in_h {
        return root_decomposition_in_h(alg, sub, cartan);
    }
    let d = sub.dim();
    let mut seeds: Vec<Vec<i64>> = Vec::new();
    for base in [2i64, 3, 5, 7, 11] {
        seeds.push((0..cartan.len()).map(|k| base.pow(k as u32)).collect());
    }
    for coeffs in seeds {
        let mut s = vec![Q::zero(); alg.dim()];
        for (c, t) in coeffs.iter().zip(cartan) {
            crate::linalg::axpy(&mut s, &q(*c), t);
        }
        let s = integral(&s);
        let m = sub.ad_restricted(alg, &s)?;
        let Some(eig) = gaussian_eigendecomposition(&m) else { continue };
        let regular = eig.iter().all(|(lam, vs)| if lam.is_zero() { vs.len() == cartan.len() } else { vs.len() == 1 });
        if !regular || eig.iter().map(|(_, v)| v.len()).sum::<usize>() != d {
            continue;
        }
        let basis_qi: Vec<Vec<QI>> = sub.basis().iter().map(|b| lift(b)).collect();
        let mut out = Vec::new();
        for (lam, vs) in eig {
            if lam.is_zero() {
                continue;
            }
            let local = &vs[0];
            let mut v = vec![QI::zero(); alg.dim()];
            for (c, b) in local.iter().zip(&basis_qi) {
                crate::linalg::axpy(&mut v, c, b);
            }
            let weight = weight_of(alg, cartan, &v)?;
            out.push(WeightVector { weight, vector: v });
        }
        return Ok(out);
    }
    Err(LieError::NotReductive("no regular element found in the Cartan subalgebra".into()))
}

fn weight_of(alg: &ChevalleyAlgebra, cartan: &[Vec<Q>], v: &[QI]) -> Result<Vec<QI>> {
    let p = v.iter().position(|z| !z.is_zero()).expect("nonzero root vector");
    cartan
        .iter()
        .map(|t| {
            let br = alg.bracket_vec(&lift(t), v);
            let lam = br[p].clone() / v[p].clone();
            let check: Vec<QI> = v.iter().map(|z| z.clone() * lam.clone()).collect();
            if check == br {
                Ok(lam)
            } else {
                Err(LieError::NotReductive("torus element does not act diagonally".into()))
            }
        })
        .collect()
}

fn root_decomposition_in_h(alg: &ChevalleyAlgebra, sub: &Subalgebra, cartan: &[Vec<Q>]) -> Result<Vec<WeightVector>> {
    let r = alg.rank();
    let restr: Vec<Vec<Q>> = alg.rs.roots.iter().map(|root| cartan.iter().map(|t| alg.rs.evaluate(root, &t[..r])).collect()).collect();
    let mut groups: Vec<(Vec<Q>, Vec<usize>)> = Vec::new();
    for (k, w) in restr.iter().enumerate() {
        match groups.iter_mut().find(|(g, _)| g == w) {
            Some((_, ks)) => ks.push(k),
            None => groups.push((w.clone(), vec![k])),
        }
    }
    let mut out = Vec::new();
    let mut zero_dim = 0;
    for (w, ks) in groups {
        let coords: Vec<usize> = ks.iter().map(|&k| alg.e(k)).collect();
        let projected: Vec<Vec<Q>> = sub
            .basis()
            .iter()
            .map(|b| {
                let mut p = vec![Q::zero(); alg.dim()];
                for &c in &coords {
                    p[c] = b[c].clone();
                }
                p
            })
            .collect();
        let space = Span::from_vectors(alg.dim(), projected);
        if w.iter().all(Zero::is_zero) {
            zero_dim += space.dim();
            continue;
        }
        match space.dim() {
            0 => {}
            1 => {
                let v = space.basis[0].clone();
                if !sub.contains(&v) {
                    return Err(LieError::NotReductive("weight space is not in the subalgebra".into()));
                }
                out.push(WeightVector { weight: lift(&w), vector: lift(&v) });
            }
            _ => return Err(LieError::NotReductive("root space of dimension above one".into())),
        }
    }
    if zero_dim != 0 {
        // Only the torus itself may carry the zero weight.
        return Err(LieError::NotReductive("Cartan subalgebra is not self-centralizing".into()));
    }
    Ok(out)
}

/// Gram matrix inverse of the ambient Killing form on the Cartan basis.
fn dual_form(alg: &ChevalleyAlgebra, cartan: &[Vec<Q>]) -> Result<Matrix<QI>> {
    let m = cartan.len();
    let mut g = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            g.set(i, j, alg.killing_vec(&cartan[i], &cartan[j]));
        }
    }
    let inv = g.inverse().ok_or_else(|| LieError::NotReductive("degenerate Killing form on the Cartan".into()))?;
    Ok(Matrix::from_rows(&inv.row_vecs().iter().map(|r| lift(r)).collect::<Vec<_>>()))
}

fn form(ginv: &Matrix<QI>, a: &[QI], b: &[QI]) -> QI {
    crate::linalg::dot(a, &ginv.apply(b))
}

/// Cartan type of an indecomposable Cartan matrix.
pub fn classify_cartan(a: &[Vec<i64>]) -> Result<TypeLabel> {
    let n = a.len();
    let err = || LieError::UnrecognizedCartan(format!("{a:?}"));
    let deg: Vec<usize> = (0..n).map(|i| (0..n).filter(|&j| j != i && a[i][j] != 0).count()).collect();
    let edges: Vec<(usize, usize, i64)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a[i][j] != 0).map(|(i, j)| (i, j, a[i][j] * a[j][i])).collect();
    if edges.len() + 1 != n {
        return Err(err());
    }
    if n == 1 {
        return TypeLabel::new(Letter::A, 1);
    }
    if let Some(&(i, j, m)) = edges.iter().find(|e| e.2 > 1) {
        if edges.iter().filter(|e| e.2 > 1).count() > 1 || deg.iter().any(|&d| d > 2) {
            return Err(err());
        }
        return match m {
            3 if n == 2 => TypeLabel::new(Letter::G, 2),
            2 => {
                // a[i][j] = -2 means alpha_j is the long root of the pair.
                let (short, long) = if a[i][j] == -2 { (i, j) } else { (j, i) };
                if n == 2 {
                    return TypeLabel::new(Letter::B, 2);
                }
                if deg[short] == 1 {
                    TypeLabel::canonical(Letter::B, n)
                } else if deg[long] == 1 {
                    TypeLabel::canonical(Letter::C, n)
                } else if n == 4 {
                    TypeLabel::new(Letter::F, 4)
                } else {
                    Err(err())
                }
            }
            _ => Err(err()),
        };
    }
    let branches: Vec<usize> = (0..n).filter(|&i| deg[i] == 3).collect();
    match branches.as_slice() {
        [] if deg.iter().all(|&d| d <= 2) => TypeLabel::new(Letter::A, n),
        [b] => {
            let mut arms: Vec<usize> = (0..n)
                .filter(|&j| j != *b && a[*b][j] != 0)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next = (0..n).find(|&k| k != prev && k != cur && a[cur][k] != 0);
                        match next {
                            Some(k) => {
                                prev = cur;
                                cur = k;
                                len += 1;
                            }
                            None => return len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => TypeLabel::canonical(Letter::D, n),
                [1, 2, 2] => TypeLabel::new(Letter::E, 6),
                [1, 2, 3] => TypeLabel::new(Letter::E, 7),
                [1, 2, 4] => TypeLabel::new(Letter::E, 8),
                _ => Err(err()),
            }
        }
        _ => Err(err()),
    }
}

/// Solves `sum_j c_j basis_j = v` over `Q(i)`.
fn solve_in(basis: &[Vec<QI>], v: &[QI]) -> Option<Vec<QI>> {
    let m = Matrix::from_cols(basis, v.len());
    let mut aug = m.row_vecs();
    for (row, x) in aug.iter_mut().zip(v) {
        row.push(x.clone());
    }
    let (rows, pivots) = crate::linalg::rref(aug, basis.len() + 1);
    if pivots.last() == Some(&basis.len()) {
        return None;
    }
    let mut c = vec![QI::zero(); basis.len()];
    for (row, p) in rows.iter().zip(&pivots) {
        c[*p] = row[basis.len()].clone();
    }
    Some(c)
}

/// Real coefficients of a complex vector, if they are all rational.
fn rational(c: &[QI]) -> Option<Vec<Q>> {
    crate::linalg::real_part_if_real(c)
}

/// Decomposes a reductive subalgebra into its center and simple ideals.
pub fn reductive_decompose(alg: &ChevalleyAlgebra, sub: &Subalgebra) -> Result<ReductiveDecomposition> {
    let cartan = cartan_subalgebra(alg, sub)?;
    let roots = root_decomposition(alg, sub, &cartan)?;
    let m = cartan.len();
    if roots.len() + m != sub.dim() {
        return Err(LieError::NotReductive("roots and Cartan do not span".into()));
    }
    // Center: torus elements killed by every root.
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for r in &roots {
        let (re, im) = split(&r.weight);
        eqs.push(re);
        eqs.push(im);
    }
    let center_coeffs = if eqs.is_empty() { Matrix::<Q>::identity(m).row_vecs() } else { Matrix::from_rows(&eqs).kernel() };
    let center_vecs: Vec<Vec<Q>> = center_coeffs
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); alg.dim()];
            for (ci, t) in c.iter().zip(&cartan) {
                crate::linalg::axpy(&mut v, ci, t);
            }
            v
        })
        .collect();
    for z in &center_vecs {
        for b in sub.basis() {
            if !is_zero_vec(&alg.bracket_vec(z, b)) {
                return Err(LieError::NotReductive("center candidate does not commute".into()));
            }
        }
    }
    let center = Subalgebra::from_vectors(alg, center_vecs);
    if roots.is_empty() {
        return Ok(ReductiveDecomposition { dim: sub.dim(), center, ideals: Vec::new(), cartan, roots });
    }
    let ginv = dual_form(alg, &cartan)?;
    let weights: Vec<Vec<QI>> = roots.iter().map(|r| r.weight.clone()).collect();
    // Basis of the root span, then lexicographic positivity in that basis.
    let mut rbasis: Vec<Vec<QI>> = Vec::new();
    for w in &weights {
        let mut trial = rbasis.clone();
        trial.push(w.clone());
        if Span::from_vectors(m, trial.clone()).dim() == trial.len() {
            rbasis = trial;
        }
    }
    let coords: Vec<Vec<Q>> = weights
        .iter()
        .map(|w| solve_in(&rbasis, w).and_then(|c| rational(&c)))
        .collect::<Option<_>>()
        .ok_or_else(|| LieError::NotReductive("roots are not rational in a root basis".into()))?;
    let positive: Vec<usize> = (0..weights.len()).filter(|&k| coords[k].iter().find(|x| !x.is_zero()).is_some_and(|x| *x > Q::zero())).collect();
    let is_pos_root = |w: &[QI]| positive.iter().any(|&k| weights[k] == w);
    let simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&k| !positive.iter().any(|&j| j != k && is_pos_root(&crate::linalg::sub_vec(&weights[k], &weights[j]))))
        .collect();
    let l = simple.len();
    let mut cm = vec![vec![0i64; l]; l];
    for i in 0..l {
        for j in 0..l {
            let wi = &weights[simple[i]];
            let wj = &weights[simple[j]];
            let v = to_qi(&q(2)) * form(&ginv, wi, wj) / form(&ginv, wi, wi);
            let v = rational(&[v]).and_then(|x| crate::linalg::as_i64(&x[0]));
            cm[i][j] = v.ok_or_else(|| LieError::NotReductive("non-integral Cartan entry".into()))?;
        }
    }
    // Simple-root coordinates of every root give the ideal each belongs to.
    let sbasis: Vec<Vec<QI>> = simple.iter().map(|&k| weights[k].clone()).collect();
    let scoords: Vec<Vec<Q>> = weights
        .iter()
        .map(|w| solve_in(&sbasis, w).and_then(|c| rational(&c)))
        .collect::<Option<_>>()
        .ok_or_else(|| LieError::NotReductive("roots outside the simple-root lattice".into()))?;
    let comps = components(&cm);
    let mut ideals = Vec::new();
    for comp in comps {
        let sub_cm: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cm[i][j]).collect()).collect();
        let label = classify_cartan(&sub_cm)?;
        let members: Vec<usize> =
            (0..weights.len()).filter(|&k| scoords[k].iter().enumerate().any(|(i, x)| !x.is_zero() && comp.contains(&i))).collect();
        if members.len() != label.root_count() {
            return Err(LieError::NotReductive(format!("root count mismatch for {label}")));
        }
        check_length_census(label, &members, &weights, &ginv)?;
        let mut vecs: Vec<Vec<QI>> = members.iter().map(|&k| roots[k].vector.clone()).collect();
        for &k in &members {
            let opp = crate::linalg::scale_vec(&-QI::one(), &weights[k]);
            let j = (0..weights.len()).find(|&j| weights[j] == opp).ok_or_else(|| LieError::NotReductive("root without negative".into()))?;
            vecs.push(alg.bracket_vec(&roots[k].vector, &roots[j].vector));
        }
        let mut real_vecs = Vec::new();
        for v in &vecs {
            let (re, im) = split(v);
            real_vecs.push(re);
            real_vecs.push(im);
        }
        let ideal = Subalgebra::from_vectors(alg, real_vecs);
        if ideal.dim() != label.dimension() {
            return Err(LieError::NonRationalIdeal);
        }
        ideals.push(SimpleIdeal { label, sub: ideal });
    }
    ideals.sort_by(|a, b| b.label.dimension().cmp(&a.label.dimension()).then(a.label.cmp(&b.label)));
    let total: usize = center.dim() + ideals.iter().map(|i| i.sub.dim()).sum::<usize>();
    if total != sub.dim() {
        return Err(LieError::NotReductive(format!("ideals and center span {total} of {}", sub.dim())));
    }
    for (i, a) in ideals.iter().enumerate() {
        certify_closed(alg, &a.sub)?;
        for b in &ideals[i + 1..] {
            for x in a.sub.basis() {
                for y in b.sub.basis() {
                    if !is_zero_vec(&alg.bracket_vec(x, y)) {
                        return Err(LieError::NotReductive("distinct ideals do not commute".into()));
                    }
                }
            }
        }
    }
    Ok(ReductiveDecomposition { dim: sub.dim(), center, ideals, cartan, roots })
}

/// `B_n` has `2n` short roots and `C_n` has `2n` long roots.
fn check_length_census(label: TypeLabel, members: &[usize], weights: &[Vec<QI>], ginv: &Matrix<QI>) -> Result<()> {
    let lens: Vec<QI> = members.iter().map(|&k| form(ginv, &weights[k], &weights[k])).collect();
    let distinct: Vec<String> = lens.iter().map(crate::linalg::fmt_qi).collect::<BTreeSet<_>>().into_iter().collect();
    let expected_lengths = match label.letter {
        Letter::B | Letter::C | Letter::F | Letter::G if label.rank >= 2 => 2,
        _ => 1,
    };
    if distinct.len() != expected_lengths {
        return Err(LieError::NotReductive(format!("{label} has {} root lengths", distinct.len())));
    }
    if matches!(label.letter, Letter::B | Letter::C) && label.rank >= 3 {
        let a = &lens[0];
        let ratio_class: Vec<bool> = lens.iter().map(|x| x == a).collect();
        let count_a = ratio_class.iter().filter(|&&b| b).count();
        let other = lens.iter().find(|x| *x != a).expect("two lengths");
        // Determine which length is shorter via the ratio, which is rational.
        let ratio = rational(&[a.clone() / other.clone()]).ok_or_else(|| LieError::NotReductive("irrational length ratio".into()))?;
        let a_is_short = ratio[0] < Q::one();
        let n_short = if a_is_short { count_a } else { lens.len() - count_a };
        let n = label.rank;
        let ok = match label.letter {
            Letter::B => n_short == 2 * n,
            _ => lens.len() - n_short == 2 * n,
        };
        if !ok {
            return Err(LieError::NotReductive(format!("root length census contradicts {label}")));
        }
    }
    Ok(())
}

fn components(cm: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cm.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let c = comp[i];
            for j in 0..n {
                if !seen[j] && cm[c][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Cartan type of a simple subalgebra; rejects anything with several ideals or a center.
pub fn identify_complex_type(alg: &ChevalleyAlgebra, sub: &Subalgebra) -> Result<TypeLabel> {
    let d = reductive_decompose(alg, sub)?;
    match (d.ideals.as_slice(), d.center.dim()) {
        ([one], 0) => Ok(one.label),
        _ => Err(LieError::NotSimple(d.complex_type().to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::{chevalley_involution, diagram_automorphism, fixed_dim_by_trace, torus_involution};
    use crate::chevalley::build_chevalley;

    #[test]
    fn cartan_matrix_classification() {
        for s in ["A1", "A5", "B2", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let t: TypeLabel = s.parse().unwrap();
            let a = crate::rootsys::cartan_matrix(t);
            assert_eq!(classify_cartan(&a).unwrap(), t, "{s}");
            // Relabel nodes in reverse; the type must not change.
            let n = a.len();
            let rev: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[n - 1 - i][n - 1 - j]).collect()).collect();
            assert_eq!(classify_cartan(&rev).unwrap(), t, "{s} reversed");
        }
    }

    #[test]
    fn whole_algebra_is_simple() {
        let alg = build_chevalley("B3".parse().unwrap()).unwrap();
        let full = Subalgebra::full(&alg);
        assert_eq!(identify_complex_type(&alg, &full).unwrap().to_string(), "B3");
    }

    #[test]
    fn e6_omega_fixes_f4() {
        let alg = build_chevalley("E6".parse().unwrap()).unwrap();
        let w = diagram_automorphism(&alg, &alg.rs.diagram_involution().unwrap()).unwrap();
        let f = fixed_subalgebra(&alg, &[&w]).unwrap();
        assert_eq!(f.dim(), 52);
        assert_eq!(identify_complex_type(&alg, &f).unwrap().to_string(), "F4");
    }

    #[test]
    fn torus_fixed_algebras_of_e6() {
        let alg = build_chevalley("E6".parse().unwrap()).unwrap();
        let s1 = torus_involution(&alg, &[0, 1, 0, 0, 0, 0]).unwrap();
        let d = reductive_decompose(&alg, &fixed_subalgebra(&alg, &[&s1]).unwrap()).unwrap();
        assert_eq!(d.complex_type().to_string(), "A5+A1");
        let s2 = torus_involution(&alg, &[1, 0, 0, 0, 0, 0]).unwrap();
        let d = reductive_decompose(&alg, &fixed_subalgebra(&alg, &[&s2]).unwrap()).unwrap();
        assert_eq!(d.complex_type().to_string(), "D5+T1");
    }

    #[test]
    fn chevalley_involution_fixes_c4_without_torus_help() {
        let alg = build_chevalley("E6".parse().unwrap()).unwrap();
        let c = chevalley_involution(&alg).unwrap();
        let f = fixed_subalgebra(&alg, &[&c]).unwrap();
        assert_eq!(f.dim(), fixed_dim_by_trace(&alg, &[&c]));
        assert_eq!(identify_complex_type(&alg, &f).unwrap().to_string(), "C4");
    }

    #[test]
    fn b_versus_c_in_rank_three() {
        for s in ["B3", "C3"] {
            let alg = build_chevalley(s.parse().unwrap()).unwrap();
            assert_eq!(identify_complex_type(&alg, &Subalgebra::full(&alg)).unwrap().to_string(), s);
        }
    }

    #[test]
    fn gaussian_spectrum_of_rotation() {
        let m = Matrix::from_rows(&[vec![q(0), q(-1)], vec![q(1), q(0)]]);
        let e = gaussian_eigendecomposition(&m).unwrap();
        assert_eq!(e.len(), 2);
        let nil = Matrix::from_rows(&[vec![q(0), q(1)], vec![q(0), q(0)]]);
        assert!(gaussian_eigendecomposition(&nil).is_none());
    }
}
