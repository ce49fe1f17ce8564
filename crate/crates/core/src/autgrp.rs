//! Automorphisms of a Chevalley algebra: torus involutions, diagram
//! automorphisms, the Chevalley involution, their composites, and searches
//! over cosets of the 2-torsion of the torus.
//!
//! Every constructor certifies bracket preservation on all basis pairs.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{LieError, Result};
use crate::linalg::{as_i64, is_zero_vec, q, Matrix, SparseMatrix, Q};
use crate::rootsys::{add, sub};

/// How an automorphism was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Identity,
    /// `exp(i pi ad H)` with `H = sum_k eps_k omega_k^vee`.
    Torus {
        parities: Vec<u8>,
    },
    /// `exp(i pi ad H)` for an arbitrary rational coweight, as string rationals.
    Coweight {
        coweight: Vec<String>,
    },
    Diagram {
        permutation: Vec<usize>,
    },
    Chevalley,
    Composite {
        factors: Vec<String>,
    },
}

/// Certified automorphism given by its matrix on the Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AutoMap {
    pub name: String,
    /// Column `j` is the image of basis vector `j`.
    pub matrix: SparseMatrix,
    pub inner: bool,
    pub provenance: Provenance,
}

impl AutoMap {
    pub fn identity(alg: &ChevalleyAlgebra) -> Self {
        AutoMap { name: "id".into(), matrix: SparseMatrix::identity(alg.dim()), inner: true, provenance: Provenance::Identity }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn trace(&self) -> Q {
        self.matrix.trace()
    }

    /// `self^2 = id` and `self != id`.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.matrix.mul(&self.matrix).is_identity()
    }

    /// Action on the standard Cartan subalgebra, if it is stabilized.
    pub fn cartan_block(&self, alg: &ChevalleyAlgebra) -> Option<Matrix<Q>> {
        let r = alg.rank();
        let mut m = Matrix::zeros(r, r);
        for (i, row) in self.matrix.rows.iter().enumerate() {
            for (j, x) in row {
                match (i < r, *j < r) {
                    (true, true) => m.set(i, *j, x.clone()),
                    (false, true) | (true, false) => return None,
                    (false, false) => {}
                }
            }
        }
        Some(m)
    }

    /// Permutation of root indices induced on root lines, if the map is
    /// monomial on root vectors.
    pub fn root_permutation(&self, alg: &ChevalleyAlgebra) -> Option<Vec<usize>> {
        let cols = self.matrix.columns();
        (0..alg.rs.roots.len())
            .map(|k| {
                let c = &cols[alg.e(k)];
                match c.as_slice() {
                    [(i, _)] => alg.root_of(*i),
                    _ => None,
                }
            })
            .collect()
    }

    /// Parities `eps` if the map is the torus involution `exp(i pi sum eps_k omega_k^vee)`.
    pub fn torus_parities(&self, alg: &ChevalleyAlgebra) -> Option<Vec<u8>> {
        let r = alg.rank();
        let block = self.cartan_block(alg)?;
        if block != Matrix::identity(r) {
            return None;
        }
        let mut eps = Vec::with_capacity(r);
        for k in 0..alg.rs.roots.len() {
            let i = alg.e(k);
            let d = self.matrix.get(i, i);
            if self.matrix.rows[i].len() != 1 || d.abs() != Q::one() {
                return None;
            }
            if k < r {
                eps.push(u8::from(d.is_negative()));
            }
        }
        Some(eps)
    }
}

/// Certifies `M[b_i, b_j] = [M b_i, M b_j]` on every basis pair.
pub fn certify_automorphism(alg: &ChevalleyAlgebra, m: &SparseMatrix) -> Result<()> {
    let n = alg.dim();
    if m.n != n {
        return Err(LieError::DimensionMismatch { expected: n, found: m.n });
    }
    if m.rows.iter().all(Vec::is_empty) {
        return Err(LieError::NotAutomorphism(0, 0));
    }
    let cols = m.columns();
    for i in 0..n {
        for j in i..n {
            let br = alg.bracket_basis(i, j);
            let mut lhs = vec![Q::zero(); n];
            for (k, s) in br {
                for (l, x) in &cols[*k] {
                    lhs[*l] += x * q(*s);
                }
            }
            let rhs = alg.bracket_sparse(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(LieError::NotAutomorphism(i, j));
            }
        }
    }
    Ok(())
}

/// Whether an automorphism stabilizing the Cartan lies in the identity
/// component: its root action is a Weyl group element.
fn inner_by_weyl(alg: &ChevalleyAlgebra, m: &SparseMatrix) -> Option<bool> {
    let probe = AutoMap { name: String::new(), matrix: m.clone(), inner: true, provenance: Provenance::Identity };
    probe.cartan_block(alg)?;
    let perm = probe.root_permutation(alg)?;
    let rs = &alg.rs;
    let probe_weight = rs.generic_dominant_weight();
    let mut image = vec![0i64; rs.rank()];
    for (i, c) in probe_weight.iter().enumerate() {
        let img = &rs.roots[perm[i]];
        image = add(&image, &img.iter().map(|x| x * c).collect::<Vec<_>>());
    }
    // The chamber of the image is moved back by a Weyl element; what is left is
    // a diagram symmetry, trivial exactly when the probe returns to itself.
    Some(rs.dominant_representative(&image) == probe_weight)
}

fn finish(alg: &ChevalleyAlgebra, name: String, matrix: SparseMatrix, fallback_inner: bool, provenance: Provenance) -> Result<AutoMap> {
    certify_automorphism(alg, &matrix)?;
    let inner = inner_by_weyl(alg, &matrix).unwrap_or(fallback_inner);
    Ok(AutoMap { name, matrix, inner, provenance })
}

/// `exp(i pi ad H)` for a rational coweight `H` in the simple-coroot basis.
/// Every root must take an integer value on `H`.
pub fn inner_involution(alg: &ChevalleyAlgebra, h: &[Q]) -> Result<AutoMap> {
    if h.len() != alg.rank() {
        return Err(LieError::DimensionMismatch { expected: alg.rank(), found: h.len() });
    }
    let mut signs = Vec::with_capacity(alg.rs.roots.len());
    for root in &alg.rs.roots {
        let v = alg.rs.evaluate(root, h);
        let v = as_i64(&v).ok_or_else(|| LieError::NonIntegralPairing(format!("{root:?}")))?;
        signs.push(if v.rem_euclid(2) == 0 { 1 } else { -1 });
    }
    let coweight: Vec<String> = h.iter().map(crate::linalg::fmt_q).collect();
    let name = format!("exp(i pi [{}])", coweight.join(","));
    let matrix = diagonal_torus(alg, &signs);
    finish(alg, name, matrix, true, Provenance::Coweight { coweight })
}

/// Torus involution `exp(i pi ad sum_k eps_k omega_k^vee)`: the sign on the
/// root `sum c_k alpha_k` is `(-1)^(sum eps_k c_k)`.
pub fn torus_involution(alg: &ChevalleyAlgebra, eps: &[u8]) -> Result<AutoMap> {
    if eps.len() != alg.rank() {
        return Err(LieError::DimensionMismatch { expected: alg.rank(), found: eps.len() });
    }
    let signs: Vec<i64> = alg
        .rs
        .roots
        .iter()
        .map(|root| {
            let s: i64 = root.iter().zip(eps).map(|(c, e)| c * i64::from(*e)).sum();
            if s.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    let name = format!("t[{}]", eps.iter().map(u8::to_string).collect::<Vec<_>>().join(""));
    finish(alg, name, diagonal_torus(alg, &signs), true, Provenance::Torus { parities: eps.to_vec() })
}

fn diagonal_torus(alg: &ChevalleyAlgebra, signs: &[i64]) -> SparseMatrix {
    let r = alg.rank();
    let mut m = SparseMatrix::identity(alg.dim());
    for (k, s) in signs.iter().enumerate() {
        m.rows[r + k] = vec![(r + k, q(*s))];
    }
    m
}

/// Lifts a Dynkin diagram symmetry to the algebra, fixing the signs on
/// `e_{+-alpha_i}` to `+1` and extending along root heights.
pub fn diagram_automorphism(alg: &ChevalleyAlgebra, perm: &[usize]) -> Result<AutoMap> {
    let rs = &alg.rs;
    let r = rs.rank();
    let preserves = perm.len() == r && (0..r).all(|i| (0..r).all(|j| rs.cartan[perm[i]][perm[j]] == rs.cartan[i][j]));
    if !preserves {
        return Err(LieError::Invalid(format!("{perm:?} is not a Dynkin diagram symmetry")));
    }
    let m = rs.roots.len();
    let p = rs.num_positive();
    let image: Vec<usize> = rs.roots.iter().map(|root| rs.index_of(&rs.permute_root(perm, root)).expect("diagram symmetry permutes roots")).collect();
    let mut c: Vec<i64> = vec![0; m];
    for i in 0..r {
        c[i] = 1;
        c[rs.neg_index(i)] = 1;
    }
    for xi in r..p {
        let (i, eta) =
            (0..r).find_map(|i| rs.index_of(&sub(&rs.roots[xi], &rs.roots[i])).map(|eta| (i, eta))).ok_or(LieError::MissingDecomposition(xi))?;
        for (a, b) in [(i, eta), (rs.neg_index(i), rs.neg_index(eta))] {
            let target = rs.index_of(&add(&rs.roots[a], &rs.roots[b])).expect("sum is a root");
            let num = c[b] * alg.n[image[a]][image[b]];
            let den = alg.n[a][b];
            if den == 0 || num % den != 0 {
                return Err(LieError::ExtensionInconsistency(alg.e(a), alg.e(b)));
            }
            c[target] = num / den;
        }
    }
    let mut rows = vec![Vec::new(); alg.dim()];
    for (j, pj) in perm.iter().enumerate() {
        rows[*pj] = vec![(j, Q::one())];
    }
    for k in 0..m {
        rows[alg.e(image[k])] = vec![(alg.e(k), q(c[k]))];
    }
    let matrix = SparseMatrix { n: alg.dim(), rows };
    certify_automorphism(alg, &matrix).map_err(|e| match e {
        LieError::NotAutomorphism(a, b) => LieError::ExtensionInconsistency(a, b),
        other => other,
    })?;
    let inner = inner_by_weyl(alg, &matrix).unwrap_or(false);
    let name = if perm.iter().enumerate().all(|(i, p)| i == *p) { "id".to_string() } else { "omega".to_string() };
    Ok(AutoMap { name, matrix, inner, provenance: Provenance::Diagram { permutation: perm.to_vec() } })
}

/// Chevalley involution `e_alpha -> -e_{-alpha}`, `h -> -h`.
pub fn chevalley_involution(alg: &ChevalleyAlgebra) -> Result<AutoMap> {
    let r = alg.rank();
    let mut rows = vec![Vec::new(); alg.dim()];
    for (j, row) in rows.iter_mut().enumerate().take(r) {
        *row = vec![(j, -Q::one())];
    }
    for k in 0..alg.rs.roots.len() {
        rows[alg.e(alg.rs.neg_index(k))] = vec![(alg.e(k), -Q::one())];
    }
    let matrix = SparseMatrix { n: alg.dim(), rows };
    finish(alg, "chev".into(), matrix, false, Provenance::Chevalley)
}

/// `a . b`, applying `b` first.
pub fn compose(alg: &ChevalleyAlgebra, a: &AutoMap, b: &AutoMap) -> AutoMap {
    let matrix = a.matrix.mul(&b.matrix);
    let inner = inner_by_weyl(alg, &matrix).unwrap_or(a.inner == b.inner);
    let mut factors = Vec::new();
    for x in [a, b] {
        match &x.provenance {
            Provenance::Composite { factors: f } => factors.extend(f.iter().cloned()),
            Provenance::Identity => {}
            _ => factors.push(x.name.clone()),
        }
    }
    let name = if factors.is_empty() { "id".to_string() } else { factors.join("*") };
    let provenance = if factors.is_empty() { Provenance::Identity } else { Provenance::Composite { factors } };
    AutoMap { name, matrix, inner, provenance }
}

pub fn commute(a: &AutoMap, b: &AutoMap) -> bool {
    a.matrix.mul(&b.matrix) == b.matrix.mul(&a.matrix)
}

/// Certified Klein four group `{1, a, b, ab}`.
#[derive(Clone, Debug)]
pub struct KleinFour {
    pub a: AutoMap,
    pub b: AutoMap,
    pub ab: AutoMap,
}

impl KleinFour {
    pub fn elements(&self) -> [&AutoMap; 3] {
        [&self.a, &self.b, &self.ab]
    }
}

pub fn klein_four(alg: &ChevalleyAlgebra, a: &AutoMap, b: &AutoMap) -> Result<KleinFour> {
    for x in [a, b] {
        if x.is_identity() {
            return Err(LieError::KleinFour(format!("{} is the identity", x.name)));
        }
        if !x.is_involution() {
            return Err(LieError::KleinFour(format!("{} does not square to the identity", x.name)));
        }
    }
    if a.matrix == b.matrix {
        return Err(LieError::KleinFour(format!("{} and {} coincide", a.name, b.name)));
    }
    if !commute(a, b) {
        return Err(LieError::KleinFour(format!("{} and {} do not commute", a.name, b.name)));
    }
    Ok(KleinFour { a: a.clone(), b: b.clone(), ab: compose(alg, a, b) })
}

/// All elements of the group generated by commuting involutions, deduplicated.
pub fn generated_group(alg: &ChevalleyAlgebra, gens: &[&AutoMap]) -> Vec<SparseMatrix> {
    let mut elems = vec![SparseMatrix::identity(alg.dim())];
    for g in gens {
        if elems.contains(&g.matrix) {
            continue;
        }
        let new: Vec<SparseMatrix> = elems.iter().map(|e| e.mul(&g.matrix)).collect();
        for x in new {
            if !elems.contains(&x) {
                elems.push(x);
            }
        }
    }
    elems
}

/// Dimension of the common fixed space of a finite group, `(1/|G|) sum tr g`.
pub fn fixed_dim_by_trace(alg: &ChevalleyAlgebra, gens: &[&AutoMap]) -> usize {
    let elems = generated_group(alg, gens);
    let total = elems.iter().map(SparseMatrix::trace).fold(Q::zero(), |a, b| a + b);
    let d = total / q(elems.len() as i64);
    as_i64(&d).expect("character average is an integer") as usize
}

/// Constraints for [`involution_search`].
#[derive(Clone, Debug, Default)]
pub struct SearchConstraints {
    /// Candidates are `base . t` for torus involutions `t`; `None` means the identity coset.
    pub base: Option<AutoMap>,
    pub must_commute_with: Vec<AutoMap>,
    pub fixed_dim: Option<usize>,
    /// `(others, d)`: the group generated by the candidate and `others` fixes a `d`-dimensional subspace.
    pub joint_fixed_dims: Vec<(Vec<AutoMap>, usize)>,
    /// Restrict torus parities to those invariant under this diagram permutation.
    pub parity_symmetry: Option<Vec<usize>>,
}

/// Parity vectors of rank `r` in canonical order: fewer nonzero entries first,
/// then lower node indices first.
pub fn parity_vectors(r: usize) -> Vec<Vec<u8>> {
    let mut all: Vec<Vec<u8>> = (0u32..(1 << r)).map(|m| (0..r).map(|k| ((m >> k) & 1) as u8).collect()).collect();
    all.sort_by(|a, b| {
        let (sa, sb): (u32, u32) = (a.iter().map(|&x| u32::from(x)).sum(), b.iter().map(|&x| u32::from(x)).sum());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    all
}

/// Involutions `base . t` over torus 2-torsion elements `t`, in canonical
/// parity order, that satisfy every constraint.
pub fn involution_search(alg: &ChevalleyAlgebra, c: &SearchConstraints) -> Result<Vec<AutoMap>> {
    let mut out = Vec::new();
    for eps in parity_vectors(alg.rank()) {
        if let Some(perm) = &c.parity_symmetry {
            if (0..eps.len()).any(|i| eps[perm[i]] != eps[i]) {
                continue;
            }
        }
        let t = torus_involution(alg, &eps)?;
        let cand = match &c.base {
            Some(b) => compose(alg, b, &t),
            None => t,
        };
        if !cand.is_involution() {
            continue;
        }
        if !c.must_commute_with.iter().all(|m| commute(&cand, m)) {
            continue;
        }
        if let Some(d) = c.fixed_dim {
            if fixed_dim_by_trace(alg, &[&cand]) != d {
                continue;
            }
        }
        let joint_ok = c.joint_fixed_dims.iter().all(|(others, d)| {
            others.iter().all(|o| commute(&cand, o)) && {
                let mut gens: Vec<&AutoMap> = vec![&cand];
                gens.extend(others.iter());
                fixed_dim_by_trace(alg, &gens) == *d
            }
        });
        if joint_ok {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Image of a vector under the inverse of an automorphism restricted to the Cartan.
pub fn cartan_inverse(alg: &ChevalleyAlgebra, a: &AutoMap) -> Result<Matrix<Q>> {
    let block = a.cartan_block(alg).ok_or_else(|| LieError::NotTorusStable(a.name.clone()))?;
    block.inverse().ok_or_else(|| LieError::NotTorusStable(a.name.clone()))
}

/// Checks that `v` is fixed by the map.
pub fn fixes(a: &AutoMap, v: &[Q]) -> bool {
    is_zero_vec(&crate::linalg::sub_vec(&a.apply(v), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;

    fn e6() -> ChevalleyAlgebra {
        build_chevalley("E6".parse().unwrap()).unwrap()
    }

    #[test]
    fn omega_is_an_outer_involution() {
        let alg = e6();
        let perm = alg.rs.diagram_involution().unwrap();
        let w = diagram_automorphism(&alg, &perm).unwrap();
        assert!(w.is_involution());
        assert!(!w.inner);
        assert_eq!(fixed_dim_by_trace(&alg, &[&w]), 52);
    }

    #[test]
    fn chevalley_involution_is_outer_for_e6_and_inner_for_e7() {
        let alg = e6();
        let c = chevalley_involution(&alg).unwrap();
        assert!(!c.inner);
        assert_eq!(fixed_dim_by_trace(&alg, &[&c]), 36);
        let e7 = build_chevalley("E7".parse().unwrap()).unwrap();
        assert!(chevalley_involution(&e7).unwrap().inner);
    }

    #[test]
    fn torus_involution_matches_coweight_form() {
        let alg = e6();
        let h: Vec<Q> = crate::linalg::add_vec(&alg.rs.fundamental_coweight(0), &alg.rs.fundamental_coweight(5));
        let a = inner_involution(&alg, &h).unwrap();
        let b = torus_involution(&alg, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(b.torus_parities(&alg), Some(vec![1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn inner_involution_rejects_fractional_values() {
        let alg = e6();
        let h = vec![crate::linalg::qf(1, 3), Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        assert!(matches!(inner_involution(&alg, &h), Err(LieError::NonIntegralPairing(_))));
    }

    #[test]
    fn bad_map_is_rejected() {
        let alg = build_chevalley("A2".parse().unwrap()).unwrap();
        let mut m = SparseMatrix::identity(alg.dim());
        m.rows[alg.e(0)] = vec![(alg.e(0), q(2))];
        assert!(matches!(certify_automorphism(&alg, &m), Err(LieError::NotAutomorphism(_, _))));
    }

    #[test]
    fn klein_four_rejects_bad_pairs() {
        let alg = e6();
        let t = torus_involution(&alg, &[1, 0, 0, 0, 0, 0]).unwrap();
        let id = AutoMap::identity(&alg);
        assert!(klein_four(&alg, &t, &id).is_err());
        assert!(klein_four(&alg, &t, &t).is_err());
        let perm = alg.rs.diagram_involution().unwrap();
        let w = diagram_automorphism(&alg, &perm).unwrap();
        assert!(klein_four(&alg, &t, &w).is_err());
        let s = torus_involution(&alg, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert!(klein_four(&alg, &s, &w).is_ok());
    }

    #[test]
    fn inner_torus_involutions_fix_38_or_46() {
        let alg = e6();
        let all = involution_search(&alg, &SearchConstraints::default()).unwrap();
        assert_eq!(all.len(), 63);
        for m in &all {
            let d = fixed_dim_by_trace(&alg, &[m]);
            assert!(d == 38 || d == 46, "{}", m.name);
        }
    }
}
