//! Chevalley basis of a simple complex Lie algebra with integer structure constants.
//!
//! Basis index `j < rank` is the simple coroot `h_j`; index `rank + k` is the
//! root vector `e_k` for the `k`-th root of [`RootSystem::roots`]. Structure
//! constants come from the extraspecial-pair recursion with all extraspecial
//! signs `+1`, and every table is held in checked `i64`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::{as_i64, q, signature, Matrix, Scalar, Q, QI};
use crate::rootsys::{add, neg, sub, Root, RootSystem, TypeLabel};

/// Sparse integer combination of basis vectors.
pub type SparseInt = Vec<(usize, i64)>;

/// Element of the algebra in Chevalley-basis coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraElement {
    #[serde(with = "crate::serde_q::vec")]
    pub coords: Vec<Q>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Q>) -> Self {
        AlgebraElement { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Chevalley-basis model of a simple complex Lie algebra.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// `N[a][b]` with `[e_a, e_b] = N[a][b] e_{a+b}`; zero unless `a + b` is a root.
    pub n: Vec<Vec<i64>>,
    /// Bracket of basis vectors `[b_i, b_j]`.
    table: Vec<Vec<SparseInt>>,
    /// Killing form Gram matrix, sparse by rows.
    killing: Vec<SparseInt>,
}

impl ChevalleyAlgebra {
    pub fn label(&self) -> TypeLabel {
        self.rs.label
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.roots.len()
    }

    /// Basis index of the root vector for root index `k`.
    pub fn e(&self, k: usize) -> usize {
        self.rank() + k
    }

    /// Root index of a basis index, if it is a root vector.
    pub fn root_of(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.rank())
    }

    pub fn basis_name(&self, i: usize) -> String {
        match self.root_of(i) {
            None => format!("h{}", i + 1),
            Some(k) => {
                let r = &self.rs.roots[k];
                let sign = if self.rs.is_positive_index(k) { "" } else { "-" };
                let digits: String = r.iter().map(|c| c.abs().to_string()).collect();
                format!("e{sign}{digits}")
            }
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseInt {
        &self.table[i][j]
    }

    pub fn killing_row(&self, i: usize) -> &SparseInt {
        &self.killing[i]
    }

    pub fn killing_basis(&self, i: usize, j: usize) -> i64 {
        self.killing[i].iter().find(|(c, _)| *c == j).map_or(0, |(_, v)| *v)
    }

    /// Coroot `h_alpha = [e_alpha, e_{-alpha}]` in the `h_j` basis.
    pub fn coroot(&self, k: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for (j, c) in self.table[self.e(k)][self.e(self.rs.neg_index(k))].iter() {
            v[*j] = *c;
        }
        v
    }

    /// Bracket of coordinate vectors over any scalar field.
    pub fn bracket_vec<F: Scalar>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        let nzx: Vec<usize> = (0..n).filter(|&i| !x[i].is_zero()).collect();
        let nzy: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
        for &i in &nzx {
            for &j in &nzy {
                let t = &self.table[i][j];
                if t.is_empty() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for (k, s) in t {
                    out[*k] = out[*k].clone() + c.clone() * F::from_i64(*s);
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        Ok(AlgebraElement::new(self.bracket_vec(&x.coords, &y.coords)))
    }

    /// Bracket of a basis vector with a sparse rational vector.
    pub fn bracket_sparse(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let t = &self.table[*i][*j];
                if t.is_empty() {
                    continue;
                }
                let c = a * b;
                for (k, s) in t {
                    out[*k] += &c * q(*s);
                }
            }
        }
        out
    }

    pub fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch { expected: self.dim(), found })
        }
    }

    /// Killing form `tr(ad x ad y)` via the precomputed Gram matrix.
    pub fn killing_vec<F: Scalar>(&self, x: &[F], y: &[F]) -> F {
        let mut s = F::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, g) in &self.killing[i] {
                if !y[*j].is_zero() {
                    s = s + xi.clone() * y[*j].clone() * F::from_i64(*g);
                }
            }
        }
        s
    }

    pub fn killing_form(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Q> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        Ok(self.killing_vec(&x.coords, &y.coords))
    }

    /// Matrix of `ad x`: column `j` holds `[x, b_j]`.
    pub fn ad_matrix<F: Scalar>(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m: Matrix<F> = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, s) in &self.table[i][j] {
                    let cur = m.get(*k, j).clone();
                    m.set(*k, j, cur + xi.clone() * F::from_i64(*s));
                }
            }
        }
        m
    }

    /// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on every ordered basis
    /// triple, returning the number of triples checked.
    pub fn jacobi_check(&self) -> Result<usize> {
        let n = self.dim();
        let mut acc = vec![0i64; n];
        let mut touched = Vec::new();
        let mut count = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    count += 1;
                    let terms = [(i, j, k), (j, k, i), (k, i, j)];
                    for (a, b, c) in terms {
                        for (l, s) in &self.table[a][b] {
                            for (m, t) in &self.table[*l][c] {
                                let v = s.checked_mul(*t).ok_or(LieError::Overflow("Jacobi check"))?;
                                acc[*m] = acc[*m].checked_add(v).ok_or(LieError::Overflow("Jacobi check"))?;
                                touched.push(*m);
                            }
                        }
                    }
                    for &m in &touched {
                        if acc[m] != 0 {
                            return Err(LieError::JacobiViolation(i, j, k));
                        }
                    }
                    for &m in &touched {
                        acc[m] = 0;
                    }
                    touched.clear();
                }
            }
        }
        Ok(count)
    }

    /// Checks `kappa([x,y],z) = kappa(x,[y,z])` on every ordered basis triple.
    pub fn killing_invariance_check(&self) -> Result<usize> {
        let n = self.dim();
        let mut count = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    count += 1;
                    let lhs: i64 = self.table[i][j].iter().map(|(l, s)| s * self.killing_basis(*l, k)).sum();
                    let rhs: i64 = self.table[j][k].iter().map(|(l, s)| s * self.killing_basis(i, *l)).sum();
                    if lhs != rhs {
                        return Err(LieError::Invalid(format!("Killing form not invariant on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(count)
    }

    /// Compact real form spanned by `u_a = e_a - e_{-a}`, `v_a = i(e_a + e_{-a})`
    /// for positive `a`, and `t_j = i h_j`.
    pub fn compact_form_basis(&self) -> CompactFormBasis {
        let n = self.dim();
        let r = self.rank();
        let p = self.rs.num_positive();
        let one = QI::one();
        let i_unit = QI::new(Q::zero(), Q::one());
        let mut gens: Vec<Vec<QI>> = Vec::with_capacity(n);
        let mut names = Vec::with_capacity(n);
        for k in 0..p {
            let mut u = vec![QI::zero(); n];
            u[self.e(k)] = one.clone();
            u[self.e(self.rs.neg_index(k))] = -one.clone();
            gens.push(u);
            names.push(format!("u{}", self.basis_name(self.e(k)).trim_start_matches('e')));
            let mut v = vec![QI::zero(); n];
            v[self.e(k)] = i_unit.clone();
            v[self.e(self.rs.neg_index(k))] = i_unit.clone();
            gens.push(v);
            names.push(format!("v{}", self.basis_name(self.e(k)).trim_start_matches('e')));
        }
        for j in 0..r {
            let mut t = vec![QI::zero(); n];
            t[j] = i_unit.clone();
            gens.push(t);
            names.push(format!("t{}", j + 1));
        }
        let m = gens.len();
        let mut structure = vec![vec![Vec::new(); m]; m];
        for a in 0..m {
            for b in 0..m {
                let br = self.bracket_vec(&gens[a], &gens[b]);
                structure[a][b] = self.compact_coords(&br).expect("compact form is closed under the bracket");
            }
        }
        let mut gram = Matrix::zeros(m, m);
        for a in 0..m {
            for b in 0..m {
                let k = self.killing_vec(&gens[a], &gens[b]);
                assert!(k.im.is_zero(), "Killing form is real on the compact form");
                gram.set(a, b, k.re);
            }
        }
        CompactFormBasis { generators: gens, names, structure, gram }
    }

    /// Real coordinates of a complex vector in the compact basis, if it lies in the compact form.
    pub fn compact_coords(&self, x: &[QI]) -> Option<Vec<(usize, Q)>> {
        let r = self.rank();
        let p = self.rs.num_positive();
        let mut out = Vec::new();
        for k in 0..p {
            let a = &x[self.e(k)];
            let b = &x[self.e(self.rs.neg_index(k))];
            // a = c_u + i c_v, b = -c_u + i c_v.
            if a.re != -b.re.clone() || a.im != b.im {
                return None;
            }
            if !a.re.is_zero() {
                out.push((2 * k, a.re.clone()));
            }
            if !a.im.is_zero() {
                out.push((2 * k + 1, a.im.clone()));
            }
        }
        for j in 0..r {
            if !x[j].re.is_zero() {
                return None;
            }
            if !x[j].im.is_zero() {
                out.push((2 * p + j, x[j].im.clone()));
            }
        }
        Some(out)
    }
}

/// Compact real form with rational structure constants.
#[derive(Clone, Debug)]
pub struct CompactFormBasis {
    /// Generators as complex vectors in Chevalley coordinates.
    pub generators: Vec<Vec<QI>>,
    pub names: Vec<String>,
    /// `structure[a][b]` expresses `[g_a, g_b]` in the compact basis.
    pub structure: Vec<Vec<Vec<(usize, Q)>>>,
    /// Killing form restricted to the compact form.
    pub gram: Matrix<Q>,
}

impl CompactFormBasis {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// `(positive, negative)` index of the Killing form on the compact form.
    pub fn killing_signature(&self) -> (usize, usize) {
        let (p, n, _) = signature(&self.gram);
        (p, n)
    }
}

/// Structure-constant recursion driven by extraspecial pairs.
struct Carter<'a> {
    rs: &'a RootSystem,
    memo: Vec<Vec<Option<i64>>>,
    extraspecial: Vec<Option<(usize, usize)>>,
}

impl<'a> Carter<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let m = rs.roots.len();
        let p = rs.num_positive();
        let mut extraspecial = vec![None; m];
        for (xi, slot) in extraspecial.iter_mut().enumerate().take(p) {
            *slot = (0..p).find_map(|a| {
                let rest = sub(&rs.roots[xi], &rs.roots[a]);
                rs.index_of(&rest).filter(|&b| rs.is_positive_index(b)).map(|b| (a, b))
            });
        }
        Carter { rs, memo: vec![vec![None; m]; m], extraspecial }
    }

    fn sq(&self, r: &[i64]) -> Q {
        q(self.rs.inner(r, r))
    }

    fn root(&self, k: usize) -> &Root {
        &self.rs.roots[k]
    }

    /// Largest `p` with `b - p a` a root.
    fn p_string(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = sub(self.root(b), self.root(a));
        while self.rs.is_root(&cur) {
            p += 1;
            cur = sub(&cur, self.root(a));
        }
        p
    }

    fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.rs.index_of(&add(self.root(a), self.root(b)))
    }

    fn n(&mut self, a: usize, b: usize) -> Result<i64> {
        if let Some(v) = self.memo[a][b] {
            return Ok(v);
        }
        let v = self.compute(a, b)?;
        self.memo[a][b] = Some(v);
        Ok(v)
    }

    fn compute(&mut self, a: usize, b: usize) -> Result<i64> {
        let Some(xi) = self.sum_index(a, b) else { return Ok(0) };
        let rs = self.rs;
        let (pa, pb) = (rs.is_positive_index(a), rs.is_positive_index(b));
        match (pa, pb) {
            (true, true) => {
                let (g, d) = self.extraspecial[xi].ok_or(LieError::MissingDecomposition(xi))?;
                if a == g {
                    return Ok(self.p_string(g, d) + 1);
                }
                if b == g {
                    return Ok(-(self.p_string(g, d) + 1));
                }
                let n_gd = q(self.p_string(g, d) + 1);
                let (ng, nd) = (rs.neg_index(g), rs.neg_index(d));
                let mut total = Q::zero();
                let bg = sub(self.root(b), self.root(g));
                if rs.is_root(&bg) {
                    let t = q(self.n(b, ng)?) * q(self.n(a, nd)?) / self.sq(&bg);
                    total += t;
                }
                let ag = sub(self.root(a), self.root(g));
                if rs.is_root(&ag) {
                    let t = q(self.n(ng, a)?) * q(self.n(b, nd)?) / self.sq(&ag);
                    total += t;
                }
                let v = self.sq(self.root(xi)) / n_gd * total;
                as_i64(&v).ok_or(LieError::NonIntegralStructureConstant(a, b))
            }
            (false, false) => Ok(-self.n(rs.neg_index(a), rs.neg_index(b))?),
            (false, true) => Ok(-self.n(b, a)?),
            (true, false) => {
                // Cyclic relation with gamma = -(a + b).
                let gamma = rs.neg_index(xi);
                let v = if rs.is_positive_index(xi) {
                    // gamma < 0: N(a,b)/(g,g) = N(b,g)/(a,a).
                    self.sq(self.root(gamma)) / self.sq(self.root(a)) * q(self.n(b, gamma)?)
                } else {
                    // gamma > 0: N(a,b)/(g,g) = N(g,a)/(b,b).
                    self.sq(self.root(gamma)) / self.sq(self.root(b)) * q(self.n(gamma, a)?)
                };
                as_i64(&v).ok_or(LieError::NonIntegralStructureConstant(a, b))
            }
        }
    }
}

/// Integer structure constants `N[a][b]` for all root pairs.
pub fn structure_constants(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    let m = rs.roots.len();
    let mut c = Carter::new(rs);
    let mut out = vec![vec![0; m]; m];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = c.n(a, b)?;
        }
    }
    Ok(out)
}

/// Builds the Chevalley basis, its bracket table and Killing form, and
/// certifies the Jacobi identity on all basis triples.
pub fn build_chevalley(label: TypeLabel) -> Result<ChevalleyAlgebra> {
    let alg = build_unchecked(label)?;
    alg.jacobi_check()?;
    Ok(alg)
}

fn build_unchecked(label: TypeLabel) -> Result<ChevalleyAlgebra> {
    let rs = RootSystem::new(label);
    let n_tab = structure_constants(&rs)?;
    let r = rs.rank();
    let m = rs.roots.len();
    let dim = r + m;
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (k, root) in rs.roots.iter().enumerate() {
        for i in 0..r {
            let v = rs.pairing_simple_coroot(root, i);
            if v != 0 {
                table[i][r + k] = vec![(r + k, v)];
                table[r + k][i] = vec![(r + k, -v)];
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            let ra = &rs.roots[a];
            if b == rs.neg_index(a) {
                // h_alpha = sum_i c_i (d_i / d_alpha) h_i.
                let da = rs.inner(ra, ra) / 2;
                let mut h = Vec::new();
                for i in 0..r {
                    let num = ra[i] * rs.d[i];
                    if num % da != 0 {
                        return Err(LieError::NonIntegralStructureConstant(a, b));
                    }
                    if num != 0 {
                        h.push((i, num / da));
                    }
                }
                table[r + a][r + b] = h;
            } else if n_tab[a][b] != 0 {
                let s = rs.index_of(&add(ra, &rs.roots[b])).expect("sum is a root");
                table[r + a][r + b] = vec![(r + s, n_tab[a][b])];
            }
        }
    }
    let mut alg = ChevalleyAlgebra { rs, n: n_tab, table, killing: Vec::new() };
    alg.killing = killing_gram(&alg)?;
    Ok(alg)
}

fn killing_gram(alg: &ChevalleyAlgebra) -> Result<Vec<SparseInt>> {
    let n = alg.dim();
    let mut rows = vec![Vec::new(); n];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            let mut tr = 0i64;
            for k in 0..n {
                for (l, s) in &alg.table[j][k] {
                    for (m, t) in &alg.table[i][*l] {
                        if *m == k {
                            let v = s.checked_mul(*t).ok_or(LieError::Overflow("Killing form"))?;
                            tr = tr.checked_add(v).ok_or(LieError::Overflow("Killing form"))?;
                        }
                    }
                }
            }
            if tr != 0 {
                row.push((j, tr));
            }
        }
    }
    Ok(rows)
}

/// Integer coroot combination `sum_i c_i (d_i / d_alpha) h_i` for a root.
pub fn coroot_coefficients(rs: &RootSystem, root: &[i64]) -> Vec<Q> {
    let da = q(rs.inner(root, root)) / q(2);
    root.iter().zip(&rs.d).map(|(c, d)| q(c * d) / da.clone()).collect()
}

/// Element with a single nonzero coordinate.
pub fn basis_vector<F: Scalar>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}

/// Negation helper exposed for callers working with roots.
pub fn negate_root(r: &[i64]) -> Root {
    neg(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_zero_vec;

    fn alg(s: &str) -> ChevalleyAlgebra {
        build_chevalley(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn jacobi_holds_for_every_type() {
        for s in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
            let a = alg(s);
            assert!(a.jacobi_check().unwrap() > 0, "{s}");
        }
    }

    #[test]
    fn structure_constants_obey_string_formula() {
        // |N(a,b)| = p + 1 where p is the length of the b-string below through a.
        for s in ["B3", "G2", "E6"] {
            let a = alg(s);
            let rs = &a.rs;
            for x in 0..rs.roots.len() {
                for y in 0..rs.roots.len() {
                    let n = a.n[x][y];
                    let sum = add(&rs.roots[x], &rs.roots[y]);
                    if !rs.is_root(&sum) {
                        assert_eq!(n, 0);
                        continue;
                    }
                    let mut p = 0;
                    let mut cur = sub(&rs.roots[y], &rs.roots[x]);
                    while rs.is_root(&cur) {
                        p += 1;
                        cur = sub(&cur, &rs.roots[x]);
                    }
                    assert_eq!(n.abs(), p + 1, "{s} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn killing_form_on_torus_matches_root_sum() {
        let a = alg("E6");
        let r = a.rank();
        for i in 0..r {
            for j in 0..r {
                let expect: i64 = a.rs.roots.iter().map(|root| a.rs.pairing_simple_coroot(root, i) * a.rs.pairing_simple_coroot(root, j)).sum();
                assert_eq!(a.killing_basis(i, j), expect);
            }
        }
        // kappa(e_a, e_-a) = kappa(h_a, h_a) / 2.
        for k in 0..a.rs.roots.len() {
            let h: Vec<Q> = a.coroot(k).iter().map(|&c| q(c)).collect();
            let mut hv = vec![Q::zero(); a.dim()];
            hv[..r].clone_from_slice(&h);
            let khh = a.killing_vec(&hv, &hv);
            assert_eq!(q(2 * a.killing_basis(a.e(k), a.e(a.rs.neg_index(k)))), khh);
        }
    }

    #[test]
    fn e6_dimensions_and_killing_invariance() {
        let a = alg("E6");
        assert_eq!(a.dim(), 78);
        assert_eq!(a.killing_invariance_check().unwrap(), 78 * 78 * 78);
    }

    #[test]
    fn compact_form_is_negative_definite() {
        let a = alg("G2");
        let c = a.compact_form_basis();
        assert_eq!(c.killing_signature(), (0, 14));
        // Antisymmetric structure constants.
        for x in 0..c.dim() {
            for y in 0..c.dim() {
                let s = &c.structure[x][y];
                let t = &c.structure[y][x];
                let neg_t: Vec<(usize, Q)> = t.iter().map(|(i, v)| (*i, -v.clone())).collect();
                assert_eq!(s, &neg_t);
            }
        }
    }

    #[test]
    fn bracket_rejects_mismatched_dimensions() {
        let a = alg("A2");
        let x = AlgebraElement::new(vec![q(1); 8]);
        let y = AlgebraElement::new(vec![q(1); 14]);
        assert_eq!(a.bracket(&x, &y), Err(LieError::DimensionMismatch { expected: 8, found: 14 }));
    }

    #[test]
    fn ad_matrix_agrees_with_bracket() {
        let a = alg("B2");
        let x: Vec<Q> = (0..a.dim()).map(|i| q(i as i64 - 3)).collect();
        let m = a.ad_matrix(&x);
        for j in 0..a.dim() {
            let bj: Vec<Q> = basis_vector(a.dim(), j);
            let diff: Vec<Q> = a.bracket_vec(&x, &bj).iter().zip(m.col(j)).map(|(u, v)| u - v).collect();
            assert!(is_zero_vec(&diff));
        }
    }
}
