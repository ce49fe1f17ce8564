//! Root systems of simple Lie algebras.
//!
//! Cartan matrices follow `A[i][j] = <alpha_j, alpha_i^vee>` with Bourbaki node
//! numbering. Roots are integer coefficient vectors in the simple-root basis;
//! positive roots come first, ordered by height then lexicographically, and the
//! negative roots follow in the same order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::{q, Matrix, Q};

/// Cartan-Killing letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Type of a simple complex Lie algebra, such as `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeLabel {
    pub letter: Letter,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B => rank >= 2,
            Letter::C => rank >= 3,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { letter, rank })
        } else {
            Err(LieError::UnsupportedType(format!("{letter:?}{rank}")))
        }
    }

    /// Accepts the low-rank coincidences `B1 = C1 = A1`, `C2 = B2`, `D3 = A3`
    /// and returns the canonical label. `D2` is not simple and is rejected.
    pub fn canonical(letter: Letter, rank: usize) -> Result<Self> {
        match (letter, rank) {
            (Letter::B | Letter::C, 1) => Self::new(Letter::A, 1),
            (Letter::C, 2) => Self::new(Letter::B, 2),
            (Letter::D, 3) => Self::new(Letter::A, 3),
            _ => Self::new(letter, rank),
        }
    }

    pub fn dimension(&self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 2),
            Letter::B | Letter::C => n * (2 * n + 1),
            Letter::D => n * (2 * n - 1),
            Letter::E => [78, 133, 248][n - 6],
            Letter::F => 52,
            Letter::G => 14,
        }
    }

    pub fn root_count(&self) -> usize {
        self.dimension() - self.rank
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || LieError::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('B') => Letter::B,
            Some('C') => Letter::C,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            Some('F') => Letter::F,
            Some('G') => Letter::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        TypeLabel::new(letter, rank)
    }
}

/// Integer coefficient vector in the simple-root basis.
pub type Root = Vec<i64>;

/// Cartan matrix for a label, `A[i][j] = <alpha_j, alpha_i^vee>`.
pub fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match label.letter {
        Letter::A | Letter::B | Letter::C | Letter::F | Letter::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Letter::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Letter::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match label.letter {
        // alpha_n short.
        Letter::B => a[n - 1][n - 2] = -2,
        // alpha_n long.
        Letter::C => a[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
        Letter::F => a[2][1] = -2,
        // alpha_1 short, alpha_2 long.
        Letter::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Simple-root inner products `d_i = (alpha_i, alpha_i) / 2` scaled so the
/// shortest simple root has `d = 1`. Satisfies `d_i A[i][j] = d_j A[j][i]`.
pub fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(q(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter()
        .map(|x| {
            let r = x / &min;
            assert!(r.is_integer(), "non-integral symmetrizer");
            crate::linalg::as_i64(&r).unwrap()
        })
        .collect()
}

/// Root system with its Cartan data and indexed root list.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: TypeLabel,
    pub cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2` for each simple root.
    pub d: Vec<i64>,
    /// All roots: the positive ones first, then their negatives in the same order.
    pub roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Self {
        let cartan = cartan_matrix(label);
        let d = symmetrizer(&cartan);
        let n = label.rank;
        // Close the simple roots under simple reflections.
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut frontier: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        for r in &frontier {
            seen.insert(r.clone(), ());
        }
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                let s = reflect(&cartan, &r, i);
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), ());
                    frontier.push(s);
                }
            }
        }
        let mut pos: Vec<Root> = seen.into_keys().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| neg(r)));
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        RootSystem { label, cartan, d, roots, index }
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_positive_index(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    /// Index of `-alpha`.
    pub fn neg_index(&self, k: usize) -> usize {
        let p = self.num_positive();
        if k < p {
            k + p
        } else {
            k - p
        }
    }

    /// Symmetric bilinear form with `(alpha_i, alpha_j) = d_i A[i][j]`.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * b[j] * self.d[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<a, alpha_i^vee> = sum_k a_k A[i][k]`.
    pub fn pairing_simple_coroot(&self, a: &[i64], i: usize) -> i64 {
        a.iter().zip(&self.cartan[i]).map(|(x, y)| x * y).sum()
    }

    /// Value of the root `a` on the torus element `H = sum_j H_j h_j`.
    pub fn evaluate(&self, a: &[i64], h: &[Q]) -> Q {
        let mut s = Q::zero();
        for (j, hj) in h.iter().enumerate() {
            if !hj.is_zero() {
                s += hj * q(self.pairing_simple_coroot(a, j));
            }
        }
        s
    }

    /// Unique positive root `theta` with `theta + alpha_i` not a root for every `i`.
    pub fn highest_root(&self) -> Root {
        self.positive_roots()
            .iter()
            .find(|r| (0..self.rank()).all(|i| !self.is_root(&add(r, &unit(self.rank(), i)))))
            .cloned()
            .expect("highest root exists")
    }

    /// Lexicographically smallest non-identity Dynkin diagram involution,
    /// as an image array, or `None` if the diagram has no symmetry.
    pub fn diagram_involution(&self) -> Option<Vec<usize>> {
        let n = self.rank();
        let mut best: Option<Vec<usize>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let involutive = (0..n).all(|i| p[p[i]] == i);
            let nontrivial = (0..n).any(|i| p[i] != i);
            let preserves = (0..n).all(|i| (0..n).all(|j| self.cartan[p[i]][p[j]] == self.cartan[i][j]));
            if involutive && nontrivial && preserves && best.as_ref().is_none_or(|b| p < b.as_slice()) {
                best = Some(p.to_vec());
            }
        });
        best
    }

    /// Action of a diagram permutation on root coordinates.
    pub fn permute_root(&self, perm: &[usize], a: &[i64]) -> Root {
        let mut out = vec![0; a.len()];
        for (i, &c) in a.iter().enumerate() {
            out[perm[i]] = c;
        }
        out
    }

    /// Fundamental coweight `omega_k^vee` in the simple-coroot basis: the torus
    /// element on which `alpha_j` takes the value `delta_jk`.
    pub fn fundamental_coweight(&self, k: usize) -> Vec<Q> {
        let n = self.rank();
        // alpha_j(H) = sum_i H_i A[i][j], so H = A^{-T} e_k.
        let at = Matrix::from_rows(&(0..n).map(|j| (0..n).map(|i| q(self.cartan[i][j])).collect()).collect::<Vec<_>>());
        let inv = at.inverse().expect("Cartan matrix is invertible");
        inv.col(k)
    }

    /// Integer multiple of `sum_i (i + 1) omega_i` in root coordinates: a
    /// dominant regular weight fixed by no nontrivial diagram symmetry.
    pub fn generic_dominant_weight(&self) -> Root {
        let n = self.rank();
        let a = Matrix::from_rows(&self.cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>());
        let target: Vec<Q> = (0..n).map(|i| q(i as i64 + 1)).collect();
        let c = a.inverse().expect("Cartan matrix is invertible").apply(&target);
        let l = crate::linalg::denominator_lcm(&c);
        let l = Q::from_integer(l);
        c.iter().map(|x| crate::linalg::as_i64(&(x * &l)).expect("integral")).collect()
    }

    /// Half the sum of positive roots, times two, in root coordinates.
    pub fn two_rho(&self) -> Root {
        let mut s = vec![0; self.rank()];
        for r in self.positive_roots() {
            s = add(&s, r);
        }
        s
    }

    /// Brings a root-lattice vector into the dominant chamber with simple reflections.
    pub fn dominant_representative(&self, v: &[i64]) -> Root {
        let mut v = v.to_vec();
        'outer: loop {
            for i in 0..self.rank() {
                if self.pairing_simple_coroot(&v, i) < 0 {
                    v = reflect(&self.cartan, &v, i);
                    continue 'outer;
                }
            }
            return v;
        }
    }
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

pub fn unit(n: usize, i: usize) -> Root {
    let mut r = vec![0; n];
    r[i] = 1;
    r
}

pub fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}

/// Simple reflection `s_i(a) = a - <a, alpha_i^vee> alpha_i`.
pub fn reflect(cartan: &[Vec<i64>], a: &[i64], i: usize) -> Root {
    let p: i64 = a.iter().zip(&cartan[i]).map(|(x, y)| x * y).sum();
    let mut out = a.to_vec();
    out[i] -= p;
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Builds the root system for a type.
pub fn build_root_system(label: TypeLabel) -> RootSystem {
    RootSystem::new(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Positive roots grown by strings: `a + alpha_i` is a root iff `p - q < p`,
    /// where `p` counts steps down the `alpha_i`-string.
    fn positive_roots_by_strings(a: &[Vec<i64>]) -> Vec<Root> {
        let n = a.len();
        let mut roots: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for r in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = sub(r, &unit(n, i));
                    while roots.contains(&down) {
                        p += 1;
                        down = sub(&down, &unit(n, i));
                    }
                    let pair: i64 = r.iter().zip(&a[i]).map(|(x, y)| x * y).sum();
                    let qq = p - pair;
                    let up = add(r, &unit(n, i));
                    if qq > 0 && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots
    }

    #[test]
    fn root_counts_match_dimension_formula() {
        let labels = ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"];
        for s in labels {
            let t: TypeLabel = s.parse().unwrap();
            let rs = RootSystem::new(t);
            assert_eq!(rs.roots.len(), t.root_count(), "{s}");
        }
        assert_eq!(RootSystem::new("E6".parse().unwrap()).roots.len(), 72);
    }

    #[test]
    fn reflection_closure_agrees_with_string_growth() {
        for s in ["A3", "B4", "C3", "D4", "E6", "F4", "G2"] {
            let rs = RootSystem::new(s.parse().unwrap());
            let mut a: Vec<Root> = positive_roots_by_strings(&rs.cartan);
            let mut b: Vec<Root> = rs.positive_roots().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn e6_highest_root() {
        let rs = RootSystem::new("E6".parse().unwrap());
        assert_eq!(rs.highest_root(), vec![1, 2, 2, 3, 2, 1]);
        // Every positive root is dominated by the highest root.
        let h = rs.highest_root();
        assert!(rs.positive_roots().iter().all(|r| r.iter().zip(&h).all(|(x, y)| x <= y)));
    }

    #[test]
    fn e6_diagram_involution() {
        let rs = RootSystem::new("E6".parse().unwrap());
        assert_eq!(rs.diagram_involution(), Some(vec![5, 1, 4, 3, 2, 0]));
        assert_eq!(RootSystem::new("D4".parse().unwrap()).diagram_involution(), Some(vec![0, 1, 3, 2]));
        assert_eq!(RootSystem::new("E7".parse().unwrap()).diagram_involution(), None);
    }

    #[test]
    fn symmetrizer_makes_cartan_symmetric() {
        for s in ["B3", "C3", "F4", "G2", "E6"] {
            let rs = RootSystem::new(s.parse().unwrap());
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(rs.d[i] * rs.cartan[i][j], rs.d[j] * rs.cartan[j][i]);
                }
            }
        }
        let b = RootSystem::new("B3".parse().unwrap());
        assert_eq!(b.d, vec![2, 2, 1]);
        let c = RootSystem::new("C3".parse().unwrap());
        assert_eq!(c.d, vec![1, 1, 2]);
    }

    #[test]
    fn fundamental_coweights_are_dual() {
        let rs = RootSystem::new("E6".parse().unwrap());
        for k in 0..6 {
            let h = rs.fundamental_coweight(k);
            for j in 0..6 {
                let v = rs.evaluate(&unit(6, j), &h);
                assert_eq!(v, q(i64::from(j == k)));
            }
        }
    }

    #[test]
    fn rejects_unsupported_labels() {
        assert!("E9".parse::<TypeLabel>().is_err());
        assert!("D3".parse::<TypeLabel>().is_err());
        assert!("X2".parse::<TypeLabel>().is_err());
        assert_eq!(TypeLabel::canonical(Letter::C, 2).unwrap().to_string(), "B2");
    }
}
