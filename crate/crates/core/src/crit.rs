//! Discrete-decomposability criteria phrased on the maximal noncompact root
//! `beta`: the single-involution test `sigma beta != -beta`, the Klein four
//! obstruction `sigma beta = -tau beta != +-beta`, the three-condition
//! decision, and an explicit projection witness with an exact nilpotency test.
//!
//! Nothing here constructs representations. A verdict of
//! [`Verdict::AdmitsCandidate`] only records that no obstruction fired.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::autgrp::{commute, compose, AutoMap};
use crate::chevalley::{AlgebraElement, ChevalleyAlgebra};
use crate::error::{LieError, Result};
use crate::fixpoint::Subalgebra;
use crate::linalg::{add_vec, is_zero_vec, q, qf, qi, scale_vec, split, to_qi, Scalar, Span, Q, QI};
use crate::realform::{BetaConvention, NoncompactRootData};
use crate::rootsys::{neg, Root};

/// Outcome of a criterion. Existence of decomposable modules is never
/// asserted; only obstructions are certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AdmitsCandidate,
    Obstructed,
}

/// Named rules a verdict can cite.
pub const RULE_SINGLE: &str = "single involution: candidate iff sigma beta != -beta";
pub const RULE_PAIR: &str = "Klein four obstruction: sigma beta = -tau beta != +-beta";
pub const RULE_THREE: &str = "three-condition rule: (1) and (2) hold, (3) fails";
pub const RULE_SILENT: &str = "inconclusive by the three-condition rule";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub subject: String,
    pub sigma_beta: Option<Root>,
    pub result: Verdict,
    pub rule: String,
    pub witness: Option<ProjectionWitness>,
}

impl CriterionVerdict {
    pub fn with_subject(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    pub fn with_sigma_beta(mut self, r: Root) -> Self {
        self.sigma_beta = Some(r);
        self
    }

    pub fn with_witness(mut self, w: ProjectionWitness) -> Self {
        self.witness = Some(w);
        self
    }
}

/// Element of the complexification as a pair of rational coordinate vectors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexElement {
    pub re: AlgebraElement,
    pub im: AlgebraElement,
}

impl ComplexElement {
    pub fn from_qi(v: &[QI]) -> Self {
        let (re, im) = split(v);
        ComplexElement { re: AlgebraElement::new(re), im: AlgebraElement::new(im) }
    }

    pub fn to_qi(&self) -> Vec<QI> {
        self.re.coords.iter().zip(&self.im.coords).map(|(a, b)| qi(a.clone(), b.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.re.coords) && is_zero_vec(&self.im.coords)
    }
}

/// Projection of `y = x + conj(sigma tau x)` onto the `Gamma`-fixed points,
/// with every property the obstruction argument needs certified exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectionWitness {
    /// Scalar `c` in `x = c e_beta`, either `"1"` or `"i"`.
    pub scale: String,
    pub x: ComplexElement,
    pub y: ComplexElement,
    pub projection: ComplexElement,
    pub nilpotent: bool,
    pub gamma_fixed: bool,
    pub real: bool,
    pub in_p: bool,
}

/// `sigma alpha` for an automorphism stabilizing the standard Cartan, read off
/// from the dual action `(sigma alpha)(h) = alpha(sigma^{-1} h)`.
pub fn act_on_root(alg: &ChevalleyAlgebra, sigma: &AutoMap, alpha: &[i64]) -> Result<Root> {
    let inv = crate::autgrp::cartan_inverse(alg, sigma)?;
    let rs = &alg.rs;
    let r = rs.rank();
    let values: Vec<Q> = (0..r).map(|j| rs.evaluate(alpha, &inv.col(j))).collect();
    rs.roots
        .iter()
        .find(|b| (0..r).all(|j| q(rs.pairing_simple_coroot(b, j)) == values[j]))
        .cloned()
        .ok_or_else(|| LieError::NotTorusStable(sigma.name.clone()))
}

fn require_compatible(theta: &AutoMap, sigma: &AutoMap) -> Result<()> {
    if !commute(theta, sigma) {
        return Err(LieError::NotCommuting(theta.name.clone(), sigma.name.clone()));
    }
    Ok(())
}

fn beta_of(data: &NoncompactRootData, conv: BetaConvention) -> Result<Root> {
    data.beta_for(conv).ok_or_else(|| LieError::Invalid(format!("no maximal noncompact root for {}", data.theta)))
}

/// `sigma beta`, after checking that `sigma` stabilizes the Cartan and commutes with `theta`.
pub fn sigma_beta(alg: &ChevalleyAlgebra, theta: &AutoMap, data: &NoncompactRootData, sigma: &AutoMap, conv: BetaConvention) -> Result<Root> {
    require_compatible(theta, sigma)?;
    act_on_root(alg, sigma, &beta_of(data, conv)?)
}

/// `sigma beta != -beta`.
pub fn single_involution_check(
    alg: &ChevalleyAlgebra,
    theta: &AutoMap,
    data: &NoncompactRootData,
    sigma: &AutoMap,
    conv: BetaConvention,
) -> Result<bool> {
    let beta = beta_of(data, conv)?;
    Ok(sigma_beta(alg, theta, data, sigma, conv)? != neg(&beta))
}

/// `sigma beta = -tau beta` and `sigma beta` is neither `beta` nor `-beta`.
pub fn klein_four_obstruction(
    alg: &ChevalleyAlgebra,
    theta: &AutoMap,
    data: &NoncompactRootData,
    sigma: &AutoMap,
    tau: &AutoMap,
    conv: BetaConvention,
) -> Result<bool> {
    if !commute(sigma, tau) {
        return Err(LieError::NotCommuting(sigma.name.clone(), tau.name.clone()));
    }
    let beta = beta_of(data, conv)?;
    let sb = sigma_beta(alg, theta, data, sigma, conv)?;
    let tb = sigma_beta(alg, theta, data, tau, conv)?;
    Ok(sb == neg(&tb) && sb != beta && sb != neg(&beta))
}

/// Three-condition rule on the single-involution results for `sigma`, `tau`, `sigma tau`.
pub fn three_condition_verdict(single_sigma: bool, single_tau: bool, single_sigma_tau: bool) -> CriterionVerdict {
    let (result, rule) =
        if single_sigma && single_tau && !single_sigma_tau { (Verdict::Obstructed, RULE_THREE) } else { (Verdict::AdmitsCandidate, RULE_SILENT) };
    CriterionVerdict { subject: String::new(), sigma_beta: None, result, rule: rule.into(), witness: None }
}

/// Nilpotency of `ad x` via the image chain `g, ad x(g), ad x^2(g), ...`,
/// which strictly shrinks until it stabilizes; `ad x` is nilpotent iff the
/// stable image is zero, equivalently `ad(x)^dim = 0`.
pub fn is_nilpotent<F: Scalar>(alg: &ChevalleyAlgebra, x: &[F]) -> bool {
    stable_image(alg, x).dim() == 0
}

fn stable_image<F: Scalar>(alg: &ChevalleyAlgebra, x: &[F]) -> Span<F> {
    let n = alg.dim();
    let mut cur = Span::<F>::full(n);
    loop {
        let imgs: Vec<Vec<F>> = cur.basis.iter().map(|b| alg.bracket_vec(x, b)).collect();
        let next = Span::from_vectors(n, imgs);
        if next.dim() == cur.dim() {
            return next;
        }
        cur = next;
    }
}

/// A vector `w` with `ad(x)^dim w != 0`, recomputed by `dim` explicit
/// applications; `None` iff `x` is ad-nilpotent.
pub fn non_nilpotency_certificate<F: Scalar>(alg: &ChevalleyAlgebra, x: &[F]) -> Option<Vec<F>> {
    let img = stable_image(alg, x);
    let w = img.basis.first()?.clone();
    let mut v = w.clone();
    for _ in 0..alg.dim() {
        v = alg.bracket_vec(x, &v);
    }
    assert!(!is_zero_vec(&v), "ad x is invertible on its stable image");
    Some(w)
}

fn apply_qi(m: &AutoMap, v: &[QI]) -> Vec<QI> {
    let (re, im) = split(v);
    let (a, b) = (m.apply(&re), m.apply(&im));
    a.into_iter().zip(b).map(|(x, y)| qi(x, y)).collect()
}

/// Complex conjugation of `g_C` with respect to the real form `u^theta + i u^{-theta}`:
/// the linear part `theta . chev` composed with conjugation of coefficients.
pub fn real_form_conjugation(alg: &ChevalleyAlgebra, theta: &AutoMap, v: &[QI]) -> Result<Vec<QI>> {
    let chev = crate::autgrp::chevalley_involution(alg)?;
    let c = compose(alg, theta, &chev);
    Ok(conjugate_with(&c, v))
}

fn conjugate_with(c: &AutoMap, v: &[QI]) -> Vec<QI> {
    let (re, im) = split(v);
    let (a, b) = (c.apply(&re), c.apply(&im));
    a.into_iter().zip(b).map(|(x, y)| qi(x, -y)).collect()
}

/// Explicit element `y` on the `beta` line whose `Gamma`-average is a nonzero
/// real element of `p` that is not ad-nilpotent.
pub fn projection_witness(
    alg: &ChevalleyAlgebra,
    theta: &AutoMap,
    sigma: &AutoMap,
    tau: &AutoMap,
    data: &NoncompactRootData,
    conv: BetaConvention,
) -> Result<ProjectionWitness> {
    if !klein_four_obstruction(alg, theta, data, sigma, tau, conv)? {
        return Err(LieError::Invalid(format!("sigma beta = -tau beta != +-beta fails for ({}, {})", sigma.name, tau.name)));
    }
    let chev = crate::autgrp::chevalley_involution(alg)?;
    let conj = compose(alg, theta, &chev);
    for g in [sigma, tau] {
        if !commute(g, &conj) {
            return Err(LieError::NotCommuting(g.name.clone(), "conjugation".into()));
        }
    }
    let st = compose(alg, sigma, tau);
    let beta = beta_of(data, conv)?;
    let k = alg.rs.index_of(&beta).ok_or_else(|| LieError::Invalid("beta is not a root".into()))?;
    let n = alg.dim();
    let mut e_beta = vec![QI::zero(); n];
    e_beta[alg.e(k)] = QI::one();
    let scales = [("1", QI::one()), ("i", qi(Q::zero(), Q::one()))];
    for (name, c) in scales {
        let x = scale_vec(&c, &e_beta);
        let y = add_vec(&x, &conjugate_with(&conj, &apply_qi(&st, &x)));
        if is_zero_vec(&y) {
            continue;
        }
        let mut sum = y.clone();
        for g in [sigma, tau, &st] {
            sum = add_vec(&sum, &apply_qi(g, &y));
        }
        let p = scale_vec(&to_qi(&qf(1, 4)), &sum);
        if is_zero_vec(&p) {
            return Err(LieError::Invalid("zero projection under the Klein four hypothesis".into()));
        }
        let gamma_fixed = [sigma, tau, &st].iter().all(|g| apply_qi(g, &p) == p);
        let real = conjugate_with(&conj, &p) == p;
        let in_p = apply_qi(theta, &p) == scale_vec(&QI::from_i64(-1), &p);
        let nilpotent = is_nilpotent(alg, &p);
        return Ok(ProjectionWitness {
            scale: name.into(),
            x: ComplexElement::from_qi(&x),
            y: ComplexElement::from_qi(&y),
            projection: ComplexElement::from_qi(&p),
            nilpotent,
            gamma_fixed,
            real,
            in_p,
        });
    }
    Err(LieError::Invalid("both rescalings of x give y = 0".into()))
}

/// Center of `k = g^theta` for a torus Cartan involution, as a subalgebra.
pub fn k_center(alg: &ChevalleyAlgebra, data: &NoncompactRootData) -> Subalgebra {
    let n = alg.dim();
    let vs = if data.hermitian {
        let mut v = vec![Q::zero(); n];
        v[..data.center.len()].clone_from_slice(&data.center);
        vec![v]
    } else {
        Vec::new()
    };
    Subalgebra { span: Span::from_vectors(n, vs) }
}

/// `sigma` fixes the one-dimensional center of `k` pointwise.
pub fn holomorphic_type_check(theta: &AutoMap, sigma: &AutoMap, k_center: &Subalgebra) -> Result<bool> {
    require_compatible(theta, sigma)?;
    if k_center.dim() != 1 {
        return Err(LieError::NotHermitian(k_center.dim()));
    }
    Ok(k_center.basis().iter().all(|z| sigma.apply(z) == *z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::{diagram_automorphism, involution_search, torus_involution, SearchConstraints};
    use crate::chevalley::build_chevalley;
    use crate::realform::noncompact_root_split;

    struct Setup {
        alg: ChevalleyAlgebra,
        x4: AutoMap,
        x0: AutoMap,
        x1: AutoMap,
        data: NoncompactRootData,
    }

    fn setup() -> Setup {
        let alg = build_chevalley("E6".parse().unwrap()).unwrap();
        let x4 = torus_involution(&alg, &[1, 0, 0, 0, 0, 1]).unwrap();
        let perm = alg.rs.diagram_involution().unwrap();
        let x0 = diagram_automorphism(&alg, &perm).unwrap();
        let chev = crate::autgrp::chevalley_involution(&alg).unwrap();
        let c = SearchConstraints {
            base: Some(compose(&alg, &chev, &x0)),
            must_commute_with: vec![x0.clone(), x4.clone()],
            fixed_dim: Some(38),
            joint_fixed_dims: vec![(vec![x0.clone()], 24), (vec![x4.clone()], 22)],
            parity_symmetry: Some(perm),
        };
        let x1 = involution_search(&alg, &c).unwrap().remove(0);
        let data = noncompact_root_split(&alg, &x4).unwrap();
        Setup { alg, x4, x0, x1, data }
    }

    #[test]
    fn root_action_matches_root_permutation() {
        let s = setup();
        for g in [&s.x0, &s.x1, &s.x4] {
            let perm = g.root_permutation(&s.alg).unwrap();
            for (k, r) in s.alg.rs.roots.iter().enumerate() {
                assert_eq!(act_on_root(&s.alg, g, r).unwrap(), s.alg.rs.roots[perm[k]]);
            }
        }
    }

    #[test]
    fn criterion_triple_on_e6_minus_14() {
        let s = setup();
        let x01 = compose(&s.alg, &s.x0, &s.x1);
        for conv in [BetaConvention::Plus, BetaConvention::Minus] {
            let t: Vec<bool> = [&s.x0, &s.x1, &x01].iter().map(|g| single_involution_check(&s.alg, &s.x4, &s.data, g, conv).unwrap()).collect();
            assert_eq!(t, vec![true, true, false]);
            assert!(klein_four_obstruction(&s.alg, &s.x4, &s.data, &s.x0, &s.x1, conv).unwrap());
            assert!(klein_four_obstruction(&s.alg, &s.x4, &s.data, &s.x1, &s.x0, conv).unwrap());
            assert!(!klein_four_obstruction(&s.alg, &s.x4, &s.data, &s.x0, &s.x0, conv).unwrap());
        }
        let id = AutoMap::identity(&s.alg);
        assert!(single_involution_check(&s.alg, &s.x4, &s.data, &id, BetaConvention::Plus).unwrap());
    }

    #[test]
    fn three_condition_rule() {
        assert_eq!(three_condition_verdict(true, true, false).result, Verdict::Obstructed);
        assert_eq!(three_condition_verdict(true, true, true).result, Verdict::AdmitsCandidate);
        assert_eq!(three_condition_verdict(false, true, false).result, Verdict::AdmitsCandidate);
        assert_eq!(three_condition_verdict(false, false, false).rule, RULE_SILENT);
    }

    #[test]
    fn witness_is_real_semisimple_and_fixed() {
        let s = setup();
        let w = projection_witness(&s.alg, &s.x4, &s.x0, &s.x1, &s.data, BetaConvention::Plus).unwrap();
        assert!(!w.projection.is_zero());
        assert!(w.gamma_fixed && w.real && w.in_p);
        assert!(!w.nilpotent);
        assert!(non_nilpotency_certificate(&s.alg, &w.projection.to_qi()).is_some());
        let x01 = compose(&s.alg, &s.x0, &s.x1);
        assert!(projection_witness(&s.alg, &s.x4, &s.x0, &x01, &s.data, BetaConvention::Plus).is_err());
    }

    #[test]
    fn nilpotency_on_basis() {
        let s = setup();
        let n = s.alg.dim();
        for i in 0..n {
            let v = crate::chevalley::basis_vector::<Q>(n, i);
            assert_eq!(is_nilpotent(&s.alg, &v), i >= s.alg.rank(), "{}", s.alg.basis_name(i));
        }
        assert!(is_nilpotent(&s.alg, &vec![Q::zero(); n]));
    }

    #[test]
    fn holomorphic_type_of_generators() {
        let s = setup();
        let z = k_center(&s.alg, &s.data);
        assert!(holomorphic_type_check(&s.x4, &s.x4, &z).unwrap());
        assert!(!holomorphic_type_check(&s.x4, &s.x0, &z).unwrap());
        let s1 = torus_involution(&s.alg, &[0, 1, 0, 0, 0, 0]).unwrap();
        let d1 = noncompact_root_split(&s.alg, &s1).unwrap();
        assert_eq!(holomorphic_type_check(&s1, &s1, &k_center(&s.alg, &d1)), Err(LieError::NotHermitian(0)));
    }
}
