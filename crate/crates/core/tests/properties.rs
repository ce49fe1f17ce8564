//! Property suite: conjugation invariance of type identification, monotonicity
//! of fixed subalgebras, and nilpotency against the characteristic polynomial.

use std::sync::OnceLock;

use lieklein_core::autgrp::{chevalley_involution, diagram_automorphism, torus_involution, AutoMap};
use lieklein_core::crit::is_nilpotent;
use lieklein_core::fixpoint::{fixed_subalgebra, identify_complex_type, reductive_decompose, Subalgebra};
use lieklein_core::linalg::{q, qf, Matrix};
use lieklein_core::rootsys::reflect;
use lieklein_core::{build_chevalley, ChevalleyAlgebra, TypeLabel, Q};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn e6() -> &'static ChevalleyAlgebra {
    static ALG: OnceLock<ChevalleyAlgebra> = OnceLock::new();
    ALG.get_or_init(|| build_chevalley("E6".parse().unwrap()).unwrap())
}

fn omega(alg: &ChevalleyAlgebra) -> AutoMap {
    diagram_automorphism(alg, &alg.rs.diagram_involution().unwrap()).unwrap()
}

fn image(alg: &ChevalleyAlgebra, m: &AutoMap, sub: &Subalgebra) -> Subalgebra {
    Subalgebra::from_vectors(alg, sub.basis().iter().map(|v| m.apply(v)).collect())
}

/// Simple subalgebra spanned by `e_{+-w gamma}` and `h_{w gamma}` for the
/// roots `gamma` supported on the connected node set `nodes`.
fn levi_factor(alg: &ChevalleyAlgebra, nodes: &[usize], word: &[usize]) -> Subalgebra {
    let rs = &alg.rs;
    let mut vs = Vec::new();
    for k in 0..rs.num_positive() {
        let r = &rs.roots[k];
        if r.iter().enumerate().any(|(i, &c)| c != 0 && !nodes.contains(&i)) {
            continue;
        }
        let mut w = r.clone();
        for &i in word {
            w = reflect(&rs.cartan, &w, i);
        }
        let kp = rs.index_of(&w).unwrap();
        let kn = rs.neg_index(kp);
        for idx in [kp, kn] {
            let mut v = vec![Q::zero(); alg.dim()];
            v[alg.e(idx)] = q(1);
            vs.push(v);
        }
        let mut h = vec![Q::zero(); alg.dim()];
        for (j, c) in alg.coroot(kp).into_iter().enumerate() {
            h[j] = q(c);
        }
        vs.push(h);
    }
    Subalgebra::from_vectors(alg, vs)
}

/// Connected node sets of the E6 diagram (Bourbaki: chain 1-3-4-5-6, node 2 on node 4).
fn connected(nodes: &[usize]) -> bool {
    const EDGES: [(usize, usize); 5] = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
    let mut seen = vec![nodes[0]];
    let mut grew = true;
    while grew {
        grew = false;
        for &(a, b) in &EDGES {
            for (x, y) in [(a, b), (b, a)] {
                if seen.contains(&x) && nodes.contains(&y) && !seen.contains(&y) {
                    seen.push(y);
                    grew = true;
                }
            }
        }
    }
    seen.len() == nodes.len()
}

fn parities() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 6)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn identify_complex_type_invariant_under_omega(
        mask in 1u8..64,
        word in prop::collection::vec(0usize..6, 0..8),
    ) {
        let alg = e6();
        let nodes: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(connected(&nodes));
        let l = levi_factor(alg, &nodes, &word);
        let t = identify_complex_type(alg, &l).unwrap();
        prop_assert_eq!(t.rank, nodes.len());
        prop_assert_eq!(t.dimension(), l.dim());
        let w = omega(alg);
        prop_assert_eq!(identify_complex_type(alg, &image(alg, &w, &l)).unwrap(), t);
    }

    #[test]
    fn reductive_type_invariant_under_omega(eps in parities()) {
        let alg = e6();
        let l = fixed_subalgebra(alg, &[&torus_involution(alg, &eps).unwrap()]).unwrap();
        let w = omega(alg);
        let a = reductive_decompose(alg, &l).unwrap().complex_type();
        let b = reductive_decompose(alg, &image(alg, &w, &l)).unwrap().complex_type();
        prop_assert_eq!(a.dimension(), l.dim());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fixed_subalgebra_is_antimonotone(a in parities(), b in parities(), with_chev in any::<bool>()) {
        let alg = e6();
        let ta = torus_involution(alg, &a).unwrap();
        let tb = torus_involution(alg, &b).unwrap();
        let chev = chevalley_involution(alg).unwrap();
        let small: Vec<&AutoMap> = vec![&ta];
        let mut big: Vec<&AutoMap> = vec![&ta, &tb];
        if with_chev {
            big.push(&chev);
        }
        let ls = fixed_subalgebra(alg, &small).unwrap();
        let lb = fixed_subalgebra(alg, &big).unwrap();
        prop_assert!(ls.contains_sub(&lb));
        prop_assert!(lb.dim() <= ls.dim());
        prop_assert!(Subalgebra::full(alg).contains_sub(&ls));
    }
}

/// `ad x` is nilpotent iff its characteristic polynomial is `x^dim`.
fn char_poly_nilpotent(alg: &ChevalleyAlgebra, x: &[Q]) -> bool {
    let ad: Matrix<Q> = alg.ad_matrix(x);
    let c = ad.char_poly();
    c[..c.len() - 1].iter().all(Zero::is_zero)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    qf(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn assert_agrees(alg: &ChevalleyAlgebra, x: &[Q], what: &str) -> bool {
    let oracle = char_poly_nilpotent(alg, x);
    assert_eq!(is_nilpotent(alg, x), oracle, "{what}");
    oracle
}

#[test]
fn nilpotency_agrees_with_char_poly_on_basis() {
    let alg = e6();
    for i in 0..alg.dim() {
        let mut x = vec![Q::zero(); alg.dim()];
        x[i] = q(1);
        let nil = assert_agrees(alg, &x, &alg.basis_name(i));
        assert_eq!(nil, alg.root_of(i).is_some(), "{}", alg.basis_name(i));
    }
}

#[test]
fn nilpotency_agrees_with_char_poly_on_random_elements() {
    let alg = e6();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e36);
    let npos = alg.rs.num_positive();
    let mut counts = [0usize; 2];
    for trial in 0..50 {
        let mut x = vec![Q::zero(); alg.dim()];
        if trial % 2 == 0 {
            // Generic sparse element of g.
            for _ in 0..8 {
                let i = rng.gen_range(0..alg.dim());
                x[i] = random_rational(&mut rng);
            }
        } else {
            // Element of the nilradical spanned by positive root vectors.
            for _ in 0..10 {
                let k = rng.gen_range(0..npos);
                x[alg.e(k)] = random_rational(&mut rng);
            }
        }
        counts[usize::from(assert_agrees(alg, &x, &format!("trial {trial}")))] += 1;
        if trial % 2 == 1 {
            assert!(is_nilpotent(alg, &x), "trial {trial}");
        }
    }
    assert!(counts[0] > 0 && counts[1] >= 25, "{counts:?}");
}

#[test]
fn levi_factor_types_match_subdiagrams() {
    let alg = e6();
    let cases: [(&[usize], &str); 4] = [(&[0, 2, 3, 4, 5], "A5"), (&[1, 2, 3, 4, 5], "D5"), (&[0, 1, 2, 3, 4, 5], "E6"), (&[1, 3], "A2")];
    for (nodes, want) in cases {
        let t = identify_complex_type(alg, &levi_factor(alg, nodes, &[3, 1, 0])).unwrap();
        assert_eq!(t, want.parse::<TypeLabel>().unwrap(), "{nodes:?}");
    }
}
