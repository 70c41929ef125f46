use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torprod::charfn::{self, CharFunction};
use torprod::fields::{check_point, thm63_family, thm65_family, verify_family};
use torprod::graded::{first_pontryagin_in, present_integral_at};
use torprod::linalg::{smith_normal_form, Matrix};
use torprod::polytope::{self, h_vector, orient_edges, SimplePolytope};
use torprod::projprod::{BasisElem, PpsAlgebra, Z2Class};
use torprod::Rational;

fn snf_holds(a: &Matrix<BigInt>) {
    let s = smith_normal_form(a);
    assert_eq!(s.u.mul(a).mul(&s.v), s.d);
    assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(a.nrows()));
    assert_eq!(s.v.mul(&s.v_inv), Matrix::identity(a.ncols()));
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if i != j {
                assert!(s.d[(i, j)].is_zero());
            }
        }
    }
    let f = s.invariant_factors();
    for w in f.windows(2) {
        assert!(
            (&w[1] % &w[0]).is_zero(),
            "{} does not divide {}",
            w[0],
            w[1]
        );
    }
    assert!(f.iter().all(|x| x.is_positive()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn snf_large(rows in 1usize..=30, cols in 1usize..=30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-6..=6) }).collect())
            .collect();
        snf_holds(&Matrix::<BigInt>::from_i64_rows(&data));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn snf_small(data in prop::collection::vec(prop::collection::vec(-20i64..=20, 4), 1..6)) {
        snf_holds(&Matrix::<BigInt>::from_i64_rows(&data));
    }
}

#[test]
fn snf_of_zero_and_empty() {
    snf_holds(&Matrix::<BigInt>::zeros(3, 4));
    let s = smith_normal_form(&Matrix::<BigInt>::from_i64_rows(&[vec![2, 4], vec![6, 8]]));
    assert_eq!(
        s.invariant_factors(),
        vec![BigInt::from(2), BigInt::from(4)]
    );
}

fn generic_functionals(p: &SimplePolytope, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let f: Vec<Rational> = (0..p.dim())
            .map(|_| {
                Rational::new(
                    BigInt::from(rng.gen_range(-50i64..=50)),
                    BigInt::from(rng.gen_range(1i64..=7)),
                )
            })
            .collect();
        if orient_edges(p, &f).is_ok() {
            out.push(f);
        }
    }
    out
}

#[test]
fn h_vector_is_independent_of_the_functional() {
    let square_tri = polytope::square().product(&polytope::simplex(2)).unwrap();
    for p in [
        polytope::prism(),
        polytope::cube(3),
        polytope::simplex(3),
        polytope::square(),
        square_tri,
    ] {
        let hs: BTreeSet<Vec<usize>> = generic_functionals(&p, 20, 7)
            .iter()
            .map(|f| h_vector(&p, &orient_edges(&p, f).unwrap()).0)
            .collect();
        assert_eq!(hs.len(), 1, "{hs:?}");
        let h = hs.into_iter().next().unwrap();
        assert_eq!(h.iter().sum::<usize>(), p.num_vertices());
        assert!((0..h.len()).all(|i| h[i] == h[h.len() - 1 - i]));
    }
}

/// Random tuples satisfying the hypotheses: k <= 3, l <= 2, dims <= 8.
fn random_tuples(count: usize, seed: u64) -> Vec<PpsAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(1..=3);
        let l = rng.gen_range(0..=2);
        let mut m: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=8)).collect();
        m.sort();
        let mut n: Vec<usize> = (0..l).map(|_| rng.gen_range(1..=8)).collect();
        n.sort();
        let fibres: Vec<(usize, usize)> = n.iter().map(|&nj| (nj, rng.gen_range(1..=nj))).collect();
        if let Ok(a) = PpsAlgebra::new(m, fibres) {
            out.push(a);
        }
    }
    out
}

fn random_class(a: &PpsAlgebra, rng: &mut ChaCha8Rng) -> Z2Class {
    a.basis()
        .into_iter()
        .filter(|_| rng.gen_bool(0.3))
        .collect()
}

fn random_homogeneous(a: &PpsAlgebra, rng: &mut ChaCha8Rng) -> Z2Class {
    let d = rng.gen_range(0..=a.dim());
    a.basis_of_degree(d)
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect()
}

fn poly_mul(x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

#[test]
fn poincare_product_formula_and_duality() {
    for a in random_tuples(20, 1) {
        let mut expected = vec![1; a.m1() + 1];
        for &mi in &a.m[1..] {
            let mut f = vec![0; mi + 1];
            f[0] = 1;
            f[mi] = 1;
            expected = poly_mul(&expected, &f);
        }
        for &(n, _) in &a.fibres {
            let mut f = vec![0; n + 1];
            f[0] = 1;
            f[n] = 1;
            expected = poly_mul(&expected, &f);
        }
        let p = a.poincare();
        assert_eq!(p, expected, "{a:?}");
        let rev: Vec<usize> = p.iter().rev().copied().collect();
        assert_eq!(p, rev);
    }
}

#[test]
fn multiplication_is_associative_and_commutative() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let algebras = random_tuples(10, 3);
    for t in 0..200 {
        let a = &algebras[t % algebras.len()];
        let (x, y, z) = (
            random_class(a, &mut rng),
            random_class(a, &mut rng),
            random_class(a, &mut rng),
        );
        assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
    }
}

#[test]
fn steenrod_square_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let algebras = random_tuples(20, 5);
    for (t, a) in algebras.iter().cycle().take(100).enumerate() {
        let x = random_homogeneous(a, &mut rng);
        let y = random_homogeneous(a, &mut rng);
        assert_eq!(a.sq(0, &x), x, "trial {t}");
        assert_eq!(
            a.steenrod_square(&a.mul(&x, &y)),
            a.mul(&a.steenrod_square(&x), &a.steenrod_square(&y))
        );
        if let Some(b) = x.iter().next() {
            let d = a.degree(b);
            let total = a.steenrod_square(&x);
            for c in &total {
                let e = a.degree(c);
                assert!(e >= d && e <= 2 * d, "degree {e} outside [{d}, {}]", 2 * d);
            }
        }
    }
    for a in &algebras {
        for e in a.basis() {
            let x = Z2Class::from([e]);
            assert_eq!(a.sq(a.degree(&e), &x), a.mul(&x, &x), "{a:?} {e:?}");
        }
    }
}

#[test]
fn beta_square_matches_binomial() {
    for m in 1..=5usize {
        for n in m..=6 {
            for p in 1..=n {
                let Ok(a) = PpsAlgebra::new(vec![m], vec![(n, p)]) else {
                    continue;
                };
                let b = a.beta(1);
                let sq = a.sq(n, &b);
                let e = (n + 1 - p) as u64;
                let odd = (n as u64) & !e == 0;
                let expected: Z2Class = if odd && n <= m {
                    Z2Class::from([BasisElem { a: n, s: 0, t: 1 }])
                } else {
                    Z2Class::new()
                };
                assert_eq!(sq, expected, "m={m} n={n} p={p}");
                assert_eq!(sq.is_empty(), p > 1 || n > m);
            }
        }
    }
}

/// Wu classes from `Sq^i x = v_i x` in the top degree, then `W = Sq(v)`.
fn wu_total_sw(a: &PpsAlgebra) -> Z2Class {
    let dim = a.dim();
    let top = a.basis_of_degree(dim);
    assert_eq!(top.len(), 1);
    let top = top[0];
    let mut v = Z2Class::new();
    for i in 0..=dim / 2 {
        let cands = a.basis_of_degree(i);
        let comps = a.basis_of_degree(dim - i);
        // find v_i in span(cands) with <v_i x, [M]> = <Sq^i x, [M]> for every x
        let target: Vec<bool> = comps
            .iter()
            .map(|&x| a.sq(i, &Z2Class::from([x])).contains(&top))
            .collect();
        let mut found = None;
        for mask in 0u64..(1u64 << cands.len()) {
            let vi: Z2Class = cands
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let ok = comps
                .iter()
                .zip(&target)
                .all(|(&x, &t)| a.mul(&vi, &Z2Class::from([x])).contains(&top) == t);
            if ok {
                found = Some(vi);
                break;
            }
        }
        for e in found.unwrap_or_else(|| panic!("no v_{i} for {a:?}")) {
            v.insert(e);
        }
    }
    a.steenrod_square(&v)
}

#[test]
fn wu_formula_agrees_with_total_class() {
    let mut cases = random_tuples(20, 9);
    cases.push(PpsAlgebra::new(vec![1], vec![(1, 1)]).unwrap());
    cases.push(PpsAlgebra::new(vec![1], vec![(2, 2), (2, 2)]).unwrap());
    cases.push(PpsAlgebra::new(vec![2, 2], vec![]).unwrap());
    for a in cases {
        if a.basis().len() > 64 {
            continue;
        }
        assert_eq!(wu_total_sw(&a), a.total_sw(), "{a:?}");
    }
}

#[test]
fn pontryagin_is_independent_of_the_pivot() {
    let cases: Vec<(SimplePolytope, CharFunction)> = vec![
        (polytope::square(), charfn::square_hirzebruch(3)),
        (polytope::square(), charfn::square_connected_sum()),
        (polytope::prism(), charfn::prism_standard()),
        (polytope::simplex(2), charfn::simplex_standard(2)),
        (polytope::simplex(3), charfn::simplex_standard(3)),
    ];
    for (p, l) in cases {
        let mut zeros = BTreeSet::new();
        let mut ranks = BTreeSet::new();
        for v in 0..p.num_vertices() {
            let g = present_integral_at(&p, &l, v).unwrap();
            zeros.insert(first_pontryagin_in(&g).is_zero);
            ranks.insert(g.ranks());
        }
        assert_eq!(zeros.len(), 1);
        assert_eq!(ranks.len(), 1);
    }
}

#[test]
fn field_families_at_other_seeds() {
    let (f63, i63) = thm63_family(3, 5, 3).unwrap();
    let (f65, i65) = thm65_family(3, 1).unwrap();
    for seed in [0, 1, 2, 3, 17, 12345] {
        assert!(verify_family(&f63, &i63, 100, seed).passed());
        assert!(verify_family(&f65, &i65, 100, seed).passed());
    }
}

#[test]
fn rank_is_scale_invariant() {
    let (f, inv) = thm63_family(3, 5, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in 0..20 {
        let pt: Vec<Vec<BigInt>> = [4usize, 6]
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
                    .collect()
            })
            .collect();
        if pt.iter().any(|v| v.iter().all(Zero::is_zero)) {
            continue;
        }
        let doubled: Vec<Vec<BigInt>> = pt
            .iter()
            .map(|v| v.iter().map(|x| x * 3).collect())
            .collect();
        let a = check_point(&f, &inv, &pt, t).is_empty();
        let b = check_point(&f, &inv, &doubled, t).is_empty();
        assert_eq!(a, b);
        assert!(a);
    }
    assert!(BigInt::one().is_positive());
}
