//! Equivariant vector fields on products of spheres, checked exactly at
//! integer points.
//!
//! Points are integer vectors on spheres of radius `|x|`; the constant
//! `-1` of the unit-sphere formulas is homogenized to `-|y|^2`, so tangency,
//! rank and equivariance can be checked in exact integer arithmetic.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::rank;
use crate::span::sp_constructed;

/// A point of a product of spheres, one coordinate vector per factor.
pub type Point = Vec<Vec<BigInt>>;

pub type FieldFn = Arc<dyn Fn(&Point) -> Point + Send + Sync>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("need 1 <= p <= n, got p = {p}, n = {n}")]
    BadP { p: usize, n: usize },
    #[error("the base family has no fields")]
    EmptyBase,
    #[error("the base family must live on a single sphere")]
    NotASphere,
}

#[derive(Clone)]
pub struct FieldFamily {
    pub name: String,
    /// sphere dimensions of the factors
    pub factors: Vec<usize>,
    pub fields: Vec<FieldFn>,
}

impl fmt::Debug for FieldFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldFamily")
            .field("name", &self.name)
            .field("factors", &self.factors)
            .field("count", &self.fields.len())
            .finish()
    }
}

impl FieldFamily {
    pub fn count(&self) -> usize {
        self.fields.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.factors.iter().map(|n| n + 1).sum()
    }

    pub fn eval(&self, i: usize, pt: &Point) -> Point {
        (self.fields[i])(pt)
    }
}

/// Product `a * b` in the Cayley-Dickson algebra of dimension `a.len()`
/// (a power of two): `(p, q)(r, s) = (pr - conj(s) q, s p + q conj(r))`.
pub fn cayley_dickson_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len();
    assert_eq!(n, b.len());
    if n == 1 {
        return vec![a[0] * b[0]];
    }
    let h = n / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);
    let conj = |v: &[i64]| -> Vec<i64> {
        v.iter()
            .enumerate()
            .map(|(i, &x)| if i == 0 { x } else { -x })
            .collect()
    };
    let sub =
        |u: Vec<i64>, v: Vec<i64>| -> Vec<i64> { u.iter().zip(&v).map(|(x, y)| x - y).collect() };
    let add =
        |u: Vec<i64>, v: Vec<i64>| -> Vec<i64> { u.iter().zip(&v).map(|(x, y)| x + y).collect() };
    let first = sub(cayley_dickson_mul(p, r), cayley_dickson_mul(&conj(s), q));
    let second = add(cayley_dickson_mul(s, p), cayley_dickson_mul(q, &conj(r)));
    let mut out = first;
    out.extend(second);
    out
}

/// Matrix of `x -> e_i * x` in dimension `n`.
fn left_mult_matrix(n: usize, i: usize) -> Vec<Vec<i64>> {
    let mut e = vec![0; n];
    e[i] = 1;
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = vec![0; n];
        x[k] = 1;
        cols.push(cayley_dickson_mul(&e, &x));
    }
    (0..n)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect()
}

fn linear_field(mat: Arc<Vec<Vec<i64>>>, block: usize) -> FieldFn {
    Arc::new(move |pt: &Point| {
        let x = &pt[0];
        let mut out = vec![BigInt::zero(); x.len()];
        for start in (0..x.len()).step_by(block) {
            for r in 0..block {
                let mut acc = BigInt::zero();
                for c in 0..block {
                    if mat[r][c] != 0 {
                        acc += &x[start + c] * mat[r][c];
                    }
                }
                out[start + r] = acc;
            }
        }
        vec![out]
    })
}

/// Linear fields on `S^m` from complex, quaternion or octonion
/// multiplication applied blockwise; empty for even `m`.
pub fn linear_sphere_fields(m: usize) -> FieldFamily {
    let r = sp_constructed(m);
    let block = r + 1;
    let fields = (1..=r)
        .map(|i| linear_field(Arc::new(left_mult_matrix(block, i)), block))
        .collect();
    FieldFamily {
        name: format!("linear S^{m}"),
        factors: vec![m],
        fields,
    }
}

fn norm2(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

fn scale(v: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    v.iter().map(|x| x * c).collect()
}

/// `y_j * y - |y|^2 e_j`, or `y_j * y` when `corrupt`.
fn mixed(y: &[BigInt], j: usize, corrupt: bool) -> Vec<BigInt> {
    let mut v = scale(y, &y[j]);
    if !corrupt {
        v[j] -= norm2(y);
    }
    v
}

fn thm63_impl(
    base: &FieldFamily,
    n: usize,
    p: usize,
    corrupt: bool,
) -> Result<FieldFamily, FieldError> {
    if p < 1 || p > n {
        return Err(FieldError::BadP { p, n });
    }
    if base.fields.is_empty() {
        return Err(FieldError::EmptyBase);
    }
    if base.factors.len() != 1 {
        return Err(FieldError::NotASphere);
    }
    let m = base.factors[0];
    let r = base.count();
    let mut fields: Vec<FieldFn> = Vec::new();
    for i in 0..r - 1 {
        let v = base.fields[i].clone();
        fields.push(Arc::new(move |pt: &Point| {
            let u = v(&vec![pt[0].clone()]).remove(0);
            vec![u, vec![BigInt::zero(); pt[1].len()]]
        }));
    }
    for j in 0..p {
        let vr = base.fields[r - 1].clone();
        fields.push(Arc::new(move |pt: &Point| {
            let y = &pt[1];
            let u = vr(&vec![pt[0].clone()]).remove(0);
            vec![scale(&u, &y[j]), mixed(y, j, corrupt)]
        }));
    }
    Ok(FieldFamily {
        name: format!(
            "{}thm63 S^{m} x S^{n}, p = {p}",
            if corrupt { "corrupted " } else { "" }
        ),
        factors: vec![m, n],
        fields,
    })
}

/// `r + p - 1` fields on `S^m x S^n`: `(v_i, 0)` for `i < r` and
/// `(y_j v_r(x), y_j y - |y|^2 e_j)` for `j = 1..p`.
pub fn build_fields_thm63(
    base: &FieldFamily,
    n: usize,
    p: usize,
) -> Result<FieldFamily, FieldError> {
    thm63_impl(base, n, p, false)
}

/// As [`build_fields_thm63`] with the `-|y|^2` term dropped; a regression
/// fixture that must fail independence at `y = e_(n+1)`.
pub fn build_fields_thm63_corrupted(
    base: &FieldFamily,
    n: usize,
    p: usize,
) -> Result<FieldFamily, FieldError> {
    thm63_impl(base, n, p, true)
}

/// `k + 1` fields on `M x S^2` from `k` fields on `M`.
pub fn build_fields_thm65(base: &FieldFamily) -> Result<FieldFamily, FieldError> {
    let k = base.count();
    if k == 0 {
        return Err(FieldError::EmptyBase);
    }
    let nf = base.factors.len();
    let split = move |pt: &Point| -> (Point, Vec<BigInt>) { (pt[..nf].to_vec(), pt[nf].clone()) };
    let mut fields: Vec<FieldFn> = Vec::new();
    for i in 0..k - 1 {
        let v = base.fields[i].clone();
        fields.push(Arc::new(move |pt: &Point| {
            let (x, _) = split(pt);
            let mut out = v(&x);
            out.push(vec![BigInt::zero(); 3]);
            out
        }));
    }
    for j in 0..2 {
        let vk = base.fields[k - 1].clone();
        fields.push(Arc::new(move |pt: &Point| {
            let (x, y) = split(pt);
            let mut out: Point = vk(&x).iter().map(|u| scale(u, &y[j])).collect();
            out.push(mixed(&y, j, false));
            out
        }));
    }
    let mut factors = base.factors.clone();
    factors.push(2);
    Ok(FieldFamily {
        name: format!("thm65 over {}", base.name),
        factors,
        fields,
    })
}

/// Linear involution: per factor, negate the coordinates from index `p` on
/// (`p = 0` is the antipodal map).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSpec {
    pub fixed: Vec<usize>,
}

impl InvolutionSpec {
    pub fn new(fixed: Vec<usize>) -> Self {
        InvolutionSpec { fixed }
    }

    pub fn apply(&self, pt: &Point) -> Point {
        pt.iter()
            .zip(&self.fixed)
            .map(|(v, &p)| {
                v.iter()
                    .enumerate()
                    .map(|(i, x)| if i < p { x.clone() } else { -x })
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub trial: usize,
    pub check: String,
    pub field: Option<usize>,
    pub point: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: String,
    pub fields: usize,
    pub trials: usize,
    pub seed: u64,
    pub tangency_ok: bool,
    pub rank_ok: bool,
    pub equivariance_ok: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.tangency_ok && self.rank_ok && self.equivariance_ok
    }
}

fn render_point(pt: &Point) -> Vec<Vec<String>> {
    pt.iter()
        .map(|v| v.iter().map(BigInt::to_string).collect())
        .collect()
}

/// Failures of the three checks at one point.
pub fn check_point(
    f: &FieldFamily,
    inv: &InvolutionSpec,
    pt: &Point,
    trial: usize,
) -> Vec<Failure> {
    let fail = |check: &str, field: Option<usize>| Failure {
        trial,
        check: check.into(),
        field,
        point: render_point(pt),
    };
    let mut out = Vec::new();
    let values: Vec<Point> = (0..f.count()).map(|i| f.eval(i, pt)).collect();
    for (i, v) in values.iter().enumerate() {
        let tangent = v.iter().zip(pt).all(|(u, x)| {
            u.iter()
                .zip(x)
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        });
        if !tangent {
            out.push(fail("tangency", Some(i)));
        }
    }
    let rows: Vec<Vec<BigInt>> = values.iter().map(|v| v.concat()).collect();
    if rank(&rows, f.ambient_dim()) != f.count() {
        out.push(fail("rank", None));
    }
    let ipt = inv.apply(pt);
    for (i, v) in values.iter().enumerate() {
        if f.eval(i, &ipt) != inv.apply(v) {
            out.push(fail("equivariance", Some(i)));
        }
    }
    out
}

fn sample_point(factors: &[usize], seed: u64, trial: usize) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    factors
        .iter()
        .map(|&n| loop {
            let v: Vec<BigInt> = (0..=n)
                .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                .collect();
            if v.iter().any(|x| !x.is_zero()) {
                break v;
            }
        })
        .collect()
}

/// Checks tangency, rank and equivariance at `trials` seeded integer points.
pub fn verify_family(
    f: &FieldFamily,
    inv: &InvolutionSpec,
    trials: usize,
    seed: u64,
) -> VerificationReport {
    let per_trial: Vec<Vec<Failure>> = (0..trials)
        .into_par_iter()
        .map(|t| check_point(f, inv, &sample_point(&f.factors, seed, t), t))
        .collect();
    let failures: Vec<Failure> = per_trial.into_iter().flatten().collect();
    let has = |c: &str| failures.iter().any(|x| x.check == c);
    VerificationReport {
        family: f.name.clone(),
        fields: f.count(),
        trials,
        seed,
        tangency_ok: !has("tangency"),
        rank_ok: !has("rank"),
        equivariance_ok: !has("equivariance"),
        failures,
    }
}

/// `S^m x S^n` with the antipodal map on `S^m` and `sigma_p` on `S^n`.
pub fn thm63_family(
    m: usize,
    n: usize,
    p: usize,
) -> Result<(FieldFamily, InvolutionSpec), FieldError> {
    let f = build_fields_thm63(&linear_sphere_fields(m), n, p)?;
    Ok((f, InvolutionSpec::new(vec![0, p])))
}

/// `S^m x (S^2)^l` with conjugation on each `CP^1 = S^2` fixing two coordinates.
pub fn thm65_family(m: usize, l: usize) -> Result<(FieldFamily, InvolutionSpec), FieldError> {
    let mut f = linear_sphere_fields(m);
    for _ in 0..l {
        f = build_fields_thm65(&f)?;
    }
    let mut fixed = vec![0];
    fixed.extend(std::iter::repeat(2).take(l));
    Ok((f, InvolutionSpec::new(fixed)))
}

/// The documented failing point `(x, e_(n+1))` of the corrupted family.
pub fn corrupted_witness(m: usize, n: usize) -> Point {
    let mut x = vec![BigInt::zero(); m + 1];
    x[0] = BigInt::one();
    let mut y = vec![BigInt::zero(); n + 1];
    y[n] = BigInt::one();
    vec![x, y]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_units_anticommute() {
        for i in 1..8 {
            let l = left_mult_matrix(8, i);
            for r in 0..8 {
                for c in 0..8 {
                    assert_eq!(l[r][c], -l[c][r]);
                }
            }
        }
    }

    #[test]
    fn sphere_fields() {
        for m in [1, 3, 5, 7, 15] {
            let f = linear_sphere_fields(m);
            assert_eq!(f.count(), sp_constructed(m));
            let rep = verify_family(&f, &InvolutionSpec::new(vec![0]), 30, 0);
            assert!(rep.passed(), "{m}: {:?}", rep.failures.first());
        }
        assert_eq!(linear_sphere_fields(4).count(), 0);
    }

    #[test]
    fn families() {
        let (f, inv) = thm63_family(3, 5, 3).unwrap();
        assert_eq!(f.count(), 5);
        assert!(verify_family(&f, &inv, 50, 0).passed());
        let (f, inv) = thm65_family(3, 1).unwrap();
        assert_eq!(f.count(), 4);
        assert!(verify_family(&f, &inv, 50, 0).passed());
        let (f, inv) = thm65_family(1, 2).unwrap();
        assert_eq!(f.count(), 3);
        assert!(verify_family(&f, &inv, 50, 0).passed());
    }

    #[test]
    fn corrupted_fails_at_witness() {
        let f = build_fields_thm63_corrupted(&linear_sphere_fields(3), 5, 3).unwrap();
        let inv = InvolutionSpec::new(vec![0, 3]);
        let fails = check_point(&f, &inv, &corrupted_witness(3, 5), 0);
        assert!(fails.iter().any(|x| x.check == "rank"));
        assert!(!fails.iter().any(|x| x.check == "equivariance"));
    }

    #[test]
    fn bad_p() {
        assert!(build_fields_thm63(&linear_sphere_fields(1), 2, 3).is_err());
        assert!(build_fields_thm63(&linear_sphere_fields(2), 2, 1).is_err());
    }
}
