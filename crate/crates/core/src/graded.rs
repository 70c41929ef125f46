//! Degreewise presentations of `Z[u_1..u_mu] / (I + J)` (toric manifolds) and
//! `GF(2)[u_1..u_mu] / (I + J)` (small covers).
//!
//! `J` is used to eliminate the variables of one vertex; the Stanley-Reisner
//! relations are then imposed degree by degree with exact linear algebra.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;
use thiserror::Error;

use crate::charfn::{validate_char, CharError, CharFunction, CoeffRing};
use crate::linalg::{smith_normal_form, Echelon, Matrix};
use crate::poly::{Monomial, Poly, Signed2};
use crate::polytope::SimplePolytope;
use crate::scalar::{EuclideanScalar, Gf2};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GradedError {
    #[error(transparent)]
    InvalidCharFunction(#[from] CharError),
    #[error("additive torsion {factors:?} in polynomial degree {degree}")]
    Torsion { degree: usize, factors: Vec<String> },
    #[error("classes belong to different presentations")]
    PresentationMismatch,
    #[error("expected an integral characteristic function")]
    WrongRing,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("vertex index {0} out of range")]
    BadVertex(usize),
}

/// Square-free monomials of the minimal non-faces.
pub fn stanley_reisner_generators(p: &SimplePolytope) -> Vec<Monomial> {
    p.minimal_non_faces()
        .into_iter()
        .map(|s| {
            let word: Vec<usize> = s.into_iter().collect();
            Monomial::from_word(p.num_facets(), &word)
        })
        .collect()
}

#[derive(Clone, Debug)]
enum Reducer<T: EuclideanScalar> {
    /// relations in echelon form with unit pivots; columns are monomials from
    /// largest to smallest
    Monomial {
        echelon: Echelon<T>,
        free_cols: Vec<usize>,
    },
    /// `x -> x V`, free coordinates from `rank` on
    Smith { v: Matrix<T>, rank: usize },
}

#[derive(Clone, Debug)]
struct DegreePiece<T: EuclideanScalar> {
    /// all monomials in the surviving variables, ascending
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    reducer: Reducer<T>,
    basis: Vec<Poly<T>>,
}

impl<T: EuclideanScalar> DegreePiece<T> {
    fn column(&self, m: &Monomial) -> usize {
        self.monomials.len() - 1 - self.index[m]
    }

    fn coords(&self, p: &Poly<T>) -> Vec<T> {
        let n = self.monomials.len();
        let mut v = vec![T::zero(); n];
        for (m, c) in p.terms() {
            v[self.column(m)] = c.clone();
        }
        match &self.reducer {
            Reducer::Monomial { echelon, free_cols } => {
                let r = echelon.reduce(&v);
                free_cols.iter().map(|&c| r[c].clone()).collect()
            }
            Reducer::Smith { v: vm, rank } => {
                let x = vm.vec_mul(&v);
                x[*rank..].to_vec()
            }
        }
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// `H^*` of a toric manifold (`T = BigInt`, `u_i` in degree 2) or small cover
/// (`T = Gf2`, degree 1).
#[derive(Clone, Debug)]
pub struct GradedPresentation<T: EuclideanScalar> {
    id: u64,
    ring: CoeffRing,
    weight: usize,
    nvars: usize,
    top: usize,
    pivot_vertex: Option<usize>,
    free_vars: Vec<usize>,
    images: Vec<Poly<T>>,
    pieces: Vec<DegreePiece<T>>,
}

/// Element of one graded piece, in the coordinates of its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RingClass<T: EuclideanScalar> {
    presentation: u64,
    /// polynomial degree; the cohomological degree is `weight * degree`
    pub degree: usize,
    pub coords: Vec<T>,
}

impl<T: EuclideanScalar> RingClass<T> {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Default pivot: the vertex whose facet set, read in decreasing order, is
/// lexicographically largest. The lowest-numbered variables survive.
pub fn default_pivot_vertex(p: &SimplePolytope) -> usize {
    (0..p.num_vertices())
        .max_by_key(|&v| {
            let mut s: Vec<usize> = p.vertex_facets(v).iter().copied().collect();
            s.reverse();
            s
        })
        .unwrap_or(0)
}

fn build<T: EuclideanScalar>(
    p: &SimplePolytope,
    lambda: &CharFunction,
    pivot: usize,
    weight: usize,
    ring: CoeffRing,
) -> Result<GradedPresentation<T>, GradedError> {
    let report = validate_char(p, lambda)?;
    if !report.is_valid() {
        return Err(CharError::Invalid(report).into());
    }
    if pivot >= p.num_vertices() {
        return Err(GradedError::BadVertex(pivot));
    }
    let mu = p.num_facets();
    let n = p.dim();
    let conv = |x: i64| T::from_i64(x);

    let pivot_facets: Vec<usize> = p.vertex_facets(pivot).iter().copied().collect();
    let free_vars: Vec<usize> = (0..mu).filter(|i| !pivot_facets.contains(i)).collect();
    let mut images: Vec<Poly<T>> = (0..mu).map(|i| Poly::var(mu, i)).collect();
    if n > 0 {
        // A[l][k] = lambda_{S_k, l}; A u_S = -B u_R
        let a = Matrix::from_rows(
            (0..n)
                .map(|l| {
                    pivot_facets
                        .iter()
                        .map(|&s| conv(lambda.vectors[s][l]))
                        .collect()
                })
                .collect(),
            n,
        );
        let snf = smith_normal_form(&a);
        // validity makes every invariant factor a unit, normalised to one
        if (0..n).any(|i| !snf.d[(i, i)].is_one()) {
            return Err(CharError::Invalid(report).into());
        }
        let a_inv = snf.v.mul(&snf.u);
        for (k, &s) in pivot_facets.iter().enumerate() {
            let mut img = Poly::zero(mu);
            for &r in &free_vars {
                let mut c = T::zero();
                for l in 0..n {
                    c = c + a_inv[(k, l)].clone() * conv(lambda.vectors[r][l]);
                }
                img.add_term(Monomial::var(mu, r), -c);
            }
            images[s] = img;
        }
    }

    let relations: Vec<(usize, Poly<T>)> = stanley_reisner_generators(p)
        .into_iter()
        .map(|g| (g.degree(), Poly::term(g, T::one()).substitute(&images)))
        .collect();

    let mut pieces = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let monomials = Monomial::all_of_degree(mu, &free_vars, d);
        let index: BTreeMap<Monomial, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let ncols = monomials.len();
        let col = |m: &Monomial| ncols - 1 - index[m];
        let mut rows: Vec<Vec<T>> = Vec::new();
        for (gd, g) in &relations {
            if *gd > d {
                continue;
            }
            for m in Monomial::all_of_degree(mu, &free_vars, d - gd) {
                let prod = g.mul(&Poly::term(m, T::one()));
                let mut row = vec![T::zero(); ncols];
                for (mm, c) in prod.terms() {
                    row[col(mm)] = c.clone();
                }
                rows.push(row);
            }
        }
        let echelon = Echelon::new(&rows, ncols);
        let (reducer, basis) = if echelon.unit_pivots() {
            let pivots = echelon.pivot_columns();
            let mut free_cols: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
            // ascending monomial order
            free_cols.reverse();
            let basis = free_cols
                .iter()
                .map(|&c| Poly::term(monomials[ncols - 1 - c].clone(), T::one()))
                .collect();
            (Reducer::Monomial { echelon, free_cols }, basis)
        } else {
            let rel = Matrix::from_rows(rows.clone(), ncols);
            let snf = smith_normal_form(&rel);
            let factors = snf.invariant_factors();
            let torsion: Vec<String> = factors
                .iter()
                .filter(|f| !f.is_unit())
                .map(|f| f.to_string())
                .collect();
            if !torsion.is_empty() {
                return Err(GradedError::Torsion {
                    degree: d,
                    factors: torsion,
                });
            }
            let rank = factors.len();
            let basis = (rank..ncols)
                .map(|i| {
                    let mut b = Poly::zero(mu);
                    for c in 0..ncols {
                        b.add_term(monomials[ncols - 1 - c].clone(), snf.v_inv[(i, c)].clone());
                    }
                    b
                })
                .collect();
            (Reducer::Smith { v: snf.v, rank }, basis)
        };
        pieces.push(DegreePiece {
            monomials,
            index,
            reducer,
            basis,
        });
    }

    Ok(GradedPresentation {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        ring,
        weight,
        nvars: mu,
        top: n,
        pivot_vertex: Some(pivot),
        free_vars,
        images,
        pieces,
    })
}

/// Integral cohomology ring of the toric manifold over `p`.
pub fn present_integral(
    p: &SimplePolytope,
    lambda: &CharFunction,
) -> Result<GradedPresentation<BigInt>, GradedError> {
    present_integral_at(p, lambda, default_pivot_vertex(p))
}

/// As [`present_integral`], eliminating the variables of vertex `pivot`.
pub fn present_integral_at(
    p: &SimplePolytope,
    lambda: &CharFunction,
    pivot: usize,
) -> Result<GradedPresentation<BigInt>, GradedError> {
    if lambda.ring != CoeffRing::Z {
        return Err(GradedError::WrongRing);
    }
    build(p, lambda, pivot, 2, CoeffRing::Z)
}

/// Mod-2 cohomology ring of the small cover over `p` (any integral function
/// is reduced mod 2 first).
pub fn present_mod2(
    p: &SimplePolytope,
    lambda: &CharFunction,
) -> Result<GradedPresentation<Gf2>, GradedError> {
    present_mod2_at(p, lambda, default_pivot_vertex(p))
}

pub fn present_mod2_at(
    p: &SimplePolytope,
    lambda: &CharFunction,
    pivot: usize,
) -> Result<GradedPresentation<Gf2>, GradedError> {
    build(p, &lambda.reduce_mod2(), pivot, 1, CoeffRing::F2)
}

/// Either presentation, chosen by the ring tag of `lambda`.
#[derive(Clone, Debug)]
pub enum Presentation {
    Integral(GradedPresentation<BigInt>),
    Mod2(GradedPresentation<Gf2>),
}

pub fn present_cohomology(
    p: &SimplePolytope,
    lambda: &CharFunction,
) -> Result<Presentation, GradedError> {
    match lambda.ring {
        CoeffRing::Z => present_integral(p, lambda).map(Presentation::Integral),
        CoeffRing::F2 => present_mod2(p, lambda).map(Presentation::Mod2),
    }
}

impl Presentation {
    /// Ranks by cohomological degree `0..=dim`.
    pub fn betti(&self) -> Vec<usize> {
        match self {
            Presentation::Integral(g) => g.betti(),
            Presentation::Mod2(g) => g.betti(),
        }
    }
}

impl<T: EuclideanScalar + Signed2> GradedPresentation<T> {
    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    /// Cohomological degree of each `u_i`.
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Top polynomial degree (the polytope dimension).
    pub fn top_degree(&self) -> usize {
        self.top
    }

    /// Manifold dimension.
    pub fn manifold_dim(&self) -> usize {
        self.weight * self.top
    }

    pub fn pivot_vertex(&self) -> Option<usize> {
        self.pivot_vertex
    }

    pub fn free_vars(&self) -> &[usize] {
        &self.free_vars
    }

    /// Image of `u_i` after eliminating the pivot variables.
    pub fn image(&self, i: usize) -> &Poly<T> {
        &self.images[i]
    }

    /// Rank of the piece in polynomial degree `d`.
    pub fn rank(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, |p| p.basis.len())
    }

    /// Ranks indexed by polynomial degree.
    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.top).map(|d| self.rank(d)).collect()
    }

    /// Ranks indexed by cohomological degree `0..=manifold_dim`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.manifold_dim() + 1];
        for d in 0..=self.top {
            b[d * self.weight] = self.rank(d);
        }
        b
    }

    pub fn total_rank(&self) -> usize {
        self.ranks().iter().sum()
    }

    pub fn basis(&self, d: usize) -> &[Poly<T>] {
        self.pieces.get(d).map_or(&[], |p| &p.basis)
    }

    pub fn basis_names(&self, d: usize, var: &str) -> Vec<String> {
        self.basis(d).iter().map(|b| b.render(var)).collect()
    }

    /// Substitutes the pivot variables away.
    pub fn substitute(&self, p: &Poly<T>) -> Poly<T> {
        p.substitute(&self.images)
    }

    pub fn zero(&self, d: usize) -> RingClass<T> {
        RingClass {
            presentation: self.id,
            degree: d,
            coords: vec![T::zero(); self.rank(d)],
        }
    }

    pub fn one(&self) -> RingClass<T> {
        self.class_of(&Poly::constant(self.nvars, T::one()), 0)
            .expect("constants are homogeneous")
    }

    /// Class of `u_i`.
    pub fn generator(&self, i: usize) -> RingClass<T> {
        self.class_of(&Poly::var(self.nvars, i), 1)
            .expect("variables are homogeneous")
    }

    /// Class of a homogeneous polynomial of polynomial degree `d` in all
    /// `mu` variables.
    pub fn class_of(&self, p: &Poly<T>, d: usize) -> Result<RingClass<T>, GradedError> {
        if p.terms().any(|(m, _)| m.degree() != d) {
            return Err(GradedError::NotHomogeneous);
        }
        if d > self.top {
            return Ok(self.zero(d));
        }
        let sub = self.substitute(p);
        Ok(RingClass {
            presentation: self.id,
            degree: d,
            coords: self.pieces[d].coords(&sub),
        })
    }

    /// Representative `sum coords_k * basis_k`.
    pub fn to_poly(&self, c: &RingClass<T>) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (b, x) in self.basis(c.degree).iter().zip(&c.coords) {
            out = out.add(&b.scale(x));
        }
        out
    }

    fn check(&self, c: &RingClass<T>) -> Result<(), GradedError> {
        if c.presentation == self.id {
            Ok(())
        } else {
            Err(GradedError::PresentationMismatch)
        }
    }

    pub fn add(&self, a: &RingClass<T>, b: &RingClass<T>) -> Result<RingClass<T>, GradedError> {
        self.check(a)?;
        self.check(b)?;
        if a.degree != b.degree {
            return Err(GradedError::NotHomogeneous);
        }
        Ok(RingClass {
            presentation: self.id,
            degree: a.degree,
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        })
    }

    pub fn multiply(
        &self,
        a: &RingClass<T>,
        b: &RingClass<T>,
    ) -> Result<RingClass<T>, GradedError> {
        self.check(a)?;
        self.check(b)?;
        let d = a.degree + b.degree;
        let prod = self.to_poly(a).mul(&self.to_poly(b));
        self.class_of(&prod, d)
    }

    pub fn render_class(&self, c: &RingClass<T>, var: &str) -> String {
        self.to_poly(c).render(var)
    }

    /// `{"degree": d, "coords": {"u3^2": 1}, "basis": ["u3^2", ...]}` with
    /// cohomological degree.
    pub fn class_json(&self, c: &RingClass<T>, var: &str) -> serde_json::Value {
        let names = self.basis_names(c.degree, var);
        let mut coords = serde_json::Map::new();
        for (name, x) in names.iter().zip(&c.coords) {
            if !x.is_zero() {
                let s = x.to_string();
                let v = s.parse::<i64>().map(|i| json!(i)).unwrap_or(json!(s));
                coords.insert(name.clone(), v);
            }
        }
        json!({"degree": c.degree * self.weight, "coords": coords, "basis": names})
    }
}

/// First Pontryagin class `sum u_i^2`.
#[derive(Clone, Debug)]
pub struct Pontryagin {
    /// `sum u_i^2` after eliminating the pivot variables by `J`
    pub substituted: Poly<BigInt>,
    pub class: RingClass<BigInt>,
    /// `sum coords * basis`
    pub normal_form: Poly<BigInt>,
    pub is_zero: bool,
}

pub fn first_pontryagin_in(g: &GradedPresentation<BigInt>) -> Pontryagin {
    let mu = g.nvars();
    let mut s = Poly::zero(mu);
    for i in 0..mu {
        s = s.add(&Poly::var(mu, i).pow(2));
    }
    let class = g.class_of(&s, 2).expect("homogeneous");
    let normal_form = g.to_poly(&class);
    Pontryagin {
        substituted: g.substitute(&s),
        is_zero: class.is_zero(),
        class,
        normal_form,
    }
}

pub fn first_pontryagin(
    p: &SimplePolytope,
    lambda: &CharFunction,
) -> Result<(GradedPresentation<BigInt>, Pontryagin), GradedError> {
    if lambda.ring != CoeffRing::Z {
        return Err(GradedError::WrongRing);
    }
    let g = present_integral(p, lambda)?;
    let pont = first_pontryagin_in(&g);
    Ok((g, pont))
}
