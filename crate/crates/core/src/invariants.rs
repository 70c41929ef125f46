//! Cohomology, Betti numbers, homology and Stiefel-Whitney classes of a
//! [`SpaceDescriptor`].

use serde::Serialize;

use crate::cellular::{self, AbelianGroup, ChainComplexZ};
use crate::charfn::CoeffRing;
use crate::graded::{present_integral, present_mod2, GradedPresentation};
use crate::poly::Poly;
use crate::polytope::default_ordering;
use crate::projprod::{
    rational_betti_pps, rational_betti_with_fibre, rp_rational_betti, smallcover_total_sw,
    tensor_dims, toric_total_sw, BettiField, PpsAlgebra, TensorAlgebra,
};
use crate::scalar::Gf2;
use crate::space::{Family, Fibre, SpaceDescriptor, SpaceError};

/// Graded ranks by cohomological degree, optionally with basis names.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub ring: String,
    pub dims: Vec<usize>,
    pub total: usize,
    /// per degree, when a basis is available
    pub basis: Option<Vec<Vec<String>>>,
}

/// Spread ranks of polynomial degree `i` to cohomological degree `weight * i`.
fn spread(ranks: &[usize], weight: usize, dim: usize) -> Vec<usize> {
    let mut out = vec![0; dim + 1];
    for (i, &r) in ranks.iter().enumerate() {
        if weight * i <= dim {
            out[weight * i] += r;
        }
    }
    out
}

/// Mod-2 ranks of the fibre by cohomological degree.
pub fn fibre_mod2_betti(d: &SpaceDescriptor) -> Result<Vec<usize>, SpaceError> {
    let (p, l) = d.materialize()?;
    let g = present_mod2(&p, &l)?;
    let weight = if d.family() == Family::Pt { 2 } else { 1 };
    Ok(spread(&g.ranks(), weight, weight * p.dim()))
}

/// Rational ranks of a toric fibre by cohomological degree.
pub fn fibre_rational_betti(d: &SpaceDescriptor) -> Result<Vec<usize>, SpaceError> {
    let (p, l) = d.materialize()?;
    let g = present_integral(&p, &l)?;
    Ok(spread(&g.ranks(), 2, 2 * p.dim()))
}

fn by_degree<T, F: Fn(&T) -> usize>(
    items: &[T],
    dim: usize,
    deg: F,
    name: impl Fn(&T) -> String,
) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new(); dim + 1];
    for x in items {
        out[deg(x)].push(name(x));
    }
    out
}

/// `H^*(-; Z2)`.
pub fn mod2_cohomology(
    d: &SpaceDescriptor,
    with_basis: bool,
) -> Result<CohomologyReport, SpaceError> {
    d.validate()?;
    let (dims, basis) = match d {
        SpaceDescriptor::Pps { m, fibres } => {
            let a = PpsAlgebra::new(m.clone(), fibres.clone())?;
            let basis = with_basis
                .then(|| by_degree(&a.basis(), a.dim(), |e| a.degree(e), |e| a.render_elem(e)));
            (a.poincare(), basis)
        }
        SpaceDescriptor::Pt { m, fibre } | SpaceDescriptor::Ps { m, fibre } => {
            let weight = if d.family() == Family::Pt { 2 } else { 1 };
            match fibre {
                Fibre::Point | Fibre::Projective(_) => {
                    let ns = match fibre {
                        Fibre::Projective(ns) => ns.clone(),
                        _ => Vec::new(),
                    };
                    let t = TensorAlgebra::new(m.clone(), ns, weight)?;
                    let basis = with_basis.then(|| {
                        by_degree(&t.basis(), t.dim(), |e| t.degree(e), |e| t.render_elem(e))
                    });
                    (t.poincare(), basis)
                }
                Fibre::Polytope { .. } => {
                    // checks the hypothesis on m
                    TensorAlgebra::new(m.clone(), Vec::new(), weight)?;
                    let base = PpsAlgebra::new(m.clone(), Vec::new())?.poincare();
                    (tensor_dims(&base, &fibre_mod2_betti(d)?), None)
                }
            }
        }
    };
    let total = dims.iter().sum();
    Ok(CohomologyReport {
        ring: "F2".into(),
        dims,
        total,
        basis,
    })
}

/// Betti numbers over `Q` (or `Z/p`, `p` odd, which give the same counts).
pub fn rational_betti(d: &SpaceDescriptor) -> Result<Vec<usize>, SpaceError> {
    d.validate()?;
    match d {
        SpaceDescriptor::Pps { m, fibres } => Ok(rational_betti_pps(m, fibres)),
        SpaceDescriptor::Pt { m, .. } => {
            Ok(rational_betti_with_fibre(m, &fibre_rational_betti(d)?))
        }
        SpaceDescriptor::Ps { m, fibre } => match fibre {
            Fibre::Point => Ok(rational_betti_with_fibre(m, &[1])),
            Fibre::Projective(ns) => {
                let mut f = vec![1];
                for &n in ns {
                    f = tensor_dims(&f, &rp_rational_betti(n));
                }
                Ok(rational_betti_with_fibre(m, &f))
            }
            Fibre::Polytope { .. } => Err(SpaceError::Unsupported(
                "rational Betti numbers of PS spaces need a projective fibre".into(),
            )),
        },
    }
}

pub fn betti_report(
    d: &SpaceDescriptor,
    field: BettiField,
) -> Result<CohomologyReport, SpaceError> {
    let dims = rational_betti(d)?;
    Ok(CohomologyReport {
        ring: field.to_string(),
        total: dims.iter().sum(),
        dims,
        basis: None,
    })
}

/// The cellular complex of `PT(m; X)` with one sphere factor.
pub fn cellular_complex(d: &SpaceDescriptor) -> Result<ChainComplexZ, SpaceError> {
    d.validate()?;
    match d {
        SpaceDescriptor::Pt { m, .. } if m.len() == 1 => {
            let (p, _) = d.materialize()?;
            let ord = default_ordering(&p)?;
            Ok(cellular::build_complex(m[0], &p, &ord))
        }
        _ => Err(SpaceError::Unsupported(
            "cellular homology is available for PT spaces with one sphere factor".into(),
        )),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub cells: Vec<usize>,
    pub homology: Vec<String>,
    pub cohomology: Vec<String>,
    pub euler: i64,
}

pub fn integral_homology(
    d: &SpaceDescriptor,
) -> Result<(ChainComplexZ, HomologyReport), SpaceError> {
    let c = cellular_complex(d)?;
    let h = cellular::homology(&c).map_err(|e| SpaceError::Unsupported(e.to_string()))?;
    let co = cellular::cohomology_from_homology(&h);
    let report = HomologyReport {
        cells: c.cell_counts(),
        homology: h.iter().map(AbelianGroup::to_string).collect(),
        cohomology: co.iter().map(AbelianGroup::to_string).collect(),
        euler: c.euler_characteristic(),
    };
    Ok((c, report))
}

/// Total Stiefel-Whitney class.
#[derive(Clone, Debug, Serialize)]
pub struct SwReport {
    pub class: String,
    pub is_one: bool,
    /// generators of the truncation ideal
    pub truncation: Vec<String>,
}

pub fn total_sw(d: &SpaceDescriptor) -> Result<SwReport, SpaceError> {
    d.validate()?;
    match d {
        SpaceDescriptor::Pps { m, fibres } => {
            let a = PpsAlgebra::new(m.clone(), fibres.clone())?;
            let w = a.total_sw();
            Ok(SwReport {
                class: a.render(&w),
                is_one: w == a.one(),
                truncation: vec![format!("a^{}", a.m1() + 1)],
            })
        }
        SpaceDescriptor::Pt { m, fibre } | SpaceDescriptor::Ps { m, fibre } => {
            let ns = match fibre {
                Fibre::Point => Vec::new(),
                Fibre::Projective(ns) => ns.clone(),
                Fibre::Polytope { .. } => {
                    return Err(SpaceError::Unsupported(
                        "total Stiefel-Whitney class needs a projective fibre".into(),
                    ))
                }
            };
            let (t, w) = if d.family() == Family::Pt {
                toric_total_sw(m, &ns)?
            } else {
                smallcover_total_sw(m, &ns)?
            };
            let mut truncation = vec![format!("c^{}", m[0] + 1)];
            truncation.extend(
                ns.iter()
                    .enumerate()
                    .map(|(j, n)| format!("d{}^{}", j + 1, n + 1)),
            );
            Ok(SwReport {
                class: t.render(&w),
                is_one: w == t.one(),
                truncation,
            })
        }
    }
}

/// Whether the total Stiefel-Whitney class `prod (1 + v_i)` of the fibre
/// (toric manifold or small cover) differs from 1.
pub fn fibre_sw_nontrivial(d: &SpaceDescriptor) -> Result<Option<usize>, SpaceError> {
    let (p, l) = d.materialize()?;
    let g: GradedPresentation<Gf2> = present_mod2(&p, &l)?;
    let mu = g.nvars();
    // elementary symmetric polynomials e_k(u_1..u_mu)
    let mut e: Vec<Poly<Gf2>> = vec![Poly::constant(mu, Gf2::ONE)];
    for i in 0..mu {
        let u = Poly::var(mu, i);
        let mut next = e.clone();
        next.push(Poly::zero(mu));
        for k in 1..next.len() {
            next[k] = e
                .get(k)
                .cloned()
                .unwrap_or_else(|| Poly::zero(mu))
                .add(&e[k - 1].mul(&u));
        }
        e = next;
    }
    let weight = if l.ring == CoeffRing::F2 || d.family() == Family::Ps {
        1
    } else {
        2
    };
    for (k, ek) in e.iter().enumerate().skip(1) {
        if !g.class_of(ek, k)?.is_zero() {
            return Ok(Some(weight * k));
        }
    }
    Ok(None)
}
