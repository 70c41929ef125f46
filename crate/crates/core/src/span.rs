//! Euler characteristics, span bounds and stable parallelizability.

use std::fmt;

use serde::Serialize;

use crate::graded::first_pontryagin;
use crate::invariants::{fibre_sw_nontrivial, total_sw};
use crate::polytope::{default_ordering, h_vector};
use crate::space::{Family, Fibre, SpaceDescriptor, SpaceError};

/// `n + 1 = 2^(4a+b) * odd`, `rho = 8a + 2^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadonHurwitz {
    pub a: u32,
    pub b: u32,
    pub rho: u64,
}

pub fn radon_hurwitz(n_plus_one: u64) -> RadonHurwitz {
    assert!(n_plus_one > 0, "radon_hurwitz needs a positive argument");
    let v = n_plus_one.trailing_zeros();
    let (a, b) = (v / 4, v % 4);
    RadonHurwitz {
        a,
        b,
        rho: 8 * u64::from(a) + (1u64 << b),
    }
}

/// `sp(S^n) = rho(n + 1) - 1`.
pub fn radon_hurwitz_span(n: u64) -> u64 {
    radon_hurwitz(n + 1).rho - 1
}

/// Number of linear fields built by [`crate::fields::linear_sphere_fields`].
pub fn sp_constructed(m: usize) -> usize {
    if m % 2 == 0 {
        0
    } else if (m + 1) % 8 == 0 {
        7
    } else if (m + 1) % 4 == 0 {
        3
    } else {
        1
    }
}

fn chi_sphere_product(m: &[usize]) -> i64 {
    m.iter().map(|&x| if x % 2 == 0 { 2 } else { 0 }).product()
}

/// Euler characteristic of the fibre.
pub fn fibre_euler(d: &SpaceDescriptor) -> Result<i64, SpaceError> {
    let (p, _) = d.materialize()?;
    Ok(match d.family() {
        Family::Pt => p.num_vertices() as i64,
        _ => {
            let h = h_vector(&p, &default_ordering(&p)?);
            h.0.iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum()
        }
    })
}

/// Closed-form Euler characteristic of each family.
pub fn euler_characteristic(d: &SpaceDescriptor) -> Result<i64, SpaceError> {
    d.validate()?;
    match d {
        SpaceDescriptor::Pps { m, fibres } => {
            let all_even = m.iter().all(|x| x % 2 == 0) && fibres.iter().all(|f| f.0 % 2 == 0);
            Ok(if all_even {
                1i64 << (m.len() + fibres.len() - 1)
            } else {
                0
            })
        }
        SpaceDescriptor::Pt { m, .. } | SpaceDescriptor::Ps { m, .. } => {
            Ok(chi_sphere_product(m) / 2 * fibre_euler(d)?)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum Verdict {
    No(String),
    Unknown,
    YesCandidate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::No(r) => write!(f, "No ({r})"),
            Verdict::Unknown => f.write_str("Unknown"),
            Verdict::YesCandidate => f.write_str("YesCandidate"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub dim: usize,
    pub euler: i64,
    pub span_lower: usize,
    /// every applicable constructive bound
    pub lower_bounds: Vec<Bound>,
    /// the same bounds with Adams' values for the spheres
    pub cited_lower: Option<Bound>,
    pub span_upper: usize,
    pub stasp_equals_span: bool,
    pub stably_parallelizable: Verdict,
}

fn odd_sphere_sum(m: &[usize], sp: &dyn Fn(usize) -> usize) -> usize {
    m.iter().filter(|&&x| x % 2 == 1).map(|&x| sp(x)).sum()
}

fn bounds_with(d: &SpaceDescriptor, sp: &dyn Fn(usize) -> usize) -> Vec<Bound> {
    let m = d.m();
    let r0 = odd_sphere_sum(m, sp);
    let mut out = Vec::new();
    if r0 > 0 {
        out.push(Bound {
            value: r0,
            tag: "fibre bundle".into(),
        });
    }
    match d {
        SpaceDescriptor::Pps { fibres, .. } => {
            let cover: usize = r0
                + fibres
                    .iter()
                    .filter(|f| f.0 % 2 == 1)
                    .map(|f| sp(f.0))
                    .sum::<usize>();
            if cover > 0 {
                out.push(Bound {
                    value: cover,
                    tag: "covering".into(),
                });
            }
            if m.len() == 1 && fibres.len() == 1 && m[0] % 2 == 1 {
                out.push(Bound {
                    value: sp(m[0]) + fibres[0].1 - 1,
                    tag: "Thm 6.3".into(),
                });
            }
            if r0 > 0 && !fibres.is_empty() {
                out.push(Bound {
                    value: r0 + fibres.iter().map(|f| f.1 - 1).sum::<usize>(),
                    tag: "Thm 6.3 Cor".into(),
                });
            }
        }
        SpaceDescriptor::Pt {
            fibre: Fibre::Projective(ns),
            ..
        } if r0 > 0 && ns.iter().all(|&n| n == 1) => {
            if ns.len() == 1 {
                out.push(Bound {
                    value: r0 + 1,
                    tag: "Thm 6.5".into(),
                });
            }
            out.push(Bound {
                value: r0 + ns.len(),
                tag: "Thm 6.5 Cor".into(),
            });
        }
        _ => {}
    }
    out
}

fn best(bounds: &[Bound]) -> Option<Bound> {
    bounds.iter().max_by_key(|b| b.value).cloned()
}

/// Lower and upper bounds on the span, with provenance.
pub fn span_bounds(d: &SpaceDescriptor) -> Result<SpanReport, SpaceError> {
    let euler = euler_characteristic(d)?;
    let dim = d.dim()?;
    let lower_bounds = bounds_with(d, &sp_constructed);
    let span_lower = best(&lower_bounds).map_or(0, |b| b.value);
    let cited_lower =
        best(&bounds_with(d, &|n| radon_hurwitz_span(n as u64) as usize)).map(|b| Bound {
            value: b.value,
            tag: format!("{} (cited)", b.tag),
        });
    let span_upper = if euler != 0 { 0 } else { dim };
    let stasp_equals_span = match d {
        SpaceDescriptor::Pps { m, fibres } => {
            let dims: Vec<usize> = m
                .iter()
                .copied()
                .chain(fibres.iter().map(|f| f.0))
                .collect();
            dims.iter().sum::<usize>() % 2 == 0 && dims.iter().any(|x| x % 2 == 1)
        }
        _ => false,
    };
    Ok(SpanReport {
        dim,
        euler,
        span_lower: span_lower.min(span_upper),
        lower_bounds,
        cited_lower,
        span_upper,
        stasp_equals_span,
        stably_parallelizable: stable_parallelizability(d)?,
    })
}

fn certified(d: &SpaceDescriptor) -> bool {
    match d {
        SpaceDescriptor::Pt {
            m,
            fibre: Fibre::Projective(ns),
        } => m.len() == 1 && [1, 3, 7].contains(&m[0]) && ns == &[1, 1],
        SpaceDescriptor::Pps { m, fibres } => {
            m.len() == 1 && [1, 3, 7].contains(&m[0]) && fibres == &[(2, 2), (2, 2)]
        }
        _ => false,
    }
}

/// `No` with the first obstruction found, otherwise `YesCandidate` for the
/// certified cases and `Unknown` for the rest.
pub fn stable_parallelizability(d: &SpaceDescriptor) -> Result<Verdict, SpaceError> {
    d.validate()?;
    if let SpaceDescriptor::Pt {
        fibre: Fibre::Projective(ns),
        ..
    } = d
    {
        if let Some((j, n)) = ns.iter().enumerate().find(|(_, &n)| n >= 2) {
            return Ok(Verdict::No(format!(
                "fibre factor CP^{n} (j = {}) has n_j >= 2",
                j + 1
            )));
        }
    }
    if d.family() == Family::Pt {
        let (p, l) = d.materialize()?;
        let (g, pont) = first_pontryagin(&p, &l)?;
        if !pont.is_zero {
            return Ok(Verdict::No(format!(
                "p1 of the fibre is {}",
                g.render_class(&pont.class, "x")
            )));
        }
    }
    match total_sw(d) {
        Ok(w) if !w.is_one => {
            return Ok(Verdict::No(format!(
                "total Stiefel-Whitney class is {}",
                w.class
            )))
        }
        Ok(_) => {}
        Err(SpaceError::Hypothesis(_)) | Err(SpaceError::Unsupported(_)) => {}
        Err(e) => return Err(e),
    }
    if d.family() != Family::Pps {
        if let Some(deg) = fibre_sw_nontrivial(d)? {
            return Ok(Verdict::No(format!("fibre has w_{deg} != 0")));
        }
    }
    Ok(if certified(d) {
        Verdict::YesCandidate
    } else {
        Verdict::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixture;

    #[test]
    fn radon_hurwitz_table() {
        let got: Vec<u64> = [1, 2, 3, 7, 8, 15, 31]
            .iter()
            .map(|&n| radon_hurwitz_span(n))
            .collect();
        assert_eq!(got, vec![1, 0, 3, 7, 0, 8, 9]);
        for n in 0..200u64 {
            assert_eq!(radon_hurwitz_span(n) == 0, n % 2 == 0);
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(
            euler_characteristic(&fixture("pps-2-4-6-2", None).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            euler_characteristic(&fixture("square-r", Some(1)).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            euler_characteristic(&fixture("pt-2-cp2", None).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn span_examples() {
        let r = span_bounds(&fixture("pps-3-5-3", None).unwrap()).unwrap();
        assert_eq!(r.span_lower, 5);
        let r = span_bounds(&fixture("pt-3-cp1-cp1", None).unwrap()).unwrap();
        assert_eq!(r.span_lower, 5);
        assert_eq!(best(&r.lower_bounds).unwrap().tag, "Thm 6.5 Cor");
        let r = span_bounds(&fixture("pps-2-4-6-2", None).unwrap()).unwrap();
        assert_eq!((r.span_lower, r.span_upper), (0, 0));
    }

    #[test]
    fn verdicts() {
        let v = stable_parallelizability(&fixture("pt-2-cp2", None).unwrap()).unwrap();
        assert!(matches!(v, Verdict::No(_)));
        let v = stable_parallelizability(&fixture("cp2-connected-sum", None).unwrap()).unwrap();
        assert!(matches!(v, Verdict::No(_)));
        let v = stable_parallelizability(&fixture("square-r", Some(1)).unwrap()).unwrap();
        assert!(matches!(v, Verdict::No(_)));
    }
}
