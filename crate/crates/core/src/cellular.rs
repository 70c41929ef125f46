//! Cell structure of `P(S^m, X)` for a toric manifold `X`, its integral
//! homology via Smith normal form, and the per-vertex shift prediction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{smith_normal_form, Matrix};
use crate::polytope::{SimplePolytope, VertexOrdering};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CellularError {
    #[error("boundary composite in degree {0} is not zero")]
    BoundaryNotSquareZero(usize),
}

/// Sign exponent used in the boundary coefficient `1 + (-1)^(i + e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
pub enum BoundaryConvention {
    /// `e = dim U_v = 2 index(v)`: every vertex contributes an untwisted
    /// copy of the real projective chain complex.
    #[default]
    Even,
    /// `e = index(v)`: vertices of odd index carry the twisted complex.
    IndexParity,
}

/// The cell `(B_i, U_v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub i: usize,
    pub vertex: usize,
    pub index: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    pub m: usize,
    pub convention: BoundaryConvention,
    /// cells of each dimension, ordered by (vertex order, i)
    pub cells: Vec<Vec<Cell>>,
    /// `boundaries[d]` maps `C_d` to `C_{d-1}`; rows are cells of dimension
    /// `d - 1`, columns cells of dimension `d`
    pub boundaries: Vec<Matrix<BigInt>>,
}

pub fn build_complex(m: usize, p: &SimplePolytope, ord: &VertexOrdering) -> ChainComplexZ {
    build_complex_with(m, p, ord, BoundaryConvention::Even)
}

pub fn build_complex_with(
    m: usize,
    p: &SimplePolytope,
    ord: &VertexOrdering,
    convention: BoundaryConvention,
) -> ChainComplexZ {
    let top = m + 2 * p.dim();
    let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); top + 1];
    for &v in ord.order() {
        let index = ord.index(v);
        for i in 0..=m {
            let dim = i + 2 * index;
            cells[dim].push(Cell {
                i,
                vertex: v,
                index,
                dim,
            });
        }
    }
    let mut boundaries = Vec::with_capacity(top + 1);
    for d in 0..=top {
        if d == 0 {
            boundaries.push(Matrix::zeros(0, cells[0].len()));
            continue;
        }
        let mut b = Matrix::zeros(cells[d - 1].len(), cells[d].len());
        for (col, c) in cells[d].iter().enumerate() {
            if c.i == 0 {
                continue;
            }
            let e = match convention {
                BoundaryConvention::Even => 2 * c.index,
                BoundaryConvention::IndexParity => c.index,
            };
            let coeff = if (c.i + e) % 2 == 0 { 2 } else { 0 };
            if coeff == 0 {
                continue;
            }
            let row = cells[d - 1]
                .iter()
                .position(|t| t.vertex == c.vertex && t.i == c.i - 1)
                .expect("face cell exists");
            b[(row, col)] = BigInt::from(coeff);
        }
        boundaries.push(b);
    }
    ChainComplexZ {
        m,
        convention,
        cells,
        boundaries,
    }
}

impl ChainComplexZ {
    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Alternating count of cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, c)| {
                if d % 2 == 0 {
                    c.len() as i64
                } else {
                    -(c.len() as i64)
                }
            })
            .sum()
    }

    pub fn check_square_zero(&self) -> Result<(), CellularError> {
        for d in 2..self.boundaries.len() {
            if !self.boundaries[d - 1].mul(&self.boundaries[d]).is_zero() {
                return Err(CellularError::BoundaryNotSquareZero(d));
            }
        }
        Ok(())
    }

    /// Non-zero entries `(row, col, value)` of each boundary matrix.
    pub fn sparse_boundaries(&self) -> Vec<Vec<(usize, usize, String)>> {
        self.boundaries
            .iter()
            .map(|b| {
                let mut out = Vec::new();
                for r in 0..b.nrows() {
                    for c in 0..b.ncols() {
                        if !b[(r, c)].is_zero() {
                            out.push((r, c, b[(r, c)].to_string()));
                        }
                    }
                }
                out
            })
            .collect()
    }
}

/// `Z^free + Z/t_1 + Z/t_2 + ...`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct AbelianGroup {
    pub free: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(r: usize) -> Self {
        AbelianGroup {
            free: r,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        AbelianGroup {
            free: 0,
            torsion: vec![BigInt::from(order)],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        torsion.sort();
        AbelianGroup {
            free: self.free + other.free,
            torsion,
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut k = 0;
        while k < self.torsion.len() {
            let t = &self.torsion[k];
            let count = self.torsion[k..].iter().take_while(|x| *x == t).count();
            parts.push(if count == 1 {
                format!("Z/{t}")
            } else {
                format!("Z/{t}^{count}")
            });
            k += count;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `H_d` for `d = 0..=top`.
pub fn homology(c: &ChainComplexZ) -> Result<Vec<AbelianGroup>, CellularError> {
    c.check_square_zero()?;
    let top = c.top_dim();
    let snfs: Vec<_> = c.boundaries.iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = snfs.iter().map(|s| s.rank()).collect();
    let mut out = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let kernel = c.cells[d].len() - ranks[d];
        let (image, torsion) = if d < top {
            let f = snfs[d + 1].invariant_factors();
            let t: Vec<BigInt> = f.iter().filter(|x| !x.is_one()).cloned().collect();
            (f.len(), t)
        } else {
            (0, Vec::new())
        };
        let mut torsion = torsion;
        torsion.sort();
        out.push(AbelianGroup {
            free: kernel - image,
            torsion,
        });
    }
    Ok(out)
}

/// `H^d` by universal coefficients: free part of `H_d` plus torsion of
/// `H_{d-1}`.
pub fn cohomology_from_homology(h: &[AbelianGroup]) -> Vec<AbelianGroup> {
    (0..h.len())
        .map(|d| AbelianGroup {
            free: h[d].free,
            torsion: if d == 0 {
                Vec::new()
            } else {
                h[d - 1].torsion.clone()
            },
        })
        .collect()
}

/// `H_k(RP^m; Z)`, or with the twisted coefficients when `twisted`.
pub fn rp_homology(m: usize, twisted: bool) -> Vec<AbelianGroup> {
    (0..=m)
        .map(|k| {
            if !twisted {
                if k == 0 {
                    AbelianGroup::free(1)
                } else if k == m {
                    if m % 2 == 1 {
                        AbelianGroup::free(1)
                    } else {
                        AbelianGroup::default()
                    }
                } else if k % 2 == 1 {
                    AbelianGroup::cyclic(2)
                } else {
                    AbelianGroup::default()
                }
            } else if k == m {
                if m % 2 == 0 {
                    AbelianGroup::free(1)
                } else {
                    AbelianGroup::default()
                }
            } else if k % 2 == 0 {
                AbelianGroup::cyclic(2)
            } else {
                AbelianGroup::default()
            }
        })
        .collect()
}

/// Prediction `sum_v H_{* - 2 index(v)}(RP^m)` (with twisted summands for
/// odd index under [`BoundaryConvention::IndexParity`]).
pub fn shift_prediction(
    m: usize,
    p: &SimplePolytope,
    ord: &VertexOrdering,
    convention: BoundaryConvention,
) -> Vec<AbelianGroup> {
    let top = m + 2 * p.dim();
    let mut out = vec![AbelianGroup::default(); top + 1];
    for v in 0..p.num_vertices() {
        let idx = ord.index(v);
        let twisted = convention == BoundaryConvention::IndexParity && idx % 2 == 1;
        for (k, g) in rp_homology(m, twisted).into_iter().enumerate() {
            let d = k + 2 * idx;
            out[d] = out[d].direct_sum(&g);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    pub computed: Vec<AbelianGroup>,
    pub predicted: Vec<AbelianGroup>,
    /// degrees where the two disagree
    pub mismatches: Vec<usize>,
}

impl ClosedFormReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn closed_form_check(
    m: usize,
    p: &SimplePolytope,
    ord: &VertexOrdering,
) -> Result<ClosedFormReport, CellularError> {
    closed_form_check_with(m, p, ord, BoundaryConvention::Even)
}

pub fn closed_form_check_with(
    m: usize,
    p: &SimplePolytope,
    ord: &VertexOrdering,
    convention: BoundaryConvention,
) -> Result<ClosedFormReport, CellularError> {
    let computed = homology(&build_complex_with(m, p, ord, convention))?;
    let predicted = shift_prediction(m, p, ord, convention);
    let mismatches = (0..computed.len())
        .filter(|&d| computed[d] != predicted[d])
        .collect();
    Ok(ClosedFormReport {
        computed,
        predicted,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{default_ordering, point, simplex};

    fn strings(h: &[AbelianGroup]) -> Vec<String> {
        h.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn real_projective_spaces() {
        let p = point();
        let ord = default_ordering(&p).unwrap();
        for m in 1..=6 {
            let h = homology(&build_complex(m, &p, &ord)).unwrap();
            assert_eq!(h, rp_homology(m, false), "RP^{m}");
        }
        let h = homology(&build_complex(3, &p, &ord)).unwrap();
        assert_eq!(strings(&h), vec!["Z", "Z/2", "0", "Z"]);
    }

    #[test]
    fn dold_cells() {
        let p = simplex(1);
        let ord = default_ordering(&p).unwrap();
        let c = build_complex(1, &p, &ord);
        assert_eq!(c.cell_counts(), vec![1, 1, 1, 1]);
        assert_eq!(c.euler_characteristic(), 0);
        let twisted = homology(&build_complex_with(
            1,
            &p,
            &ord,
            BoundaryConvention::IndexParity,
        ))
        .unwrap();
        assert_eq!(strings(&twisted), vec!["Z", "Z", "Z/2", "0"]);
    }

    #[test]
    fn shift_formula() {
        let p = simplex(1);
        let ord = default_ordering(&p).unwrap();
        let r = closed_form_check(2, &p, &ord).unwrap();
        assert!(r.agrees());
        assert_eq!(strings(&r.computed), vec!["Z", "Z/2", "Z", "Z/2", "0"]);
        let r = closed_form_check_with(2, &p, &ord, BoundaryConvention::IndexParity).unwrap();
        assert!(r.agrees());
    }

    #[test]
    fn group_display() {
        let g = AbelianGroup {
            free: 2,
            torsion: vec![BigInt::from(2), BigInt::from(2)],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2^2");
        assert_eq!(AbelianGroup::default().to_string(), "0");
    }
}
