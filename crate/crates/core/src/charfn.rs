//! Characteristic functions over Z (toric manifolds) and GF(2) (small covers).

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{determinant, Matrix};
use crate::polytope::SimplePolytope;
use crate::scalar::Gf2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoeffRing {
    Z,
    F2,
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoeffRing::Z => "Z",
            CoeffRing::F2 => "F2",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CharError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("characteristic function is singular at {} vertices", .0.offenders.len())]
    Invalid(ValidityReport),
    #[error("malformed characteristic function: {0}")]
    Parse(String),
}

/// One vector per facet, in the polytope's facet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharFunction {
    pub ring: CoeffRing,
    pub vectors: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidityReport {
    /// vertices whose incident vectors do not form a basis, with determinant
    pub offenders: Vec<(String, String)>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.offenders.is_empty()
    }
}

impl CharFunction {
    pub fn new(ring: CoeffRing, vectors: Vec<Vec<i64>>) -> Self {
        let vectors = match ring {
            CoeffRing::Z => vectors,
            CoeffRing::F2 => vectors
                .into_iter()
                .map(|v| v.into_iter().map(|x| x.rem_euclid(2)).collect())
                .collect(),
        };
        CharFunction { ring, vectors }
    }

    pub fn num_facets(&self) -> usize {
        self.vectors.len()
    }

    /// Length of the vectors; zero when there are no facets.
    pub fn dim(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    /// The matrix with rows `lambda_i`.
    pub fn matrix(&self) -> Matrix<BigInt> {
        let rows = self
            .vectors
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(rows, self.dim())
    }

    pub fn reduce_mod2(&self) -> CharFunction {
        CharFunction::new(CoeffRing::F2, self.vectors.clone())
    }

    /// `(lambda_1, 0)`, ..., `(0, mu_1)`, ... on a product polytope.
    pub fn block_product(&self, other: &CharFunction) -> CharFunction {
        let (a, b) = (self.dim(), other.dim());
        let mut vectors = Vec::new();
        for v in &self.vectors {
            let mut w = v.clone();
            w.extend(std::iter::repeat(0).take(b));
            vectors.push(w);
        }
        for v in &other.vectors {
            let mut w = vec![0; a];
            w.extend(v.iter().copied());
            vectors.push(w);
        }
        let ring = if self.ring == CoeffRing::F2 || other.ring == CoeffRing::F2 {
            CoeffRing::F2
        } else {
            CoeffRing::Z
        };
        CharFunction::new(ring, vectors)
    }

    /// `{"ring": "Z"|"F2", "lambda": {"F1": [1, 0], ...}}`, keyed by the
    /// facet names of `p`.
    pub fn from_json(p: &SimplePolytope, value: &serde_json::Value) -> Result<Self, CharError> {
        let ring = match value.get("ring").and_then(|r| r.as_str()) {
            Some("Z") => CoeffRing::Z,
            Some("F2") => CoeffRing::F2,
            _ => return Err(CharError::Parse("\"ring\" must be \"Z\" or \"F2\"".into())),
        };
        let lambda = value
            .get("lambda")
            .and_then(|l| l.as_object())
            .ok_or_else(|| CharError::Parse("missing \"lambda\" object".into()))?;
        let mut vectors = vec![None; p.num_facets()];
        for (name, vec) in lambda {
            let i = p
                .facet_index(name)
                .ok_or_else(|| CharError::Parse(format!("unknown facet {name}")))?;
            let v = vec
                .as_array()
                .ok_or_else(|| CharError::Parse(format!("lambda.{name} must be an array")))?
                .iter()
                .map(|x| {
                    x.as_i64().ok_or_else(|| {
                        CharError::Parse(format!("lambda.{name} has a non-integer entry"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            vectors[i] = Some(v);
        }
        let vectors = vectors
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    CharError::Parse(format!("no vector for facet {}", p.facet_names()[i]))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharFunction::new(ring, vectors))
    }

    pub fn to_json(&self, p: &SimplePolytope) -> serde_json::Value {
        let mut lambda = serde_json::Map::new();
        for (name, v) in p.facet_names().iter().zip(&self.vectors) {
            lambda.insert(name.clone(), serde_json::json!(v));
        }
        serde_json::json!({"ring": self.ring.to_string(), "lambda": lambda})
    }
}

fn check_shape(p: &SimplePolytope, lambda: &CharFunction) -> Result<(), CharError> {
    if lambda.num_facets() != p.num_facets() {
        return Err(CharError::DimensionMismatch(format!(
            "{} vectors for {} facets",
            lambda.num_facets(),
            p.num_facets()
        )));
    }
    if let Some(bad) = lambda.vectors.iter().find(|v| v.len() != p.dim()) {
        return Err(CharError::DimensionMismatch(format!(
            "vector of length {} in dimension {}",
            bad.len(),
            p.dim()
        )));
    }
    Ok(())
}

/// Checks that the vectors on the facets through each vertex form a basis.
pub fn validate_char(
    p: &SimplePolytope,
    lambda: &CharFunction,
) -> Result<ValidityReport, CharError> {
    check_shape(p, lambda)?;
    let mut offenders = Vec::new();
    for v in 0..p.num_vertices() {
        let rows: Vec<Vec<i64>> = p
            .vertex_facets(v)
            .iter()
            .map(|&i| lambda.vectors[i].clone())
            .collect();
        let (ok, det) = match lambda.ring {
            CoeffRing::Z => {
                let d = determinant(&Matrix::<BigInt>::from_i64_rows(&rows));
                let ok = d == BigInt::from(1) || d == BigInt::from(-1);
                (ok, d.to_string())
            }
            CoeffRing::F2 => {
                let m = Matrix::<Gf2>::from_i64_rows(&rows);
                let d = determinant(&m);
                (d == Gf2::ONE, d.to_string())
            }
        };
        if !ok && p.dim() > 0 {
            offenders.push((p.vertex_names()[v].clone(), det));
        }
    }
    Ok(ValidityReport { offenders })
}

/// Coefficient rows of the linear forms `sum_i lambda_{i,l} u_i`, one per
/// coordinate `l`.
pub fn linear_ideal_rows(lambda: &CharFunction) -> Vec<Vec<i64>> {
    (0..lambda.dim())
        .map(|l| lambda.vectors.iter().map(|v| v[l]).collect())
        .collect()
}

/// `e_1, ..., e_n, -(e_1 + ... + e_n)` on the simplex.
pub fn simplex_standard(n: usize) -> CharFunction {
    let mut vectors = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        vectors.push(e);
    }
    if n > 0 {
        vectors.push(vec![-1; n]);
    }
    CharFunction::new(CoeffRing::Z, vectors)
}

/// `(1,0), (0,1), (1,r), (0,1)` on the cyclically labelled square: a
/// Hirzebruch surface.
pub fn square_hirzebruch(r: i64) -> CharFunction {
    CharFunction::new(
        CoeffRing::Z,
        vec![vec![1, 0], vec![0, 1], vec![1, r], vec![0, 1]],
    )
}

/// `(1,0), (-1,1), (1,-2), (0,1)` on the square: `CP^2 # CP^2`.
pub fn square_connected_sum() -> CharFunction {
    CharFunction::new(
        CoeffRing::Z,
        vec![vec![1, 0], vec![-1, 1], vec![1, -2], vec![0, 1]],
    )
}

/// A valid function on the built-in prism (facets `S1 S2 S3 B T`).
pub fn prism_standard() -> CharFunction {
    CharFunction::new(
        CoeffRing::Z,
        vec![
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![-1, -1, 0],
            vec![0, 0, 1],
            vec![0, 0, -1],
        ],
    )
}

/// Writes the forms as `x1 + x3` etc.
pub fn render_linear_forms(rows: &[Vec<i64>], var: &str) -> Vec<String> {
    rows.iter()
        .map(|row| {
            let mut s = String::new();
            for (i, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mag = c.unsigned_abs();
                if s.is_empty() {
                    if c < 0 {
                        s.push('-');
                    }
                } else {
                    s.push_str(if c < 0 { " - " } else { " + " });
                }
                if mag != 1 {
                    s.push_str(&format!("{mag}"));
                }
                s.push_str(&format!("{var}{}", i + 1));
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{prism, simplex, square};

    #[test]
    fn square_examples() {
        let sq = square();
        for r in -3..=3 {
            assert!(validate_char(&sq, &square_hirzebruch(r))
                .unwrap()
                .is_valid());
        }
        assert!(validate_char(&sq, &square_connected_sum())
            .unwrap()
            .is_valid());
        let bad = CharFunction::new(
            CoeffRing::Z,
            vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]],
        );
        let rep = validate_char(&sq, &bad).unwrap();
        let names: Vec<&str> = rep.offenders.iter().map(|(v, _)| v.as_str()).collect();
        assert_eq!(names, vec!["v10", "v01"]);
    }

    #[test]
    fn ideal_rows() {
        let rows = linear_ideal_rows(&square_hirzebruch(5));
        assert_eq!(
            render_linear_forms(&rows, "x"),
            vec!["x1 + x3", "x2 + 5x3 + x4"]
        );
        let rows = linear_ideal_rows(&square_connected_sum());
        assert_eq!(
            render_linear_forms(&rows, "x"),
            vec!["x1 - x2 + x3", "x2 - 2x3 + x4"]
        );
        let rows = linear_ideal_rows(&simplex_standard(3));
        assert_eq!(
            rows,
            vec![vec![1, 0, 0, -1], vec![0, 1, 0, -1], vec![0, 0, 1, -1]]
        );
    }

    #[test]
    fn validity_of_standard_functions() {
        for n in 0..5 {
            assert!(validate_char(&simplex(n), &simplex_standard(n))
                .unwrap()
                .is_valid());
        }
        assert!(validate_char(&prism(), &prism_standard())
            .unwrap()
            .is_valid());
        assert!(validate_char(&prism(), &prism_standard().reduce_mod2())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn sign_flip_and_mismatch() {
        let mut l = square_connected_sum();
        l.vectors[2] = l.vectors[2].iter().map(|x| -x).collect();
        assert!(validate_char(&square(), &l).unwrap().is_valid());
        let short = CharFunction::new(CoeffRing::Z, vec![vec![1, 0]]);
        assert!(matches!(
            validate_char(&square(), &short),
            Err(CharError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let sq = square();
        let l = square_hirzebruch(2);
        assert_eq!(CharFunction::from_json(&sq, &l.to_json(&sq)).unwrap(), l);
    }
}
