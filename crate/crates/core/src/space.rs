//! Descriptors for the three families of spaces and the built-in fixtures.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::charfn::{self, CharError, CharFunction, CoeffRing};
use crate::graded::GradedError;
use crate::polytope::{self, PolytopeDocument, PolytopeError, SimplePolytope};
use crate::projprod::{check_pps, HypothesisError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("malformed descriptor: {0}")]
    Parse(String),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl SpaceError {
    /// Violations of a theorem's hypotheses, as opposed to malformed input.
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            SpaceError::Hypothesis(_)
                | SpaceError::Char(CharError::Invalid(_))
                | SpaceError::Graded(GradedError::InvalidCharFunction(CharError::Invalid(_)))
        )
    }
}

fn parse_err<T>(msg: impl Into<String>) -> Result<T, SpaceError> {
    Err(SpaceError::Parse(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Pps,
    Pt,
    Ps,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Pps => "PPS",
            Family::Pt => "PT",
            Family::Ps => "PS",
        })
    }
}

/// Fibre of a `PT`/`PS` space.
#[derive(Clone, Debug)]
pub enum Fibre {
    Point,
    /// `CP^n_1 x ... x CP^n_l` (PT) or `RP^n_1 x ... x RP^n_l` (PS)
    Projective(Vec<usize>),
    Polytope {
        polytope: SimplePolytope,
        lambda: CharFunction,
    },
}

#[derive(Clone, Debug)]
pub enum SpaceDescriptor {
    Pps {
        m: Vec<usize>,
        fibres: Vec<(usize, usize)>,
    },
    Pt {
        m: Vec<usize>,
        fibre: Fibre,
    },
    Ps {
        m: Vec<usize>,
        fibre: Fibre,
    },
}

fn usize_list(v: &Value, key: &str) -> Result<Vec<usize>, SpaceError> {
    let arr = match v.get(key) {
        Some(Value::Array(a)) => a,
        Some(_) => return parse_err(format!("\"{key}\" must be an array")),
        None => return parse_err(format!("missing \"{key}\"")),
    };
    arr.iter()
        .map(|x| {
            x.as_u64().map(|n| n as usize).ok_or_else(|| {
                SpaceError::Parse(format!("\"{key}\" entries must be non-negative integers"))
            })
        })
        .collect()
}

fn check_m(m: &[usize]) -> Result<(), SpaceError> {
    check_pps(m, &[]).map_err(SpaceError::from)
}

impl SpaceDescriptor {
    pub fn family(&self) -> Family {
        match self {
            SpaceDescriptor::Pps { .. } => Family::Pps,
            SpaceDescriptor::Pt { .. } => Family::Pt,
            SpaceDescriptor::Ps { .. } => Family::Ps,
        }
    }

    pub fn m(&self) -> &[usize] {
        match self {
            SpaceDescriptor::Pps { m, .. }
            | SpaceDescriptor::Pt { m, .. }
            | SpaceDescriptor::Ps { m, .. } => m,
        }
    }

    pub fn fibre(&self) -> Option<&Fibre> {
        match self {
            SpaceDescriptor::Pps { .. } => None,
            SpaceDescriptor::Pt { fibre, .. } | SpaceDescriptor::Ps { fibre, .. } => Some(fibre),
        }
    }

    /// Shape checks only; theorem hypotheses are checked where they are used.
    pub fn validate(&self) -> Result<(), SpaceError> {
        match self {
            SpaceDescriptor::Pps { m, fibres } => check_pps(m, fibres).map_err(SpaceError::from),
            SpaceDescriptor::Pt { m, fibre } | SpaceDescriptor::Ps { m, fibre } => {
                check_m(m)?;
                if let Fibre::Projective(ns) = fibre {
                    if ns.iter().any(|&n| n == 0) {
                        return parse_err("projective fibre dimensions must be positive");
                    }
                }
                let (p, l) = self.materialize()?;
                let rep = charfn::validate_char(&p, &l)?;
                if !rep.is_valid() {
                    return Err(CharError::Invalid(rep).into());
                }
                Ok(())
            }
        }
    }

    /// The fibre as polytope and characteristic function; products of
    /// projective spaces become products of simplices.
    pub fn materialize(&self) -> Result<(SimplePolytope, CharFunction), SpaceError> {
        let (fibre, ring) = match self {
            SpaceDescriptor::Pps { .. } => {
                return Err(SpaceError::Unsupported(
                    "PPS spaces have no polytope fibre".into(),
                ))
            }
            SpaceDescriptor::Pt { fibre, .. } => (fibre, CoeffRing::Z),
            SpaceDescriptor::Ps { fibre, .. } => (fibre, CoeffRing::F2),
        };
        let (p, l) = match fibre {
            Fibre::Point => (
                polytope::point(),
                CharFunction::new(CoeffRing::Z, Vec::new()),
            ),
            Fibre::Projective(ns) => projective_product(ns)?,
            Fibre::Polytope { polytope, lambda } => (polytope.clone(), lambda.clone()),
        };
        let l = match ring {
            CoeffRing::Z if l.ring == CoeffRing::F2 => {
                return parse_err("PT fibres need an integral characteristic function");
            }
            CoeffRing::Z => l,
            CoeffRing::F2 => l.reduce_mod2(),
        };
        Ok((p, l))
    }

    /// Real dimension.
    pub fn dim(&self) -> Result<usize, SpaceError> {
        let base: usize = self.m().iter().sum();
        Ok(match self {
            SpaceDescriptor::Pps { fibres, .. } => base + fibres.iter().map(|f| f.0).sum::<usize>(),
            SpaceDescriptor::Pt { fibre, .. } => base + 2 * fibre_dim(fibre),
            SpaceDescriptor::Ps { fibre, .. } => base + fibre_dim(fibre),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SpaceError> {
        let family = v
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| SpaceError::Parse("missing \"family\"".into()))?;
        let m = usize_list(v, "m")?;
        let d = match family {
            "PPS" => {
                let fibres = match v.get("fibres") {
                    None => Vec::new(),
                    Some(Value::Array(a)) => a
                        .iter()
                        .map(|pair| match pair.as_array().map(|p| p.as_slice()) {
                            Some([n, p]) => match (n.as_u64(), p.as_u64()) {
                                (Some(n), Some(p)) => Ok((n as usize, p as usize)),
                                _ => parse_err("fibre pairs must hold non-negative integers"),
                            },
                            _ => parse_err("each fibre must be a pair [n, p]"),
                        })
                        .collect::<Result<_, _>>()?,
                    Some(_) => return parse_err("\"fibres\" must be an array"),
                };
                SpaceDescriptor::Pps { m, fibres }
            }
            "PT" | "PS" => {
                let short = if family == "PT" { "cp" } else { "rp" };
                let other = if family == "PT" { "rp" } else { "cp" };
                if v.get(other).is_some() {
                    return parse_err(format!("\"{other}\" is not valid for {family}"));
                }
                let fibre = if v.get(short).is_some() {
                    if v.get("polytope").is_some() {
                        return parse_err(format!(
                            "give either \"{short}\" or \"polytope\", not both"
                        ));
                    }
                    Fibre::Projective(usize_list(v, short)?)
                } else if let Some(pv) = v.get("polytope") {
                    let polytope = match pv {
                        Value::String(name) => polytope::named(name)
                            .ok_or_else(|| SpaceError::Parse(format!("unknown polytope {name}")))?,
                        other => PolytopeDocument::from_json(other)?.build()?,
                    };
                    let lv = v
                        .get("lambda")
                        .ok_or_else(|| SpaceError::Parse("missing \"lambda\"".into()))?;
                    let lambda = CharFunction::from_json(&polytope, lv)?;
                    Fibre::Polytope { polytope, lambda }
                } else {
                    Fibre::Point
                };
                if family == "PT" {
                    SpaceDescriptor::Pt { m, fibre }
                } else {
                    SpaceDescriptor::Ps { m, fibre }
                }
            }
            other => return parse_err(format!("unknown family {other}")),
        };
        Ok(d)
    }

    pub fn to_json(&self) -> Value {
        let fibre_json = |fibre: &Fibre, short: &str| -> Value {
            match fibre {
                Fibre::Point => json!({}),
                Fibre::Projective(ns) => json!({ short: ns }),
                Fibre::Polytope { polytope, lambda } => json!({
                    "polytope": polytope.to_document().to_json(),
                    "lambda": lambda.to_json(polytope),
                }),
            }
        };
        let mut out = serde_json::Map::new();
        out.insert("family".into(), json!(self.family().to_string()));
        out.insert("m".into(), json!(self.m()));
        match self {
            SpaceDescriptor::Pps { fibres, .. } => {
                let f: Vec<Value> = fibres.iter().map(|&(n, p)| json!([n, p])).collect();
                out.insert("fibres".into(), Value::Array(f));
            }
            SpaceDescriptor::Pt { fibre, .. } | SpaceDescriptor::Ps { fibre, .. } => {
                let short = if self.family() == Family::Pt {
                    "cp"
                } else {
                    "rp"
                };
                if let Value::Object(map) = fibre_json(fibre, short) {
                    out.extend(map);
                }
            }
        }
        Value::Object(out)
    }

    /// `P(2,4; (6,2))`, `PT(3; CP1 x CP1)`, `PS(2,2; RP1)`, `PT(3; X[square])`.
    pub fn label(&self) -> String {
        let ms = self
            .m()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match self {
            SpaceDescriptor::Pps { fibres, .. } => {
                if fibres.is_empty() {
                    format!("P({ms})")
                } else {
                    let f = fibres
                        .iter()
                        .map(|(n, p)| format!("({n},{p})"))
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("P({ms}; {f})")
                }
            }
            SpaceDescriptor::Pt { fibre, .. } | SpaceDescriptor::Ps { fibre, .. } => {
                let pre = if self.family() == Family::Pt {
                    "CP"
                } else {
                    "RP"
                };
                let f = match fibre {
                    Fibre::Point => "pt".to_string(),
                    Fibre::Projective(ns) => ns
                        .iter()
                        .map(|n| format!("{pre}{n}"))
                        .collect::<Vec<_>>()
                        .join(" x "),
                    Fibre::Polytope { polytope, .. } => {
                        format!(
                            "X[{} facets, {} vertices]",
                            polytope.num_facets(),
                            polytope.num_vertices()
                        )
                    }
                };
                format!("{}({ms}; {f})", self.family())
            }
        }
    }
}

fn fibre_dim(f: &Fibre) -> usize {
    match f {
        Fibre::Point => 0,
        Fibre::Projective(ns) => ns.iter().sum(),
        Fibre::Polytope { polytope, .. } => polytope.dim(),
    }
}

/// `Delta^n_1 x ... x Delta^n_l` with the block standard function.
pub fn projective_product(ns: &[usize]) -> Result<(SimplePolytope, CharFunction), SpaceError> {
    let mut p = polytope::point();
    let mut l = CharFunction::new(CoeffRing::Z, Vec::new());
    for (j, &n) in ns.iter().enumerate() {
        let s = if ns.len() == 1 {
            polytope::simplex(n)
        } else {
            polytope::simplex(n).relabeled(&format!("P{}", j + 1))
        };
        p = if j == 0 { s } else { p.product(&s)? };
        l = l.block_product(&charfn::simplex_standard(n));
    }
    Ok((p, l))
}

/// Names accepted by [`fixture`].
pub const FIXTURES: &[&str] = &[
    "dold-1-1",
    "dold-2-1",
    "dold-3-2",
    "square-r",
    "cp2-connected-sum",
    "pps-2-4-6-2",
    "pps-3-5-3",
    "pps-1-2",
    "pps-2-3-1",
    "klein-bottle",
    "pt-3-cp1-cp1",
    "pt-1-cp1-cp1",
    "pt-2-cp2",
    "pt-2-prism",
    "pt-2-2-cp1",
    "ps-2-2-rp1",
    "ps-3-rp3",
    "ps-2-rp2",
];

/// Built-in fixture; `r` is used by `square-r` (default 2).
pub fn fixture(name: &str, r: Option<i64>) -> Result<SpaceDescriptor, SpaceError> {
    let pt = |m: Vec<usize>, ns: Vec<usize>| SpaceDescriptor::Pt {
        m,
        fibre: Fibre::Projective(ns),
    };
    let ps = |m: Vec<usize>, ns: Vec<usize>| SpaceDescriptor::Ps {
        m,
        fibre: Fibre::Projective(ns),
    };
    let pps = |m: Vec<usize>, fibres: Vec<(usize, usize)>| SpaceDescriptor::Pps { m, fibres };
    Ok(match name {
        "dold-1-1" => pt(vec![1], vec![1]),
        "dold-2-1" => pt(vec![2], vec![1]),
        "dold-3-2" => pt(vec![3], vec![2]),
        "square-r" => SpaceDescriptor::Pt {
            m: vec![3],
            fibre: Fibre::Polytope {
                polytope: polytope::square(),
                lambda: charfn::square_hirzebruch(r.unwrap_or(2)),
            },
        },
        "cp2-connected-sum" => SpaceDescriptor::Pt {
            m: vec![3],
            fibre: Fibre::Polytope {
                polytope: polytope::square(),
                lambda: charfn::square_connected_sum(),
            },
        },
        "pps-2-4-6-2" => pps(vec![2, 4], vec![(6, 2)]),
        "pps-3-5-3" => pps(vec![3], vec![(5, 3)]),
        "pps-1-2" => pps(vec![1, 2], vec![]),
        "pps-2-3-1" => pps(vec![2], vec![(3, 1)]),
        "klein-bottle" => pps(vec![1], vec![(1, 1)]),
        "pt-3-cp1-cp1" => pt(vec![3], vec![1, 1]),
        "pt-1-cp1-cp1" => pt(vec![1], vec![1, 1]),
        "pt-2-cp2" => pt(vec![2], vec![2]),
        "pt-2-prism" => SpaceDescriptor::Pt {
            m: vec![2],
            fibre: Fibre::Polytope {
                polytope: polytope::prism(),
                lambda: charfn::prism_standard(),
            },
        },
        "pt-2-2-cp1" => pt(vec![2, 2], vec![1]),
        "ps-2-2-rp1" => ps(vec![2, 2], vec![1]),
        "ps-3-rp3" => ps(vec![3], vec![3]),
        "ps-2-rp2" => ps(vec![2], vec![2]),
        other => return parse_err(format!("unknown fixture {other}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for name in FIXTURES {
            let d = fixture(name, None).unwrap();
            d.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            let back = SpaceDescriptor::from_json(&d.to_json()).unwrap();
            assert_eq!(back.to_json(), d.to_json(), "{name}");
        }
    }

    #[test]
    fn projective_product_shape() {
        let (p, l) = projective_product(&[1, 2]).unwrap();
        assert_eq!(p.num_vertices(), 6);
        assert_eq!(p.num_facets(), 5);
        assert!(charfn::validate_char(&p, &l).unwrap().is_valid());
    }

    #[test]
    fn parse_errors() {
        assert!(SpaceDescriptor::from_json(&json!({"family": "PT", "m": [3], "rp": [1]})).is_err());
        assert!(SpaceDescriptor::from_json(&json!({"family": "XX", "m": [3]})).is_err());
        let bad = SpaceDescriptor::from_json(&json!({"family": "PPS", "m": [3, 1]})).unwrap();
        assert!(bad.validate().unwrap_err().is_hypothesis());
        let d = SpaceDescriptor::from_json(&json!({"family": "PT", "m": [3], "polytope": "square",
            "lambda": {"ring": "Z", "lambda": {"F1": [1, 0], "F2": [0, 1], "F3": [1, 2], "F4": [0, 1]}}}))
        .unwrap();
        d.validate().unwrap();
        assert_eq!(d.dim().unwrap(), 7);
    }
}
