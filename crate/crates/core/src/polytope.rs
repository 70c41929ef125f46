//! Combinatorial simple polytopes: incidence data, edge graph, faces, generic
//! vertex orderings and the h-vector.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolytopeError {
    #[error("incidence table is empty")]
    Empty,
    #[error("vertex {vertex} lies on {found} facets, expected {expected}")]
    NotSimple {
        vertex: String,
        found: usize,
        expected: usize,
    },
    #[error("edge graph is not connected")]
    Disconnected,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("unknown facet {0}")]
    UnknownFacet(String),
    #[error("duplicate facet name {0}")]
    DuplicateFacet(String),
    #[error("facet {0} contains no vertex")]
    FacetWithoutVertex(String),
    #[error("a {dim}-polytope needs at least {} facets, got {found}", dim + 1)]
    TooFewFacets { dim: usize, found: usize },
    #[error("vertex {vertex} has {degree} neighbours in the edge graph, expected {expected}")]
    NotRegular {
        vertex: String,
        degree: usize,
        expected: usize,
    },
    #[error("functional ties on adjacent vertices {0} and {1}")]
    DegenerateFunctional(String, String),
    #[error("vertex order has {maxima} local maxima on the face {face:?}; expected exactly one")]
    OrderNotAdmissible { face: Vec<String>, maxima: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polytope has no vertex coordinates")]
    NoCoordinates,
    #[error("malformed polytope document: {0}")]
    Parse(String),
}

/// A simple polytope given by facet-vertex incidence.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplePolytope {
    dim: usize,
    facets: Vec<String>,
    vertices: Vec<String>,
    /// facets through each vertex
    incidence: Vec<BTreeSet<usize>>,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    coordinates: Option<Vec<Vec<Rational>>>,
}

impl SimplePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_names(&self) -> &[String] {
        &self.facets
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn facet_index(&self, name: &str) -> Option<usize> {
        self.facets.iter().position(|f| f == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Facets containing vertex `v`.
    pub fn vertex_facets(&self, v: usize) -> &BTreeSet<usize> {
        &self.incidence[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn coordinates(&self) -> Option<&[Vec<Rational>]> {
        self.coordinates.as_deref()
    }

    /// Attaches vertex coordinates (one point of length `dim` per vertex).
    pub fn with_coordinates(mut self, coords: Vec<Vec<Rational>>) -> Result<Self, PolytopeError> {
        if coords.len() != self.vertices.len() || coords.iter().any(|c| c.len() != self.dim) {
            return Err(PolytopeError::DimensionMismatch(format!(
                "expected {} points in dimension {}",
                self.vertices.len(),
                self.dim
            )));
        }
        self.coordinates = Some(coords);
        Ok(self)
    }

    /// A facet subset is a face iff some vertex lies on all of its facets.
    pub fn is_face(&self, facets: &BTreeSet<usize>) -> bool {
        self.incidence.iter().any(|s| facets.is_subset(s))
    }

    /// Vertices lying on every facet of `face`.
    pub fn face_vertices(&self, face: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| face.is_subset(&self.incidence[v]))
            .collect()
    }

    /// All faces of dimension `d`, each identified with the set of facets
    /// containing it, in sorted order.
    pub fn faces_of_dim(&self, d: usize) -> Vec<BTreeSet<usize>> {
        if d > self.dim {
            return Vec::new();
        }
        let codim = self.dim - d;
        let mut out = BTreeSet::new();
        for s in &self.incidence {
            let facets: Vec<usize> = s.iter().copied().collect();
            for combo in combinations(&facets, codim) {
                out.insert(combo.into_iter().collect::<BTreeSet<_>>());
            }
        }
        out.into_iter().collect()
    }

    /// `f_0, ..., f_n`
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim).map(|d| self.faces_of_dim(d).len()).collect()
    }

    /// Minimal non-faces: facet sets with empty common intersection whose
    /// proper subsets all intersect.
    pub fn minimal_non_faces(&self) -> Vec<BTreeSet<usize>> {
        let mu = self.facets.len();
        let mut out = Vec::new();
        // every minimal non-face has at most n + 1 elements
        for size in 1..=(self.dim + 1).min(mu) {
            let all: Vec<usize> = (0..mu).collect();
            for combo in combinations(&all, size) {
                let set: BTreeSet<usize> = combo.iter().copied().collect();
                if self.is_face(&set) {
                    continue;
                }
                let minimal = combo.iter().all(|drop| {
                    let mut sub = set.clone();
                    sub.remove(drop);
                    self.is_face(&sub)
                });
                if minimal {
                    out.push(set);
                }
            }
        }
        out
    }

    /// Renames facets and vertices with a common prefix.
    pub fn relabeled(mut self, prefix: &str) -> Self {
        for f in self.facets.iter_mut() {
            *f = format!("{prefix}{f}");
        }
        for v in self.vertices.iter_mut() {
            *v = format!("{prefix}{v}");
        }
        self
    }

    /// Cartesian product; facets of `self` come first.
    pub fn product(&self, other: &SimplePolytope) -> Result<SimplePolytope, PolytopeError> {
        let offset = self.facets.len();
        let clash = self.facets.iter().any(|f| other.facets.contains(f));
        let mut facets: Vec<String> = if clash {
            self.facets.iter().map(|f| format!("a.{f}")).collect()
        } else {
            self.facets.clone()
        };
        facets.extend(other.facets.iter().map(
            |f| {
                if clash {
                    format!("b.{f}")
                } else {
                    f.clone()
                }
            },
        ));
        let mut rows = Vec::new();
        let mut coords = Vec::new();
        for (a, sa) in self.vertices.iter().zip(&self.incidence) {
            for (b, sb) in other.vertices.iter().zip(&other.incidence) {
                let mut s: Vec<String> = sa.iter().map(|&i| facets[i].clone()).collect();
                s.extend(sb.iter().map(|&i| facets[offset + i].clone()));
                let name = match (a.is_empty(), b.is_empty()) {
                    (_, true) => a.clone(),
                    (true, _) => b.clone(),
                    _ => format!("{a}|{b}"),
                };
                rows.push((name, s));
            }
        }
        if let (Some(ca), Some(cb)) = (&self.coordinates, &other.coordinates) {
            for pa in ca {
                for pb in cb {
                    let mut p = pa.clone();
                    p.extend(pb.iter().cloned());
                    coords.push(p);
                }
            }
        }
        let p = build_polytope(self.dim + other.dim, &facets, &rows)?;
        if coords.is_empty() && p.num_vertices() > 0 && p.dim > 0 {
            Ok(p)
        } else if coords.len() == p.num_vertices() {
            p.with_coordinates(coords)
        } else {
            Ok(p)
        }
    }

    /// Serializable incidence document.
    pub fn to_document(&self) -> PolytopeDocument {
        PolytopeDocument {
            dim: self.dim,
            facets: self.facets.clone(),
            vertices: self
                .vertices
                .iter()
                .zip(&self.incidence)
                .map(|(v, s)| {
                    (
                        v.clone(),
                        s.iter().map(|&i| self.facets[i].clone()).collect(),
                    )
                })
                .collect(),
            coordinates: None,
        }
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Validates an incidence table and builds the edge graph. Two vertices are
/// adjacent iff they share exactly `n - 1` facets.
pub fn build_polytope(
    n: usize,
    facets: &[String],
    vertices: &[(String, Vec<String>)],
) -> Result<SimplePolytope, PolytopeError> {
    if vertices.is_empty() {
        return Err(PolytopeError::Empty);
    }
    let mut facet_ix = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        if facet_ix.insert(f.as_str(), i).is_some() {
            return Err(PolytopeError::DuplicateFacet(f.clone()));
        }
    }
    if n >= 1 && facets.len() < n + 1 {
        return Err(PolytopeError::TooFewFacets {
            dim: n,
            found: facets.len(),
        });
    }
    let mut names = Vec::with_capacity(vertices.len());
    let mut incidence: Vec<BTreeSet<usize>> = Vec::with_capacity(vertices.len());
    let mut seen_names = BTreeSet::new();
    for (name, fs) in vertices {
        if !seen_names.insert(name.clone()) {
            return Err(PolytopeError::DuplicateVertex(name.clone()));
        }
        let mut set = BTreeSet::new();
        for f in fs {
            let &i = facet_ix
                .get(f.as_str())
                .ok_or_else(|| PolytopeError::UnknownFacet(f.clone()))?;
            set.insert(i);
        }
        if set.len() != n || fs.len() != n {
            return Err(PolytopeError::NotSimple {
                vertex: name.clone(),
                found: set.len().min(fs.len()).max(fs.len()),
                expected: n,
            });
        }
        if incidence.contains(&set) {
            return Err(PolytopeError::DuplicateVertex(name.clone()));
        }
        names.push(name.clone());
        incidence.push(set);
    }
    for (i, f) in facets.iter().enumerate() {
        if !incidence.iter().any(|s| s.contains(&i)) {
            return Err(PolytopeError::FacetWithoutVertex(f.clone()));
        }
    }

    let nv = names.len();
    let mut edges = Vec::new();
    let mut neighbors = vec![Vec::new(); nv];
    if n >= 1 {
        for a in 0..nv {
            for b in a + 1..nv {
                if incidence[a].intersection(&incidence[b]).count() == n - 1 {
                    edges.push((a, b));
                    neighbors[a].push(b);
                    neighbors[b].push(a);
                }
            }
        }
    }
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &neighbors[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(PolytopeError::Disconnected);
    }
    for (v, nb) in neighbors.iter().enumerate() {
        if nb.len() != n {
            return Err(PolytopeError::NotRegular {
                vertex: names[v].clone(),
                degree: nb.len(),
                expected: n,
            });
        }
    }
    Ok(SimplePolytope {
        dim: n,
        facets: facets.to_vec(),
        vertices: names,
        incidence,
        edges,
        neighbors,
        coordinates: None,
    })
}

/// JSON form: `{"dim": n, "facets": [...], "vertices": {"v": ["F1", ...]}}`,
/// optionally with `"coordinates": {"v": ["1/2", 0, ...]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeDocument {
    pub dim: usize,
    pub facets: Vec<String>,
    pub vertices: Vec<(String, Vec<String>)>,
    pub coordinates: Option<Vec<(String, Vec<String>)>>,
}

impl PolytopeDocument {
    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolytopeError> {
        let obj = value
            .as_object()
            .ok_or_else(|| PolytopeError::Parse("expected an object".into()))?;
        let dim = obj
            .get("dim")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| PolytopeError::Parse("missing integer \"dim\"".into()))?
            as usize;
        let facets = obj
            .get("facets")
            .and_then(|f| f.as_array())
            .ok_or_else(|| PolytopeError::Parse("missing \"facets\" array".into()))?
            .iter()
            .map(|f| {
                f.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| PolytopeError::Parse("facet names must be strings".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let vertices = string_list_map(obj.get("vertices"), "vertices")?;
        let coordinates = match obj.get("coordinates") {
            None | Some(serde_json::Value::Null) => None,
            Some(c) => Some(string_list_map(Some(c), "coordinates")?),
        };
        Ok(PolytopeDocument {
            dim,
            facets,
            vertices,
            coordinates,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut vertices = serde_json::Map::new();
        for (v, fs) in &self.vertices {
            vertices.insert(v.clone(), serde_json::json!(fs));
        }
        let mut doc = serde_json::json!({
            "dim": self.dim,
            "facets": self.facets,
            "vertices": vertices,
        });
        if let Some(coords) = &self.coordinates {
            let mut c = serde_json::Map::new();
            for (v, xs) in coords {
                c.insert(v.clone(), serde_json::json!(xs));
            }
            doc["coordinates"] = serde_json::Value::Object(c);
        }
        doc
    }

    pub fn build(&self) -> Result<SimplePolytope, PolytopeError> {
        let p = build_polytope(self.dim, &self.facets, &self.vertices)?;
        match &self.coordinates {
            None => Ok(p),
            Some(coords) => {
                let mut pts = vec![Vec::new(); p.num_vertices()];
                for (v, xs) in coords {
                    let i = p.vertex_index(v).ok_or_else(|| {
                        PolytopeError::Parse(format!("coordinates for unknown vertex {v}"))
                    })?;
                    pts[i] = xs
                        .iter()
                        .map(|x| parse_rational(x))
                        .collect::<Result<Vec<_>, _>>()?;
                }
                p.with_coordinates(pts)
            }
        }
    }
}

fn string_list_map(
    value: Option<&serde_json::Value>,
    what: &str,
) -> Result<Vec<(String, Vec<String>)>, PolytopeError> {
    let obj = value
        .and_then(|v| v.as_object())
        .ok_or_else(|| PolytopeError::Parse(format!("missing \"{what}\" object")))?;
    obj.iter()
        .map(|(k, v)| {
            let items = v
                .as_array()
                .ok_or_else(|| PolytopeError::Parse(format!("{what}.{k} must be an array")))?
                .iter()
                .map(|x| match x {
                    serde_json::Value::String(s) => Ok(s.clone()),
                    serde_json::Value::Number(n) => Ok(n.to_string()),
                    _ => Err(PolytopeError::Parse(format!("bad entry in {what}.{k}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((k.clone(), items))
        })
        .collect()
}

/// Parses `"3"`, `"-1/2"`.
pub fn parse_rational(s: &str) -> Result<Rational, PolytopeError> {
    let bad = || PolytopeError::Parse(format!("not a rational number: {s}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A total order on the vertices with every edge oriented toward its larger
/// endpoint.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexOrdering {
    /// vertices from smallest to largest
    order: Vec<usize>,
    position: Vec<usize>,
    /// (tail, head) with tail < head in the order
    oriented_edges: Vec<(usize, usize)>,
    functional: Option<Vec<Rational>>,
}

impl VertexOrdering {
    /// Uses an explicit total order, smallest first. The order must induce a
    /// unique local maximum on every face, as an order coming from a generic
    /// linear functional does.
    pub fn from_order(p: &SimplePolytope, order: Vec<usize>) -> Result<Self, PolytopeError> {
        let nv = p.num_vertices();
        let mut position = vec![usize::MAX; nv];
        for (pos, &v) in order.iter().enumerate() {
            if v >= nv || position[v] != usize::MAX {
                return Err(PolytopeError::DimensionMismatch(
                    "order must be a permutation of the vertices".into(),
                ));
            }
            position[v] = pos;
        }
        if order.len() != nv {
            return Err(PolytopeError::DimensionMismatch(
                "order must list every vertex".into(),
            ));
        }
        let oriented_edges = p
            .edges()
            .iter()
            .map(|&(a, b)| {
                if position[a] < position[b] {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let ord = VertexOrdering {
            order,
            position,
            oriented_edges,
            functional: None,
        };
        ord.check_admissible(p)?;
        Ok(ord)
    }

    /// Orders vertices by the given vertex names, smallest first.
    pub fn from_names(p: &SimplePolytope, names: &[&str]) -> Result<Self, PolytopeError> {
        let order = names
            .iter()
            .map(|n| {
                p.vertex_index(n)
                    .ok_or_else(|| PolytopeError::Parse(format!("unknown vertex {n}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_order(p, order)
    }

    fn check_admissible(&self, p: &SimplePolytope) -> Result<(), PolytopeError> {
        for d in 1..=p.dim() {
            for face in p.faces_of_dim(d) {
                let verts = p.face_vertices(&face);
                let maxima = verts
                    .iter()
                    .filter(|&&v| {
                        !p.neighbors(v)
                            .iter()
                            .any(|w| verts.contains(w) && self.position[*w] > self.position[v])
                    })
                    .count();
                if maxima != 1 {
                    return Err(PolytopeError::OrderNotAdmissible {
                        face: face.iter().map(|&i| p.facet_names()[i].clone()).collect(),
                        maxima,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn oriented_edges(&self) -> &[(usize, usize)] {
        &self.oriented_edges
    }

    pub fn functional(&self) -> Option<&[Rational]> {
        self.functional.as_deref()
    }

    /// Number of edges pointing into `v`.
    pub fn index(&self, v: usize) -> usize {
        self.oriented_edges.iter().filter(|&&(_, h)| h == v).count()
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.position.len()).map(|v| self.index(v)).collect()
    }
}

/// Orients edges by a linear functional evaluated on the vertex coordinates.
/// Ties between adjacent vertices are rejected; ties between non-adjacent
/// vertices do not affect any index and are broken by vertex position.
pub fn orient_edges(
    p: &SimplePolytope,
    functional: &[Rational],
) -> Result<VertexOrdering, PolytopeError> {
    if p.num_vertices() == 1 {
        let mut ord = VertexOrdering::from_order(p, vec![0])?;
        ord.functional = Some(functional.to_vec());
        return Ok(ord);
    }
    let coords = p.coordinates().ok_or(PolytopeError::NoCoordinates)?;
    if functional.len() != p.dim() {
        return Err(PolytopeError::DimensionMismatch(format!(
            "functional has {} entries, polytope dimension is {}",
            functional.len(),
            p.dim()
        )));
    }
    let values: Vec<Rational> = coords
        .iter()
        .map(|x| {
            x.iter()
                .zip(functional)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect();
    for &(a, b) in p.edges() {
        if values[a] == values[b] {
            return Err(PolytopeError::DegenerateFunctional(
                p.vertex_names()[a].clone(),
                p.vertex_names()[b].clone(),
            ));
        }
    }
    let mut order: Vec<usize> = (0..p.num_vertices()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
    let mut ord = VertexOrdering::from_order(p, order)?;
    ord.functional = Some(functional.to_vec());
    Ok(ord)
}

/// `h_i` = number of vertices of index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<usize>);

impl HVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let h = &self.0;
        (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn h_vector(p: &SimplePolytope, ord: &VertexOrdering) -> HVector {
    let mut h = vec![0; p.dim() + 1];
    for v in 0..p.num_vertices() {
        h[ord.index(v)] += 1;
    }
    HVector(h)
}

/// A functional that is generic for the built-in generators: powers of a
/// base larger than any coordinate spread.
pub fn default_functional(p: &SimplePolytope) -> Vec<Rational> {
    let mut f = Vec::with_capacity(p.dim());
    let mut w = Rational::one();
    let base = Rational::from_integer(num_bigint::BigInt::from(7));
    for _ in 0..p.dim() {
        f.push(w.clone());
        w = w * base.clone();
    }
    // a slight skew keeps symmetric generators generic
    f.reverse();
    f
}

/// Orders vertices of `p` by its coordinates when present, otherwise takes
/// the first admissible order among a few deterministic candidates.
pub fn default_ordering(p: &SimplePolytope) -> Result<VertexOrdering, PolytopeError> {
    if p.coordinates().is_some() || p.num_vertices() == 1 {
        return orient_edges(p, &default_functional(p));
    }
    // breadth-first order from vertex 0 is admissible for many small inputs
    let mut order: Vec<usize> = Vec::new();
    let mut seen = vec![false; p.num_vertices()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in p.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    VertexOrdering::from_order(p, order)
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(v))
}

/// The point: dimension 0, no facets, one vertex.
pub fn point() -> SimplePolytope {
    build_polytope(0, &[], &[(String::new(), Vec::new())])
        .expect("point is valid")
        .with_coordinates(vec![Vec::new()])
        .expect("point coordinates")
}

/// The standard simplex with vertices `0, e_1, ..., e_n`. Facet `F_i`
/// (`i <= n`) is `x_i = 0`, and `F_{n+1}` is `x_1 + ... + x_n = 1`.
pub fn simplex(n: usize) -> SimplePolytope {
    if n == 0 {
        return point();
    }
    let facets: Vec<String> = (1..=n + 1).map(|i| format!("F{i}")).collect();
    let mut rows = Vec::new();
    let mut coords = Vec::new();
    rows.push(("v0".to_string(), (1..=n).map(|i| format!("F{i}")).collect()));
    coords.push(vec![rat(0); n]);
    for k in 1..=n {
        let fs = (1..=n + 1)
            .filter(|&i| i != k)
            .map(|i| format!("F{i}"))
            .collect();
        rows.push((format!("v{k}"), fs));
        let mut x = vec![rat(0); n];
        x[k - 1] = rat(1);
        coords.push(x);
    }
    build_polytope(n, &facets, &rows)
        .expect("simplex is valid")
        .with_coordinates(coords)
        .expect("simplex coordinates")
}

/// The cube `[0,1]^n`: `F_i` is `x_i = 0`, `F_{n+i}` is `x_i = 1`.
pub fn cube(n: usize) -> SimplePolytope {
    if n == 0 {
        return point();
    }
    let facets: Vec<String> = (1..=2 * n).map(|i| format!("F{i}")).collect();
    let mut rows = Vec::new();
    let mut coords = Vec::new();
    for bits in 0..(1u32 << n) {
        let x: Vec<u32> = (0..n).map(|i| (bits >> i) & 1).collect();
        let name = format!("v{}", x.iter().map(|b| b.to_string()).collect::<String>());
        let fs = x
            .iter()
            .enumerate()
            .map(|(i, &b)| format!("F{}", if b == 0 { i + 1 } else { n + i + 1 }))
            .collect();
        rows.push((name, fs));
        coords.push(x.iter().map(|&b| rat(i64::from(b))).collect());
    }
    build_polytope(n, &facets, &rows)
        .expect("cube is valid")
        .with_coordinates(coords)
        .expect("cube coordinates")
}

/// The square with facets labelled cyclically: `F1` bottom, `F2` right,
/// `F3` top, `F4` left.
pub fn square() -> SimplePolytope {
    let facets: Vec<String> = (1..=4).map(|i| format!("F{i}")).collect();
    let rows = vec![
        ("v00".to_string(), vec!["F1".to_string(), "F4".to_string()]),
        ("v10".to_string(), vec!["F1".to_string(), "F2".to_string()]),
        ("v11".to_string(), vec!["F2".to_string(), "F3".to_string()]),
        ("v01".to_string(), vec!["F3".to_string(), "F4".to_string()]),
    ];
    let coords = vec![
        vec![rat(0), rat(0)],
        vec![rat(1), rat(0)],
        vec![rat(1), rat(1)],
        vec![rat(0), rat(1)],
    ];
    build_polytope(2, &facets, &rows)
        .expect("square is valid")
        .with_coordinates(coords)
        .expect("square coordinates")
}

/// Triangular prism. Bottom triangle `v0 v1 v3` (facet `B`), top triangle
/// `v2 v4 v5` (facet `T`), lateral edges `v0v2`, `v1v4`, `v3v5`, and square
/// facets `S1` (y = 0), `S2` (x = 0), `S3` (x + y = 1).
pub fn prism() -> SimplePolytope {
    let facets: Vec<String> = ["S1", "S2", "S3", "B", "T"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let v = |name: &str, fs: &[&str]| {
        (
            name.to_string(),
            fs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        )
    };
    let rows = vec![
        v("v0", &["S1", "S2", "B"]),
        v("v1", &["S1", "S3", "B"]),
        v("v2", &["S1", "S2", "T"]),
        v("v3", &["S2", "S3", "B"]),
        v("v4", &["S1", "S3", "T"]),
        v("v5", &["S2", "S3", "T"]),
    ];
    let coords = vec![
        vec![rat(0), rat(0), rat(0)],
        vec![rat(1), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(1)],
        vec![rat(0), rat(1), rat(0)],
        vec![rat(1), rat(0), rat(1)],
        vec![rat(0), rat(1), rat(1)],
    ];
    build_polytope(3, &facets, &rows)
        .expect("prism is valid")
        .with_coordinates(coords)
        .expect("prism coordinates")
}

/// Built-in generator by name: `point`, `square`, `prism`, `simplexN`, `cubeN`.
pub fn named(name: &str) -> Option<SimplePolytope> {
    match name {
        "point" => Some(point()),
        "square" => Some(square()),
        "prism" => Some(prism()),
        _ => {
            if let Some(n) = name.strip_prefix("simplex") {
                n.parse().ok().map(simplex)
            } else if let Some(n) = name.strip_prefix("cube") {
                n.parse().ok().map(cube)
            } else {
                None
            }
        }
    }
}
