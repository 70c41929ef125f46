//! Command-line front end for `torprod`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use torprod::charfn::{self, CharFunction};
use torprod::fields::{self, FieldFamily, InvolutionSpec};
use torprod::graded::first_pontryagin;
use torprod::invariants;
use torprod::polytope::{
    self, default_ordering, h_vector, orient_edges, parse_rational, PolytopeDocument,
    SimplePolytope,
};
use torprod::projprod::BettiField;
use torprod::space::{self, Family, Fibre, SpaceDescriptor, SpaceError};
use torprod::span;

pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug)]
#[command(
    name = "torprod",
    version,
    about = "Invariants of generalized projective product spaces"
)]
pub struct Cli {
    /// Also write a machine-readable report here.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// h-vector of a polytope, or of the fibre polytope of a space.
    Hvector {
        #[command(flatten)]
        space: SpaceArgs,
        /// Comma-separated rational functional, e.g. `3,1,1/2`.
        #[arg(long)]
        functional: Option<String>,
    },
    /// Poincare polynomial over F2, Q or Fp (p odd).
    Cohomology {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "F2")]
        ring: String,
        #[arg(long)]
        basis: bool,
    },
    /// Integral homology from the cellular complex.
    Homology {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Total Stiefel-Whitney class.
    SwClass {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// First Pontryagin class of the toric fibre.
    Pontryagin {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Euler characteristic.
    Euler {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Span bounds and stable parallelizability.
    Span {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Verify an explicit family of equivariant vector fields.
    VerifyFields {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        /// number of CP^1 factors for thm65
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Defaults to TORPROD_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Every applicable computation.
    All {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Linear,
    Thm63,
    Thm65,
    Thm63Corrupted,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "PPS", alias = "pps")]
    Pps,
    #[value(name = "PT", alias = "pt")]
    Pt,
    #[value(name = "PS", alias = "ps")]
    Ps,
}

#[derive(Args, Debug, Default, Clone)]
pub struct SpaceArgs {
    /// Built-in fixture name.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Parameter of the `square-r` fixture.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    /// JSON descriptor file.
    #[arg(long)]
    pub descriptor: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Sphere dimensions, e.g. `2,4`.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    /// PPS fibre pairs `n:p`, e.g. `6:2,4:1`.
    #[arg(long, value_delimiter = ',')]
    pub np: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    pub cp: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub rp: Vec<usize>,
    /// Built-in polytope (`square`, `prism`, `simplexN`, `cubeN`) or a JSON file.
    #[arg(long)]
    pub polytope: Option<String>,
    /// Characteristic function JSON file, or `hirzebruch:R`, `connected-sum`,
    /// `prism`, `standard`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

/// Outcome of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Value>,
}

#[derive(Debug)]
pub enum Failure {
    Hypothesis(String),
    Other(String),
}

impl From<SpaceError> for Failure {
    fn from(e: SpaceError) -> Self {
        if e.is_hypothesis() {
            Failure::Hypothesis(e.to_string())
        } else {
            Failure::Other(e.to_string())
        }
    }
}

fn other<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Other(e.to_string())
}

fn load_polytope(spec: &str) -> Result<SimplePolytope, Failure> {
    if let Some(p) = polytope::named(spec) {
        return Ok(p);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::Other(format!("{spec}: {e}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Other(format!("{spec}: {e}")))?;
    PolytopeDocument::from_json(&v)
        .and_then(|d| d.build())
        .map_err(other)
}

fn load_lambda(spec: &str, p: &SimplePolytope) -> Result<CharFunction, Failure> {
    if let Some(r) = spec.strip_prefix("hirzebruch:") {
        let r: i64 = r
            .parse()
            .map_err(|_| Failure::Other(format!("bad r in {spec}")))?;
        return Ok(charfn::square_hirzebruch(r));
    }
    match spec {
        "connected-sum" => return Ok(charfn::square_connected_sum()),
        "prism" => return Ok(charfn::prism_standard()),
        "standard" => {
            if p.num_facets() == p.dim() + 1 {
                return Ok(charfn::simplex_standard(p.dim()));
            }
            return Err(Failure::Other("`standard` needs a simplex".into()));
        }
        _ => {}
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::Other(format!("{spec}: {e}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Other(format!("{spec}: {e}")))?;
    CharFunction::from_json(p, &v).map_err(|e| SpaceError::from(e).into())
}

fn parse_pair(s: &str) -> Result<(usize, usize), Failure> {
    let (n, p) = s
        .split_once(':')
        .ok_or_else(|| Failure::Other(format!("fibre pair `{s}` must look like n:p")))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| Failure::Other(format!("bad n in `{s}`")))?;
    let p = p
        .trim()
        .parse()
        .map_err(|_| Failure::Other(format!("bad p in `{s}`")))?;
    Ok((n, p))
}

impl SpaceArgs {
    fn is_empty(&self) -> bool {
        self.fixture.is_none() && self.descriptor.is_none() && self.family.is_none()
    }

    pub fn descriptor(&self) -> Result<SpaceDescriptor, Failure> {
        let sources = [
            self.fixture.is_some(),
            self.descriptor.is_some(),
            self.family.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if sources != 1 {
            return Err(Failure::Other(
                "give exactly one of --fixture, --descriptor or --family".into(),
            ));
        }
        if let Some(name) = &self.fixture {
            return Ok(space::fixture(name, self.r)?);
        }
        if let Some(path) = &self.descriptor {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
            return Ok(SpaceDescriptor::from_json(&v)?);
        }
        let m = self.m.clone();
        if m.is_empty() {
            return Err(Failure::Other("--m is required with --family".into()));
        }
        let fibre = || -> Result<Fibre, Failure> {
            if let Some(ps) = &self.polytope {
                let p = load_polytope(ps)?;
                let lspec = self
                    .lambda
                    .as_deref()
                    .ok_or_else(|| Failure::Other("--lambda is required with --polytope".into()))?;
                let lambda = load_lambda(lspec, &p)?;
                Ok(Fibre::Polytope {
                    polytope: p,
                    lambda,
                })
            } else {
                let ns = if self.cp.is_empty() {
                    &self.rp
                } else {
                    &self.cp
                };
                Ok(if ns.is_empty() {
                    Fibre::Point
                } else {
                    Fibre::Projective(ns.clone())
                })
            }
        };
        Ok(match self.family.unwrap() {
            FamilyArg::Pps => SpaceDescriptor::Pps {
                m,
                fibres: self
                    .np
                    .iter()
                    .map(|s| parse_pair(s))
                    .collect::<Result<_, _>>()?,
            },
            FamilyArg::Pt => {
                if !self.rp.is_empty() {
                    return Err(Failure::Other("--rp is not valid for PT".into()));
                }
                SpaceDescriptor::Pt { m, fibre: fibre()? }
            }
            FamilyArg::Ps => {
                if !self.cp.is_empty() {
                    return Err(Failure::Other("--cp is not valid for PS".into()));
                }
                SpaceDescriptor::Ps { m, fibre: fibre()? }
            }
        })
    }
}

fn seed_from_env(explicit: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var("TORPROD_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Other(format!(
                "TORPROD_SEED must be an unsigned integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn parse_ring(s: &str) -> Result<Option<BettiField>, Failure> {
    match s {
        "F2" | "f2" | "Z2" => Ok(None),
        "Q" | "q" => Ok(Some(BettiField::Q)),
        _ => {
            let p: u64 = s
                .strip_prefix('F')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Failure::Other(format!("unknown ring {s}; use F2, Q or Fp")))?;
            let prime = p > 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
            if !prime {
                return Err(Failure::Other(format!("F{p}: p must be an odd prime")));
            }
            Ok(Some(BettiField::Fp(p)))
        }
    }
}

fn poincare_string(dims: &[usize]) -> String {
    let mut terms = Vec::new();
    for (t, &d) in dims.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let mono = match t {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{t}"),
        };
        terms.push(match (d, mono.is_empty()) {
            (_, true) => d.to_string(),
            (1, false) => mono,
            (_, false) => format!("{d}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

type Section = Result<(String, Value), Failure>;

fn do_hvector(space: &SpaceArgs, functional: Option<&str>) -> Section {
    let p = if let (Some(ps), true) = (&space.polytope, space.is_empty()) {
        load_polytope(ps)?
    } else {
        space.descriptor()?.materialize()?.0
    };
    let ord = match functional {
        Some(f) => {
            let vals = f
                .split(',')
                .map(|x| parse_rational(x.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(other)?;
            orient_edges(&p, &vals).map_err(other)?
        }
        None => default_ordering(&p).map_err(other)?,
    };
    let h = h_vector(&p, &ord);
    Ok((
        format!("{h}\n"),
        json!({"h": h.0, "f": p.f_vector(), "vertices": p.num_vertices()}),
    ))
}

fn do_cohomology(d: &SpaceDescriptor, ring: &str, basis: bool) -> Section {
    let report = match parse_ring(ring)? {
        None => invariants::mod2_cohomology(d, basis)?,
        Some(field) => invariants::betti_report(d, field)?,
    };
    let mut out = format!("ring: {}\n", report.ring);
    let _ = writeln!(out, "poincare: {}", poincare_string(&report.dims));
    let _ = writeln!(out, "dims: {}", join(&report.dims));
    let _ = writeln!(out, "total: {}", report.total);
    if let Some(b) = &report.basis {
        for (deg, names) in b.iter().enumerate() {
            if !names.is_empty() {
                let _ = writeln!(out, "  H^{deg}: {}", names.join(", "));
            }
        }
    }
    Ok((out, serde_json::to_value(&report).map_err(other)?))
}

fn do_homology(d: &SpaceDescriptor, dump: bool) -> Section {
    let (c, report) = invariants::integral_homology(d)?;
    let mut out = String::new();
    let _ = writeln!(out, "cells: {}", join(&report.cells));
    for (i, g) in report.homology.iter().enumerate() {
        let _ = writeln!(out, "H_{i} = {g}");
    }
    for (i, g) in report.cohomology.iter().enumerate() {
        let _ = writeln!(out, "H^{i} = {g}");
    }
    let _ = writeln!(out, "euler: {}", report.euler);
    let mut v = serde_json::to_value(&report).map_err(other)?;
    if dump {
        let mats = c.sparse_boundaries();
        for (k, entries) in mats.iter().enumerate() {
            let _ = writeln!(out, "d_{}: {} nonzero", k + 1, entries.len());
            for (r, col, x) in entries {
                let _ = writeln!(out, "  ({r}, {col}) = {x}");
            }
        }
        v["boundaries"] = json!(mats);
    }
    Ok((out, v))
}

fn do_sw(d: &SpaceDescriptor) -> Section {
    let w = invariants::total_sw(d)?;
    let out = format!(
        "W = {}\ntruncation: {}\n{}\n",
        w.class,
        w.truncation.join(", "),
        if w.is_one { "W = 1" } else { "W != 1" }
    );
    Ok((out, serde_json::to_value(&w).map_err(other)?))
}

fn do_pontryagin(d: &SpaceDescriptor) -> Section {
    if d.family() != Family::Pt {
        return Err(Failure::Other(
            "pontryagin needs a PT space (toric fibre)".into(),
        ));
    }
    d.validate()?;
    let (p, l) = d.materialize()?;
    let (g, pont) = first_pontryagin(&p, &l).map_err(SpaceError::from)?;
    let status = if pont.is_zero { "zero" } else { "nonzero" };
    let sub = pont.substituted.render("x");
    let nf = g.render_class(&pont.class, "x");
    let out = format!("p1 = {sub} ({status})\nnormal form: {nf}\n");
    Ok((
        out,
        json!({
            "substituted": sub,
            "normal_form": nf,
            "is_zero": pont.is_zero,
            "class": g.class_json(&pont.class, "x"),
        }),
    ))
}

fn do_euler(d: &SpaceDescriptor) -> Section {
    let chi = span::euler_characteristic(d)?;
    Ok((format!("{chi}\n"), json!({"euler": chi})))
}

fn do_span(d: &SpaceDescriptor) -> Section {
    let r = span::span_bounds(d)?;
    let mut out = String::new();
    let _ = writeln!(out, "dim: {}", r.dim);
    let _ = writeln!(out, "euler: {}", r.euler);
    let _ = writeln!(out, "span >= {}", r.span_lower);
    for b in &r.lower_bounds {
        let _ = writeln!(out, "  {} [{}]", b.value, b.tag);
    }
    if let Some(c) = &r.cited_lower {
        let _ = writeln!(out, "  {} [{}]", c.value, c.tag);
    }
    let _ = writeln!(out, "span <= {}", r.span_upper);
    let _ = writeln!(out, "stasp = span: {}", r.stasp_equals_span);
    let _ = writeln!(out, "stably parallelizable: {}", r.stably_parallelizable);
    Ok((out, serde_json::to_value(&r).map_err(other)?))
}

fn family_for(
    kind: FamilyKind,
    m: usize,
    n: usize,
    p: usize,
    l: usize,
) -> Result<(FieldFamily, InvolutionSpec), Failure> {
    let hyp = |e: fields::FieldError| Failure::Hypothesis(e.to_string());
    match kind {
        FamilyKind::Linear => Ok((
            fields::linear_sphere_fields(m),
            InvolutionSpec::new(vec![0]),
        )),
        FamilyKind::Thm63 => fields::thm63_family(m, n, p).map_err(hyp),
        FamilyKind::Thm65 => fields::thm65_family(m, l).map_err(hyp),
        FamilyKind::Thm63Corrupted => {
            let f = fields::build_fields_thm63_corrupted(&fields::linear_sphere_fields(m), n, p)
                .map_err(hyp)?;
            Ok((f, InvolutionSpec::new(vec![0, p])))
        }
    }
}

fn render_verification(rep: &fields::VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", rep.family);
    let _ = writeln!(out, "fields: {}", rep.fields);
    let _ = writeln!(out, "trials: {} (seed {})", rep.trials, rep.seed);
    let ok = |b: bool| if b { "pass" } else { "FAIL" };
    let _ = writeln!(out, "tangency: {}", ok(rep.tangency_ok));
    let _ = writeln!(out, "rank: {}", ok(rep.rank_ok));
    let _ = writeln!(out, "equivariance: {}", ok(rep.equivariance_ok));
    for f in rep.failures.iter().take(5) {
        let pt: Vec<String> = f
            .point
            .iter()
            .map(|v| format!("({})", v.join(",")))
            .collect();
        let _ = writeln!(
            out,
            "  trial {}: {} failed{} at {}",
            f.trial,
            f.check,
            f.field
                .map(|i| format!(" for field {}", i + 1))
                .unwrap_or_default(),
            pt.join(" x ")
        );
    }
    out
}

fn do_verify(
    kind: FamilyKind,
    m: usize,
    n: usize,
    p: usize,
    l: usize,
    trials: usize,
    seed: Option<u64>,
) -> Section {
    let seed = seed_from_env(seed)?;
    let (f, inv) = family_for(kind, m, n, p, l)?;
    let mut rep = fields::verify_family(&f, &inv, trials, seed);
    let mut out = String::new();
    let mut extra = Value::Null;
    if kind == FamilyKind::Thm63Corrupted {
        let witness = fields::corrupted_witness(m, n);
        let fails = fields::check_point(&f, &inv, &witness, trials);
        let _ = writeln!(
            out,
            "witness (e_1, e_{}): {}",
            n + 1,
            if fails.iter().any(|x| x.check == "rank") {
                "rank fails"
            } else {
                "rank holds"
            }
        );
        extra = json!(fails);
        rep.rank_ok &= fails.iter().all(|x| x.check != "rank");
    }
    out = render_verification(&rep) + &out;
    let mut v = serde_json::to_value(&rep).map_err(other)?;
    v["passed"] = json!(rep.passed());
    if !extra.is_null() {
        v["witness_failures"] = extra;
    }
    Ok((out, v))
}

/// Field family backing the best constructive span bound, if any.
fn family_for_space(d: &SpaceDescriptor) -> Option<(FamilyKind, usize, usize, usize, usize)> {
    match d {
        SpaceDescriptor::Pps { m, fibres }
            if m.len() == 1 && fibres.len() == 1 && m[0] % 2 == 1 =>
        {
            Some((FamilyKind::Thm63, m[0], fibres[0].0, fibres[0].1, 1))
        }
        SpaceDescriptor::Pt {
            m,
            fibre: Fibre::Projective(ns),
        } if m.len() == 1 && m[0] % 2 == 1 && !ns.is_empty() && ns.iter().all(|&n| n == 1) => {
            Some((FamilyKind::Thm65, m[0], 1, 1, ns.len()))
        }
        _ => None,
    }
}

fn do_all(d: &SpaceDescriptor, trials: usize, seed: Option<u64>) -> Section {
    d.validate()?;
    let mut out = format!("space: {}\n", d.label());
    let mut report = serde_json::Map::new();
    report.insert("space".into(), d.to_json());
    let mut section = |name: &str, s: Section, out: &mut String| -> Result<(), Failure> {
        let _ = writeln!(out, "== {name}");
        match s {
            Ok((text, v)) => {
                out.push_str(&text);
                report.insert(name.into(), v);
            }
            Err(Failure::Hypothesis(msg)) | Err(Failure::Other(msg)) => {
                let _ = writeln!(out, "unavailable: {msg}");
                report.insert(name.into(), json!({"unavailable": msg}));
            }
        }
        Ok(())
    };
    if d.family() != Family::Pps {
        let hv = d.materialize().map_err(Failure::from).and_then(|(p, _)| {
            let h = h_vector(&p, &default_ordering(&p).map_err(other)?);
            Ok((
                format!("{h}\n"),
                json!({"h": h.0, "f": p.f_vector(), "vertices": p.num_vertices()}),
            ))
        });
        section("hvector", hv, &mut out)?;
    }
    section("cohomology F2", do_cohomology(d, "F2", true), &mut out)?;
    section("cohomology Q", do_cohomology(d, "Q", false), &mut out)?;
    if d.family() == Family::Pt {
        section("homology", do_homology(d, false), &mut out)?;
        section("pontryagin", do_pontryagin(d), &mut out)?;
    }
    section("sw-class", do_sw(d), &mut out)?;
    section("euler", do_euler(d), &mut out)?;
    section("span", do_span(d), &mut out)?;
    if let Some((kind, m, n, p, l)) = family_for_space(d) {
        section(
            "verify-fields",
            do_verify(kind, m, n, p, l, trials, seed),
            &mut out,
        )?;
    }
    Ok((out, Value::Object(report)))
}

/// Runs one parsed invocation without touching the process state beyond the
/// optional thread pool and JSON file.
pub fn run(cli: &Cli) -> Outcome {
    let (command, result) = match &cli.command {
        Command::Hvector { space, functional } => {
            ("hvector", do_hvector(space, functional.as_deref()))
        }
        Command::Cohomology { space, ring, basis } => (
            "cohomology",
            space
                .descriptor()
                .and_then(|d| do_cohomology(&d, ring, *basis)),
        ),
        Command::Homology {
            space,
            dump_matrices,
        } => (
            "homology",
            space
                .descriptor()
                .and_then(|d| do_homology(&d, *dump_matrices)),
        ),
        Command::SwClass { space } => ("sw-class", space.descriptor().and_then(|d| do_sw(&d))),
        Command::Pontryagin { space } => (
            "pontryagin",
            space.descriptor().and_then(|d| do_pontryagin(&d)),
        ),
        Command::Euler { space } => ("euler", space.descriptor().and_then(|d| do_euler(&d))),
        Command::Span { space } => ("span", space.descriptor().and_then(|d| do_span(&d))),
        Command::VerifyFields {
            family,
            m,
            n,
            p,
            l,
            trials,
            seed,
        } => (
            "verify-fields",
            do_verify(*family, *m, *n, *p, *l, *trials, *seed),
        ),
        Command::All {
            space,
            trials,
            seed,
        } => (
            "all",
            space.descriptor().and_then(|d| do_all(&d, *trials, *seed)),
        ),
    };
    match result {
        Ok((stdout, value)) => {
            let report = json!({"command": command, "result": value});
            if let Some(path) = &cli.json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    return Outcome {
                        code: 1,
                        stdout,
                        stderr: format!("error: {}: {e}\n", path.display()),
                        report: Some(report),
                    };
                }
            }
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
                report: Some(report),
            }
        }
        Err(Failure::Hypothesis(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            report: None,
        },
        Err(Failure::Other(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            report: None,
        },
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { 1 } else { 0 },
            stdout: if e.use_stderr() {
                String::new()
            } else {
                e.to_string()
            },
            stderr: if e.use_stderr() {
                e.to_string()
            } else {
                String::new()
            },
            report: None,
        },
    }
}
