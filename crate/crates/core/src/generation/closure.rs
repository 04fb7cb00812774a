//! Submodule closure inside a truncated degree box.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Handle, Tracer};
use crate::divfield::{self, VectorField};
use crate::error::{Error, Result};
use crate::fmodule::{self, Degree, GradedSubspace, GradedVector, ModuleSpec};
use crate::linalg::Rref;
use crate::rational::{self, Rational};

/// Closure runs on `|n - center|_inf <= outer_radius`; verdicts read
/// `|n - center|_inf <= inner_radius` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationBox {
    pub outer_radius: i64,
    pub inner_radius: i64,
    pub center: Vec<i64>,
}

impl TruncationBox {
    pub fn new(outer_radius: i64, inner_radius: i64, center: Vec<i64>) -> Result<Self> {
        if inner_radius < 0 || inner_radius > outer_radius {
            return Err(Error::Precondition(format!(
                "need 0 <= inner radius <= outer radius, got {inner_radius} and {outer_radius}"
            )));
        }
        Ok(Self {
            outer_radius,
            inner_radius,
            center,
        })
    }

    /// `B_out = 4`, `B_in = 2`, centred at 0.
    pub fn standard(rank: usize) -> Self {
        Self {
            outer_radius: 4,
            inner_radius: 2,
            center: vec![0; rank + 1],
        }
    }

    fn distance(&self, n: &[i64]) -> i64 {
        n.iter()
            .zip(&self.center)
            .map(|(a, c)| (a - c).abs())
            .max()
            .unwrap_or(0)
    }

    pub fn in_outer(&self, n: &[i64]) -> bool {
        n.len() == self.center.len() && self.distance(n) <= self.outer_radius
    }

    pub fn in_inner(&self, n: &[i64]) -> bool {
        n.len() == self.center.len() && self.distance(n) <= self.inner_radius
    }

    pub fn inner_degrees(&self) -> Vec<Degree> {
        self.degrees(self.inner_radius)
    }

    pub fn outer_degrees(&self) -> Vec<Degree> {
        self.degrees(self.outer_radius)
    }

    fn degrees(&self, radius: i64) -> Vec<Degree> {
        divfield::lattice_box(self.center.len(), radius)
            .into_iter()
            .map(|d| d.iter().zip(&self.center).map(|(a, c)| a + c).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FillsModule,
    FillsKnownSubmodule,
    FillsQuotientPattern,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FillsModule => "fills-module",
            Verdict::FillsKnownSubmodule => "fills-known-submodule",
            Verdict::FillsQuotientPattern => "fills-quotient-pattern",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSummary {
    #[serde(rename = "N")]
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub sigma: Vec<String>,
    pub dim: usize,
    pub wedge_degree: Option<usize>,
}

impl SpecSummary {
    pub fn of(spec: &ModuleSpec) -> Self {
        Self {
            rank: spec.rank(),
            lambda: spec.lambda().0.clone(),
            sigma: spec.sigma().iter().map(rational::format).collect(),
            dim: spec.dim(),
            wedge_degree: spec.wedge_degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRank {
    pub n: Vec<i64>,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub spec: SpecSummary,
    pub seeds: String,
    #[serde(rename = "box")]
    pub bounds: TruncationBox,
    #[serde(rename = "R")]
    pub generator_radius: i64,
    pub generators: usize,
    pub iterations: usize,
    pub accepted: usize,
    /// Sum of inner-box ranks after the seeds and after each iteration.
    pub inner_rank_history: Vec<usize>,
    /// `"W"` or `"W~"` when the verdict is `fills-known-submodule`.
    pub pattern: Option<String>,
    pub degrees: Vec<DegreeRank>,
    pub verdict: Verdict,
}

/// Everything a closure run produces.
pub struct ClosureOutcome {
    pub report: ClosureReport,
    pub subspace: GradedSubspace,
    /// Inner-box ranks (in `inner_degrees` order) after the seeds and after each iteration.
    pub rank_history: Vec<Vec<usize>>,
    /// Derivation of every accepted vector from the seeds.
    pub certificate: Certificate,
}

pub fn closure(spec: &ModuleSpec, seeds: &[GradedVector], bounds: &TruncationBox, radius: i64) -> Result<ClosureOutcome> {
    let generators = divfield::generators(spec.rank(), radius);
    let mut out = closure_with_generators(spec, seeds, bounds, &generators)?;
    out.report.generator_radius = radius;
    Ok(out)
}

/// Fixed point of "apply every generator to every accepted vector". A
/// generator is skipped when its shift leaves the outer box or the target
/// fiber is already full; results are inserted in generator order.
pub fn closure_with_generators(
    spec: &ModuleSpec,
    seeds: &[GradedVector],
    bounds: &TruncationBox,
    generators: &[VectorField],
) -> Result<ClosureOutcome> {
    if seeds.is_empty() {
        return Err(Error::Precondition("closure needs at least one seed".into()));
    }
    if bounds.center.len() != spec.rank() + 1 {
        return Err(Error::RankMismatch(format!(
            "box centre has {} coordinates, expected {}",
            bounds.center.len(),
            spec.rank() + 1
        )));
    }
    for s in seeds {
        if s.is_zero() {
            return Err(Error::Precondition("seed vectors must be nonzero".into()));
        }
        if let Some(n) = s.support().keys().find(|n| !bounds.in_outer(n)) {
            return Err(Error::Precondition(format!("seed degree {n:?} lies outside the outer box")));
        }
    }
    let operators = generators
        .iter()
        .map(|f| spec.field_operator(f))
        .collect::<Result<Vec<_>>>()?;
    let inner = bounds.inner_degrees();
    let dim = spec.dim();

    let mut tracer = Tracer::new(spec);
    let mut subspace = GradedSubspace::new(dim);
    let mut accepted: Vec<(Degree, Handle)> = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds {
        let h = tracer.input(s.clone())?;
        for c in homogeneous_components(&mut tracer, h)? {
            let (n, v) = single(tracer.value(c));
            if subspace.insert(&n, v) {
                accepted.push((n, c));
                frontier.push(accepted.len() - 1);
            }
        }
    }
    let snapshot = |sub: &GradedSubspace| -> Vec<usize> { inner.iter().map(|n| sub.rank_at(n)).collect() };
    let mut rank_history = vec![snapshot(&subspace)];
    let mut iterations = 0;
    while !frontier.is_empty() {
        iterations += 1;
        let mut next = Vec::new();
        for idx in frontier {
            let (n, h) = accepted[idx].clone();
            let v = tracer
                .value(h)
                .component(&n)
                .expect("accepted vectors are homogeneous")
                .clone();
            for op in &operators {
                let target: Degree = n.iter().zip(op.field().r()).map(|(a, b)| a + b).collect();
                if !bounds.in_outer(&target) || subspace.is_full_at(&target) {
                    continue;
                }
                let (t, image) = op.apply_homogeneous(spec, &n, &v);
                if image.iter().all(Zero::is_zero) || !subspace.insert(&t, image.clone()) {
                    continue;
                }
                let node = tracer.record_act(op, h, GradedVector::homogeneous(t.clone(), image));
                accepted.push((t, node));
                next.push(accepted.len() - 1);
            }
        }
        rank_history.push(snapshot(&subspace));
        frontier = next;
    }

    let (verdict, pattern) = classify(spec, &subspace, &inner)?;
    let degrees = inner
        .iter()
        .map(|n| DegreeRank {
            n: n.clone(),
            rank: subspace.rank_at(n),
            expected: dim,
        })
        .collect();
    let handles: Vec<Handle> = accepted.iter().map(|(_, h)| *h).collect();
    let report = ClosureReport {
        spec: SpecSummary::of(spec),
        seeds: format!("{} seed vector(s)", seeds.len()),
        bounds: bounds.clone(),
        generator_radius: generators
            .iter()
            .flat_map(|f| f.r().iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0),
        generators: generators.len(),
        iterations,
        accepted: accepted.len(),
        inner_rank_history: rank_history.iter().map(|r| r.iter().sum()).collect(),
        pattern,
        degrees,
        verdict,
    };
    Ok(ClosureOutcome {
        report,
        subspace,
        rank_history,
        certificate: tracer.certificate(&handles),
    })
}

fn single(w: &GradedVector) -> (Degree, Vec<Rational>) {
    let (n, v) = w.support().iter().next().expect("nonzero component");
    (n.clone(), v.clone())
}

/// Splits the value of `h` into its homogeneous components, each obtained
/// from `h` by Cartan fields: `prod_m (D(e_c, 0) - (m_c + sigma_c)) / (n_c - m_c)`
/// over the other support degrees `m`, with `c` a coordinate where they differ.
pub fn homogeneous_components(tracer: &mut Tracer<'_>, h: Handle) -> Result<Vec<Handle>> {
    let spec = tracer.spec();
    let degrees: Vec<Degree> = tracer.value(h).support().keys().cloned().collect();
    if degrees.len() <= 1 {
        return Ok(if degrees.is_empty() { vec![] } else { vec![h] });
    }
    let mut out = Vec::new();
    for n in &degrees {
        let mut cur = h;
        for m in degrees.iter().filter(|m| *m != n) {
            let c = (0..n.len()).find(|&c| n[c] != m[c]).expect("distinct degrees");
            let field = VectorField::basis(n.len(), c + 1, vec![0; n.len()])?;
            let scaled = tracer.act(&field, cur)?;
            let shift = rational::int(m[c]) + &spec.sigma()[c];
            let denom = rational::int(n[c] - m[c]);
            cur = tracer.combine(&[
                (super::certificate::inverse(&denom)?, scaled),
                (-shift / &denom, cur),
            ]);
        }
        out.push(cur);
    }
    Ok(out)
}

/// Verdict on the inner box, in the order: whole module, `W` / `W~` pattern,
/// `M + W~` full.
pub fn classify(spec: &ModuleSpec, sub: &GradedSubspace, inner: &[Degree]) -> Result<(Verdict, Option<String>)> {
    let empty = Rref::new(spec.dim());
    let piece = |n: &Degree| sub.piece(n).unwrap_or(&empty);
    if inner.iter().all(|n| sub.is_full_at(n)) {
        return Ok((Verdict::FillsModule, None));
    }
    if spec.wedge_degree().is_none() {
        return Ok((Verdict::Inconclusive, None));
    }
    let mut is_w = true;
    let mut is_w_tilde = true;
    let mut is_quotient = true;
    for n in inner {
        let w = fmodule::w_piece(spec, n)?;
        let wt = fmodule::w_tilde_piece(spec, n)?;
        let p = piece(n);
        is_w &= p.same_space(&w);
        is_w_tilde &= p.same_space(&wt);
        is_quotient &= p.sum(&wt).is_full();
    }
    Ok(if is_w {
        (Verdict::FillsKnownSubmodule, Some("W".into()))
    } else if is_w_tilde {
        (Verdict::FillsKnownSubmodule, Some("W~".into()))
    } else if is_quotient {
        (Verdict::FillsQuotientPattern, None)
    } else {
        (Verdict::Inconclusive, None)
    })
}

/// Inner-box ranks keyed by degree.
pub fn rank_table(outcome: &ClosureOutcome) -> BTreeMap<Degree, usize> {
    outcome
        .report
        .degrees
        .iter()
        .map(|d| (d.n.clone(), d.rank))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::weight_core::WeightLabel;

    #[test]
    fn box_membership() {
        let b = TruncationBox::new(2, 1, vec![0, 1]).unwrap();
        assert!(b.in_outer(&[2, -1]));
        assert!(!b.in_outer(&[3, 1]));
        assert!(b.in_inner(&[1, 2]));
        assert!(!b.in_inner(&[0, 3]));
        assert_eq!(b.inner_degrees().len(), 9);
        assert!(TruncationBox::new(1, 2, vec![0]).is_err());
    }

    #[test]
    fn rejects_bad_seeds() {
        let spec = ModuleSpec::new(1, &WeightLabel(vec![2]), vec![frac(1, 2), int(0)]).unwrap();
        let b = TruncationBox::new(1, 0, vec![0, 0]).unwrap();
        assert!(closure(&spec, &[], &b, 1).is_err());
        let far = GradedVector::homogeneous(vec![2, 0], spec.rep().unit(0));
        assert!(closure(&spec, &[far], &b, 1).is_err());
    }

    #[test]
    fn components_are_certified() {
        let spec = ModuleSpec::new(1, &WeightLabel(vec![2]), vec![frac(1, 2), frac(1, 3)]).unwrap();
        let mut w = GradedVector::homogeneous(vec![0, 0], spec.rep().unit(0));
        w.add_component(vec![1, 0], &spec.rep().unit(1));
        w.add_component(vec![1, -1], &spec.rep().unit(2));
        let mut tr = Tracer::new(&spec);
        let h = tr.input(w.clone()).unwrap();
        let parts = homogeneous_components(&mut tr, h).unwrap();
        assert_eq!(parts.len(), 3);
        let mut total = GradedVector::zero(3);
        for p in &parts {
            assert!(tr.value(*p).homogeneous_degree().is_some());
            total.add_scaled(&int(1), tr.value(*p));
        }
        assert_eq!(total, w);
        let cert = tr.certificate(&parts);
        assert_eq!(cert.replay(&spec).unwrap().len(), 3);
    }

    #[test]
    fn small_adjoint_closure_fills() {
        let spec = ModuleSpec::new(1, &WeightLabel(vec![2]), vec![frac(1, 2), int(0)]).unwrap();
        let b = TruncationBox::new(2, 1, vec![0, 0]).unwrap();
        let seed = GradedVector::homogeneous(vec![0, 0], vec![int(1), int(-2), int(3)]);
        let out = closure(&spec, &[seed], &b, 2).unwrap();
        assert_eq!(out.report.verdict, Verdict::FillsModule);
        assert!(out.rank_history.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b)));
        assert_eq!(out.certificate.replay(&spec).unwrap().len(), out.report.accepted);
    }

    #[test]
    fn line_seed_stays_in_w() {
        let spec = ModuleSpec::wedge(2, 1, vec![frac(1, 3), int(0), int(0)]).unwrap();
        let b = TruncationBox::new(2, 1, vec![0, 0, 0]).unwrap();
        let seed = GradedVector::homogeneous(vec![0, 0, 0], spec.shifted(&[0, 0, 0]));
        let out = closure(&spec, &[seed], &b, 1).unwrap();
        assert_eq!(out.report.verdict, Verdict::FillsKnownSubmodule);
        assert_eq!(out.report.pattern.as_deref(), Some("W"));
    }
}
