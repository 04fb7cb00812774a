//! Replayable derivations. A certificate is a DAG whose leaves are the seed
//! vectors of a submodule `M`; inner nodes apply a field or take a linear
//! combination, so every node value lies in `M`. `Known` leaves name vectors
//! of `W_k` / `W~_k` and are only sound when `M` contains that submodule.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::divfield::VectorField;
use crate::error::{Error, Result};
use crate::fmodule::{self, FieldOperator, GradedComponent, GradedVector, ModuleSpec};
use crate::rational::{self, Rational};

/// Index of a node inside a [`Tracer`] or [`Certificate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Handle(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KnownPattern {
    #[serde(rename = "W")]
    W,
    #[serde(rename = "W~")]
    WTilde,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "rational::as_string")]
    pub coeff: Rational,
    pub node: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Node {
    Input { index: usize },
    Act { field: VectorField, arg: usize },
    Combine { terms: Vec<Term> },
    Known { pattern: KnownPattern, vector: Vec<GradedComponent> },
}

/// Records every step of a construction together with its value.
pub struct Tracer<'a> {
    spec: &'a ModuleSpec,
    inputs: Vec<GradedVector>,
    nodes: Vec<Node>,
    values: Vec<GradedVector>,
    notes: Vec<String>,
    operators: BTreeMap<VectorField, FieldOperator>,
}

impl<'a> Tracer<'a> {
    pub fn new(spec: &'a ModuleSpec) -> Self {
        Self {
            spec,
            inputs: Vec::new(),
            nodes: Vec::new(),
            values: Vec::new(),
            notes: Vec::new(),
            operators: BTreeMap::new(),
        }
    }

    pub fn spec(&self) -> &'a ModuleSpec {
        self.spec
    }

    fn push(&mut self, node: Node, value: GradedVector) -> Handle {
        self.nodes.push(node);
        self.values.push(value);
        Handle(self.nodes.len() - 1)
    }

    pub fn input(&mut self, w: GradedVector) -> Result<Handle> {
        if w.dim() != self.spec.dim() {
            return Err(Error::LengthMismatch {
                got: w.dim(),
                expected: self.spec.dim(),
            });
        }
        self.inputs.push(w.clone());
        Ok(self.push(
            Node::Input {
                index: self.inputs.len() - 1,
            },
            w,
        ))
    }

    pub fn value(&self, h: Handle) -> &GradedVector {
        &self.values[h.0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn act(&mut self, f: &VectorField, h: Handle) -> Result<Handle> {
        if !self.operators.contains_key(f) {
            let op = self.spec.field_operator(f)?;
            self.operators.insert(f.clone(), op);
        }
        let value = fmodule::act_with(self.spec, &self.operators[f], &self.values[h.0])?;
        Ok(self.push(
            Node::Act {
                field: f.clone(),
                arg: h.0,
            },
            value,
        ))
    }

    /// Records an action whose value the caller already computed with `op`.
    pub(crate) fn record_act(&mut self, op: &FieldOperator, h: Handle, value: GradedVector) -> Handle {
        self.push(
            Node::Act {
                field: op.field().clone(),
                arg: h.0,
            },
            value,
        )
    }

    /// Applies `fields[0]` first.
    pub fn act_chain(&mut self, fields: &[VectorField], h: Handle) -> Result<Handle> {
        fields.iter().try_fold(h, |cur, f| self.act(f, cur))
    }

    pub fn combine(&mut self, terms: &[(Rational, Handle)]) -> Handle {
        let mut value = GradedVector::zero(self.spec.dim());
        for (c, h) in terms {
            value.add_scaled(c, &self.values[h.0]);
        }
        let terms = terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, h)| Term {
                coeff: c.clone(),
                node: h.0,
            })
            .collect();
        self.push(Node::Combine { terms }, value)
    }

    pub fn scale(&mut self, c: Rational, h: Handle) -> Handle {
        self.combine(&[(c, h)])
    }

    /// Leaf for a vector of `W_k` or `W~_k`, checked on entry.
    pub fn known(&mut self, pattern: KnownPattern, w: GradedVector) -> Result<Handle> {
        check_known(self.spec, pattern, &w)?;
        Ok(self.push(
            Node::Known {
                pattern,
                vector: w.entries(),
            },
            w,
        ))
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn certificate(&self, outputs: &[Handle]) -> Certificate {
        Certificate {
            inputs: self.inputs.iter().map(GradedVector::entries).collect(),
            nodes: self.nodes.clone(),
            outputs: outputs.iter().map(|h| h.0).collect(),
            claimed: outputs.iter().map(|h| self.values[h.0].entries()).collect(),
            notes: self.notes.clone(),
        }
    }
}

fn check_known(spec: &ModuleSpec, pattern: KnownPattern, w: &GradedVector) -> Result<()> {
    for (n, v) in w.support() {
        let piece = match pattern {
            KnownPattern::W => fmodule::w_piece(spec, n)?,
            KnownPattern::WTilde => fmodule::w_tilde_piece(spec, n)?,
        };
        if !piece.contains(v) {
            return Err(Error::Verification(format!(
                "vector at degree {n:?} is not in the {pattern:?} piece"
            )));
        }
    }
    Ok(())
}

/// Serializable derivation with the claimed values of its output nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub inputs: Vec<Vec<GradedComponent>>,
    pub nodes: Vec<Node>,
    pub outputs: Vec<usize>,
    pub claimed: Vec<Vec<GradedComponent>>,
    pub notes: Vec<String>,
}

impl Certificate {
    /// Recomputes every node from the inputs and checks the claimed outputs.
    pub fn replay(&self, spec: &ModuleSpec) -> Result<Vec<GradedVector>> {
        let dim = spec.dim();
        let inputs = self
            .inputs
            .iter()
            .map(|e| GradedVector::from_entries(dim, e))
            .collect::<Result<Vec<_>>>()?;
        let mut values: Vec<GradedVector> = Vec::with_capacity(self.nodes.len());
        let mut operators: BTreeMap<&VectorField, FieldOperator> = BTreeMap::new();
        for (idx, node) in self.nodes.iter().enumerate() {
            let back = |i: usize| -> Result<()> {
                if i >= idx {
                    return Err(Error::Verification(format!("node {idx} refers forward to {i}")));
                }
                Ok(())
            };
            let value = match node {
                Node::Input { index } => inputs
                    .get(*index)
                    .cloned()
                    .ok_or_else(|| Error::Verification(format!("missing input {index}")))?,
                Node::Act { field, arg } => {
                    back(*arg)?;
                    if !operators.contains_key(field) {
                        operators.insert(field, spec.field_operator(field)?);
                    }
                    fmodule::act_with(spec, &operators[field], &values[*arg])?
                }
                Node::Combine { terms } => {
                    let mut acc = GradedVector::zero(dim);
                    for t in terms {
                        back(t.node)?;
                        acc.add_scaled(&t.coeff, &values[t.node]);
                    }
                    acc
                }
                Node::Known { pattern, vector } => {
                    let w = GradedVector::from_entries(dim, vector)?;
                    check_known(spec, *pattern, &w)?;
                    w
                }
            };
            values.push(value);
        }
        if self.outputs.len() != self.claimed.len() {
            return Err(Error::Verification("outputs and claims differ in number".into()));
        }
        let mut out = Vec::with_capacity(self.outputs.len());
        for (&o, claim) in self.outputs.iter().zip(&self.claimed) {
            let got = values
                .get(o)
                .ok_or_else(|| Error::Verification(format!("output node {o} out of range")))?;
            if *got != GradedVector::from_entries(dim, claim)? {
                return Err(Error::Verification(format!("replay of node {o} differs from the claim")));
            }
            out.push(got.clone());
        }
        Ok(out)
    }

    /// The fields applied, in recording order.
    pub fn word(&self) -> Vec<String> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Act { field, .. } => Some(field.to_string()),
                _ => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Runs `body` on a fresh tracer fed with `inputs` and certifies its result.
pub fn certify<F>(spec: &ModuleSpec, inputs: &[GradedVector], body: F) -> Result<(Certificate, GradedVector)>
where
    F: FnOnce(&mut Tracer<'_>, &[Handle]) -> Result<Handle>,
{
    let mut tracer = Tracer::new(spec);
    let handles = inputs
        .iter()
        .map(|w| tracer.input(w.clone()))
        .collect::<Result<Vec<_>>>()?;
    let out = body(&mut tracer, &handles)?;
    Ok((tracer.certificate(&[out]), tracer.value(out).clone()))
}

/// `1 / c`, failing on zero.
pub(crate) fn inverse(c: &Rational) -> Result<Rational> {
    if c.is_zero() {
        return Err(Error::Verification("division by a vanishing coefficient".into()));
    }
    Ok(Rational::one() / c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::weight_core::WeightLabel;

    fn spec() -> ModuleSpec {
        ModuleSpec::new(1, &WeightLabel(vec![2]), vec![frac(1, 2), int(0)]).unwrap()
    }

    #[test]
    fn replay_reproduces_outputs() {
        let spec = spec();
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().lowest_weight_vector());
        let f = VectorField::from_ints(&[1, -1], &[1, 1]).unwrap();
        let (cert, value) = certify(&spec, &[w], |tr, hs| {
            let a = tr.act(&f, hs[0])?;
            Ok(tr.combine(&[(int(2), a), (int(-1), hs[0])]))
        })
        .unwrap();
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.replay(&spec).unwrap(), vec![value]);
        assert_eq!(cert.word(), vec![f.to_string()]);
    }

    #[test]
    fn tampered_claim_is_rejected() {
        let spec = spec();
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().highest_weight_vector());
        let f = VectorField::from_ints(&[1, 0], &[0, 1]).unwrap();
        let (mut cert, _) = certify(&spec, &[w], |tr, hs| tr.act(&f, hs[0])).unwrap();
        cert.claimed[0][0].coeffs[0] = "7".into();
        assert!(matches!(cert.replay(&spec), Err(Error::Verification(_))));
    }

    #[test]
    fn known_leaves_are_checked() {
        let spec = ModuleSpec::wedge(2, 1, vec![frac(1, 3), int(0), int(0)]).unwrap();
        let mut tr = Tracer::new(&spec);
        let inside = GradedVector::homogeneous(vec![0, 0, 0], spec.shifted(&[0, 0, 0]));
        assert!(tr.known(KnownPattern::W, inside).is_ok());
        let outside = GradedVector::homogeneous(vec![0, 0, 0], vec![int(0), int(1), int(0)]);
        assert!(tr.known(KnownPattern::W, outside).is_err());
    }
}
