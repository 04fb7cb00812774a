//! Homogeneous vector fields `D(u, r) = sum_i u_i t^r d_i` on the torus and
//! the divergence-zero subalgebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `D(u, r)` with rational `u` and integer `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorField {
    u: Vec<Rational>,
    r: Vec<i64>,
}

impl VectorField {
    /// Any element of the Witt algebra (no divergence condition).
    pub fn new(u: Vec<Rational>, r: Vec<i64>) -> Result<Self> {
        if u.len() != r.len() || u.is_empty() {
            return Err(Error::RankMismatch(format!(
                "u has {} entries, r has {}",
                u.len(),
                r.len()
            )));
        }
        Ok(Self { u, r })
    }

    /// A divergence-zero field; fails unless `(u|r) = 0`.
    pub fn divergence_free(u: Vec<Rational>, r: Vec<i64>) -> Result<Self> {
        let f = Self::new(u, r)?;
        if !f.is_divergence_zero() {
            return Err(Error::NotDivergenceZero(f.to_string()));
        }
        Ok(f)
    }

    pub fn from_ints(u: &[i64], r: &[i64]) -> Result<Self> {
        Self::new(u.iter().map(|&x| rational::int(x)).collect(), r.to_vec())
    }

    /// `D(e_a, r)`, 1-based `a`.
    pub fn basis(dim: usize, a: usize, r: Vec<i64>) -> Result<Self> {
        let mut u = vec![Rational::zero(); dim];
        u[a - 1] = rational::int(1);
        Self::divergence_free(u, r)
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn r(&self) -> &[i64] {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(Zero::is_zero)
    }

    pub fn is_divergence_zero(&self) -> bool {
        rational::dot_int(&self.u, &self.r).is_zero()
    }

    /// `(u | x)` for an arbitrary rational vector `x`.
    pub fn pair(&self, x: &[Rational]) -> Rational {
        rational::dot(&self.u, x)
    }
}

pub fn is_divergence_zero(f: &VectorField) -> bool {
    f.is_divergence_zero()
}

/// `[D(u,r), D(v,s)] = D((u|s) v - (v|r) u, r + s)`.
pub fn bracket(f: &VectorField, g: &VectorField) -> Result<VectorField> {
    if f.dim() != g.dim() {
        return Err(Error::RankMismatch(format!(
            "bracket of fields in dimensions {} and {}",
            f.dim(),
            g.dim()
        )));
    }
    let us = rational::dot_int(&f.u, &g.r);
    let vr = rational::dot_int(&g.u, &f.r);
    let u = g
        .u
        .iter()
        .zip(&f.u)
        .map(|(v, u)| &us * v - &vr * u)
        .collect();
    let r = f.r.iter().zip(&g.r).map(|(a, b)| a + b).collect();
    Ok(VectorField { u, r })
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self.u.iter().map(rational::format).collect();
        let r: Vec<String> = self.r.iter().map(i64::to_string).collect();
        write!(f, "D([{}],[{}])", u.join(","), r.join(","))
    }
}

impl FromStr for VectorField {
    type Err = Error;

    /// Parses `D([1,-1,0],[1,1,0])`; `u` entries may be `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected D([u..],[r..]), got {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("D(")
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (u, r) = inner.split_once("],[").ok_or_else(bad)?;
        let u = u.strip_prefix('[').ok_or_else(bad)?;
        let r = r.strip_suffix(']').ok_or_else(bad)?;
        let u = rational::parse_list(u)?;
        let r = r
            .split(',')
            .map(|x| x.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(u, r)
    }
}

impl Serialize for VectorField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for VectorField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Finite sum of homogeneous fields, merged by degree `r` with zero terms dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldSum {
    terms: BTreeMap<Vec<i64>, Vec<Rational>>,
}

impl FieldSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, f: &VectorField) {
        let entry = self
            .terms
            .entry(f.r.clone())
            .or_insert_with(|| vec![Rational::zero(); f.dim()]);
        for (a, b) in entry.iter_mut().zip(&f.u) {
            *a += b;
        }
        if entry.iter().all(Zero::is_zero) {
            self.terms.remove(&f.r);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = VectorField> + '_ {
        self.terms.iter().map(|(r, u)| VectorField {
            u: u.clone(),
            r: r.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The spanning set `d_a` and `r_b t^r d_a - r_a t^r d_b` (`a < b`) with
/// `0 < |r|_inf <= radius`, in deterministic order, zeros and exact
/// duplicates removed.
pub fn generators(rank: usize, radius: i64) -> Vec<VectorField> {
    let dim = rank + 1;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..=dim {
        let f = VectorField::basis(dim, a, vec![0; dim]).expect("Cartan field");
        seen.insert(f.clone());
        out.push(f);
    }
    if radius <= 0 {
        return out;
    }
    for r in lattice_box(dim, radius) {
        if r.iter().all(|&x| x == 0) {
            continue;
        }
        for a in 0..dim {
            for b in a + 1..dim {
                let mut u = vec![Rational::zero(); dim];
                u[a] = rational::int(r[b]);
                u[b] = rational::int(-r[a]);
                let f = VectorField { u, r: r.clone() };
                if f.is_zero() || !seen.insert(f.clone()) {
                    continue;
                }
                out.push(f);
            }
        }
    }
    out
}

/// `D(u, r) t^m = (u|m) t^{m+r}`: the field as a derivation of Laurent monomials.
pub fn on_monomial(f: &VectorField, m: &[i64]) -> (Rational, Vec<i64>) {
    let c = rational::dot_int(&f.u, m);
    (c, m.iter().zip(&f.r).map(|(a, b)| a + b).collect())
}

/// All integer points with `|x|_inf <= radius`, lexicographic.
pub fn lattice_box(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-radius..=radius).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}
