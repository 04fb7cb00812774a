//! The tensor modules `F^sigma(lambda)`, graded by `n` in `Z^{N+1}`, with
//! the action
//!
//! ```text
//! D(u, r) . v(n) = (u | n + sigma) v(n + r) + (r u^T) v(n + r)
//! ```
//!
//! plus the wedge-module submodules `W_k` / `W~_k` and the maps `psi_k`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::divfield::VectorField;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Rref, Vector};
use crate::rational::{self, Rational};
use crate::sl_rep::{self, Irrep, WedgeBasisElement};
use crate::weight_core::{self, WeightLabel};

/// A degree `n` in `Z^{N+1}`.
pub type Degree = Vec<i64>;

/// `F^sigma(lambda)`: rank, highest weight, twist `sigma` and the realised `V(lambda)`.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    rank: usize,
    lambda: WeightLabel,
    sigma: Vec<Rational>,
    rep: Arc<Irrep>,
}

impl ModuleSpec {
    /// Builds `V(lambda)`. Minuscule weights use the exterior-power
    /// realisation (`lambda = 0` as `Lambda^0`), so that the `W` submodules
    /// are available.
    pub fn new(rank: usize, lambda: &WeightLabel, sigma: Vec<Rational>) -> Result<Self> {
        let rep = match weight_core::minuscule_index(lambda) {
            Some(k) if lambda.rank() == rank => sl_rep::build_wedge(rank, k)?,
            _ => sl_rep::build_irrep(rank, lambda)?,
        };
        Self::with_irrep(Arc::new(rep), sigma)
    }

    /// `F^sigma(omega_k)` realised on `Lambda^k(C^{N+1})`, `0 <= k <= N+1`.
    pub fn wedge(rank: usize, k: usize, sigma: Vec<Rational>) -> Result<Self> {
        Self::with_irrep(Arc::new(sl_rep::build_wedge(rank, k)?), sigma)
    }

    pub fn with_irrep(rep: Arc<Irrep>, sigma: Vec<Rational>) -> Result<Self> {
        if sigma.len() != rep.rank() + 1 {
            return Err(Error::RankMismatch(format!(
                "sigma has {} entries, expected {}",
                sigma.len(),
                rep.rank() + 1
            )));
        }
        Ok(Self {
            rank: rep.rank(),
            lambda: rep.lambda().clone(),
            sigma,
            rep,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lambda(&self) -> &WeightLabel {
        &self.lambda
    }

    pub fn sigma(&self) -> &[Rational] {
        &self.sigma
    }

    pub fn rep(&self) -> &Irrep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn wedge_degree(&self) -> Option<usize> {
        self.rep.wedge_degree()
    }

    pub fn sigma_is_integral(&self) -> bool {
        rational::is_integral(&self.sigma)
    }

    /// `-sigma` as a degree, when `sigma` is integral.
    pub fn minus_sigma(&self) -> Option<Degree> {
        self.sigma
            .iter()
            .map(|s| rational::to_i64(s).map(|x| -x))
            .collect()
    }

    /// `n + sigma`.
    pub fn shifted(&self, n: &[i64]) -> Vec<Rational> {
        n.iter()
            .zip(&self.sigma)
            .map(|(&a, s)| rational::int(a) + s)
            .collect()
    }

    /// The same module with a different twist, sharing the realised `V(lambda)`.
    pub fn with_sigma(&self, sigma: Vec<Rational>) -> Result<Self> {
        Self::with_irrep(self.rep.clone(), sigma)
    }

    /// Precomputes the matrix of `r u^T` on `V(lambda)`.
    pub fn field_operator(&self, f: &VectorField) -> Result<FieldOperator> {
        if f.dim() != self.rank + 1 {
            return Err(Error::RankMismatch(format!(
                "field {f} acts on a module of rank {}",
                self.rank
            )));
        }
        if !f.is_divergence_zero() {
            return Err(Error::NotDivergenceZero(f.to_string()));
        }
        let n1 = self.rank + 1;
        let x: Matrix = (0..n1)
            .map(|i| {
                (0..n1)
                    .map(|j| rational::int(f.r()[i]) * &f.u()[j])
                    .collect()
            })
            .collect();
        let matrix = self.rep.represent(&x)?;
        let sparse = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect()
            })
            .collect();
        Ok(FieldOperator {
            field: f.clone(),
            matrix,
            sparse,
        })
    }
}

/// A divergence-zero field together with the matrix of its `r u^T` part.
#[derive(Clone, Debug)]
pub struct FieldOperator {
    field: VectorField,
    matrix: Matrix,
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl FieldOperator {
    pub fn field(&self) -> &VectorField {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn trace(&self) -> Rational {
        (0..self.matrix.len()).map(|i| self.matrix[i][i].clone()).sum()
    }

    /// Image of the homogeneous vector `v(n)`: its degree and coefficients.
    pub fn apply_homogeneous(&self, spec: &ModuleSpec, n: &[i64], v: &[Rational]) -> (Degree, Vector) {
        let scalar = self.field.pair(&spec.shifted(n));
        let out = self
            .sparse
            .iter()
            .zip(v)
            .map(|(row, vi)| {
                let mut acc = &scalar * vi;
                for (j, c) in row {
                    if !v[*j].is_zero() {
                        acc += c * &v[*j];
                    }
                }
                acc
            })
            .collect();
        let target = n.iter().zip(self.field.r()).map(|(a, b)| a + b).collect();
        (target, out)
    }
}

/// A finitely supported element of `F^sigma(lambda)`; zero components are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedVector {
    dim: usize,
    support: BTreeMap<Degree, Vector>,
}

impl GradedVector {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            support: BTreeMap::new(),
        }
    }

    pub fn homogeneous(n: Degree, v: Vector) -> Self {
        let mut out = Self::zero(v.len());
        out.add_component(n, &v);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &BTreeMap<Degree, Vector> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn component(&self, n: &[i64]) -> Option<&Vector> {
        self.support.get(n)
    }

    /// The single degree of a nonzero homogeneous vector.
    pub fn homogeneous_degree(&self) -> Option<&Degree> {
        match self.support.len() {
            1 => self.support.keys().next(),
            _ => None,
        }
    }

    pub fn add_component(&mut self, n: Degree, v: &[Rational]) {
        assert_eq!(v.len(), self.dim, "component length");
        if linalg::is_zero(v) {
            return;
        }
        match self.support.get_mut(&n) {
            Some(cur) => {
                linalg::add_scaled(cur, &Rational::one(), v);
                if linalg::is_zero(cur) {
                    self.support.remove(&n);
                }
            }
            None => {
                self.support.insert(n, v.to_vec());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &GradedVector) {
        if c.is_zero() {
            return;
        }
        for (n, v) in &other.support {
            self.add_component(n.clone(), &linalg::scale(v, c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> GradedVector {
        let mut out = Self::zero(self.dim);
        out.add_scaled(c, self);
        out
    }

    pub fn entries(&self) -> Vec<GradedComponent> {
        self.support
            .iter()
            .map(|(n, v)| GradedComponent {
                n: n.clone(),
                coeffs: v.iter().map(rational::format).collect(),
            })
            .collect()
    }

    pub fn from_entries(dim: usize, entries: &[GradedComponent]) -> Result<Self> {
        let mut out = Self::zero(dim);
        for e in entries {
            let v = e
                .coeffs
                .iter()
                .map(|c| rational::parse(c))
                .collect::<Result<Vec<_>>>()?;
            if v.len() != dim {
                return Err(Error::LengthMismatch {
                    got: v.len(),
                    expected: dim,
                });
            }
            out.add_component(e.n.clone(), &v);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries()).expect("plain data")
    }

    pub fn from_json(dim: usize, text: &str) -> Result<Self> {
        let entries: Vec<GradedComponent> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_entries(dim, &entries)
    }
}

/// Text form of one homogeneous component: `{"n": [...], "coeffs": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedComponent {
    pub n: Vec<i64>,
    pub coeffs: Vec<String>,
}

fn check_vector(spec: &ModuleSpec, w: &GradedVector) -> Result<()> {
    if w.dim != spec.dim() {
        return Err(Error::LengthMismatch {
            got: w.dim,
            expected: spec.dim(),
        });
    }
    if let Some(n) = w.support.keys().find(|n| n.len() != spec.rank + 1) {
        return Err(Error::RankMismatch(format!("degree {n:?} for rank {}", spec.rank)));
    }
    Ok(())
}

pub fn act(spec: &ModuleSpec, f: &VectorField, w: &GradedVector) -> Result<GradedVector> {
    let op = spec.field_operator(f)?;
    act_with(spec, &op, w)
}

pub fn act_with(spec: &ModuleSpec, op: &FieldOperator, w: &GradedVector) -> Result<GradedVector> {
    check_vector(spec, w)?;
    let mut out = GradedVector::zero(spec.dim());
    for (n, v) in &w.support {
        let (target, image) = op.apply_homogeneous(spec, n, v);
        out.add_component(target, &image);
    }
    Ok(out)
}

/// Default shifts `r_1..r_k` for the operator-product trick: nonzero and
/// summing to zero. `(1, -1)` for `k = 2`, otherwise `(1, ..., 1, 1-k)`.
pub fn default_trick_shifts(k: usize) -> Vec<i64> {
    let mut out = vec![1; k];
    out[k - 1] = 1 - k as i64;
    out
}

/// Coefficients `K_0..K_k` of `prod_p (K + r_p E) = sum_m K_m E^m`, where
/// `K_m = K^{k-m} e_m(r)` with `e_m` the elementary symmetric polynomial.
pub fn trick_coefficients(k0: &Rational, shifts: &[i64]) -> Vec<Rational> {
    let k = shifts.len();
    let mut elem = vec![Rational::zero(); k + 1];
    elem[0] = Rational::one();
    for &r in shifts {
        for m in (1..=k).rev() {
            let prev = elem[m - 1].clone();
            elem[m] += prev * rational::int(r);
        }
    }
    (0..=k)
        .map(|m| {
            let mut p = elem[m].clone();
            for _ in 0..k - m {
                p *= k0;
            }
            p
        })
        .collect()
}

/// The fields `D(e_j, r_p e_i)` of the operator-product trick, listed in
/// application order (rightmost factor first).
pub fn trick_fields(spec: &ModuleSpec, i: usize, j: usize, shifts: &[i64]) -> Result<Vec<VectorField>> {
    let n1 = spec.rank + 1;
    if i == j || i == 0 || j == 0 || i > n1 || j > n1 {
        return Err(Error::Precondition(format!("trick needs distinct indices, got ({i},{j})")));
    }
    if shifts.len() < 2 || shifts.contains(&0) || shifts.iter().sum::<i64>() != 0 {
        return Err(Error::Precondition(format!(
            "trick shifts {shifts:?} must be nonzero, at least two, summing to 0"
        )));
    }
    shifts
        .iter()
        .rev()
        .map(|&r| {
            let mut deg = vec![0; n1];
            deg[i - 1] = r;
            VectorField::basis(n1, j, deg)
        })
        .collect()
}

/// `D(e_j, r_1 e_i) ... D(e_j, r_k e_i) . w` for homogeneous `w`. With the
/// default shifts this equals `sum_m K_m E_ij^m w` (see [`trick_coefficients`]),
/// `K_1 = 0`.
pub fn operator_product_trick(
    spec: &ModuleSpec,
    i: usize,
    j: usize,
    k: usize,
    w: &GradedVector,
    shifts: Option<&[i64]>,
) -> Result<GradedVector> {
    if k < 2 {
        return Err(Error::Precondition(format!("trick needs k >= 2, got {k}")));
    }
    if w.homogeneous_degree().is_none() {
        return Err(Error::Precondition("trick needs a nonzero homogeneous vector".into()));
    }
    let default = default_trick_shifts(k);
    let shifts = shifts.unwrap_or(&default);
    if shifts.len() != k {
        return Err(Error::Precondition(format!("{} shifts given for k = {k}", shifts.len())));
    }
    let mut cur = w.clone();
    for f in trick_fields(spec, i, j, shifts)? {
        cur = act(spec, &f, &cur)?;
    }
    Ok(cur)
}

/// Per-degree subspaces in reduced row-echelon form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSubspace {
    dim: usize,
    pieces: BTreeMap<Degree, Rref>,
}

impl GradedSubspace {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            pieces: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn piece(&self, n: &[i64]) -> Option<&Rref> {
        self.pieces.get(n)
    }

    pub fn pieces(&self) -> &BTreeMap<Degree, Rref> {
        &self.pieces
    }

    pub fn rank_at(&self, n: &[i64]) -> usize {
        self.pieces.get(n).map_or(0, Rref::rank)
    }

    pub fn is_full_at(&self, n: &[i64]) -> bool {
        self.rank_at(n) == self.dim
    }

    pub fn set_piece(&mut self, n: Degree, piece: Rref) {
        self.pieces.insert(n, piece);
    }

    pub fn insert(&mut self, n: &[i64], v: Vector) -> bool {
        self.pieces
            .entry(n.to_vec())
            .or_insert_with(|| Rref::new(self.dim))
            .insert(v)
    }

    pub fn contains(&self, w: &GradedVector) -> bool {
        w.support()
            .iter()
            .all(|(n, v)| self.pieces.get(n).is_some_and(|p| p.contains(v)))
    }

    pub fn total_rank(&self) -> usize {
        self.pieces.values().map(Rref::rank).sum()
    }
}

fn require_wedge(spec: &ModuleSpec) -> Result<(usize, &[WedgeBasisElement])> {
    let elements = spec.rep.wedge_elements().ok_or_else(|| {
        Error::Precondition(format!(
            "F^sigma({}) is not realised on an exterior power",
            spec.lambda
        ))
    })?;
    Ok((elements[0].degree(), elements))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in subsets(n, k - 1) {
            if rest.first().is_none_or(|&r| r > first) {
                let mut s = vec![first];
                s.extend(rest);
                out.push(s);
            }
        }
    }
    out
}

/// `x ^ e_I` in the basis of `target` (which must realise `Lambda^{|I|+1}`).
fn wedge_front(target: &Irrep, x: &[Rational], indices: &[usize]) -> Vector {
    let mut out = linalg::zero_vector(target.dim());
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        let mut tuple = vec![a + 1];
        tuple.extend_from_slice(indices);
        if let Some((sign, elem)) = WedgeBasisElement::from_unordered(&tuple) {
            let idx = target.wedge_index(&elem).expect("wedge basis element");
            out[idx] += xa * rational::int(sign);
        }
    }
    out
}

/// Degree-`n` piece of `W_k^sigma`: the span of `(n+sigma) ^ Lambda^{k-1}`.
pub fn w_piece(spec: &ModuleSpec, n: &[i64]) -> Result<Rref> {
    let (k, _) = require_wedge(spec)?;
    let mut out = Rref::new(spec.dim());
    if k == 0 {
        return Ok(out);
    }
    let s = spec.shifted(n);
    for idx in subsets(spec.rank + 1, k - 1) {
        out.insert(wedge_front(&spec.rep, &s, &idx));
    }
    Ok(out)
}

/// Degree-`n` piece of `W~_k^sigma`: `W_k^sigma` plus the whole fiber at
/// `n = -sigma` when `sigma` is integral.
pub fn w_tilde_piece(spec: &ModuleSpec, n: &[i64]) -> Result<Rref> {
    require_wedge(spec)?;
    if spec.shifted(n).iter().all(Zero::is_zero) {
        return Ok(Rref::full(spec.dim()));
    }
    w_piece(spec, n)
}

/// The submodule `W_k` (or `W~_k` with `tilde`) on the listed degrees.
pub fn submodule_w<'a, I>(spec: &ModuleSpec, tilde: bool, degrees: I) -> Result<GradedSubspace>
where
    I: IntoIterator<Item = &'a Degree>,
{
    let mut out = GradedSubspace::new(spec.dim());
    for n in degrees {
        let piece = if tilde {
            w_tilde_piece(spec, n)?
        } else {
            w_piece(spec, n)?
        };
        out.set_piece(n.clone(), piece);
    }
    Ok(out)
}

/// `F^sigma(omega_{k+1})` with the same `sigma`, the codomain of `psi_k`.
pub fn psi_target(spec: &ModuleSpec) -> Result<ModuleSpec> {
    let (k, _) = require_wedge(spec)?;
    if k > spec.rank {
        return Err(Error::IndexOutOfRange(format!(
            "psi_k is defined for 0 <= k <= {}, got {k}",
            spec.rank
        )));
    }
    ModuleSpec::wedge(spec.rank, k + 1, spec.sigma.clone())
}

/// Matrix of `psi_k` at degree `n`: `v -> (n+sigma) ^ v`.
pub fn psi_matrix(source: &ModuleSpec, target: &ModuleSpec, n: &[i64]) -> Result<Matrix> {
    let (k, elements) = require_wedge(source)?;
    let (k1, _) = require_wedge(target)?;
    if k1 != k + 1 || source.rank != target.rank || source.sigma != target.sigma {
        return Err(Error::Precondition(format!(
            "psi maps Lambda^{k} to Lambda^{}, got Lambda^{k1}",
            k + 1
        )));
    }
    let s = source.shifted(n);
    let columns: Matrix = elements
        .iter()
        .map(|e| wedge_front(&target.rep, &s, e.indices()))
        .collect();
    Ok(linalg::transpose(&columns, target.dim()))
}

/// `psi_k(w)`: degreewise wedge with `n + sigma`.
pub fn psi(source: &ModuleSpec, target: &ModuleSpec, w: &GradedVector) -> Result<GradedVector> {
    check_vector(source, w)?;
    let mut out = GradedVector::zero(target.dim());
    for (n, v) in &w.support {
        let m = psi_matrix(source, target, n)?;
        out.add_component(n.clone(), &linalg::mat_vec(&m, v));
    }
    Ok(out)
}

/// Canonical coset representatives for `(V(omega_k) (x) q^n) / W~_k` at degree `n`:
/// the standard basis vectors at the non-pivot columns of the `W~` piece.
pub fn quotient_piece(spec: &ModuleSpec, n: &[i64]) -> Result<Vec<Vector>> {
    Ok(w_tilde_piece(spec, n)?.complement_basis())
}

/// Binomial coefficient, for fiber dimension bookkeeping.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn sigma(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(p, q)| frac(p, q)).collect()
    }

    #[test]
    fn cartan_action_scales_by_degree() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 1]), sigma(&[(1, 3), (0, 1), (2, 1)])).unwrap();
        let v: Vector = (0..8).map(|i| int(i - 3)).collect();
        let w = GradedVector::homogeneous(vec![1, -2, 0], v.clone());
        for i in 1..=3 {
            let f = VectorField::basis(3, i, vec![0, 0, 0]).unwrap();
            let expect = spec.shifted(&[1, -2, 0])[i - 1].clone();
            assert_eq!(act(&spec, &f, &w).unwrap(), w.scaled(&expect));
        }
    }

    #[test]
    fn natural_module_example() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 0]), sigma(&[(1, 2), (0, 1), (0, 1)])).unwrap();
        let rep = spec.rep();
        let idx = |i| rep.wedge_index(&WedgeBasisElement::new(vec![i]).unwrap()).unwrap();
        let f = VectorField::from_ints(&[0, 1, 0], &[1, 0, 0]).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0, 0], rep.unit(idx(2)));
        let expect = GradedVector::homogeneous(vec![1, 0, 0], rep.unit(idx(1)));
        assert_eq!(act(&spec, &f, &w).unwrap(), expect);
    }

    #[test]
    fn functions_case() {
        let spec = ModuleSpec::new(2, &WeightLabel::zero(2), sigma(&[(1, 3), (1, 1), (0, 1)])).unwrap();
        assert_eq!(spec.dim(), 1);
        let f = VectorField::from_ints(&[1, -1, 2], &[1, 1, 0]).unwrap();
        let n = vec![2, 0, -1];
        let w = GradedVector::homogeneous(n.clone(), vec![int(1)]);
        let expected = f.pair(&spec.shifted(&n));
        assert_eq!(
            act(&spec, &f, &w).unwrap(),
            GradedVector::homogeneous(vec![3, 1, -1], vec![expected])
        );
    }

    #[test]
    fn act_rejects_bad_input() {
        let spec = ModuleSpec::new(1, &WeightLabel(vec![2]), sigma(&[(1, 2), (0, 1)])).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().unit(0));
        let bad = VectorField::from_ints(&[1, 0], &[1, 0]).unwrap();
        assert!(matches!(act(&spec, &bad, &w), Err(Error::NotDivergenceZero(_))));
        let wrong_rank = VectorField::from_ints(&[1, 0, 0], &[0, 0, 0]).unwrap();
        assert!(act(&spec, &wrong_rank, &w).is_err());
    }

    #[test]
    fn trick_extracts_square() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 1]), sigma(&[(1, 3), (1, 2), (1, 5)])).unwrap();
        let rep = spec.rep();
        let n = vec![0, 1, 2];
        let v = rep.highest_weight_vector();
        let w = GradedVector::homogeneous(n.clone(), v.clone());
        let out = operator_product_trick(&spec, 3, 1, 2, &w, None).unwrap();
        let k0 = spec.shifted(&n)[0].clone();
        let e31 = rep.e(3, 1).unwrap();
        let e2v = e31.apply(&e31.apply(&v));
        assert!(!linalg::is_zero(&e2v));
        let mut rest = out.clone();
        rest.add_scaled(&-(k0.clone() * &k0), &w);
        assert_eq!(rest, GradedVector::homogeneous(n.clone(), linalg::scale(&e2v, &int(-1))));

        let low = GradedVector::homogeneous(n.clone(), rep.lowest_weight_vector());
        let out = operator_product_trick(&spec, 3, 1, 2, &low, None).unwrap();
        assert_eq!(out, low.scaled(&(k0.clone() * &k0)));

        let c = trick_coefficients(&k0, &[1, 1, -2]);
        assert!(c[1].is_zero());
        assert!(!c[3].is_zero());
        assert!(operator_product_trick(&spec, 1, 1, 2, &w, None).is_err());
        assert!(operator_product_trick(&spec, 3, 1, 1, &w, None).is_err());
    }

    #[test]
    fn w_piece_examples() {
        let s0 = ModuleSpec::wedge(2, 0, sigma(&[(2, 1), (0, 1), (-1, 1)])).unwrap();
        assert_eq!(w_tilde_piece(&s0, &[-2, 0, 1]).unwrap().rank(), 1);
        assert_eq!(w_tilde_piece(&s0, &[0, 0, 0]).unwrap().rank(), 0);

        let s1 = ModuleSpec::wedge(2, 1, sigma(&[(1, 3), (0, 1), (0, 1)])).unwrap();
        let p = w_piece(&s1, &[0, 0, 0]).unwrap();
        assert_eq!(p.rank(), 1);
        assert!(!p.contains(&s1.shifted(&[0, 0, 0]).into_iter().rev().collect::<Vec<_>>()));

        let s2 = ModuleSpec::wedge(2, 2, vec![int(0), int(0), int(0)]).unwrap();
        assert_eq!(w_piece(&s2, &[1, 0, 0]).unwrap().rank(), 2);
        assert_eq!(w_piece(&s2, &[0, 0, 0]).unwrap().rank(), 0);
        assert_eq!(w_tilde_piece(&s2, &[0, 0, 0]).unwrap().rank(), 3);
    }

    #[test]
    fn quotient_examples() {
        let s1 = ModuleSpec::wedge(2, 1, sigma(&[(1, 3), (0, 1), (0, 1)])).unwrap();
        assert_eq!(quotient_piece(&s1, &[0, 0, 0]).unwrap().len(), 2);
        let s1z = ModuleSpec::wedge(2, 1, vec![int(1), int(0), int(0)]).unwrap();
        assert_eq!(quotient_piece(&s1z, &[-1, 0, 0]).unwrap().len(), 0);
        let s3 = ModuleSpec::wedge(3, 3, sigma(&[(1, 2), (0, 1), (0, 1), (0, 1)])).unwrap();
        assert_eq!(quotient_piece(&s3, &[1, 0, 2, 0]).unwrap().len(), 1);
    }

    #[test]
    fn psi_examples() {
        let s0 = ModuleSpec::wedge(2, 0, vec![int(1), int(0), int(0)]).unwrap();
        let t0 = psi_target(&s0).unwrap();
        let w = GradedVector::homogeneous(vec![2, 1, 0], vec![int(1)]);
        let image = psi(&s0, &t0, &w).unwrap();
        assert_eq!(image.homogeneous_degree(), Some(&vec![2, 1, 0]));
        let at_minus_sigma = GradedVector::homogeneous(vec![-1, 0, 0], vec![int(1)]);
        assert!(psi(&s0, &t0, &at_minus_sigma).unwrap().is_zero());

        let s1 = ModuleSpec::wedge(2, 1, sigma(&[(1, 2), (0, 1), (0, 1)])).unwrap();
        let t1 = psi_target(&s1).unwrap();
        let t2 = psi_target(&t1).unwrap();
        let v = GradedVector::homogeneous(vec![1, -1, 2], vec![int(1), int(-2), int(3)]);
        assert!(psi(&t1, &t2, &psi(&s1, &t1, &v).unwrap()).unwrap().is_zero());
        let top = ModuleSpec::wedge(2, 3, vec![int(0); 3]).unwrap();
        assert!(psi_target(&top).is_err());
    }

    #[test]
    fn psi_commutes_with_action_example() {
        let s1 = ModuleSpec::wedge(2, 1, sigma(&[(1, 2), (1, 3), (0, 1)])).unwrap();
        let t1 = psi_target(&s1).unwrap();
        let idx = s1.rep().wedge_index(&WedgeBasisElement::new(vec![3]).unwrap()).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0, 0], s1.rep().unit(idx));
        let f = VectorField::from_ints(&[0, 1, 0], &[1, 0, 0]).unwrap();
        let lhs = psi(&s1, &t1, &act(&s1, &f, &w).unwrap()).unwrap();
        let rhs = act(&t1, &f, &psi(&s1, &t1, &w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn graded_vector_text_roundtrip() {
        let mut w = GradedVector::homogeneous(vec![0, 1], vec![frac(1, 2), int(0), int(-3)]);
        w.add_component(vec![-1, 0], &[int(0), frac(2, 3), int(0)]);
        let text = w.to_json();
        assert_eq!(GradedVector::from_json(3, &text).unwrap(), w);
        assert!(GradedVector::from_json(2, &text).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
