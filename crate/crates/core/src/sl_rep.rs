//! Finite-dimensional irreducible `sl_{N+1}`-modules with exact matrices.
//!
//! General `V(lambda)` is realised inside a tensor product of exterior
//! powers: the highest weight vector is the tensor product of
//! `e_1 ^ ... ^ e_k` taken `C_k` times for each `k`, and the module is the
//! span of everything the lowering operators `E_{i+1,i}` reach from it.
//! Exterior powers themselves are built directly by [`build_wedge`].

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Rref, Vector};
use crate::rational::{self, Rational};
use crate::weight_core::{self, AlphaOffset, RootSystemA, WeightLabel};

/// Desk-scale limits for [`build_irrep_with_bounds`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepBounds {
    pub max_rank: usize,
    pub max_label_sum: i64,
}

impl Default for RepBounds {
    fn default() -> Self {
        Self {
            max_rank: 4,
            max_label_sum: 4,
        }
    }
}

/// Square matrix stored by rows of `(column, value)` pairs, zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    fn from_columns(dim: usize, columns: Vec<Vec<(usize, Rational)>>) -> Self {
        let mut rows = vec![Vec::new(); dim];
        for (col, entries) in columns.into_iter().enumerate() {
            for (row, value) in entries {
                rows[row].push((col, value));
            }
        }
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<(usize, Rational)>] {
        &self.rows
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| !v[*c].is_zero())
                    .map(|(c, x)| x * &v[*c])
                    .sum()
            })
            .collect()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut out = vec![linalg::zero_vector(self.dim); self.dim];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                out[r][*c] = x.clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().filter(move |(c, _)| *c == r))
            .map(|(_, x)| x.clone())
            .sum()
    }
}

/// A basis vector `e_{i_1} ^ ... ^ e_{i_k}` of an exterior power, indices
/// strictly increasing and 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeBasisElement {
    indices: Vec<usize>,
}

impl WedgeBasisElement {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) || indices.first() == Some(&0) {
            return Err(Error::Precondition(format!(
                "wedge indices {indices:?} must be strictly increasing and 1-based"
            )));
        }
        Ok(Self { indices })
    }

    /// Sorts an arbitrary index tuple. Returns the permutation sign and the
    /// sorted element, or `None` when an index repeats (the wedge vanishes).
    pub fn from_unordered(indices: &[usize]) -> Option<(i64, Self)> {
        let mut sorted = indices.to_vec();
        let mut sign = 1;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] == sorted[j + 1] {
                    return None;
                }
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, Self { indices: sorted }))
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    fn from_mask(mask: u16) -> Self {
        Self {
            indices: (0..16).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect(),
        }
    }
}

/// `E_{ij}` on a wedge monomial given as a bitmask. Returns the new mask and
/// sign, or `None` when the result vanishes.
fn wedge_e(mask: u16, i: usize, j: usize) -> Option<(u16, i64)> {
    let (bi, bj) = (1u16 << (i - 1), 1u16 << (j - 1));
    if mask & bj == 0 || mask & bi != 0 {
        return None;
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let between = (lo..hi - 1).filter(|&b| mask & (1 << b) != 0).count();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    Some((mask & !bj | bi, sign))
}

/// `V(lambda)` with an explicit weight basis and exact matrices for every `E_{ij}`.
#[derive(Clone, Debug)]
pub struct Irrep {
    rank: usize,
    lambda: WeightLabel,
    basis_weights: Vec<AlphaOffset>,
    epsilon_weights: Vec<Vec<i64>>,
    mat_e: BTreeMap<(usize, usize), SparseMatrix>,
    hw_index: usize,
    lw_index: usize,
    wedge: Option<Vec<WedgeBasisElement>>,
}

impl Irrep {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lambda(&self) -> &WeightLabel {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis_weights.len()
    }

    pub fn basis_weights(&self) -> &[AlphaOffset] {
        &self.basis_weights
    }

    /// `epsilon`-coordinate weight of each basis vector.
    pub fn epsilon_weights(&self) -> &[Vec<i64>] {
        &self.epsilon_weights
    }

    pub fn hw_index(&self) -> usize {
        self.hw_index
    }

    pub fn lw_index(&self) -> usize {
        self.lw_index
    }

    /// Wedge monomial of each basis vector, when built by [`build_wedge`].
    pub fn wedge_elements(&self) -> Option<&[WedgeBasisElement]> {
        self.wedge.as_deref()
    }

    /// Exterior degree `k` when built by [`build_wedge`].
    pub fn wedge_degree(&self) -> Option<usize> {
        self.wedge.as_ref().map(|w| w[0].degree())
    }

    pub fn wedge_index(&self, element: &WedgeBasisElement) -> Option<usize> {
        self.wedge.as_ref()?.iter().position(|w| w == element)
    }

    /// `E_{ij}`, `1 <= i, j <= N+1`, `i != j`.
    pub fn e(&self, i: usize, j: usize) -> Result<&SparseMatrix> {
        self.mat_e
            .get(&(i, j))
            .ok_or_else(|| Error::IndexOutOfRange(format!("E_({i},{j}) for sl_{}", self.rank + 1)))
    }

    pub fn apply_e(&self, i: usize, j: usize, v: &[Rational]) -> Result<Vector> {
        self.check_len(v)?;
        Ok(self.e(i, j)?.apply(v))
    }

    pub fn matrices(&self) -> &BTreeMap<(usize, usize), SparseMatrix> {
        &self.mat_e
    }

    pub fn unit(&self, index: usize) -> Vector {
        linalg::unit_vector(self.dim(), index)
    }

    pub fn highest_weight_vector(&self) -> Vector {
        self.unit(self.hw_index)
    }

    pub fn lowest_weight_vector(&self) -> Vector {
        self.unit(self.lw_index)
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch {
                got: v.len(),
                expected: self.dim(),
            });
        }
        Ok(())
    }

    /// Action of the traceless diagonal matrix `diag(c)`, through the weights.
    pub fn apply_diagonal(&self, c: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.check_len(v)?;
        Ok(v.iter()
            .zip(&self.epsilon_weights)
            .map(|(x, mu)| x * rational::dot_int(c, mu))
            .collect())
    }

    /// Dense matrix of a traceless `(N+1) x (N+1)` matrix `x` acting on the module.
    pub fn represent(&self, x: &[Vec<Rational>]) -> Result<Matrix> {
        let n1 = self.rank + 1;
        if x.len() != n1 || x.iter().any(|r| r.len() != n1) {
            return Err(Error::RankMismatch(format!(
                "expected a {n1}x{n1} matrix"
            )));
        }
        let trace: Rational = (0..n1).map(|i| x[i][i].clone()).sum();
        if !trace.is_zero() {
            return Err(Error::Precondition("matrix is not traceless".into()));
        }
        let dim = self.dim();
        let mut out = vec![linalg::zero_vector(dim); dim];
        let diag: Vec<Rational> = (0..n1).map(|i| x[i][i].clone()).collect();
        for (b, mu) in self.epsilon_weights.iter().enumerate() {
            out[b][b] = rational::dot_int(&diag, mu);
        }
        for (&(i, j), m) in &self.mat_e {
            let c = &x[i - 1][j - 1];
            if c.is_zero() {
                continue;
            }
            for (r, row) in m.rows.iter().enumerate() {
                for (col, val) in row {
                    out[r][*col] += c * val;
                }
            }
        }
        Ok(out)
    }

    /// Basis indices grouped by weight, in canonical weight order.
    pub fn weight_spaces(&self) -> BTreeMap<AlphaOffset, Vec<usize>> {
        let mut out: BTreeMap<AlphaOffset, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.basis_weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// Serializable dump.
    pub fn to_dump(&self) -> IrrepDump {
        let e = self
            .mat_e
            .iter()
            .map(|(&(i, j), m)| {
                let rows = m
                    .rows
                    .iter()
                    .map(|row| row.iter().map(|(c, x)| (*c, rational::format(x))).collect())
                    .collect();
                (format!("{i},{j}"), rows)
            })
            .collect();
        IrrepDump {
            rank: self.rank,
            lambda: self.lambda.0.clone(),
            dim: self.dim(),
            weights: self.basis_weights.iter().map(|w| w.0.clone()).collect(),
            e,
        }
    }

    /// Rebuilds an `Irrep` from a dump; the wedge realisation is not restored.
    pub fn from_dump(dump: &IrrepDump) -> Result<Self> {
        let lambda = WeightLabel(dump.lambda.clone());
        let rs = RootSystemA::new(dump.rank)?;
        lambda.check_highest(rs)?;
        if dump.weights.len() != dump.dim {
            return Err(Error::Parse("weights length differs from dim".into()));
        }
        let basis_weights: Vec<AlphaOffset> =
            dump.weights.iter().map(|w| AlphaOffset(w.clone())).collect();
        let epsilon_weights = basis_weights
            .iter()
            .map(|w| weight_core::epsilon_weight(&lambda, w))
            .collect();
        let mut mat_e = BTreeMap::new();
        for (key, rows) in &dump.e {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad matrix key {key:?}")))?;
            let rows = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|(c, x)| Ok((*c, rational::parse(x)?)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            mat_e.insert((i, j), SparseMatrix { dim: dump.dim, rows });
        }
        let kappa = weight_core::kappa(&lambda)?;
        let hw_index = basis_weights
            .iter()
            .position(|w| w.depth() == 0)
            .ok_or_else(|| Error::Parse("no highest weight".into()))?;
        let lw_index = basis_weights
            .iter()
            .position(|w| *w == kappa)
            .ok_or_else(|| Error::Parse("no lowest weight".into()))?;
        Ok(Self {
            rank: dump.rank,
            lambda,
            basis_weights,
            epsilon_weights,
            mat_e,
            hw_index,
            lw_index,
            wedge: None,
        })
    }
}

/// JSON form of an [`Irrep`]. `E` maps `"i,j"` to rows of `[column, "p/q"]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepDump {
    #[serde(rename = "N")]
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub dim: usize,
    pub weights: Vec<Vec<i64>>,
    #[serde(rename = "E")]
    pub e: BTreeMap<String, Vec<Vec<(usize, String)>>>,
}

type TensorKey = Vec<u16>;
type TensorVector = BTreeMap<TensorKey, Rational>;

fn tensor_apply_e(v: &TensorVector, i: usize, j: usize) -> TensorVector {
    let mut out = TensorVector::new();
    for (key, coeff) in v {
        for f in 0..key.len() {
            if let Some((mask, sign)) = wedge_e(key[f], i, j) {
                let mut k = key.clone();
                k[f] = mask;
                let entry = out.entry(k).or_insert_with(Rational::zero);
                if sign > 0 {
                    *entry += coeff;
                } else {
                    *entry -= coeff;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Echelon form over sparse tensor vectors, remembering how each reduced row
/// is built from the weight space's basis members.
#[derive(Default)]
struct WeightSpaceSolver {
    members: Vec<usize>,
    rows: Vec<(TensorKey, TensorVector, Vector)>,
}

impl WeightSpaceSolver {
    /// Returns the remainder and the coordinates (over `members`) of the
    /// part that was eliminated.
    fn reduce(&self, v: &TensorVector) -> (TensorVector, Vector) {
        let mut rem = v.clone();
        let mut coords = linalg::zero_vector(self.members.len());
        for (pivot, row, combo) in &self.rows {
            let Some(c) = rem.get(pivot).cloned() else {
                continue;
            };
            for (k, x) in row {
                let entry = rem.entry(k.clone()).or_insert_with(Rational::zero);
                *entry -= &c * x;
            }
            rem.retain(|_, x| !x.is_zero());
            linalg::add_scaled(&mut coords, &c, combo);
        }
        (rem, coords)
    }

    /// Tries to add `v` as basis member `global`. Returns `false` if dependent.
    fn try_insert(&mut self, v: &TensorVector, global: usize) -> bool {
        let (rem, coords) = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        self.members.push(global);
        let inv = lead.recip();
        // rem = v - sum coords_m member_m, scaled by 1/lead
        let mut combo: Vector = coords.iter().map(|c| -(c * &inv)).collect();
        combo.push(inv.clone());
        for (_, _, old) in self.rows.iter_mut() {
            old.push(Rational::zero());
        }
        let row = rem.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.push((pivot, row, combo));
        true
    }

    fn coordinates(&self, v: &TensorVector) -> Option<Vector> {
        let (rem, coords) = self.reduce(v);
        rem.is_empty().then_some(coords)
    }
}

fn tensor_weight(key: &TensorKey, n1: usize) -> Vec<i64> {
    let mut mu = vec![0; n1];
    for mask in key {
        for (b, m) in mu.iter_mut().enumerate() {
            if mask & (1 << b) != 0 {
                *m += 1;
            }
        }
    }
    mu
}

fn check_bounds(rank: usize, lambda: &WeightLabel, bounds: RepBounds) -> Result<RootSystemA> {
    let rs = RootSystemA::new(rank)?;
    lambda.check_highest(rs)?;
    if rank > bounds.max_rank {
        return Err(Error::BoundExceeded(format!(
            "rank {rank} exceeds {}",
            bounds.max_rank
        )));
    }
    if lambda.total() > bounds.max_label_sum {
        return Err(Error::BoundExceeded(format!(
            "label sum {} exceeds {}",
            lambda.total(),
            bounds.max_label_sum
        )));
    }
    Ok(rs)
}

pub fn build_irrep(rank: usize, lambda: &WeightLabel) -> Result<Irrep> {
    build_irrep_with_bounds(rank, lambda, RepBounds::default())
}

pub fn build_irrep_with_bounds(rank: usize, lambda: &WeightLabel, bounds: RepBounds) -> Result<Irrep> {
    check_bounds(rank, lambda, bounds)?;
    let n1 = rank + 1;
    let mut hw_key = TensorKey::new();
    for (k, &c) in lambda.0.iter().enumerate() {
        let mask = (1u16 << (k + 1)) - 1;
        hw_key.extend(std::iter::repeat_n(mask, c as usize));
    }
    let hw: TensorVector = BTreeMap::from([(hw_key, Rational::one())]);

    let mut vectors: Vec<TensorVector> = vec![hw];
    let mut offsets: Vec<AlphaOffset> = vec![AlphaOffset::zero(rank)];
    let mut solvers: BTreeMap<AlphaOffset, WeightSpaceSolver> = BTreeMap::new();
    solvers
        .entry(AlphaOffset::zero(rank))
        .or_default()
        .try_insert(&vectors[0], 0);
    let expected = weight_core::weyl_dimension(lambda)? as usize;

    let mut queue = VecDeque::from([0usize]);
    while let Some(b) = queue.pop_front() {
        for i in 1..=rank {
            let w = tensor_apply_e(&vectors[b], i + 1, i);
            if w.is_empty() {
                continue;
            }
            let mut offset = offsets[b].clone();
            offset.0[i - 1] += 1;
            let global = vectors.len();
            if solvers.entry(offset.clone()).or_default().try_insert(&w, global) {
                vectors.push(w);
                offsets.push(offset);
                queue.push_back(global);
                if vectors.len() > expected {
                    return Err(Error::Construction(format!(
                        "lowering closure exceeded Weyl dimension {expected}"
                    )));
                }
            }
        }
    }
    if vectors.len() != expected {
        return Err(Error::Construction(format!(
            "constructed dimension {} differs from Weyl dimension {expected}",
            vectors.len()
        )));
    }

    // canonical order: weight offset, then construction order
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by(|&a, &b| offsets[a].cmp(&offsets[b]).then(a.cmp(&b)));
    let mut position = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }

    let dim = expected;
    let mut mat_e = BTreeMap::new();
    for i in 1..=n1 {
        for j in 1..=n1 {
            if i == j {
                continue;
            }
            let mut columns = Vec::with_capacity(dim);
            for &old in &order {
                let image = tensor_apply_e(&vectors[old], i, j);
                let mut entries = Vec::new();
                if !image.is_empty() {
                    let mu = tensor_weight(image.keys().next().expect("nonempty"), n1);
                    let target = weight_core::offset_from_epsilon(lambda, &mu);
                    let solver = solvers.get(&target).ok_or_else(|| {
                        Error::Construction(format!("E_({i},{j}) left the weights at {target}"))
                    })?;
                    let coords = solver.coordinates(&image).ok_or_else(|| {
                        Error::Construction(format!("E_({i},{j}) image not in span at {target}"))
                    })?;
                    for (m, c) in solver.members.iter().zip(coords) {
                        if !c.is_zero() {
                            entries.push((position[*m], c));
                        }
                    }
                    entries.sort_by_key(|(r, _)| *r);
                }
                columns.push(entries);
            }
            mat_e.insert((i, j), SparseMatrix::from_columns(dim, columns));
        }
    }

    let basis_weights: Vec<AlphaOffset> = order.iter().map(|&o| offsets[o].clone()).collect();
    let epsilon_weights = basis_weights
        .iter()
        .map(|w| weight_core::epsilon_weight(lambda, w))
        .collect();
    let kappa = weight_core::kappa(lambda)?;
    let lw_index = basis_weights
        .iter()
        .position(|w| *w == kappa)
        .ok_or_else(|| Error::Construction("lowest weight missing".into()))?;
    Ok(Irrep {
        rank,
        lambda: lambda.clone(),
        basis_weights,
        epsilon_weights,
        mat_e,
        hw_index: 0,
        lw_index,
        wedge: None,
    })
}

/// `Lambda^k(C^{N+1})` on increasing index tuples, `0 <= k <= N+1`.
pub fn build_wedge(rank: usize, k: usize) -> Result<Irrep> {
    RootSystemA::new(rank)?;
    let n1 = rank + 1;
    if k > n1 {
        return Err(Error::IndexOutOfRange(format!(
            "wedge degree {k} for C^{n1}"
        )));
    }
    let lambda = WeightLabel::fundamental(rank, k);
    let mut elements: Vec<(AlphaOffset, u16)> = (0u16..(1 << n1))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| {
            let mu = tensor_weight(&vec![m], n1);
            (weight_core::offset_from_epsilon(&lambda, &mu), m)
        })
        .collect();
    elements.sort();
    let dim = elements.len();
    let index_of: BTreeMap<u16, usize> =
        elements.iter().enumerate().map(|(i, (_, m))| (*m, i)).collect();
    let mut mat_e = BTreeMap::new();
    for i in 1..=n1 {
        for j in 1..=n1 {
            if i == j {
                continue;
            }
            let columns = elements
                .iter()
                .map(|(_, m)| match wedge_e(*m, i, j) {
                    Some((t, s)) => vec![(index_of[&t], rational::int(s))],
                    None => Vec::new(),
                })
                .collect();
            mat_e.insert((i, j), SparseMatrix::from_columns(dim, columns));
        }
    }
    let kappa = weight_core::kappa(&lambda)?;
    let lw_index = elements
        .iter()
        .position(|(w, _)| *w == kappa)
        .ok_or_else(|| Error::Construction("lowest weight missing".into()))?;
    Ok(Irrep {
        rank,
        basis_weights: elements.iter().map(|(w, _)| w.clone()).collect(),
        epsilon_weights: elements
            .iter()
            .map(|(_, m)| tensor_weight(&vec![*m], n1))
            .collect(),
        mat_e,
        hw_index: 0,
        lw_index,
        wedge: Some(elements.iter().map(|(_, m)| WedgeBasisElement::from_mask(*m)).collect()),
        lambda,
    })
}

/// Splits `v` into weight components; zero components are omitted.
pub fn weight_decompose(rep: &Irrep, v: &[Rational]) -> Result<Vec<(AlphaOffset, Vector)>> {
    rep.check_len(v)?;
    let mut out = Vec::new();
    for (w, idx) in rep.weight_spaces() {
        if idx.iter().all(|&i| v[i].is_zero()) {
            continue;
        }
        let mut comp = linalg::zero_vector(rep.dim());
        for i in idx {
            comp[i] = v[i].clone();
        }
        out.push((w, comp));
    }
    Ok(out)
}

/// Checks `[E_ij, E_kl] = d_jk E_il - d_li E_kj` on every basis vector.
pub fn check_commutation(rep: &Irrep) -> Result<()> {
    let n1 = rep.rank + 1;
    let pairs: Vec<(usize, usize)> = rep.mat_e.keys().copied().collect();
    for b in 0..rep.dim() {
        let v = rep.unit(b);
        let images: BTreeMap<(usize, usize), Vector> =
            pairs.iter().map(|&p| (p, rep.mat_e[&p].apply(&v))).collect();
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                let ab = rep.mat_e[&(i, j)].apply(&images[&(k, l)]);
                let ba = rep.mat_e[&(k, l)].apply(&images[&(i, j)]);
                let lhs: Vector = ab.iter().zip(&ba).map(|(x, y)| x - y).collect();
                let mut x = vec![linalg::zero_vector(n1); n1];
                if j == k {
                    x[i - 1][l - 1] += Rational::one();
                }
                if l == i {
                    x[k - 1][j - 1] -= Rational::one();
                }
                let rhs = linalg::mat_vec(&rep.represent(&x)?, &v);
                if lhs != rhs {
                    return Err(Error::Verification(format!(
                        "[E_({i},{j}), E_({k},{l})] fails on basis vector {b}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Dimension of the span of everything reachable from `v` under all `E_{ij}`.
pub fn generated_dimension(rep: &Irrep, v: &[Rational]) -> Result<usize> {
    rep.check_len(v)?;
    let mut span = Rref::new(rep.dim());
    let mut queue = VecDeque::new();
    if span.insert(v.to_vec()) {
        queue.push_back(v.to_vec());
    }
    while let Some(x) = queue.pop_front() {
        for m in rep.mat_e.values() {
            let y = m.apply(&x);
            if span.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(span.rank())
}

/// Explicit isomorphism `source -> target` (a `target.dim x source.dim`
/// matrix) obtained by sending highest weight vector to highest weight vector
/// and propagating along lowering words. Verified to intertwine every
/// `E_{ij}` and to have full rank.
pub fn intertwiner(source: &Irrep, target: &Irrep) -> Result<Matrix> {
    if source.rank != target.rank || source.lambda != target.lambda || source.dim() != target.dim() {
        return Err(Error::RankMismatch(format!(
            "cannot intertwine V{} of dim {} with V{} of dim {}",
            source.lambda,
            source.dim(),
            target.lambda,
            target.dim()
        )));
    }
    let dim = source.dim();
    let mut span = Rref::new(dim);
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    let mut queue = VecDeque::from([(source.highest_weight_vector(), target.highest_weight_vector())]);
    span.insert(source.highest_weight_vector());
    pairs.push(queue[0].clone());
    while let Some((s, t)) = queue.pop_front() {
        for i in 1..=source.rank {
            let s2 = source.mat_e[&(i + 1, i)].apply(&s);
            if span.insert(s2.clone()) {
                let t2 = target.mat_e[&(i + 1, i)].apply(&t);
                pairs.push((s2.clone(), t2.clone()));
                queue.push_back((s2, t2));
            }
        }
    }
    if pairs.len() != dim {
        return Err(Error::Verification("lowering words do not span the source".into()));
    }
    // columns of S are the source vectors, columns of T the target vectors
    let s_cols: Matrix = pairs.iter().map(|(s, _)| s.clone()).collect();
    let t_cols: Matrix = pairs.iter().map(|(_, t)| t.clone()).collect();
    let s_mat = linalg::transpose(&s_cols, dim);
    let t_mat = linalg::transpose(&t_cols, dim);
    let s_inv = linalg::inverse(&s_mat)
        .ok_or_else(|| Error::Verification("source words are dependent".into()))?;
    let map = linalg::mat_mul(&t_mat, &s_inv);
    for (&(i, j), e_src) in &source.mat_e {
        let lhs = linalg::mat_mul(&map, &e_src.to_dense());
        let rhs = linalg::mat_mul(&target.mat_e[&(i, j)].to_dense(), &map);
        if lhs != rhs {
            return Err(Error::Verification(format!("map does not intertwine E_({i},{j})")));
        }
    }
    if linalg::rank(&map, dim) != dim {
        return Err(Error::Verification("intertwiner is singular".into()));
    }
    Ok(map)
}

/// Largest absolute entry over all stored matrices; used in reports.
pub fn max_entry(rep: &Irrep) -> Rational {
    rep.mat_e
        .values()
        .flat_map(|m| m.rows.iter().flatten())
        .map(|(_, x)| x.abs())
        .fold(Rational::zero(), |a, x| if x > a { x } else { a })
}
