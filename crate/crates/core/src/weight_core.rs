//! Root and weight combinatorics for type `A_N`.
//!
//! Weights of `V(lambda)` are stored as [`AlphaOffset`]s, the nonnegative
//! coefficients `g_i` in `gamma = lambda - sum g_i alpha_i`. Labels
//! (`<gamma, alpha_i>`) are derived through the Cartan matrix. Positive roots
//! are the intervals `alpha_i + ... + alpha_j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The root system `A_N`, ambient algebra `sl_{N+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemA {
    rank: usize,
}

impl RootSystemA {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        Ok(Self { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `(i, j)` of the Cartan matrix, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    pub fn highest_root(&self) -> RootInterval {
        RootInterval {
            start: 1,
            end: self.rank,
        }
    }

    pub fn positive_roots(&self) -> Vec<RootInterval> {
        let mut out = Vec::new();
        for start in 1..=self.rank {
            for end in start..=self.rank {
                out.push(RootInterval { start, end });
            }
        }
        out
    }

    pub fn interval(&self, start: usize, end: usize) -> Result<RootInterval> {
        if start == 0 || start > end || end > self.rank {
            return Err(Error::IntervalOutOfRange {
                start,
                end,
                rank: self.rank,
            });
        }
        Ok(RootInterval { start, end })
    }
}

/// The positive root `alpha_start + ... + alpha_end` (1-based, inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootInterval {
    pub start: usize,
    pub end: usize,
}

impl RootInterval {
    pub fn contains(&self, i: usize) -> bool {
        self.start <= i && i <= self.end
    }

    /// The root as the matrix-unit pair `(start, end + 1)`: `E_{start,end+1}`
    /// is its root vector and `(start, end+1)` its Weyl transposition.
    pub fn transposition(&self) -> (usize, usize) {
        (self.start, self.end + 1)
    }
}

/// `(<gamma, alpha_1>, ..., <gamma, alpha_N>)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightLabel(pub Vec<i64>);

impl WeightLabel {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `omega_k`, with `omega_0 = omega_{N+1} = 0`.
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut out = vec![0; rank];
        if (1..=rank).contains(&k) {
            out[k - 1] = 1;
        }
        Self(out)
    }

    /// Parses a comma-separated label such as `"1,0,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid label entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Checks the label is a dominant highest weight for `rs`.
    pub fn check_highest(&self, rs: RootSystemA) -> Result<()> {
        if self.rank() != rs.rank() {
            return Err(Error::LabelLength {
                got: self.rank(),
                expected: rs.rank(),
            });
        }
        match self.0.iter().position(|&c| c < 0) {
            Some(i) => Err(Error::NegativeLabel {
                index: i + 1,
                value: self.0[i],
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Coefficients `(g_1, ..., g_N)` with `gamma = lambda - sum g_i alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaOffset(pub Vec<i64>);

impl AlphaOffset {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn depth(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Offset of `gamma + k * root`.
    pub fn shifted(&self, root: RootInterval, k: i64) -> Self {
        let mut out = self.0.clone();
        for i in root.start..=root.end {
            out[i - 1] -= k;
        }
        Self(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&g| g >= 0)
    }
}

impl fmt::Display for AlphaOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Label of the weight `lambda - sum offset_i alpha_i`.
pub fn label_of(lambda: &WeightLabel, offset: &AlphaOffset) -> WeightLabel {
    let n = lambda.rank();
    let mut out = lambda.0.clone();
    for i in 0..n {
        let mut s = 2 * offset.0[i];
        if i > 0 {
            s -= offset.0[i - 1];
        }
        if i + 1 < n {
            s -= offset.0[i + 1];
        }
        out[i] -= s;
    }
    WeightLabel(out)
}

/// `<gamma, alpha_start + ... + alpha_end>`: the sum of label entries over the interval.
pub fn pairing(gamma: &WeightLabel, root: RootInterval) -> Result<i64> {
    if root.start == 0 || root.start > root.end || root.end > gamma.rank() {
        return Err(Error::IntervalOutOfRange {
            start: root.start,
            end: root.end,
            rank: gamma.rank(),
        });
    }
    Ok(gamma.0[root.start - 1..root.end].iter().sum())
}

/// Reflection of `gamma` (an offset from `lambda`) through `root`:
/// `gamma - <gamma, root> root`.
pub fn reflect(lambda: &WeightLabel, gamma: &AlphaOffset, root: RootInterval) -> Result<AlphaOffset> {
    let p = pairing(&label_of(lambda, gamma), root)?;
    Ok(gamma.shifted(root, -p))
}

/// Lowest-weight coefficients `kappa` of `V(lambda)`, from the closed form
/// `kappa_j = kappa_{N+1-j} = sum_{p=1}^{j} sum_{i=p}^{N+1-p} C_i`.
pub fn kappa(lambda: &WeightLabel) -> Result<AlphaOffset> {
    let rs = RootSystemA::new(lambda.rank())?;
    lambda.check_highest(rs)?;
    let n = lambda.rank();
    let c = &lambda.0;
    let mut out = vec![0; n];
    let mut acc = 0;
    for j in 1..=n.div_ceil(2) {
        acc += c[j - 1..=n - j].iter().sum::<i64>();
        out[j - 1] = acc;
        out[n - j] = acc;
    }
    Ok(AlphaOffset(out))
}

/// Image of `lambda` under the longest Weyl element, written as the product
/// of disjoint transpositions `(1+p, N+1-p)`. Identity factors (the middle
/// one when `N` is even) are skipped.
pub fn longest_element_image(lambda: &WeightLabel) -> Result<AlphaOffset> {
    let rs = RootSystemA::new(lambda.rank())?;
    lambda.check_highest(rs)?;
    let n = lambda.rank();
    let mut gamma = AlphaOffset::zero(n);
    for p in 0..=n / 2 {
        let (a, b) = (1 + p, n + 1 - p);
        if a >= b {
            continue;
        }
        gamma = reflect(lambda, &gamma, rs.interval(a, b - 1)?)?;
    }
    Ok(gamma)
}

pub fn is_minuscule(lambda: &WeightLabel) -> bool {
    minuscule_index(lambda).is_some()
}

/// `Some(0)` for the zero label, `Some(k)` for `omega_k`, otherwise `None`.
pub fn minuscule_index(lambda: &WeightLabel) -> Option<usize> {
    let nonzero: Vec<_> = lambda.0.iter().enumerate().filter(|(_, &c)| c != 0).collect();
    match nonzero.as_slice() {
        [] => Some(0),
        [(i, 1)] => Some(i + 1),
        _ => None,
    }
}

/// Length of a maximal theta-string and the shape of its admissible tops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaStringData {
    pub length: i64,
    rank: usize,
}

impl ThetaStringData {
    /// Necessary condition for `gamma` to top a maximal theta-string:
    /// `g_1 = g_N = 0`.
    pub fn is_admissible_top(&self, gamma: &AlphaOffset) -> bool {
        gamma.0[0] == 0 && gamma.0[self.rank - 1] == 0
    }
}

pub fn theta_string_data(lambda: &WeightLabel) -> Result<ThetaStringData> {
    let rs = RootSystemA::new(lambda.rank())?;
    lambda.check_highest(rs)?;
    Ok(ThetaStringData {
        length: 1 + lambda.total(),
        rank: lambda.rank(),
    })
}

/// A maximal run of weights `top, top - theta, ...` inside a weight set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaString {
    pub top: AlphaOffset,
    pub length: i64,
}

/// Splits a weight set into theta-strings. Returns an error if some string is
/// broken (a gap between two weights congruent mod theta).
pub fn theta_strings(weights: &BTreeSet<AlphaOffset>) -> Result<Vec<ThetaString>> {
    // class representative: subtract the minimum coordinate from every coordinate
    let mut classes: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for w in weights {
        let m = *w.0.iter().min().expect("nonempty rank");
        let key: Vec<i64> = w.0.iter().map(|g| g - m).collect();
        classes.entry(key).or_default().push(m);
    }
    let mut out = Vec::new();
    for (key, mut levels) in classes {
        levels.sort_unstable();
        for pair in levels.windows(2) {
            if pair[1] != pair[0] + 1 {
                return Err(Error::Verification(format!(
                    "theta-string through class {key:?} is broken"
                )));
            }
        }
        let top_level = levels[0];
        let top = AlphaOffset(key.iter().map(|g| g + top_level).collect());
        out.push(ThetaString {
            top,
            length: levels.len() as i64,
        });
    }
    Ok(out)
}

/// `dim V(lambda)` by the Weyl dimension formula.
pub fn weyl_dimension(lambda: &WeightLabel) -> Result<u64> {
    let rs = RootSystemA::new(lambda.rank())?;
    lambda.check_highest(rs)?;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for root in rs.positive_roots() {
        let shifted: i64 = lambda.0[root.start - 1..root.end].iter().map(|c| c + 1).sum();
        num *= BigUint::from(shifted as u64);
        den *= BigUint::from((root.end - root.start + 1) as u64);
    }
    let q = &num / &den;
    debug_assert_eq!(&q * &den, num);
    u64::try_from(q).map_err(|_| Error::BoundExceeded("dimension does not fit in u64".into()))
}

/// Weight multiplicities of `V(lambda)` by Freudenthal's recursion, in exact
/// integers. Every weight with nonzero multiplicity appears as a key.
pub fn weight_multiplicities(lambda: &WeightLabel) -> Result<BTreeMap<AlphaOffset, u64>> {
    let rs = RootSystemA::new(lambda.rank())?;
    lambda.check_highest(rs)?;
    let n = lambda.rank();
    let roots = rs.positive_roots();
    let mut mult: BTreeMap<AlphaOffset, u64> = BTreeMap::new();
    mult.insert(AlphaOffset::zero(n), 1);
    let mut layer: BTreeSet<AlphaOffset> = BTreeSet::from([AlphaOffset::zero(n)]);
    while !layer.is_empty() {
        let mut candidates = BTreeSet::new();
        for w in &layer {
            for i in 0..n {
                let mut c = w.clone();
                c.0[i] += 1;
                candidates.insert(c);
            }
        }
        let mut next = BTreeSet::new();
        for gamma in candidates {
            let denom = freudenthal_denominator(lambda, &gamma);
            let mut numer: i64 = 0;
            for &root in &roots {
                let mut k = 1;
                loop {
                    let above = gamma.shifted(root, k);
                    if !above.is_nonnegative() {
                        break;
                    }
                    if let Some(&m) = mult.get(&above) {
                        let p = pairing(&label_of(lambda, &above), root)?;
                        numer += 2 * m as i64 * p;
                    }
                    k += 1;
                }
            }
            if numer == 0 {
                continue;
            }
            if denom <= 0 || numer % denom != 0 {
                return Err(Error::Construction(format!(
                    "Freudenthal recursion produced {numer}/{denom} at {gamma}"
                )));
            }
            mult.insert(gamma.clone(), (numer / denom) as u64);
            next.insert(gamma);
        }
        layer = next;
    }
    Ok(mult)
}

/// `(lambda+rho, lambda+rho) - (mu+rho, mu+rho)` for `mu = lambda - gamma`.
fn freudenthal_denominator(lambda: &WeightLabel, gamma: &AlphaOffset) -> i64 {
    let n = lambda.rank();
    let g = &gamma.0;
    let linear: i64 = (0..n).map(|i| g[i] * (lambda.0[i] + 1)).sum();
    let mut quad = 0;
    for i in 0..n {
        quad += 2 * g[i] * g[i];
        if i + 1 < n {
            quad -= 2 * g[i] * g[i + 1];
        }
    }
    2 * linear - quad
}

/// Weight in `epsilon` coordinates (`gl_{N+1}` weight with last entry of
/// `lambda` normalised to 0): `mu_j = sum_{i>=j} C_i - (g_j - g_{j-1})`.
pub fn epsilon_weight(lambda: &WeightLabel, offset: &AlphaOffset) -> Vec<i64> {
    let n = lambda.rank();
    let mut out = vec![0; n + 1];
    let mut tail = 0;
    for j in (0..n).rev() {
        tail += lambda.0[j];
        out[j] = tail;
    }
    for j in 0..=n {
        let cur = if j < n { offset.0[j] } else { 0 };
        let prev = if j > 0 { offset.0[j - 1] } else { 0 };
        out[j] -= cur - prev;
    }
    out
}

/// Inverse of [`epsilon_weight`]. `mu` is taken modulo the all-ones vector,
/// so its total may differ from that of `lambda` by a multiple of `N+1`.
pub fn offset_from_epsilon(lambda: &WeightLabel, mu: &[i64]) -> AlphaOffset {
    let top = epsilon_weight(lambda, &AlphaOffset::zero(lambda.rank()));
    let excess: i64 = mu.iter().sum::<i64>() - top.iter().sum::<i64>();
    let shift = excess / mu.len() as i64;
    let mut acc = 0;
    let mut out = Vec::with_capacity(lambda.rank());
    for j in 0..lambda.rank() {
        acc += top[j] - (mu[j] - shift);
        out.push(acc);
    }
    AlphaOffset(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(xs: &[i64]) -> WeightLabel {
        WeightLabel(xs.to_vec())
    }

    #[test]
    fn pairing_examples() {
        let rs = RootSystemA::new(2).unwrap();
        assert_eq!(pairing(&l(&[1, 1]), rs.interval(1, 2).unwrap()).unwrap(), 2);
        let rs3 = RootSystemA::new(3).unwrap();
        for root in rs3.positive_roots() {
            assert_eq!(pairing(&l(&[0, 0, 0]), root).unwrap(), 0);
        }
        assert_eq!(pairing(&l(&[0, 1, 0]), rs3.highest_root()).unwrap(), 1);
        let bad = RootInterval { start: 2, end: 4 };
        assert!(pairing(&l(&[0, 1, 0]), bad).is_err());
        assert!(rs3.interval(3, 2).is_err());
    }

    #[test]
    fn reflect_examples() {
        let lambda = l(&[1, 2, 0]);
        let theta = RootSystemA::new(3).unwrap().highest_root();
        assert_eq!(
            reflect(&lambda, &AlphaOffset::zero(3), theta).unwrap(),
            AlphaOffset(vec![3, 3, 3])
        );
        let w2 = l(&[0, 1, 0]);
        let a2 = RootInterval { start: 2, end: 2 };
        assert_eq!(
            reflect(&w2, &AlphaOffset::zero(3), a2).unwrap(),
            AlphaOffset(vec![0, 1, 0])
        );
        // <omega_2, alpha_1> = 0: fixed
        let a1 = RootInterval { start: 1, end: 1 };
        assert_eq!(
            reflect(&w2, &AlphaOffset::zero(3), a1).unwrap(),
            AlphaOffset::zero(3)
        );
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&l(&[1, 1])).unwrap(), AlphaOffset(vec![2, 2]));
        assert_eq!(kappa(&l(&[0, 1, 0])).unwrap(), AlphaOffset(vec![1, 2, 1]));
        for n in 1..=5 {
            assert_eq!(kappa(&WeightLabel::zero(n)).unwrap(), AlphaOffset::zero(n));
        }
        assert!(matches!(
            kappa(&l(&[1, -1])),
            Err(Error::NegativeLabel { index: 2, .. })
        ));
    }

    #[test]
    fn kappa_agrees_with_longest_element() {
        for lambda in [l(&[2]), l(&[1, 2]), l(&[1, 0, 2]), l(&[0, 1, 1, 0]), l(&[3, 0, 0, 1])] {
            assert_eq!(kappa(&lambda).unwrap(), longest_element_image(&lambda).unwrap());
        }
    }

    #[test]
    fn theta_data_examples() {
        assert_eq!(theta_string_data(&l(&[1, 1])).unwrap().length, 3);
        assert_eq!(theta_string_data(&l(&[1, 0, 0])).unwrap().length, 2);
        let d = theta_string_data(&l(&[1, 0, 0, 1])).unwrap();
        assert_eq!(d.length, 3);
        assert!(d.is_admissible_top(&AlphaOffset(vec![0, 1, 2, 0])));
        assert!(!d.is_admissible_top(&AlphaOffset(vec![1, 1, 1, 0])));
    }

    #[test]
    fn minuscule_examples() {
        assert!(is_minuscule(&l(&[0, 0, 0])));
        assert!(is_minuscule(&l(&[0, 1, 0])));
        assert!(!is_minuscule(&l(&[1, 0, 1])));
        assert!(!is_minuscule(&l(&[2, 0])));
        assert_eq!(minuscule_index(&l(&[0, 0, 1])), Some(3));
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(weyl_dimension(&l(&[2])).unwrap(), 3);
        assert_eq!(weyl_dimension(&l(&[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dimension(&l(&[0, 1, 0])).unwrap(), 6);
        assert_eq!(weyl_dimension(&l(&[1, 1, 1, 1])).unwrap(), 1024);
    }

    #[test]
    fn freudenthal_adjoint_sl3() {
        let m = weight_multiplicities(&l(&[1, 1])).unwrap();
        assert_eq!(m.len(), 7);
        assert_eq!(m[&AlphaOffset(vec![1, 1])], 2);
        assert_eq!(m.values().sum::<u64>(), 8);
        assert_eq!(m.keys().max_by_key(|g| g.depth()).unwrap(), &AlphaOffset(vec![2, 2]));
    }

    #[test]
    fn epsilon_roundtrip() {
        let lambda = l(&[1, 0, 2]);
        for g in weight_multiplicities(&lambda).unwrap().keys() {
            let mu = epsilon_weight(&lambda, g);
            assert_eq!(&offset_from_epsilon(&lambda, &mu), g);
            let lab = label_of(&lambda, g);
            for i in 0..3 {
                assert_eq!(lab.0[i], mu[i] - mu[i + 1]);
            }
        }
    }

    #[test]
    fn theta_strings_of_adjoint() {
        let weights: BTreeSet<_> = weight_multiplicities(&l(&[1, 1])).unwrap().into_keys().collect();
        let strings = theta_strings(&weights).unwrap();
        let max = strings.iter().map(|s| s.length).max().unwrap();
        assert_eq!(max, 3);
        let tops: Vec<_> = strings.iter().filter(|s| s.length == max).collect();
        assert_eq!(tops.len(), 1);
        assert_eq!(tops[0].top, AlphaOffset::zero(2));
    }
}
