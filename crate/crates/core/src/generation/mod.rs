//! Submodule generation: truncated closure and the constructive procedures
//! that reach highest weight vectors, move them between degrees and isolate
//! wedge monomials, all with replayable certificates.

pub mod certificate;
pub mod closure;
pub mod procedures;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use certificate::{certify, Certificate, Handle, KnownPattern, Tracer};
pub use closure::{closure, closure_with_generators, ClosureOutcome, ClosureReport, TruncationBox, Verdict};

use crate::divfield::VectorField;
use crate::fmodule::{self, Degree, GradedVector, ModuleSpec};
use crate::linalg::Vector;
use crate::rational::{self, Rational};

/// Coefficients are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 3;

/// The deterministic generator behind every sampled seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coefficients<R: Rng>(rng: &mut R, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| rng.random_range(-COEFF_BOUND..=COEFF_BOUND))
        .collect()
}

/// Nonzero vector with small integer entries.
pub fn random_vector<R: Rng>(rng: &mut R, len: usize) -> Vector {
    loop {
        let c = random_coefficients(rng, len);
        if c.iter().any(|&x| x != 0) {
            return c.into_iter().map(rational::int).collect();
        }
    }
}

/// Divergence-zero field with `|r|_inf <= radius`: integer `u` projected onto `r^perp`.
pub fn random_divergence_free<R: Rng>(rng: &mut R, rank: usize, radius: i64) -> VectorField {
    let dim = rank + 1;
    let r: Vec<i64> = (0..dim).map(|_| rng.random_range(-radius..=radius)).collect();
    let mut u: Vec<Rational> = random_vector(rng, dim);
    let rr: i64 = r.iter().map(|x| x * x).sum();
    if rr != 0 {
        let c = rational::dot_int(&u, &r) / rational::int(rr);
        for (ui, ri) in u.iter_mut().zip(&r) {
            *ui -= &c * rational::int(*ri);
        }
    }
    VectorField::divergence_free(u, r).expect("projected onto r^perp")
}

pub fn random_homogeneous<R: Rng>(rng: &mut R, spec: &ModuleSpec, n: Degree) -> GradedVector {
    GradedVector::homogeneous(n, random_vector(rng, spec.dim()))
}

/// Random homogeneous vector at `n` whose class modulo `W~_k` is nonzero.
/// `None` when the quotient fiber vanishes.
pub fn random_outside_w_tilde<R: Rng>(rng: &mut R, spec: &ModuleSpec, n: Degree) -> crate::Result<Option<GradedVector>> {
    let piece = fmodule::w_tilde_piece(spec, &n)?;
    if piece.is_full() {
        return Ok(None);
    }
    loop {
        let v = random_vector(rng, spec.dim());
        if !piece.contains(&v) {
            return Ok(Some(GradedVector::homogeneous(n, v)));
        }
    }
}

/// Random nonzero element of the `W_k` piece at `n`. `None` when it is zero.
pub fn random_in_w<R: Rng>(rng: &mut R, spec: &ModuleSpec, n: Degree) -> crate::Result<Option<GradedVector>> {
    let piece = fmodule::w_piece(spec, &n)?;
    if piece.rank() == 0 {
        return Ok(None);
    }
    loop {
        let c = random_coefficients(rng, piece.rank());
        let mut v = crate::linalg::zero_vector(spec.dim());
        for (ci, row) in c.iter().zip(piece.rows()) {
            crate::linalg::add_scaled(&mut v, &rational::int(*ci), row);
        }
        if !crate::linalg::is_zero(&v) {
            return Ok(Some(GradedVector::homogeneous(n, v)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn sampling_is_deterministic() {
        let a = random_coefficients(&mut rng(7), 10);
        let b = random_coefficients(&mut rng(7), 10);
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.abs() <= COEFF_BOUND));
    }

    #[test]
    fn samples_respect_patterns() {
        let spec = ModuleSpec::wedge(2, 1, vec![frac(1, 3), int(0), int(0)]).unwrap();
        let mut r = rng(1);
        let n = vec![0, 1, 0];
        let w = random_in_w(&mut r, &spec, n.clone()).unwrap().unwrap();
        assert!(fmodule::w_piece(&spec, &n).unwrap().contains(w.component(&n).unwrap()));
        let o = random_outside_w_tilde(&mut r, &spec, n.clone()).unwrap().unwrap();
        assert!(!fmodule::w_tilde_piece(&spec, &n).unwrap().contains(o.component(&n).unwrap()));
        let z = ModuleSpec::wedge(2, 0, vec![int(0); 3]).unwrap();
        assert!(random_in_w(&mut r, &z, vec![1, 0, 0]).unwrap().is_none());
        assert!(random_outside_w_tilde(&mut r, &z, vec![0, 0, 0]).unwrap().is_none());
    }
}
