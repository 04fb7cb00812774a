//! Constructions that produce specific vectors inside the submodule generated
//! by their inputs. Every step goes through a [`Tracer`], so the results come
//! with replayable certificates.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use super::certificate::{inverse, Handle, KnownPattern, Tracer};
use crate::divfield::VectorField;
use crate::error::{Error, Result};
use crate::fmodule::{self, Degree, GradedVector, ModuleSpec};
use crate::linalg::{self, Rref, Vector};
use crate::rational::{self, Rational};
use crate::sl_rep::{self, WedgeBasisElement};
use crate::weight_core::AlphaOffset;

fn homogeneous(tr: &Tracer<'_>, h: Handle) -> Result<(Degree, Vector)> {
    let w = tr.value(h);
    let n = w
        .homogeneous_degree()
        .ok_or_else(|| Error::Precondition("expected a nonzero homogeneous vector".into()))?;
    Ok((n.clone(), w.component(n).expect("support degree").clone()))
}

fn field(dim: usize, u_index: usize, r: Vec<i64>) -> Result<VectorField> {
    VectorField::basis(dim, u_index, r)
}

fn unit_shift(dim: usize, index: usize, amount: i64) -> Vec<i64> {
    let mut r = vec![0; dim];
    r[index - 1] = amount;
    r
}

/// `c` with `w = c v_lambda(n)` for a homogeneous `w`, if such `c != 0` exists.
pub fn hw_coefficient(spec: &ModuleSpec, w: &GradedVector) -> Option<(Degree, Rational)> {
    let n = w.homogeneous_degree()?;
    let v = w.component(n)?;
    let hw = spec.rep().hw_index();
    let only_top = v.iter().enumerate().all(|(i, x)| i == hw || x.is_zero());
    (only_top && !v[hw].is_zero()).then(|| (n.clone(), v[hw].clone()))
}

/// Raises a nonzero homogeneous vector until its highest-weight component is
/// nonzero: pick a support weight of least depth and a simple root `i` with
/// `E_{i,i+1}` nonzero on that component, then apply `D(e_{i+1}, e_i)`.
pub fn extract_hw_component(tr: &mut Tracer<'_>, h: Handle) -> Result<Handle> {
    let spec = tr.spec();
    let rep = spec.rep();
    let dim = spec.rank() + 1;
    let hw = rep.hw_index();
    let mut cur = h;
    for step in 0..=rep.dim() {
        let (_, v) = homogeneous(tr, cur)?;
        if !v[hw].is_zero() {
            return Ok(cur);
        }
        if step == rep.dim() {
            break;
        }
        let parts = sl_rep::weight_decompose(rep, &v)?;
        let (_, top) = parts
            .iter()
            .min_by_key(|(w, _)| (w.depth(), w.clone()))
            .expect("nonzero vector");
        let i = (1..dim)
            .find(|&i| !linalg::is_zero(&rep.e(i, i + 1).expect("simple raising").apply(top)))
            .ok_or_else(|| Error::Verification("non-highest component killed by every raising operator".into()))?;
        tr.note(format!("raise with D(e_{}, e_{i})", i + 1));
        cur = tr.act(&field(dim, i + 1, unit_shift(dim, i, 1))?, cur)?;
    }
    Err(Error::Verification("highest weight component not reached within dim V steps".into()))
}

/// `E_ij^m v(n)` for `v(n)` the value of `h`, through the operator-product
/// trick; `m = 0` or `m >= 2`.
pub fn e_power(tr: &mut Tracer<'_>, i: usize, j: usize, m: usize, h: Handle) -> Result<Handle> {
    if m == 0 {
        return Ok(h);
    }
    if m == 1 {
        return Err(Error::Precondition("the product trick reaches E^m for m >= 2 only".into()));
    }
    let spec = tr.spec();
    let (n, v) = homogeneous(tr, h)?;
    let k0 = spec.shifted(&n)[j - 1].clone();
    let mut powers: Vec<Option<Handle>> = vec![Some(h), None];
    for q in 2..=m {
        let shifts = fmodule::default_trick_shifts(q);
        let fields = fmodule::trick_fields(spec, i, j, &shifts)?;
        let product = tr.act_chain(&fields, h)?;
        let coeffs = fmodule::trick_coefficients(&k0, &shifts);
        let lead = inverse(&coeffs[q])?;
        let mut terms = vec![(lead.clone(), product)];
        for (p, slot) in powers.iter().enumerate() {
            if let Some(ph) = slot {
                terms.push((-(&coeffs[p] * &lead), *ph));
            }
        }
        powers.push(Some(tr.combine(&terms)));
    }
    let out = powers[m].expect("computed");
    let mut expect = v;
    let e = spec.rep().e(i, j)?;
    for _ in 0..m {
        expect = e.apply(&expect);
    }
    if *tr.value(out) != GradedVector::homogeneous(n, expect) {
        return Err(Error::Verification(format!("trick extraction of E_({i},{j})^{m} disagrees")));
    }
    Ok(out)
}

fn label_sum(spec: &ModuleSpec, a: usize, b: usize) -> i64 {
    // C_a + ... + C_{b-1}, 1-based
    (a..b).map(|i| spec.lambda().0[i - 1]).sum()
}

/// From a vector with nonzero highest-weight component, a nonzero multiple of
/// `v_lambda(n)`: down-and-up passes `E_{b,a}^c` then `E_{a,b}^c` along the
/// highest root of the `sl` on indices `a..=b`, recursing into a smaller
/// non-minuscule range while more than one maximal theta-string can survive.
pub fn extract_hw_vector(tr: &mut Tracer<'_>, h: Handle) -> Result<Handle> {
    let spec = tr.spec();
    if spec.lambda().total() < 2 {
        return Err(Error::Precondition(format!(
            "lambda = {} is minuscule",
            spec.lambda()
        )));
    }
    let (n, v) = homogeneous(tr, h)?;
    if v[spec.rep().hw_index()].is_zero() {
        return Err(Error::Precondition("highest weight component vanishes".into()));
    }
    let (mut a, mut b) = (1, spec.rank() + 1);
    let mut cur = h;
    loop {
        let c = label_sum(spec, a, b) as usize;
        tr.note(format!("pass on indices {a}..{b} with exponent {c}"));
        let down = e_power(tr, b, a, c, cur)?;
        cur = e_power(tr, a, b, c, down)?;
        if b - a <= 2 {
            break;
        }
        if label_sum(spec, a, b - 1) >= 2 {
            b -= 1;
        } else if label_sum(spec, a + 1, b) >= 2 {
            a += 1;
        } else {
            tr.note("single maximal theta-string");
            break;
        }
    }
    if hw_coefficient(spec, tr.value(cur)).is_none_or(|(m, _)| m != n) {
        return Err(Error::Verification("passes did not isolate the highest weight vector".into()));
    }
    Ok(cur)
}

/// Moves `c v_lambda(n)` to degree `n + a e_1`, directly with
/// `D(e_{N+1}, a e_1)` or, when `(e_{N+1} | n + sigma) = 0`, through
/// `E_{N+1,1}^2 v_lambda`, `D(e_{N+1}, -a e_1)` and `D(e_{N+1}, 2a e_1)`.
pub fn move_first(tr: &mut Tracer<'_>, h: Handle, a: i64) -> Result<Handle> {
    let spec = tr.spec();
    let dim = spec.rank() + 1;
    let (n, _) = hw_coefficient(spec, tr.value(h))
        .ok_or_else(|| Error::Precondition("expected a multiple of v_lambda".into()))?;
    if a == 0 {
        return Ok(h);
    }
    let out = if !spec.shifted(&n)[dim - 1].is_zero() {
        tr.note("first coordinate: direct");
        tr.act(&field(dim, dim, unit_shift(dim, 1, a))?, h)?
    } else {
        tr.note("first coordinate: detour");
        let sq = e_power(tr, dim, 1, 2, h)?;
        let back = tr.act(&field(dim, dim, unit_shift(dim, 1, -a))?, sq)?;
        tr.act(&field(dim, dim, unit_shift(dim, 1, 2 * a))?, back)?
    };
    let mut target = n;
    target[0] += a;
    match hw_coefficient(spec, tr.value(out)) {
        Some((m, _)) if m == target => Ok(out),
        _ => Err(Error::Verification(format!("first-coordinate move by {a} failed"))),
    }
}

/// From `c v_lambda(n)`, a nonzero multiple of `v_lambda(m)`.
pub fn translate_degree(tr: &mut Tracer<'_>, h: Handle, m: &[i64]) -> Result<Handle> {
    let spec = tr.spec();
    let dim = spec.rank() + 1;
    if m.len() != dim {
        return Err(Error::RankMismatch(format!("target degree {m:?}")));
    }
    let (n, _) = hw_coefficient(spec, tr.value(h))
        .ok_or_else(|| Error::Precondition("expected a multiple of v_lambda".into()))?;
    if n == m {
        return Ok(h);
    }
    if n[1..] == m[1..] {
        return move_first(tr, h, m[0] - n[0]);
    }
    let last = dim - 1;
    let sigma = spec.sigma();
    let vanishes = |p: &[i64], c: usize| (rational::int(p[c]) + &sigma[c]).is_zero();
    let degenerate = vanishes(m, last);
    let mut p = n;
    let mut cur = h;

    let target_last = if degenerate { m[last] + 1 } else { m[last] };
    let t = target_last - p[last];
    if t != 0 {
        if vanishes(&p, 0) {
            cur = move_first(tr, cur, 1)?;
            p[0] += 1;
        }
        tr.note("last coordinate move");
        let mixed = tr.act(&field(dim, 1, unit_shift(dim, dim, t))?, cur)?;
        cur = extract_hw_vector(tr, mixed)?;
        p[last] += t;
    }

    let mut goal = m.to_vec();
    goal[last] = target_last;
    if degenerate && vanishes(m, 0) {
        goal[0] += 1;
    }
    let r: Vec<i64> = goal.iter().zip(&p).map(|(g, q)| g - q).collect();
    if r.iter().any(|&x| x != 0) {
        tr.note("r-block");
        cur = tr.act(&field(dim, dim, r)?, cur)?;
        p = goal;
    }

    if degenerate {
        tr.note("degenerate last coordinate");
        let mixed = tr.act(&field(dim, 1, unit_shift(dim, dim, -1))?, cur)?;
        cur = extract_hw_vector(tr, mixed)?;
        p[last] -= 1;
        if p[0] != m[0] {
            cur = move_first(tr, cur, m[0] - p[0])?;
        }
    }
    match hw_coefficient(spec, tr.value(cur)) {
        Some((q, _)) if q == m => Ok(cur),
        _ => Err(Error::Verification(format!("translation to {m:?} failed"))),
    }
}

/// Lowering words `(row, col)` (applied left to right, simple lowerings
/// `E_{i+1,i}`) whose images of `v_lambda` form a basis of `V(lambda)`.
pub fn lowering_words(spec: &ModuleSpec) -> Vec<Vec<(usize, usize)>> {
    let rep = spec.rep();
    let mut span = Rref::new(rep.dim());
    let mut words = vec![Vec::new()];
    let mut queue = VecDeque::from([(Vec::new(), rep.highest_weight_vector())]);
    span.insert(rep.highest_weight_vector());
    while let Some((word, v)) = queue.pop_front() {
        for i in 1..=spec.rank() {
            let y = rep.e(i + 1, i).expect("simple lowering").apply(&v);
            if span.insert(y.clone()) {
                let mut w: Vec<(usize, usize)> = word.clone();
                w.push((i + 1, i));
                words.push(w.clone());
                queue.push_back((w, y));
            }
        }
    }
    words
}

/// Full fibers at every target degree, built from `c v_lambda(n)` (the value
/// of `base`) by lowering words: with `x` already known at `m - e_i` and `m`,
/// `E_ij x(m) = D(e_j, e_i).x(m - e_i) - (e_j | m - e_i + sigma) x(m)`.
pub fn fill_from_hw(tr: &mut Tracer<'_>, base: Handle, targets: &[Degree]) -> Result<BTreeMap<Degree, Vec<Handle>>> {
    let spec = tr.spec();
    let rep = spec.rep();
    let words = lowering_words(spec);
    if words.len() != rep.dim() {
        return Err(Error::Verification("lowering words do not span V(lambda)".into()));
    }
    let mut memo = WordMemo::new();
    let mut out = BTreeMap::new();
    for m in targets {
        let mut handles = Vec::with_capacity(words.len());
        let mut span = Rref::new(rep.dim());
        for w in &words {
            let h = word_at(tr, base, &mut memo, w, m)?;
            span.insert(tr.value(h).component(m).cloned().unwrap_or_default());
            handles.push(h);
        }
        if !span.is_full() {
            return Err(Error::Verification(format!("fiber at {m:?} not filled")));
        }
        out.insert(m.clone(), handles);
    }
    Ok(out)
}

/// Handles of `word . v_lambda` at each degree, already built.
type WordMemo = BTreeMap<(Vec<(usize, usize)>, Degree), Handle>;

fn word_at(
    tr: &mut Tracer<'_>,
    base: Handle,
    memo: &mut WordMemo,
    word: &[(usize, usize)],
    m: &Degree,
) -> Result<Handle> {
    let key = (word.to_vec(), m.clone());
    if let Some(h) = memo.get(&key) {
        return Ok(*h);
    }
    let spec = tr.spec();
    let dim = spec.rank() + 1;
    let h = match word.split_last() {
        None => {
            let moved = translate_degree(tr, base, m)?;
            let (_, c) = hw_coefficient(spec, tr.value(moved)).expect("translated");
            tr.scale(inverse(&c)?, moved)
        }
        Some((&(i, j), prefix)) => {
            let mut below = m.clone();
            below[i - 1] -= 1;
            let x_below = word_at(tr, base, memo, prefix, &below)?;
            let x_here = word_at(tr, base, memo, prefix, m)?;
            let shifted = tr.act(&field(dim, j, unit_shift(dim, i, 1))?, x_below)?;
            let coeff = spec.shifted(&below)[j - 1].clone();
            let h = tr.combine(&[(Rational::one(), shifted), (-coeff, x_here)]);
            let prev = tr.value(x_here).component(m).cloned().unwrap_or_default();
            let expect = spec.rep().e(i, j)?.apply(&prev);
            if *tr.value(h) != GradedVector::homogeneous(m.clone(), expect) {
                return Err(Error::Verification(format!("lowering E_({i},{j}) at {m:?} disagrees")));
            }
            h
        }
    };
    memo.insert(key, h);
    Ok(h)
}

/// Indices chosen by [`wedge_weight_vector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeChoice {
    pub x: usize,
    pub y: usize,
    pub indices: Vec<usize>,
}

/// Pure wedge monomial `e_y ^ e_{i_1} ^ ... ^ e_{i_{k-1}}(n)` (up to a nonzero
/// scalar) inside the submodule generated by `w(n)` and `W~_k`, for
/// `1 <= k <= N-1`, `w` outside `W~_k` and `n + sigma != 0`.
///
/// `w` is first reduced modulo `W_k` so that `e_x` no longer occurs, then each
/// round `t` applies `D(e_{i_t}, e_p)` and `D(e_x, -e_p)` (`p = y` in the first
/// round, `i_{t-1}` afterwards) and removes `(e_x|s)(e_{i_t}|s)` times the input.
pub fn wedge_weight_vector(tr: &mut Tracer<'_>, h: Handle) -> Result<(Handle, WedgeChoice)> {
    let spec = tr.spec();
    let rank = spec.rank();
    let k = spec
        .wedge_degree()
        .ok_or_else(|| Error::Precondition("needs an exterior-power realisation".into()))?;
    if rank < 2 || k == 0 || k + 1 > rank {
        return Err(Error::Precondition(format!(
            "needs N >= 2 and 1 <= k <= N-1, got N = {rank}, k = {k}"
        )));
    }
    let (n, w) = homogeneous(tr, h)?;
    let s = spec.shifted(&n);
    let x = 1 + s
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Precondition("n + sigma vanishes".into()))?;
    if fmodule::w_tilde_piece(spec, &n)?.contains(&w) {
        return Err(Error::Precondition("vector lies in W~".into()));
    }
    let rep = spec.rep();
    let elements = rep.wedge_elements().expect("wedge realisation");
    let index_of = |e: &WedgeBasisElement| rep.wedge_index(e).expect("basis element");

    // e_x = (s - sum_{j != x} s_j e_j) / s_x; the s-part lies in W_k.
    let mut reduced = linalg::zero_vector(rep.dim());
    for (b, e) in elements.iter().enumerate() {
        if w[b].is_zero() {
            continue;
        }
        let Some(pos) = e.indices().iter().position(|&i| i == x) else {
            reduced[b] += &w[b];
            continue;
        };
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        let rest: Vec<usize> = e.indices().iter().copied().filter(|&i| i != x).collect();
        for j in (1..=rank + 1).filter(|&j| j != x) {
            let mut tuple = vec![j];
            tuple.extend(&rest);
            if let Some((sg, f)) = WedgeBasisElement::from_unordered(&tuple) {
                let c = -(&w[b] * &s[j - 1] / &s[x - 1]) * rational::int(sign * sg);
                reduced[index_of(&f)] += c;
            }
        }
    }
    let mut in_w = w.clone();
    linalg::add_scaled(&mut in_w, &-Rational::one(), &reduced);
    let known = tr.known(KnownPattern::W, GradedVector::homogeneous(n.clone(), in_w))?;
    let mut cur = tr.combine(&[(Rational::one(), h), (-Rational::one(), known)]);

    let (_, top) = elements
        .iter()
        .enumerate()
        .filter(|(b, _)| !reduced[*b].is_zero())
        .min_by(|(_, e1), (_, e2)| e1.indices().cmp(e2.indices()))
        .ok_or_else(|| Error::Verification("reduction modulo W vanished".into()))?;
    let indices = top.indices().to_vec();
    let gamma = reduced[index_of(top)].clone();
    let y = (1..=rank + 1)
        .find(|j| *j != x && !indices.contains(j))
        .expect("N + 1 >= k + 2");
    tr.note(format!("x = {x}, y = {y}, indices {indices:?}"));

    let dim = rank + 1;
    let mut prev = y;
    for &it in &indices {
        let first = tr.act(&field(dim, it, unit_shift(dim, prev, 1))?, cur)?;
        let second = tr.act(&field(dim, x, unit_shift(dim, prev, -1))?, first)?;
        let c = &s[x - 1] * &s[it - 1];
        cur = tr.combine(&[(Rational::one(), second), (-c, cur)]);
        prev = it;
    }

    let mut target = vec![y];
    target.extend(&indices[..k - 1]);
    let (sign, elem) = WedgeBasisElement::from_unordered(&target).expect("distinct indices");
    let mut scale = gamma;
    for _ in 0..k {
        scale *= &s[x - 1];
    }
    let mut expect = linalg::zero_vector(rep.dim());
    expect[index_of(&elem)] = scale * rational::int(sign);
    if *tr.value(cur) != GradedVector::homogeneous(n, expect) {
        return Err(Error::Verification("rounds did not isolate a wedge monomial".into()));
    }
    Ok((cur, WedgeChoice { x, y, indices }))
}

/// Offsets of the weights present in a vector.
pub fn support_weights(spec: &ModuleSpec, v: &[Rational]) -> Result<Vec<AlphaOffset>> {
    Ok(sl_rep::weight_decompose(spec.rep(), v)?
        .into_iter()
        .map(|(w, _)| w)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::certificate::certify;
    use crate::rational::{frac, int};
    use crate::weight_core::WeightLabel;

    fn adjoint(sigma: Vec<Rational>) -> ModuleSpec {
        ModuleSpec::new(1, &WeightLabel(vec![2]), sigma).unwrap()
    }

    #[test]
    fn component_of_lowest_vector() {
        let spec = adjoint(vec![frac(1, 2), int(0)]);
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().lowest_weight_vector());
        let (cert, out) = certify(&spec, &[w], |tr, hs| extract_hw_component(tr, hs[0])).unwrap();
        assert_eq!(cert.word().len(), 2);
        assert!(!out.component(&[2, 0]).unwrap()[spec.rep().hw_index()].is_zero());
        assert_eq!(cert.replay(&spec).unwrap(), vec![out]);
    }

    #[test]
    fn component_of_top_vector_is_itself() {
        let spec = adjoint(vec![frac(1, 2), int(0)]);
        let w = GradedVector::homogeneous(vec![1, 0], spec.rep().highest_weight_vector());
        let (cert, out) = certify(&spec, std::slice::from_ref(&w), |tr, hs| extract_hw_component(tr, hs[0])).unwrap();
        assert!(cert.word().is_empty());
        assert_eq!(out, w);
    }

    #[test]
    fn hw_vector_sl3_adjoint() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 1]), vec![frac(1, 3), int(0), frac(1, 2)]).unwrap();
        let rep = spec.rep();
        let zero_weight = rep
            .basis_weights()
            .iter()
            .position(|w| w.0 == vec![1, 1])
            .unwrap();
        let mut v = rep.highest_weight_vector();
        v[zero_weight] = int(5);
        let w = GradedVector::homogeneous(vec![0, 1, 0], v);
        let (cert, out) = certify(&spec, &[w], |tr, hs| extract_hw_vector(tr, hs[0])).unwrap();
        assert!(hw_coefficient(&spec, &out).is_some());
        cert.replay(&spec).unwrap();
    }

    #[test]
    fn hw_vector_rejects_minuscule() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 0]), vec![int(0); 3]).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0, 0], spec.rep().highest_weight_vector());
        assert!(certify(&spec, &[w], |tr, hs| extract_hw_vector(tr, hs[0])).is_err());
    }

    #[test]
    fn detour_when_last_pairing_vanishes() {
        let spec = adjoint(vec![int(0), int(0)]);
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().highest_weight_vector());
        let (cert, out) = certify(&spec, &[w], |tr, hs| translate_degree(tr, hs[0], &[1, 0])).unwrap();
        assert!(cert.notes.iter().any(|n| n.contains("detour")));
        assert_eq!(hw_coefficient(&spec, &out).unwrap().0, vec![1, 0]);
    }

    #[test]
    fn translation_generic_and_degenerate() {
        let spec = ModuleSpec::new(2, &WeightLabel(vec![1, 1]), vec![frac(1, 2), frac(1, 3), int(0)]).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0, 0], spec.rep().highest_weight_vector());
        let (cert, _) = certify(&spec, std::slice::from_ref(&w), |tr, hs| translate_degree(tr, hs[0], &[1, -1, 2])).unwrap();
        assert!(!cert.notes.iter().any(|n| n.contains("detour") || n.contains("degenerate")));
        let (cert, out) = certify(&spec, &[w], |tr, hs| translate_degree(tr, hs[0], &[1, -1, 0])).unwrap();
        assert!(cert.notes.iter().any(|n| n.contains("degenerate")));
        assert_eq!(hw_coefficient(&spec, &out).unwrap().0, vec![1, -1, 0]);
        cert.replay(&spec).unwrap();
    }

    #[test]
    fn fill_adjoint_fibers() {
        let spec = adjoint(vec![frac(1, 2), int(0)]);
        let w = GradedVector::homogeneous(vec![0, 0], spec.rep().highest_weight_vector());
        let mut tr = Tracer::new(&spec);
        let h = tr.input(w).unwrap();
        let map = fill_from_hw(&mut tr, h, &[vec![0, 0], vec![1, -1]]).unwrap();
        assert_eq!(map.len(), 2);
        assert!(map.values().all(|hs| hs.len() == 3));
        assert_eq!(lowering_words(&spec).iter().map(Vec::len).max(), Some(2));
    }

    #[test]
    fn wedge_vector_single_round() {
        let spec = ModuleSpec::wedge(2, 1, vec![frac(1, 3), int(0), int(0)]).unwrap();
        let w = GradedVector::homogeneous(vec![0, 0, 0], vec![int(1), int(2), int(-1)]);
        let (cert, out) = certify(&spec, &[w], |tr, hs| Ok(wedge_weight_vector(tr, hs[0])?.0)).unwrap();
        let v = out.component(&[0, 0, 0]).unwrap();
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        cert.replay(&spec).unwrap();
    }

    #[test]
    fn wedge_vector_two_rounds() {
        let spec = ModuleSpec::wedge(3, 2, vec![frac(1, 2), frac(1, 3), int(0), int(1)]).unwrap();
        let rep = spec.rep();
        let idx = |i: Vec<usize>| rep.wedge_index(&WedgeBasisElement::new(i).unwrap()).unwrap();
        let mut v = linalg::zero_vector(6);
        v[idx(vec![1, 2])] = int(1);
        v[idx(vec![3, 4])] = int(1);
        let w = GradedVector::homogeneous(vec![1, 0, 0, 0], v);
        let (cert, out) = certify(&spec, &[w], |tr, hs| Ok(wedge_weight_vector(tr, hs[0])?.0)).unwrap();
        assert_eq!(out.component(&[1, 0, 0, 0]).unwrap().iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(cert.replay(&spec).unwrap(), vec![out]);
    }
}
