use std::sync::OnceLock;

use divtorus::divfield::{self, FieldSum, VectorField};
use divtorus::fmodule::{self, GradedVector, ModuleSpec};
use divtorus::rational::{frac, int, Rational};
use divtorus::weight_core::{self, AlphaOffset, RootSystemA, WeightLabel};
use num_traits::Zero;
use proptest::prelude::*;

/// Divergence-zero field from integer data: `u` is projected onto `r^perp`.
fn field(u: Vec<i64>, r: Vec<i64>) -> VectorField {
    let rr: i64 = r.iter().map(|x| x * x).sum();
    let ur: i64 = u.iter().zip(&r).map(|(a, b)| a * b).sum();
    let u: Vec<Rational> = u
        .iter()
        .zip(&r)
        .map(|(&a, &b)| if rr == 0 { int(a) } else { int(a) - frac(ur * b, rr) })
        .collect();
    VectorField::divergence_free(u, r).unwrap()
}

fn field_strategy(dim: usize) -> impl Strategy<Value = VectorField> {
    (
        prop::collection::vec(-3i64..=3, dim),
        prop::collection::vec(-2i64..=2, dim),
    )
        .prop_map(|(u, r)| field(u, r))
}

fn specs() -> &'static [ModuleSpec] {
    static SPECS: OnceLock<Vec<ModuleSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        vec![
            ModuleSpec::new(1, &WeightLabel(vec![2]), vec![frac(1, 2), int(0)]).unwrap(),
            ModuleSpec::new(2, &WeightLabel(vec![1, 1]), vec![frac(1, 3), int(0), int(0)]).unwrap(),
            ModuleSpec::new(2, &WeightLabel(vec![1, 0]), vec![int(0); 3]).unwrap(),
            ModuleSpec::wedge(2, 2, vec![frac(1, 2), frac(-1, 3), int(1)]).unwrap(),
            ModuleSpec::wedge(3, 2, vec![int(1), int(0), int(-1), int(0)]).unwrap(),
        ]
    })
}

/// A spec, three fields and a homogeneous vector for it.
fn module_case() -> impl Strategy<Value = (usize, VectorField, VectorField, GradedVector)> {
    (0..specs().len()).prop_flat_map(|i| {
        let spec = &specs()[i];
        let dim = spec.rank() + 1;
        (
            Just(i),
            field_strategy(dim),
            field_strategy(dim),
            prop::collection::vec(-2i64..=2, dim),
            prop::collection::vec(-3i64..=3, spec.dim()),
        )
            .prop_map(|(i, f, g, n, v)| {
                let w = GradedVector::homogeneous(n, v.into_iter().map(int).collect());
                (i, f, g, w)
            })
    })
}

fn wedge_case() -> impl Strategy<Value = (usize, usize, Vec<Rational>, VectorField, Vec<i64>, Vec<i64>)> {
    (1usize..=3).prop_flat_map(|rank| {
        (
            Just(rank),
            0..=rank,
            prop::collection::vec((-2i64..=2, 1i64..=3), rank + 1),
            field_strategy(rank + 1),
            prop::collection::vec(-2i64..=2, rank + 1),
            prop::collection::vec(-3i64..=3, 8),
        )
            .prop_map(|(rank, k, sigma, f, n, coeffs)| {
                let sigma = sigma.into_iter().map(|(p, q)| frac(p, q)).collect();
                (rank, k, sigma, f, n, coeffs)
            })
    })
}

fn label_and_offset() -> impl Strategy<Value = (WeightLabel, AlphaOffset, usize, usize)> {
    (1usize..=4).prop_flat_map(|rank| {
        (
            prop::collection::vec(0i64..=2, rank),
            prop::collection::vec(-3i64..=3, rank),
            1..=rank,
            1..=rank,
        )
            .prop_map(|(l, g, a, b)| (WeightLabel(l), AlphaOffset(g), a.min(b), a.max(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution((lambda, gamma, a, b) in label_and_offset()) {
        let root = RootSystemA::new(lambda.rank()).unwrap().interval(a, b).unwrap();
        let once = weight_core::reflect(&lambda, &gamma, root).unwrap();
        prop_assert_eq!(weight_core::reflect(&lambda, &once, root).unwrap(), gamma.clone());
        let before = weight_core::pairing(&weight_core::label_of(&lambda, &gamma), root).unwrap();
        let after = weight_core::pairing(&weight_core::label_of(&lambda, &once), root).unwrap();
        prop_assert_eq!(after, -before);
    }

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(
        (f, g, h) in (1usize..=3).prop_flat_map(|rank| {
            (field_strategy(rank + 1), field_strategy(rank + 1), field_strategy(rank + 1))
        })
    ) {
        let fg = divfield::bracket(&f, &g).unwrap();
        let gf = divfield::bracket(&g, &f).unwrap();
        let mut sum = FieldSum::new();
        sum.add(&fg);
        sum.add(&gf);
        prop_assert!(sum.is_zero());
        prop_assert!(fg.is_divergence_zero());
        let mut jacobi = FieldSum::new();
        jacobi.add(&divfield::bracket(&f, &divfield::bracket(&g, &h).unwrap()).unwrap());
        jacobi.add(&divfield::bracket(&g, &divfield::bracket(&h, &f).unwrap()).unwrap());
        jacobi.add(&divfield::bracket(&h, &fg).unwrap());
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn action_is_a_module_action((i, f, g, w) in module_case()) {
        let spec = &specs()[i];
        let fg = divfield::bracket(&f, &g).unwrap();
        let lhs = fmodule::act(spec, &fg, &w).unwrap();
        let fgw = fmodule::act(spec, &f, &fmodule::act(spec, &g, &w).unwrap()).unwrap();
        let gfw = fmodule::act(spec, &g, &fmodule::act(spec, &f, &w).unwrap()).unwrap();
        let mut rhs = fgw;
        rhs.add_scaled(&int(-1), &gfw);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_operators_are_traceless((i, f, _g, _w) in module_case()) {
        let op = specs()[i].field_operator(&f).unwrap();
        prop_assert!(op.trace().is_zero());
    }

    #[test]
    fn psi_is_equivariant((rank, k, sigma, f, n, coeffs) in wedge_case()) {
        let source = ModuleSpec::wedge(rank, k, sigma).unwrap();
        let target = fmodule::psi_target(&source).unwrap();
        let v: Vec<Rational> = coeffs.iter().cycle().take(source.dim()).map(|&c| int(c)).collect();
        let w = GradedVector::homogeneous(n, v);
        let lhs = fmodule::psi(&source, &target, &fmodule::act(&source, &f, &w).unwrap()).unwrap();
        let rhs = fmodule::act(&target, &f, &fmodule::psi(&source, &target, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn w_and_w_tilde_are_invariant((rank, k, sigma, f, n, _c) in wedge_case(), integral in any::<bool>()) {
        let sigma = if integral { sigma.iter().map(|s| s.floor()).collect() } else { sigma };
        let spec = ModuleSpec::wedge(rank, k, sigma).unwrap();
        let target: Vec<i64> = n.iter().zip(f.r()).map(|(a, b)| a + b).collect();
        for (piece, image_piece) in [
            (fmodule::w_piece(&spec, &n).unwrap(), fmodule::w_piece(&spec, &target).unwrap()),
            (fmodule::w_tilde_piece(&spec, &n).unwrap(), fmodule::w_tilde_piece(&spec, &target).unwrap()),
        ] {
            for row in piece.rows() {
                let w = GradedVector::homogeneous(n.clone(), row.clone());
                let image = fmodule::act(&spec, &f, &w).unwrap();
                if let Some(v) = image.component(&target) {
                    prop_assert!(image_piece.contains(v));
                }
            }
        }
    }
}
