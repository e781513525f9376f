mod common;

use common::Q;
use hirano_core::cline::{cline_classic, product_commuting};
use hirano_core::hirano::{classify_local_2x2, hirano, hirano_field, hirano_local_2x2, verify_hirano_axioms, Case};
use hirano_core::matrices::{in_double_commutant, peirce_blocks};
use hirano_core::rings::quadratic_roots_in_ring;
use hirano_core::spectral::{drazin_field, spectral_idempotent};
use hirano_core::{RingDescriptor, SquareMatrix};
use num_rational::BigRational;
use proptest::prelude::*;

fn ring() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![
        Just(Q),
        Just(RingDescriptor::Integers),
        (2u64..40).prop_map(RingDescriptor::IntegersMod),
        prop::sample::select(vec![2u64, 3, 5]).prop_map(RingDescriptor::PLocal),
    ]
}

/// Entries `n / d` with `d` a unit of the ring (1 outside Q and Z_(p)).
fn matrix_over(ring: RingDescriptor, dim: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = SquareMatrix> {
    dim.prop_flat_map(move |k| {
        prop::collection::vec((-bound..=bound, 1i64..=3), k * k).prop_map(move |v| {
            SquareMatrix::from_fn(ring, k, |i, j| {
                let (n, d) = v[i * k + j];
                let d = match ring {
                    RingDescriptor::Rationals => d,
                    RingDescriptor::PLocal(p) if !(d as u64).is_multiple_of(p) => d,
                    _ => 1,
                };
                ring.element(BigRational::new(n.into(), d.into())).unwrap()
            })
        })
    })
}

fn any_matrix() -> impl Strategy<Value = SquareMatrix> {
    ring().prop_flat_map(|r| matrix_over(r, 1..=4, 6))
}

fn rational_matrix(dim: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = SquareMatrix> {
    dim.prop_flat_map(move |k| {
        prop::collection::vec(-bound..=bound, k * k)
            .prop_map(move |v| SquareMatrix::from_fn(Q, k, |i, j| Q.from_i64(v[i * k + j])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cayley_hamilton(a in any_matrix()) {
        prop_assert!(a.char_poly().eval_matrix(&a).is_zero());
    }

    #[test]
    fn inverse_iff_unit_determinant(a in any_matrix()) {
        let r = a.ring();
        match a.try_inverse() {
            Some(inv) => {
                prop_assert!(r.is_unit(&a.det()));
                prop_assert!((&a * &inv).is_identity() && (&inv * &a).is_identity());
            }
            None => prop_assert!(!r.is_unit(&a.det())),
        }
    }

    #[test]
    fn try_invert_is_exact(x in ring().prop_flat_map(|r| (Just(r), -50i64..50))) {
        let (r, v) = x;
        let x = r.from_i64(v);
        if let Some(y) = r.try_invert(&x) {
            prop_assert_eq!(r.mul(&x, &y), r.one());
        }
    }

    #[test]
    fn peirce_recomposes(a in rational_matrix(2..=4, 5), bits in prop::collection::vec(any::<bool>(), 4)) {
        let p = SquareMatrix::diag(Q, &bits[..a.dim()].iter().map(|&b| b as i64).collect::<Vec<_>>());
        prop_assert_eq!(peirce_blocks(&a, &p).unwrap().recompose(), a);
    }

    #[test]
    fn quadratic_roots_satisfy_equation(r in ring(), t in -40i64..40, d in -40i64..40) {
        if r == RingDescriptor::Integers {
            return Ok(());
        }
        let (t, d) = (r.from_i64(t), r.from_i64(d));
        if let Some((x1, x2)) = quadratic_roots_in_ring(r, &t, &d) {
            for x in [&x1, &x2] {
                let v = r.add(&r.sub(&r.mul(x, x), &r.mul(&t, x)), &d);
                prop_assert!(v.is_zero());
            }
            prop_assert_eq!(r.add(&x1, &x2), t.clone());
            prop_assert_eq!(r.mul(&x1, &x2), d.clone());
            if r.is_local() && r.in_jacobson_radical(&d) && r.in_coset_of_radical(&t, 1) {
                prop_assert!(r.in_jacobson_radical(&x1) && r.in_coset_of_radical(&x2, 1));
            }
        }
    }

    #[test]
    fn spectral_projectors(a in rational_matrix(1..=4, 3), at in -1i64..=1) {
        let s = spectral_idempotent(&a, &Q.from_i64(at)).unwrap();
        let p = &s.projector;
        prop_assert!(p.is_idempotent() && p.commutes_with(&a));
        prop_assert!(in_double_commutant(p, &a).unwrap());
        prop_assert_eq!(s.polynomial.eval_matrix(&a), p.clone());
    }

    #[test]
    fn cline_powers_transfer(a in rational_matrix(2..=3, 1), b in rational_matrix(2..=3, 1), k in 1u32..=3) {
        prop_assume!(a.dim() == b.dim());
        let abk = (&a * &b).pow(k);
        let bak = (&b * &a).pow(k);
        let (x, y) = (hirano(&abk).unwrap(), hirano(&bak).unwrap());
        prop_assert_eq!(x.is_some(), y.is_some());
        // (ab)^k = a (b (ab)^(k-1)) and (ba)^k = (b (ab)^(k-1)) a.
        let b2 = &b * &(&a * &b).pow(k - 1);
        let w = cline_classic(&a, &b2).unwrap();
        prop_assert_eq!(w.map(|w| w.h), y.map(|w| w.h));
    }

    #[test]
    fn commuting_products(m in rational_matrix(1..=3, 2), f in prop::collection::vec(-1i64..=1, 3), g in prop::collection::vec(-1i64..=1, 3)) {
        let a = common::poly_in(&m, &f);
        let b = common::poly_in(&m, &g);
        if let Some(w) = product_commuting(&a, &b).unwrap() {
            prop_assert_eq!(Some(w.h), hirano(&(&a * &b)).unwrap().map(|w| w.h));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn drazin_axioms(a in rational_matrix(1..=4, 3)) {
        let d = drazin_field(&a).unwrap();
        prop_assert_eq!(&(&d * &a) * &d, d.clone());
        prop_assert!(in_double_commutant(&d, &a).unwrap());
        prop_assert!((&a - &(&(&a * &a) * &d)).is_nilpotent());
        let r = verify_hirano_axioms(&a, &d).unwrap();
        prop_assert!(r.is_drazin());
        if let Some(w) = hirano_field(&a).unwrap() {
            prop_assert_eq!(w.h, d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn rational_paths_agree(a in rational_matrix(2..=2, 4)) {
        let (_, local) = hirano_local_2x2(&a).unwrap();
        let field = hirano_field(&a).unwrap();
        prop_assert_eq!(local.map(|w| w.h), field.map(|w| w.h));
    }
}

fn local_ring() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(RingDescriptor::PLocal),
        prop::sample::select(vec![2u64, 3, 4, 5, 8, 9, 25, 27]).prop_map(RingDescriptor::IntegersMod),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Conjugates of `diag(g, d)` with `g^2, d^2` in `J` or `1+J` always
    /// have an inverse.
    #[test]
    fn split_squares_have_inverses(
        r in local_ring(),
        picks in (0usize..3, 0usize..3, -3i64..=3, -3i64..=3),
        u in (-2i64..=2, -2i64..=2),
    ) {
        let p = match r { RingDescriptor::PLocal(p) => p as i64, RingDescriptor::IntegersMod(n) => {
            (2..=n as i64).find(|q| n as i64 % q == 0).unwrap()
        } _ => unreachable!() };
        let pick = |which: usize, m: i64| [p * m, 1 + p * m, -1 + p * m][which];
        let (g, d) = (pick(picks.0, picks.2), pick(picks.1, picks.3));
        let e = SquareMatrix::from_i64(r, [[1, u.0], [0, 1]]);
        let f = SquareMatrix::from_i64(r, [[1, 0], [u.1, 1]]);
        let t = &e * &f;
        let ti = t.try_inverse().unwrap();
        let a = &(&t * &SquareMatrix::from_i64(r, [[g, 0], [0, d]])) * &ti;
        let w = hirano(&a).unwrap();
        prop_assert!(w.is_some(), "A = {}", a);
    }
}

/// With 2 a unit and the mixed-case preconditions in force, an inverse
/// exists exactly when the discriminant is the square of a unit.
#[test]
fn discriminant_criterion() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(36);
    let mut seen = [0usize; 2];
    for r in [RingDescriptor::PLocal(3), RingDescriptor::PLocal(5), Q, RingDescriptor::IntegersMod(9), RingDescriptor::IntegersMod(25)] {
        let mut count = 0;
        while count < 100 {
            let v: Vec<i64> = (0..4).map(|_| rng.gen_range(-9..=9)).collect();
            let a = SquareMatrix::from_i64(r, [[v[0], v[1]], [v[2], v[3]]]);
            let c = classify_local_2x2(&a).unwrap();
            let ch = &c.checks;
            if !(ch.det_in_j && ch.trace_sq_in_1_plus_j) {
                continue;
            }
            count += 1;
            let t = &ch.trace_sq;
            let disc = r.sub(&r.mul(t, t), &r.mul(&r.from_i64(4), &ch.det_sq));
            let unit_square = match r {
                RingDescriptor::IntegersMod(n) => (0..n as i64).map(|u| r.from_i64(u)).any(|u| r.is_unit(&u) && r.mul(&u, &u) == disc),
                _ => hirano_core::rings::rational_square_root(disc.value()).is_some_and(|u| r.is_unit(&r.element(u).unwrap())),
            };
            let exists = matches!(c.case, Case::Mixed { .. });
            assert_eq!(exists, unit_square, "{a}");
            seen[exists as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
