use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{crt_split, RingDescriptor, RingElement};

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative rational `r` with `r^2 = q`, if `q` is a rational square.
pub fn rational_square_root(q: &BigRational) -> Option<BigRational> {
    let n = integer_sqrt_exact(q.numer())?;
    let d = integer_sqrt_exact(q.denom())?;
    Some(BigRational::new(n, d))
}

/// A unit `u` with `u^2 = x`, if one exists.
pub fn unit_square_root(ring: RingDescriptor, x: &RingElement) -> Option<RingElement> {
    match ring {
        RingDescriptor::IntegersMod(n) => (0..n)
            .map(|u| ring.from_int(u))
            .find(|u| ring.is_unit(u) && ring.mul(u, u) == *x),
        _ => {
            let r = rational_square_root(x.value())?;
            let r = ring.element(r).ok()?;
            ring.is_unit(&r).then_some(r)
        }
    }
}

fn is_root(ring: RingDescriptor, x: &RingElement, t: &RingElement, d: &RingElement) -> bool {
    let value = ring.add(&ring.sub(&ring.mul(x, x), &ring.mul(t, x)), d);
    value.is_zero()
}

/// Orders a root pair so that a root in `J` comes first when there is one.
fn order_pair(ring: RingDescriptor, x1: RingElement, x2: RingElement) -> (RingElement, RingElement) {
    if !ring.in_jacobson_radical(&x1) && ring.in_jacobson_radical(&x2) {
        (x2, x1)
    } else {
        (x1, x2)
    }
}

fn local_residue_roots(
    ring: RingDescriptor,
    t: &RingElement,
    d: &RingElement,
) -> Option<(RingElement, RingElement)> {
    let n = ring.modulus().expect("residue ring");
    let roots: Vec<RingElement> = (0..n)
        .map(|x| ring.from_int(x))
        .filter(|x| is_root(ring, x, t, d))
        .collect();
    let x1 = roots
        .iter()
        .find(|x| ring.in_jacobson_radical(x))
        .or_else(|| roots.first())?
        .clone();
    let x2 = ring.sub(t, &x1);
    Some(order_pair(ring, x1, x2))
}

/// Roots `(x1, x2)` of `x^2 - t x + d` with `x1 + x2 = t` and `x1 x2 = d`.
///
/// Over `Q`, `Z` and `Z_(p)` the discriminant must be a rational square
/// (a root of a monic polynomial over `Z_(p)` that lies in `Q` already lies
/// in `Z_(p)`, but membership is still checked). Prime-power residue rings
/// are searched exhaustively and composite moduli go through the CRT.
/// When one root lies in `J` it is returned first.
pub fn quadratic_roots_in_ring(
    ring: RingDescriptor,
    t: &RingElement,
    d: &RingElement,
) -> Option<(RingElement, RingElement)> {
    match ring {
        RingDescriptor::IntegersMod(n) => {
            let split = crt_split(n);
            if split.factors().len() == 1 {
                return local_residue_roots(ring, t, d);
            }
            let (tp, dp) = (split.project(t), split.project(d));
            let mut first = Vec::new();
            let mut second = Vec::new();
            for ((r, tt), dd) in split.rings().into_iter().zip(&tp).zip(&dp) {
                let (a, b) = local_residue_roots(r, tt, dd)?;
                first.push(a);
                second.push(b);
            }
            let x1 = split.reconstruct(&first);
            let x2 = split.reconstruct(&second);
            debug_assert!(is_root(ring, &x1, t, d) && is_root(ring, &x2, t, d));
            Some((x1, x2))
        }
        _ => {
            let disc = t.value() * t.value() - BigRational::from_integer(4.into()) * d.value();
            let r = rational_square_root(&disc)?;
            let two = BigRational::from_integer(2.into());
            let x1 = ring.element((t.value() - &r) / &two).ok()?;
            let x2 = ring.element((t.value() + &r) / &two).ok()?;
            if !(is_root(ring, &x1, t, d) && is_root(ring, &x2, t, d)) {
                return None;
            }
            debug_assert!(ring.add(&x1, &x2) == *t && !r.is_negative());
            Some(order_pair(ring, x1, x2))
        }
    }
}
