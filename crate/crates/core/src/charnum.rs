//! Characteristic numbers of symplectic 4-manifolds and Chern numbers of
//! symplectic 6-manifolds, together with the transformation law of every
//! construction step (symplectic sums, Luttinger surgery, products with
//! surfaces, blow-ups).
//!
//! All arithmetic is checked 64-bit; overflow is reported, never wrapped.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("chi_h undefined: e + sigma = {0} is not divisible by 4")]
    ChiUndefined(i64),
}

pub type Result<T> = std::result::Result<T, CharError>;

fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(CharError::Overflow(what))
}

fn sub(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(CharError::Overflow(what))
}

fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(CharError::Overflow(what))
}

/// Euler characteristic and signature of a closed 4-manifold, plus a
/// propagated (never verified) spin claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharNum4 {
    pub e: i64,
    pub sigma: i64,
    pub spin: bool,
}

impl CharNum4 {
    pub const fn new(e: i64, sigma: i64) -> Self {
        CharNum4 { e, sigma, spin: false }
    }

    pub const fn spin(e: i64, sigma: i64) -> Self {
        CharNum4 { e, sigma, spin: true }
    }

    /// c1^2 = 2e + 3 sigma.
    pub fn c1_squared(&self) -> Result<i64> {
        add(mul(2, self.e, "c1^2")?, mul(3, self.sigma, "c1^2")?, "c1^2")
    }

    /// chi_h = (e + sigma) / 4, defined only when 4 divides e + sigma.
    pub fn chi_h(&self) -> Result<i64> {
        let s = add(self.e, self.sigma, "chi_h")?;
        if s % 4 != 0 {
            return Err(CharError::ChiUndefined(s));
        }
        Ok(s / 4)
    }

    /// c2 is the Euler characteristic.
    pub fn c2(&self) -> i64 {
        self.e
    }

    /// Inverse of (e, sigma) -> (c1^2, chi_h): e = 12 chi - c, sigma = c - 8 chi.
    pub fn from_c1sq_chi(c1sq: i64, chi_h: i64) -> Result<Self> {
        let e = sub(mul(12, chi_h, "e")?, c1sq, "e")?;
        let sigma = sub(c1sq, mul(8, chi_h, "sigma")?, "sigma")?;
        Ok(CharNum4::new(e, sigma))
    }
}

impl fmt::Display for CharNum4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e={}, sigma={}", self.e, self.sigma)?;
        if self.spin {
            write!(f, ", spin")?;
        }
        write!(f, ")")
    }
}

/// Chern numbers (c1^3, c1c2, c3) of a closed almost-complex 6-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ChernTriple {
    pub c13: i64,
    pub c1c2: i64,
    pub c3: i64,
}

impl ChernTriple {
    pub const ZERO: ChernTriple = ChernTriple { c13: 0, c1c2: 0, c3: 0 };

    pub const fn new(c13: i64, c1c2: i64, c3: i64) -> Self {
        ChernTriple { c13, c1c2, c3 }
    }

    /// c1^3 and c3 even, c1c2 divisible by 24.
    pub fn satisfies_congruences(&self) -> bool {
        self.c13 % 2 == 0 && self.c3 % 2 == 0 && self.c1c2 % 24 == 0
    }

    pub fn checked_add(&self, other: &ChernTriple) -> Result<ChernTriple> {
        Ok(ChernTriple {
            c13: add(self.c13, other.c13, "c1^3")?,
            c1c2: add(self.c1c2, other.c1c2, "c1c2")?,
            c3: add(self.c3, other.c3, "c3")?,
        })
    }
}

impl fmt::Display for ChernTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c13, self.c1c2, self.c3)
    }
}

/// Genus of a closed oriented surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceGenus(pub u32);

impl SurfaceGenus {
    pub const SPHERE: SurfaceGenus = SurfaceGenus(0);
    pub const TORUS: SurfaceGenus = SurfaceGenus(1);
    pub const TWO: SurfaceGenus = SurfaceGenus(2);

    pub fn euler(&self) -> i64 {
        2 - 2 * self.0 as i64
    }
}

/// c1^2 and c2 of the 4-dimensional locus of a 6-dimensional symplectic sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourFiber {
    pub c1sq: i64,
    pub c2: i64,
}

impl FourFiber {
    /// Locus Σ_a × Σ_b: c2 = χ(Σ_a)χ(Σ_b) and c1^2 = 2 c2.
    pub fn surface_product(a: SurfaceGenus, b: SurfaceGenus) -> Self {
        let c2 = a.euler() * b.euler();
        FourFiber { c1sq: 2 * c2, c2 }
    }
}

/// Symplectic sum of two 4-manifolds along a genus-g surface:
/// e = e1 + e2 + 4g - 4, sigma = sigma1 + sigma2, spin is the conjunction.
pub fn sum4(x: &CharNum4, y: &CharNum4, locus: SurfaceGenus) -> Result<CharNum4> {
    let shift = sub(mul(4, locus.0 as i64, "sum4 e")?, 4, "sum4 e")?;
    let e = add(add(x.e, y.e, "sum4 e")?, shift, "sum4 e")?;
    let sigma = add(x.sigma, y.sigma, "sum4 sigma")?;
    Ok(CharNum4 { e, sigma, spin: x.spin && y.spin })
}

/// Luttinger surgery leaves e, sigma and the spin claim unchanged.
pub fn luttinger(x: &CharNum4) -> CharNum4 {
    *x
}

/// Chern numbers of Y × Σ_g.
pub fn product_with_surface(y: &CharNum4, g: SurfaceGenus) -> Result<ChernTriple> {
    let six = mul(3, g.euler(), "product")?; // 6 - 6g
    let c1sq = y.c1_squared()?;
    let e_plus_s = add(y.e, y.sigma, "product")?;
    Ok(ChernTriple {
        c13: mul(c1sq, six, "product c1^3")?,
        c1c2: mul(e_plus_s, six, "product c1c2")?,
        c3: mul(y.e, g.euler(), "product c3")?,
    })
}

/// Blow-up at a point: (c1^3 - 8, c1c2, c3 + 2).
pub fn blow_up_point(x: &ChernTriple) -> Result<ChernTriple> {
    Ok(ChernTriple {
        c13: sub(x.c13, 8, "blow-up c1^3")?,
        c1c2: x.c1c2,
        c3: add(x.c3, 2, "blow-up c3")?,
    })
}

/// Blow-up along a genus-g surface whose normal bundle pairs with the
/// surface to `normal_pairing`:
/// (c1^3 + 6(g-1) - 2 pairing, c1c2, c3 - 2(g-1)).
pub fn blow_up_surface(
    x: &ChernTriple,
    g: SurfaceGenus,
    normal_pairing: i64,
) -> Result<ChernTriple> {
    let gm1 = g.0 as i64 - 1;
    let d13 = sub(mul(6, gm1, "blow-up c1^3")?, mul(2, normal_pairing, "blow-up c1^3")?, "blow-up c1^3")?;
    Ok(ChernTriple {
        c13: add(x.c13, d13, "blow-up c1^3")?,
        c1c2: x.c1c2,
        c3: sub(x.c3, mul(2, gm1, "blow-up c3")?, "blow-up c3")?,
    })
}

/// Symplectic sum of two 6-manifolds along a 4-dimensional locus with
/// trivial normal bundle.
pub fn sum6(x: &ChernTriple, y: &ChernTriple, fiber: &FourFiber) -> Result<ChernTriple> {
    let both = x.checked_add(y)?;
    let corr13 = mul(6, fiber.c1sq, "sum6 c1^3")?;
    let corr12 = mul(2, add(fiber.c1sq, fiber.c2, "sum6 c1c2")?, "sum6 c1c2")?;
    let corr3 = mul(2, fiber.c2, "sum6 c3")?;
    Ok(ChernTriple {
        c13: sub(both.c13, corr13, "sum6 c1^3")?,
        c1c2: sub(both.c1c2, corr12, "sum6 c1c2")?,
        c3: sub(both.c3, corr3, "sum6 c3")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sum4_examples() {
        let r = sum4(&CharNum4::new(5, -1), &CharNum4::new(0, 0), SurfaceGenus::TWO).unwrap();
        assert_eq!((r.e, r.sigma), (9, -1));
        assert_eq!(r.c1_squared().unwrap(), 15);
        assert_eq!(r.chi_h().unwrap(), 2);

        let r = sum4(&CharNum4::new(0, 0), &CharNum4::new(0, 0), SurfaceGenus::TORUS).unwrap();
        assert_eq!((r.e, r.sigma), (0, 0));

        let r = sum4(&CharNum4::new(8, -4), &CharNum4::new(1, -1), SurfaceGenus::TWO).unwrap();
        assert_eq!((r.e, r.sigma), (13, -5));
        assert_eq!(r.c1_squared().unwrap(), 11);
        assert_eq!(r.chi_h().unwrap(), 2);
    }

    #[test]
    fn sum4_spin_is_conjunction() {
        let s = CharNum4::spin(24, -16);
        let n = CharNum4::new(4, 0);
        assert!(sum4(&s, &s, SurfaceGenus::TORUS).unwrap().spin);
        assert!(!sum4(&s, &n, SurfaceGenus::TORUS).unwrap().spin);
    }

    #[test]
    fn luttinger_is_identity() {
        for x in [CharNum4::new(4, 0), CharNum4::new(0, 0), CharNum4::new(9, -1), CharNum4::spin(4, 0)] {
            assert_eq!(luttinger(&x), x);
        }
    }

    #[test]
    fn chi_h_partial() {
        assert_eq!(CharNum4::new(8, -1).chi_h(), Err(CharError::ChiUndefined(7)));
        assert_eq!(CharNum4::new(24, -16).chi_h(), Ok(2));
    }

    #[test]
    fn product_examples() {
        let y = CharNum4::new(9, -1);
        assert_eq!(product_with_surface(&y, SurfaceGenus::TORUS).unwrap(), ChernTriple::ZERO);
        assert_eq!(product_with_surface(&y, SurfaceGenus::SPHERE).unwrap(), ChernTriple::new(90, 48, 18));
        assert_eq!(product_with_surface(&y, SurfaceGenus::TWO).unwrap(), ChernTriple::new(-90, -48, -18));
    }

    #[test]
    fn blow_up_examples() {
        let p = blow_up_point(&ChernTriple::ZERO).unwrap();
        assert_eq!(p, ChernTriple::new(-8, 0, 2));
        assert_eq!(blow_up_point(&p).unwrap(), ChernTriple::new(-16, 0, 4));
        assert_eq!(blow_up_point(&ChernTriple::new(180, 96, 36)).unwrap(), ChernTriple::new(172, 96, 38));

        let z = ChernTriple::ZERO;
        assert_eq!(blow_up_surface(&z, SurfaceGenus::TWO, 0).unwrap(), ChernTriple::new(6, 0, -2));
        assert_eq!(blow_up_surface(&z, SurfaceGenus::SPHERE, -1).unwrap(), ChernTriple::new(-4, 0, 2));
        assert_eq!(blow_up_surface(&z, SurfaceGenus::TORUS, 0).unwrap(), ChernTriple::ZERO);
    }

    #[test]
    fn sum6_examples() {
        let t4 = FourFiber::surface_product(SurfaceGenus::TORUS, SurfaceGenus::TORUS);
        assert_eq!(t4, FourFiber { c1sq: 0, c2: 0 });
        assert_eq!(sum6(&ChernTriple::ZERO, &ChernTriple::ZERO, &t4).unwrap(), ChernTriple::ZERO);

        let s22 = FourFiber::surface_product(SurfaceGenus::TWO, SurfaceGenus::TWO);
        assert_eq!(s22, FourFiber { c1sq: 8, c2: 4 });
        let x = ChernTriple::new(-90, -48, -18);
        assert_eq!(sum6(&x, &x, &s22).unwrap(), ChernTriple::new(-228, -120, -44));

        let ts = FourFiber::surface_product(SurfaceGenus::TORUS, SurfaceGenus::SPHERE);
        let y = ChernTriple::new(90, 48, 18);
        assert_eq!(sum6(&y, &y, &ts).unwrap(), ChernTriple::new(180, 96, 36));
    }

    #[test]
    fn overflow_is_reported() {
        let huge = CharNum4::new(i64::MAX, 0);
        assert!(matches!(huge.c1_squared(), Err(CharError::Overflow(_))));
        assert!(sum4(&huge, &huge, SurfaceGenus::TORUS).is_err());
        assert!(blow_up_point(&ChernTriple::new(i64::MIN, 0, 0)).is_err());
    }

    #[test]
    fn inverse_map() {
        assert_eq!(CharNum4::from_c1sq_chi(0, 2).unwrap(), CharNum4::new(24, -16));
        assert_eq!(CharNum4::from_c1sq_chi(8, 3).unwrap(), CharNum4::new(28, -16));
    }

    fn small() -> impl Strategy<Value = i64> {
        -10_000i64..10_000
    }

    fn even_triple() -> impl Strategy<Value = ChernTriple> {
        (small(), small(), small()).prop_map(|(a, b, c)| ChernTriple::new(2 * a, 24 * b, 2 * c))
    }

    proptest! {
        #[test]
        fn sum4_commutes(e1 in small(), s1 in small(), e2 in small(), s2 in small(), g in 0u32..6) {
            let x = CharNum4::new(e1, s1);
            let y = CharNum4::new(e2, s2);
            prop_assert_eq!(sum4(&x, &y, SurfaceGenus(g)), sum4(&y, &x, SurfaceGenus(g)));
        }

        #[test]
        fn torus_product_vanishes(e in small(), s in small()) {
            prop_assert_eq!(product_with_surface(&CharNum4::new(e, s), SurfaceGenus::TORUS).unwrap(), ChernTriple::ZERO);
        }

        #[test]
        fn blow_ups_fix_c1c2_and_parity(x in even_triple(), g in 0u32..8, p in -50i64..50) {
            let a = blow_up_point(&x).unwrap();
            let b = blow_up_surface(&x, SurfaceGenus(g), p).unwrap();
            prop_assert_eq!(a.c1c2, x.c1c2);
            prop_assert_eq!(b.c1c2, x.c1c2);
            prop_assert!(a.satisfies_congruences());
            prop_assert!(b.satisfies_congruences());
        }

        #[test]
        fn sum6_preserves_congruences(x in even_triple(), y in even_triple(), a in 0u32..5, b in 0u32..5) {
            let f = FourFiber::surface_product(SurfaceGenus(a), SurfaceGenus(b));
            prop_assert!(sum6(&x, &y, &f).unwrap().satisfies_congruences());
        }
    }
}
