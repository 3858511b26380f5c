use crate::charnum::CharNum4;
use crate::fpgroup::{quotient_by_words, surface_relator, Presentation, Word};

use super::{BlockDescriptor, BlockError, Claim, Result, SubKind, SubmanifoldData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeoVariant {
    /// Two essential Lagrangian tori `T1`, `T2`.
    Z11,
    /// An essential Lagrangian torus `T1` and a genus-2 surface `F`.
    Z12,
}

/// Simply connected minimal block with Euler characteristic `e` and
/// signature `sigma` from the nonspin geography region.
pub fn geography_block(e: i64, sigma: i64, variant: GeoVariant) -> Result<BlockDescriptor> {
    let x = CharNum4::new(e, sigma);
    let c1sq = x.c1_squared()?;
    let s = e.checked_add(sigma).ok_or_else(|| BlockError::Inadmissible("e + sigma overflows".into()))?;
    if c1sq < 0 {
        return Err(BlockError::Inadmissible(format!("2e + 3sigma >= 0 violated (2e + 3sigma = {c1sq})")));
    }
    if s.rem_euclid(4) != 0 {
        return Err(BlockError::Inadmissible(format!("e + sigma = 0 mod 4 violated (e + sigma = {s})")));
    }
    if s < 8 {
        return Err(BlockError::Inadmissible(format!("e + sigma >= 8 violated (e + sigma = {s})")));
    }
    if sigma > -1 {
        return Err(BlockError::Inadmissible(format!("sigma <= -1 violated (sigma = {sigma})")));
    }
    let name = match variant {
        GeoVariant::Z11 => "Z11",
        GeoVariant::Z12 => "Z12",
    };
    let mut b = BlockDescriptor::new(format!("{name}({e},{sigma})"), x, Presentation::trivial());
    b.submanifolds.push(SubmanifoldData::trivial("T1", SubKind::Torus, true, true));
    match variant {
        GeoVariant::Z11 => b.submanifolds.push(SubmanifoldData::trivial("T2", SubKind::Torus, true, true)),
        GeoVariant::Z12 => b.submanifolds.push(SubmanifoldData::trivial("F", SubKind::Genus2Surface, false, true)),
    }
    b.claims.extend([Claim::Minimal, Claim::OddForm]);
    b.provenance = "Akhmedov-Park; Akhmedov-Baldridge-Baykur-Kirk-Park (telescoping sums)".into();
    Ok(b)
}

/// Simply connected spin block with `(c1^2, chi_h) = (8n - 8, 2s + n - 1)`.
pub fn spin_block(n: i64, s: i64) -> Result<BlockDescriptor> {
    if n < 1 || s < 1 {
        return Err(BlockError::Inadmissible(format!("spin family needs n >= 1 and s >= 1 (n = {n}, s = {s})")));
    }
    let overflow = || BlockError::Inadmissible("spin parameters overflow".into());
    let c = n.checked_mul(8).and_then(|v| v.checked_sub(8)).ok_or_else(overflow)?;
    let chi = s.checked_mul(2).and_then(|v| v.checked_add(n - 1)).ok_or_else(overflow)?;
    let mut x = CharNum4::from_c1sq_chi(c, chi)?;
    x.spin = true;
    let mut b = BlockDescriptor::new(format!("spin({n},{s})"), x, Presentation::trivial());
    let mut t = SubmanifoldData::trivial("T", SubKind::Torus, false, true);
    t.lagrangian = false;
    b.submanifolds.push(t);
    b.submanifolds.push(SubmanifoldData::trivial("T'", SubKind::Torus, false, false));
    b.submanifolds.push(SubmanifoldData::trivial("F", SubKind::Genus2Surface, false, false));
    b.claims.extend([Claim::Minimal, Claim::Spin]);
    b.provenance = "Park-Szabo spin family; second torus and genus-2 surface claimed".into();
    Ok(b)
}

/// Block with prescribed fundamental group `target` (g generators, r
/// relators), already summed with the auxiliary pieces that kill the
/// fiber classes. Carries one torus `T` whose complement has group `target`.
pub fn bk_block(g: usize, r: usize, target: &Presentation) -> Result<BlockDescriptor> {
    if target.generator_count() != g || target.relator_count() != r {
        return Err(BlockError::Arity(format!(
            "expected {g} generators and {r} relators, presentation has {} and {}",
            target.generator_count(),
            target.relator_count()
        )));
    }
    let e = (g as i64)
        .checked_add(r as i64)
        .and_then(|k| k.checked_mul(4))
        .ok_or_else(|| BlockError::Inadmissible("4(g + r) overflows".into()))?;
    let mut b = BlockDescriptor::new(format!("BK({target})"), CharNum4::new(e, 0), target.clone());
    let mut t = SubmanifoldData::trivial("T", SubKind::Torus, false, true);
    t.lagrangian = false;
    b.submanifolds.push(t);
    b.claims.insert(Claim::Minimal);
    b.provenance = "Baldridge-Kirk; Yazinski".into();
    Ok(b)
}

/// The unsummed `Y x S^1` presentation together with the classes killed by
/// the sums along its tori.
#[derive(Debug, Clone)]
pub struct BkRaw {
    pub presentation: Presentation,
    /// Circle factor `s` and monodromy loop `t`.
    pub s: Word,
    pub t: Word,
    /// `x_k y_k` for each generator of the target.
    pub xy: Vec<Word>,
    /// Target relators rewritten in positive letters (`x_k^-1 -> y_k`).
    pub positive_relators: Vec<Word>,
}

impl BkRaw {
    /// Every killed word in the order the sums apply them.
    pub fn killed(&self) -> Vec<Word> {
        let mut v = vec![self.s.clone(), self.t.clone()];
        v.extend(self.xy.iter().cloned());
        v.extend(self.positive_relators.iter().cloned());
        v
    }
}

/// Presentation of `Y x S^1` where `Y` is the mapping torus of the order-n
/// rotation on a genus `g*n` surface, `n = 1 + sum of relator lengths`.
pub fn bk_raw_presentation(target: &Presentation) -> BkRaw {
    let g = target.generator_count();
    let n = 1 + target.relators().iter().map(Word::len).sum::<usize>();
    // x_{k,l} has index 2*(l*g + k), y_{k,l} the next one (0-based k, l).
    let xi = |k: usize, l: usize| 2 * (l * g + k);
    let yi = |k: usize, l: usize| 2 * (l * g + k) + 1;
    let fiber = 2 * g * n;
    let t_idx = fiber;
    let s_idx = fiber + 1;

    let mut names = Vec::with_capacity(fiber + 2);
    for l in 0..n {
        for k in 0..g {
            names.push(format!("x{}_{}", k + 1, l + 1));
            names.push(format!("y{}_{}", k + 1, l + 1));
        }
    }
    names.push("t".to_string());
    names.push("s".to_string());

    let mut rels = Vec::new();
    if g > 0 {
        rels.push(surface_relator(0, g * n));
    }
    let t = Word::gen(t_idx);
    for l in 0..n {
        let next = (l + 1) % n;
        for k in 0..g {
            for (a, b) in [(xi(k, l), xi(k, next)), (yi(k, l), yi(k, next))] {
                // t a t^-1 = R(a)
                rels.push(t.concat(&Word::gen(a)).concat(&t.inverse()).concat(&Word::gen_inv(b)));
            }
        }
    }
    let s = Word::gen(s_idx);
    for z in 0..=fiber {
        rels.push(Word::commutator(&s, &Word::gen(z)));
    }
    let presentation = Presentation::new(names, rels).expect("indices in range");

    let xy = (0..g).map(|k| Word::gen(xi(k, 0)).concat(&Word::gen(yi(k, 0)))).collect();
    let positive_relators = target
        .relators()
        .iter()
        .map(|w| {
            Word::from_letters(w.letters().iter().map(|&l| {
                let k = l.unsigned_abs() as usize - 1;
                if l > 0 {
                    xi(k, 0) as i32 + 1
                } else {
                    yi(k, 0) as i32 + 1
                }
            }))
        })
        .collect();
    BkRaw {
        presentation,
        s,
        t,
        xy,
        positive_relators,
    }
}

/// The raw presentation with every killed class added as a relator.
pub fn bk_quotient(target: &Presentation) -> Presentation {
    let raw = bk_raw_presentation(target);
    quotient_by_words(&raw.presentation, &raw.killed()).expect("killed words are over the raw generators")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Telescope {
    A,
    B(u32),
    C,
    D,
    F,
}

/// Telescoping triple `(X, T1, T2)` with `pi1 = Z^2`; the image of `T1` is a
/// summand and `T2` carries all of `pi1`.
pub fn telescoping(which: Telescope) -> BlockDescriptor {
    let (id, e, sigma) = match which {
        Telescope::A => ("tele(A)".to_string(), 5, -1),
        Telescope::B(g) => (format!("tele(B,{g})"), 6 + 4 * g as i64, -2),
        Telescope::C => ("tele(C)".to_string(), 7, -3),
        Telescope::D => ("tele(D)".to_string(), 8, -4),
        Telescope::F => ("tele(F)".to_string(), 10, -6),
    };
    let pi1 = Presentation::with_names(&["u", "v"], vec![Word::commutator(&Word::gen(0), &Word::gen(1))])
        .expect("valid");
    let mut b = BlockDescriptor::new(id, CharNum4::new(e, sigma), pi1);
    let mut t1 = SubmanifoldData::trivial("T1", SubKind::Torus, true, false);
    t1.fiber_generator_pushoffs = vec![Word::gen(0), Word::identity()];
    let mut t2 = SubmanifoldData::trivial("T2", SubKind::Torus, true, true);
    t2.fiber_generator_pushoffs = vec![Word::gen(0), Word::gen(1)];
    b.submanifolds = vec![t1, t2];
    b.claims.insert(Claim::Minimal);
    b.provenance = "Akhmedov-Baldridge-Baykur-Kirk-Park; Torres (T1 push-off words claimed)".into();
    b
}

/// `T^2 x Sigma_g` with the torus `T = T^2 x {pt}`. Push-offs are `x, y`;
/// the meridian is the surface relator of the dual `Sigma_g`.
pub fn surface_product_block(g: u32) -> Result<BlockDescriptor> {
    let g = g as usize;
    let mut names = vec!["x".to_string(), "y".to_string()];
    for i in 1..=g {
        names.push(format!("a{i}"));
        names.push(format!("b{i}"));
    }
    let (x, y) = (Word::gen(0), Word::gen(1));
    let mut rels = vec![Word::commutator(&x, &y)];
    for base in [&x, &y] {
        for j in 0..2 * g {
            rels.push(Word::commutator(base, &Word::gen(2 + j)));
        }
    }
    let surface = surface_relator(2, g);
    if g > 0 {
        rels.push(surface.clone());
    }
    let pi1 = Presentation::new(names, rels)?;
    let mut b = BlockDescriptor::new(format!("T2xSigma({g})"), CharNum4::new(0, 0), pi1);
    b.submanifolds.push(SubmanifoldData {
        name: "T".into(),
        kind: SubKind::Torus,
        self_intersection: 0,
        complement_pi1_equals_ambient: g == 0,
        meridian: surface,
        fiber_generator_pushoffs: vec![x, y],
        homologically_essential: true,
        lagrangian: false,
        verified: true,
    });
    b.provenance = "product of surfaces".into();
    Ok(b)
}

/// `Y x S^1` for `Y` the mapping torus of Dehn twists on a genus-n surface,
/// with the section torus `T = S x S^1` carrying `t` and `s`.
pub fn free_group_block(n: u32) -> Result<BlockDescriptor> {
    if n == 0 {
        return Err(BlockError::Inadmissible("free(n) needs n >= 1".into()));
    }
    let n = n as usize;
    let mut names = Vec::new();
    for i in 1..=n {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
    }
    names.push("t".into());
    names.push("s".into());
    let t = Word::gen(2 * n);
    let s = Word::gen(2 * n + 1);
    let mut rels = vec![surface_relator(0, n)];
    for i in 0..n {
        let (x, y) = (Word::gen(2 * i), Word::gen(2 * i + 1));
        rels.push(t.concat(&x).concat(&t.inverse()).concat(&x.inverse()));
        rels.push(t.concat(&y).concat(&t.inverse()).concat(&y.concat(&x).inverse()));
    }
    for z in 0..=2 * n {
        rels.push(Word::commutator(&s, &Word::gen(z)));
    }
    let pi1 = Presentation::new(names, rels)?;
    let mut b = BlockDescriptor::new(format!("free({n})"), CharNum4::new(0, 0), pi1);
    b.submanifolds.push(SubmanifoldData {
        name: "T".into(),
        kind: SubKind::Torus,
        self_intersection: 0,
        complement_pi1_equals_ambient: true,
        meridian: Word::identity(),
        fiber_generator_pushoffs: vec![t, s],
        homologically_essential: true,
        lagrangian: false,
        verified: true,
    });
    b.provenance = "Thurston symplectic mapping torus".into();
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{abelianization, count_homs_to_sym, tietze_simplify, AbelianInvariants};
    use proptest::prelude::*;

    #[test]
    fn geography_examples() {
        let b = geography_block(9, -1, GeoVariant::Z11).unwrap();
        assert_eq!(b.char4.c1_squared().unwrap(), 15);
        assert_eq!(b.char4.chi_h().unwrap(), 2);
        assert!(b.claims.contains(&Claim::OddForm));
        let err = geography_block(8, -1, GeoVariant::Z11).unwrap_err();
        assert!(err.to_string().contains("mod 4"));
        let b = geography_block(12, -4, GeoVariant::Z12).unwrap();
        assert_eq!((b.char4.c1_squared().unwrap(), b.char4.chi_h().unwrap()), (12, 2));
        assert_eq!(b.submanifolds[1].kind, SubKind::Genus2Surface);
    }

    /// Region oracle written out independently of the constructor.
    fn in_region(e: i64, s: i64) -> bool {
        2 * e + 3 * s >= 0 && (e + s) % 4 == 0 && e + s >= 8 && s <= -1
    }

    proptest! {
        #[test]
        fn geography_rejects_exactly_outside_region(e in -40i64..80, s in -60i64..10) {
            prop_assert_eq!(geography_block(e, s, GeoVariant::Z11).is_ok(), in_region(e, s));
        }

        #[test]
        fn spin_blocks_have_sigma_divisible_by_16(n in 1i64..40, s in 1i64..40) {
            let b = spin_block(n, s).unwrap();
            prop_assert_eq!(b.char4.sigma % 16, 0);
            prop_assert!(b.validate().is_ok());
        }
    }

    #[test]
    fn spin_examples() {
        assert_eq!(spin_block(1, 1).unwrap().char4, CharNum4::spin(24, -16));
        assert_eq!(spin_block(2, 1).unwrap().char4, CharNum4::spin(28, -16));
        assert_eq!(spin_block(1, 2).unwrap().char4, CharNum4::spin(48, -32));
        assert!(spin_block(0, 1).is_err());
    }

    #[test]
    fn bk_examples() {
        let z: Presentation = "a |".parse().unwrap();
        assert_eq!(bk_block(1, 0, &z).unwrap().char4, CharNum4::new(4, 0));
        assert_eq!(bk_block(0, 0, &Presentation::trivial()).unwrap().char4, CharNum4::new(0, 0));
        let p: Presentation = "a,b | a b a' b'".parse().unwrap();
        assert_eq!(bk_block(2, 1, &p).unwrap().char4, CharNum4::new(12, 0));
        assert!(matches!(bk_block(1, 1, &p), Err(BlockError::Arity(_))));
    }

    #[test]
    fn bk_raw_reduces_to_target() {
        let p: Presentation = "a,b | a a b'; b b b".parse().unwrap();
        let raw = bk_raw_presentation(&p);
        // n = 1 + 3 + 3 = 7, fiber genus 14
        assert_eq!(raw.presentation.generator_count(), 2 * 2 * 7 + 2);
        let q = bk_quotient(&p);
        assert_eq!(abelianization(&q), abelianization(&p));
        let after_st = quotient_by_words(&raw.presentation, &[raw.s.clone(), raw.t.clone()]).unwrap();
        // killing s and t leaves the genus-g surface group in the x_k, y_k
        assert_eq!(abelianization(&after_st), AbelianInvariants::new(4, &[]));
    }

    #[test]
    fn telescoping_values() {
        assert_eq!(telescoping(Telescope::A).char4, CharNum4::new(5, -1));
        assert_eq!(telescoping(Telescope::B(0)).char4, CharNum4::new(6, -2));
        assert_eq!(telescoping(Telescope::C).char4, CharNum4::new(7, -3));
        assert_eq!(telescoping(Telescope::D).char4, CharNum4::new(8, -4));
        assert_eq!(telescoping(Telescope::F).char4, CharNum4::new(10, -6));
        assert_eq!(abelianization(&telescoping(Telescope::A).pi1), AbelianInvariants::new(2, &[]));
    }

    #[test]
    fn surface_product_and_free_blocks_validate() {
        for g in 0..5 {
            let b = surface_product_block(g).unwrap();
            b.validate().unwrap();
            assert_eq!(abelianization(&b.pi1), AbelianInvariants::new(2 + 2 * g as usize, &[]));
        }
        for n in 1..5 {
            let b = free_group_block(n).unwrap();
            b.validate().unwrap();
            let killed = quotient_by_words(&b.pi1, &b.submanifolds[0].fiber_generator_pushoffs).unwrap();
            let s = tietze_simplify(&killed, 64);
            assert_eq!(s.generator_count(), n as usize);
            assert_eq!(s.relator_count(), 0);
            assert_eq!(count_homs_to_sym(&s, 3).unwrap(), 6u128.pow(n));
        }
    }
}
