use serde::Serialize;

use super::PlanError;

/// Blow-up counts: `p` points, `r_e` exceptional lines (pairing -1) and `z`
/// genus-2 surfaces with trivial normal bundle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlowUpBudget {
    pub p: u64,
    pub r_e: u64,
    pub z: u64,
}

impl BlowUpBudget {
    pub fn total(&self) -> u64 {
        self.p + self.r_e + self.z
    }

    /// Change in `(c1^3, c3)`.
    pub fn effect(&self) -> (i64, i64) {
        let (p, r, z) = (self.p as i64, self.r_e as i64, self.z as i64);
        (-8 * p - 4 * r + 6 * z, 2 * p + 2 * r - 2 * z)
    }
}

/// Fewest blow-ups changing `(c1^3, c3)` by `(delta_c13, delta_c3)`.
///
/// With `a = delta_c13 / 2`, `c = delta_c3 / 2` the solutions are
/// `z = a + 2c + 2p`, `r_e = a + 3c + p` for free `p`, of total
/// `2a + 5c + 4p`, so the smallest admissible `p` is optimal and unique.
pub fn solve_budget(delta_c13: i64, delta_c3: i64) -> Result<BlowUpBudget, PlanError> {
    if delta_c13 % 2 != 0 {
        return Err(PlanError::Inadmissible(format!("c13 difference {delta_c13} must be even")));
    }
    if delta_c3 % 2 != 0 {
        return Err(PlanError::Inadmissible(format!("c3 difference {delta_c3} must be even")));
    }
    let a = delta_c13 as i128 / 2;
    let c = delta_c3 as i128 / 2;
    let zp = a + 2 * c; // z at p = 0
    let rp = a + 3 * c; // r_e at p = 0
    let need_z = if zp >= 0 { 0 } else { (-zp + 1) / 2 };
    let need_r = if rp >= 0 { 0 } else { -rp };
    let p = need_z.max(need_r);
    let to_u64 = |x: i128| u64::try_from(x).map_err(|_| PlanError::Inadmissible("blow-up count overflows".into()));
    Ok(BlowUpBudget {
        p: to_u64(p)?,
        r_e: to_u64(rp + p)?,
        z: to_u64(zp + 2 * p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Every budget with total at most `max`, keeping the lexicographically
    /// least among those of least total for each effect.
    fn brute(max: u64) -> std::collections::HashMap<(i64, i64), BlowUpBudget> {
        let mut best = std::collections::HashMap::new();
        for p in 0..=max {
            for r_e in 0..=max - p {
                for z in 0..=max - p - r_e {
                    let b = BlowUpBudget { p, r_e, z };
                    best.entry(b.effect())
                        .and_modify(|o: &mut BlowUpBudget| {
                            if (b.total(), b) < (o.total(), *o) {
                                *o = b;
                            }
                        })
                        .or_insert(b);
                }
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(solve_budget(0, 0).unwrap(), BlowUpBudget::default());
        assert_eq!(solve_budget(-8, 2).unwrap(), BlowUpBudget { p: 1, r_e: 0, z: 0 });
        assert_eq!(solve_budget(2, 0).unwrap(), BlowUpBudget { p: 0, r_e: 1, z: 1 });
        assert!(solve_budget(1, 0).is_err());
        assert!(solve_budget(0, 3).is_err());
    }

    #[test]
    fn matches_brute_force_small() {
        let table = brute(12);
        for d13 in (-40..=40).step_by(2) {
            for d3 in (-40..=40).step_by(2) {
                let b = solve_budget(d13, d3).unwrap();
                assert_eq!(b.effect(), (d13, d3));
                match table.get(&(d13, d3)) {
                    Some(o) => assert_eq!((b.total(), b), (o.total(), *o)),
                    None => assert!(b.total() > 12),
                }
            }
        }
    }

    proptest! {
        #[test]
        fn always_solves(a in -100_000i64..100_000, c in -100_000i64..100_000) {
            let b = solve_budget(2 * a, 2 * c).unwrap();
            prop_assert_eq!(b.effect(), (2 * a, 2 * c));
        }
    }
}
