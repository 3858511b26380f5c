//! Construction planning: from target invariants to a recipe.

mod budget;
mod geography;

pub use budget::{solve_budget, BlowUpBudget};
pub use geography::{enumerate_region_4d, realize_4d, GeographyPoint, Window};

use serde::Serialize;

use crate::blocks::{BlockError, Registry};
use crate::calculus::{evaluate, w_pipeline, CalcError, Glue, Recipe, WFamily};
use crate::charnum::ChernTriple;
use crate::fpgroup::{abelianization, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("inadmissible target: {0}")]
    Inadmissible(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error("planner produced a recipe evaluating to {got}, expected {want}")]
    Internal { want: String, got: String },
}

/// Target Chern numbers of a symplectic 6-manifold with prescribed
/// fundamental group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Target6 {
    pub chern: ChernTriple,
    pub group: Presentation,
}

impl Target6 {
    pub fn new(c13: i64, c1c2: i64, c3: i64, group: Presentation) -> Self {
        Target6 {
            chern: ChernTriple::new(c13, c1c2, c3),
            group,
        }
    }

    pub fn simply_connected(c13: i64, c1c2: i64, c3: i64) -> Self {
        Self::new(c13, c1c2, c3, Presentation::trivial())
    }

    /// `g + r` of the presentation.
    pub fn group_size(&self) -> i64 {
        (self.group.generator_count() + self.group.relator_count()) as i64
    }
}

/// Necessary congruences for almost complex 6-manifolds.
pub fn check_admissible(t: &ChernTriple) -> Result<(), PlanError> {
    if t.c13 % 2 != 0 {
        return Err(PlanError::Inadmissible(format!("c13 must be even (got {})", t.c13)));
    }
    if t.c3 % 2 != 0 {
        return Err(PlanError::Inadmissible(format!("c3 must be even (got {})", t.c3)));
    }
    if t.c1c2 % 24 != 0 {
        return Err(PlanError::Inadmissible(format!("c1c2 must be divisible by 24 (got {})", t.c1c2)));
    }
    Ok(())
}

/// Which base construction a realization starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseFamily {
    W0,
    W1,
    W2,
    /// A single product `X(G) x S^2`, for `c1c2` below the W0 range.
    ProductS2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub recipe: Recipe,
    pub family: BaseFamily,
    /// Leaf blocks of the base, before the group summand.
    pub blocks: Vec<String>,
    pub base: ChernTriple,
    /// One point blow-up made before the budget whenever any blow-up is needed.
    pub prep_blow_up: bool,
    pub budget: BlowUpBudget,
    pub achieved: ChernTriple,
}

impl Realization {
    pub fn blow_up_count(&self) -> u64 {
        self.budget.total() + self.prep_blow_up as u64
    }
}

/// Budget (prep flag, budget) bringing `base` to `target`.
fn plan_blowups(base: &ChernTriple, target: &ChernTriple) -> Result<(bool, BlowUpBudget), PlanError> {
    let d13 = target.c13 - base.c13;
    let d3 = target.c3 - base.c3;
    if d13 == 0 && d3 == 0 {
        return Ok((false, BlowUpBudget::default()));
    }
    Ok((true, solve_budget(d13 + 8, d3 - 2)?))
}

fn cost(plan: &(bool, BlowUpBudget)) -> u64 {
    plan.1.total() + plan.0 as u64
}

/// Points of the geography region with `e + sigma = 4 chi`, `e <= e_max`, in
/// lexicographic order of `(e, sigma)`.
fn region_points(chi: i64, e_max: i64) -> impl Iterator<Item = (i64, i64)> {
    // sigma in [-8 chi, -1], e = 4 chi - sigma
    let lo = 4 * chi + 1;
    let hi = (12 * chi).min(e_max);
    (lo..=hi).map(move |e| (e, 4 * chi - e))
}

struct Best {
    key: (u64, [i64; 4]),
    params: [i64; 4],
    base: ChernTriple,
    plan: (bool, BlowUpBudget),
}

fn consider(best: &mut Option<Best>, params: [i64; 4], base: ChernTriple, target: &ChernTriple) -> Result<(), PlanError> {
    let plan = plan_blowups(&base, target)?;
    let key = (cost(&plan), params);
    if best.as_ref().map_or(true, |b| key < b.key) {
        *best = Some(Best { key, params, base, plan });
    }
    Ok(())
}

fn w_chern(family: WFamily, e: i64, s: i64, k: i64) -> ChernTriple {
    match family {
        WFamily::W0 => ChernTriple::new(18 * s + 12 * e + 48 * k, 6 * (e + s) + 24 * k, 2 * e + 8 * k),
        WFamily::W1 => ChernTriple::ZERO,
        WFamily::W2 => ChernTriple::new(-18 * s - 12 * e - 48 * k - 48, -6 * (e + s) - 24 * k - 24, -2 * e - 8 * k - 8),
    }
}

/// Scans the W family for the sign of `c1c2`; `None` when no parameters fit.
fn scan_w(family: WFamily, target: &ChernTriple, k: i64, e_max: i64) -> Result<Option<Best>, PlanError> {
    let m = target.c1c2 / 24;
    let total_chi = match family {
        WFamily::W0 => m - k,
        WFamily::W1 => 4,
        WFamily::W2 => -m - k - 1,
    };
    let mut best = None;
    if family == WFamily::W1 {
        let (e, s) = region_points(2, e_max).next().expect("chi 2 region is nonempty");
        consider(&mut best, [e, s, e, s], ChernTriple::ZERO, target)?;
        return Ok(best);
    }
    for chi1 in 2..=total_chi - 2 {
        let chi2 = total_chi - chi1;
        for (e1, s1) in region_points(chi1, e_max) {
            for (e2, s2) in region_points(chi2, e_max) {
                let base = w_chern(family, e1 + e2, s1 + s2, k);
                consider(&mut best, [e1, s1, e2, s2], base, target)?;
            }
        }
    }
    Ok(best)
}

/// `X(G) x S^2` with `c1c2 = 24 chi_h(X(G))`. `X` is `E1` when its
/// `chi_h` must be 1, else the cheapest geography block.
fn product_fallback(target: &ChernTriple, k: i64, e_max: i64) -> Result<Option<Best>, PlanError> {
    let chi_x = target.c1c2 / 24 - k;
    let (six, euler) = (6, 2);
    let mut best = None;
    if chi_x == 1 {
        // E1: e = 12, sigma = -8; the sum with BK adds 4k to e
        let (e, s) = (12 + 4 * k, -8);
        let base = ChernTriple::new((2 * e + 3 * s) * six, (e + s) * six, e * euler);
        consider(&mut best, [12, -8, 0, 0], base, target)?;
    } else if chi_x >= 2 {
        for (e, s) in region_points(chi_x, e_max) {
            let (eg, sg) = (e + 4 * k, s);
            let base = ChernTriple::new((2 * eg + 3 * sg) * six, (eg + sg) * six, eg * euler);
            consider(&mut best, [e, s, 0, 0], base, target)?;
        }
    }
    Ok(best)
}

fn group_summand(r: &mut Recipe, x: usize, torus: &str, group: &Presentation) -> usize {
    if group.generator_count() == 0 && group.relator_count() == 0 {
        return x;
    }
    let bk = r.leaf(format!("BK({group})"));
    r.sum4(x, bk, 1, Glue::along(torus, "T"))
}

fn append_blowups(r: &mut Recipe, plan: &(bool, BlowUpBudget)) {
    let mut at = r.root();
    if plan.0 {
        at = r.blow_up_point(at);
    }
    for _ in 0..plan.1.p {
        at = r.blow_up_point(at);
    }
    for _ in 0..plan.1.r_e {
        at = r.blow_up_surface(at, 0, -1);
    }
    for _ in 0..plan.1.z {
        at = r.blow_up_surface(at, 2, 0);
    }
}

/// Finds a recipe whose evaluation is exactly the target.
///
/// The base is the W family matching the sign of `c1c2`, with region
/// parameters scanned up to `e <= 4(|c1c2/24| + g + r + 16)` for the fewest
/// blow-ups. Positive `c1c2` below the W0 range falls back to a single
/// product `X(G) x S^2`; small negative `c1c2` has no base. The result is
/// checked by evaluating the recipe.
pub fn realize(target: &Target6, registry: &Registry) -> Result<Realization, PlanError> {
    let t = target.chern;
    check_admissible(&t)?;
    let k = target.group_size();
    let m = t.c1c2 / 24;
    let e_max = 4 * (m.abs() + k + 16);

    let family = match t.c1c2.signum() {
        1 => WFamily::W0,
        0 => WFamily::W1,
        _ => WFamily::W2,
    };
    let (base_family, best) = match scan_w(family, &t, k, e_max)? {
        Some(b) => (
            match family {
                WFamily::W0 => BaseFamily::W0,
                WFamily::W1 => BaseFamily::W1,
                WFamily::W2 => BaseFamily::W2,
            },
            b,
        ),
        None => {
            let fallback = if t.c1c2 > 0 { product_fallback(&t, k, e_max)? } else { None };
            match fallback {
                Some(b) => (BaseFamily::ProductS2, b),
                None => {
                    let need = match family {
                        WFamily::W0 => format!(
                            "W0 needs c1c2 >= {}, a product with S^2 needs c1c2 >= {}",
                            24 * (4 + k),
                            24 * (1 + k)
                        ),
                        _ => format!("W2 needs c1c2 <= {}", -24 * (5 + k)),
                    };
                    return Err(PlanError::SearchExhausted(format!(
                        "no base for c1c2 = {} with g + r = {k} (searched e <= {e_max}); {need}",
                        t.c1c2
                    )));
                }
            }
        }
    };

    let [e1, s1, e2, s2] = best.params;
    let (mut recipe, blocks) = match base_family {
        BaseFamily::W0 | BaseFamily::W1 | BaseFamily::W2 => {
            let r = w_pipeline(family, e1, s1, e2, s2, &target.group)?;
            let v = if family == WFamily::W2 { "Z12" } else { "Z11" };
            (r, vec![format!("{v}({e1},{s1})"), format!("{v}({e2},{s2})")])
        }
        BaseFamily::ProductS2 => {
            let mut r = Recipe::new();
            let (leaf, torus) = if (e1, s1) == (12, -8) {
                ("E1".to_string(), "T")
            } else {
                (format!("Z11({e1},{s1})"), "T1")
            };
            let x = r.leaf(leaf.clone());
            let x = group_summand(&mut r, x, torus, &target.group);
            r.product(x, 0);
            (r, vec![leaf])
        }
    };
    append_blowups(&mut recipe, &best.plan);

    let v = evaluate(&recipe, registry)?;
    let got = v
        .chern
        .ok_or_else(|| PlanError::Internal { want: t.to_string(), got: "a 4-manifold".into() })?;
    if got != t {
        return Err(PlanError::Internal {
            want: t.to_string(),
            got: got.to_string(),
        });
    }
    let (ab_got, ab_want) = (abelianization(&v.pi1), abelianization(&target.group));
    if ab_got != ab_want {
        return Err(PlanError::Internal {
            want: format!("H1 = {ab_want}"),
            got: format!("H1 = {ab_got}"),
        });
    }
    Ok(Realization {
        recipe,
        family: base_family,
        blocks,
        base: best.base,
        prep_blow_up: best.plan.0,
        budget: best.plan.1,
        achieved: got,
    })
}

#[cfg(test)]
mod tests;
