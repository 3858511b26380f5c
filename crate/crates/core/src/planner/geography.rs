use serde::Serialize;

use crate::blocks::{geography_block, spin_block, GeoVariant};
use crate::calculus::{Glue, Recipe};
use crate::fpgroup::Presentation;

use super::PlanError;

/// Range of holomorphic Euler characteristics to enumerate, with optional
/// bounds on `c1^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub chi_min: i64,
    pub chi_max: i64,
    pub c1sq_min: Option<i64>,
    pub c1sq_max: Option<i64>,
}

impl Window {
    pub fn chi(chi_min: i64, chi_max: i64) -> Self {
        Window {
            chi_min,
            chi_max,
            c1sq_min: None,
            c1sq_max: None,
        }
    }

    fn admits(&self, c1sq: i64) -> bool {
        self.c1sq_min.map_or(true, |m| c1sq >= m) && self.c1sq_max.map_or(true, |m| c1sq <= m)
    }
}

/// A realized lattice point `(c1^2, chi_h)` of a 4-manifold with the given
/// group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeographyPoint {
    pub c1sq: i64,
    pub chi_h: i64,
    /// `2e + 3 sigma + 4(g + r)` relative to the witness, the weaker shift.
    pub c1sq_as_stated: i64,
    /// Euler characteristic and signature of the realizing manifold.
    pub e: i64,
    pub sigma: i64,
    /// Block before the group summand, e.g. `Z11(9,-1)` or `spin(1,1)`.
    pub witness: String,
    pub spin: bool,
}

impl GeographyPoint {
    fn new(c1sq: i64, chi_h: i64, k: i64, witness: String, spin: bool) -> Self {
        GeographyPoint {
            c1sq,
            chi_h,
            c1sq_as_stated: c1sq - 4 * k,
            e: 12 * chi_h - c1sq,
            sigma: c1sq - 8 * chi_h,
            witness,
            spin,
        }
    }
}

/// Every point in the window realized by `Z11(e, sigma) #T2 BK(G)` (or the
/// spin blocks when `spin`), sorted by `chi_h` then `c1^2`.
///
/// Non-spin: `c1^2 = 2e + 3 sigma + 8(g+r)`, `chi_h = (e + sigma)/4 + g + r`.
/// Spin: `(8n - 8 + 8(g+r), 2s + n - 1 + g + r)` for `n, s >= 1`.
pub fn enumerate_region_4d(window: &Window, g: usize, r: usize, spin: bool) -> Vec<GeographyPoint> {
    let k = (g + r) as i64;
    let mut out = Vec::new();
    for chi in window.chi_min..=window.chi_max {
        let chi_x = chi - k;
        if spin {
            // n = chi_x + 1 - 2s >= 1
            let mut pts = Vec::new();
            let mut s = 1;
            while chi_x + 1 - 2 * s >= 1 {
                let n = chi_x + 1 - 2 * s;
                let c1sq = 8 * n - 8 + 8 * k;
                if window.admits(c1sq) {
                    pts.push(GeographyPoint::new(c1sq, chi, k, format!("spin({n},{s})"), true));
                }
                s += 1;
            }
            pts.reverse();
            out.extend(pts);
        } else if chi_x >= 2 {
            for c0 in 0..8 * chi_x {
                let sigma = c0 - 8 * chi_x;
                let e = 4 * chi_x - sigma;
                let c1sq = c0 + 8 * k;
                if window.admits(c1sq) {
                    out.push(GeographyPoint::new(c1sq, chi, k, format!("Z11({e},{sigma})"), false));
                }
            }
        }
    }
    out
}

/// A recipe for a symplectic 4-manifold with the given `c1^2`, `chi_h` and
/// fundamental group.
pub fn realize_4d(c1sq: i64, chi_h: i64, group: &Presentation, spin: bool) -> Result<Recipe, PlanError> {
    let k = (group.generator_count() + group.relator_count()) as i64;
    let chi_x = chi_h - k;
    let (leaf, torus) = if spin {
        let rest = c1sq - 8 * k;
        if rest % 8 != 0 {
            return Err(PlanError::NotRealizable(format!("spin c1^2 - 8(g+r) = {rest} must be divisible by 8")));
        }
        let n = rest / 8 + 1;
        let twice_s = chi_x - n + 1;
        if twice_s % 2 != 0 {
            return Err(PlanError::NotRealizable(format!("spin chi_h - n - (g+r) + 1 = {twice_s} must be even")));
        }
        let s = twice_s / 2;
        spin_block(n, s).map_err(|e| PlanError::NotRealizable(e.to_string()))?;
        (format!("spin({n},{s})"), "T")
    } else {
        let sigma = c1sq - 8 * chi_h;
        let e = 4 * chi_x - sigma;
        geography_block(e, sigma, GeoVariant::Z11).map_err(|e| PlanError::NotRealizable(e.to_string()))?;
        (format!("Z11({e},{sigma})"), "T1")
    };
    let mut r = Recipe::new();
    let x = r.leaf(leaf);
    if k > 0 {
        let bk = r.leaf(format!("BK({group})"));
        r.sum4(x, bk, 1, Glue::along(torus, "T"));
    }
    Ok(r)
}
