use crate::blocks::{geography_block, spin_block, GeoVariant};
use crate::charnum::ChernTriple;
use crate::fpgroup::Presentation;

use super::{CalcError, Glue, Recipe, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WFamily {
    /// Products with `S^2`, summed along `T^2 x S^2`.
    W0,
    /// Products with `T^2`, summed along `T^4`.
    W1,
    /// Products with `Sigma_2`, summed along `Sigma_2 x Sigma_2`.
    W2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YFamily {
    Y0,
    Y1,
    Y2,
}

impl WFamily {
    pub fn factor_genus(&self) -> u32 {
        match self {
            WFamily::W0 => 0,
            WFamily::W1 => 1,
            WFamily::W2 => 2,
        }
    }
}

impl YFamily {
    pub fn factor_genus(&self) -> u32 {
        match self {
            YFamily::Y0 => 0,
            YFamily::Y1 => 1,
            YFamily::Y2 => 2,
        }
    }
}

/// The two printed versions of `c3(W2(G))` in the arbitrary-group family:
/// one with the trailing `-8`, one without.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum C3Constant {
    Included,
    Omitted,
}

fn geo_id(variant: GeoVariant, e: i64, s: i64) -> Result<String> {
    geography_block(e, s, variant).map_err(|err| CalcError::Inadmissible(err.to_string()))?;
    Ok(match variant {
        GeoVariant::Z11 => format!("Z11({e},{s})"),
        GeoVariant::Z12 => format!("Z12({e},{s})"),
    })
}

fn spin_id(n: i64, s: i64) -> Result<String> {
    spin_block(n, s).map_err(|err| CalcError::Inadmissible(err.to_string()))?;
    Ok(format!("spin({n},{s})"))
}

fn is_trivial_presentation(g: &Presentation) -> bool {
    g.generator_count() == 0 && g.relator_count() == 0
}

/// Adds `X1(G)`: the block summed with `BK(G)` along the first torus when
/// the group is nontrivial.
fn x1_of_group(r: &mut Recipe, leaf: String, first_torus: &str, group: &Presentation) -> usize {
    let x = r.leaf(leaf);
    if is_trivial_presentation(group) {
        return x;
    }
    let bk = r.leaf(format!("BK({group})"));
    r.sum4(x, bk, 1, Glue::along(first_torus, "T"))
}

/// `X1(G) x Sigma_h  #  X2 x Sigma_h` with geography blocks (`Z11`, or
/// `Z12` for the genus-2 family).
pub fn w_pipeline(family: WFamily, e1: i64, s1: i64, e2: i64, s2: i64, group: &Presentation) -> Result<Recipe> {
    let variant = if family == WFamily::W2 { GeoVariant::Z12 } else { GeoVariant::Z11 };
    let a = geo_id(variant, e1, s1)?;
    let b = geo_id(variant, e2, s2)?;
    let h = family.factor_genus();
    let mut r = Recipe::new();
    let x1 = x1_of_group(&mut r, a, "T1", group);
    let p1 = r.product(x1, h);
    let x2 = r.leaf(b);
    let p2 = r.product(x2, h);
    r.sum6(p1, p2, Glue::default());
    Ok(r)
}

/// The spin analogue of [`w_pipeline`] built from `spin(n, s)` blocks.
pub fn y_pipeline(family: YFamily, n1: i64, s1: i64, n2: i64, s2: i64, group: &Presentation) -> Result<Recipe> {
    let a = spin_id(n1, s1)?;
    let b = spin_id(n2, s2)?;
    let h = family.factor_genus();
    let mut r = Recipe::new();
    let x1 = x1_of_group(&mut r, a, "T", group);
    let p1 = r.product(x1, h);
    let x2 = r.leaf(b);
    let p2 = r.product(x2, h);
    // once T carries the BK sum, the genus-0/1 sums use the second torus
    let glue = match family {
        YFamily::Y2 => Glue::default(),
        _ if is_trivial_presentation(group) => Glue::along("T", "T"),
        _ => Glue::along("T'", "T"),
    };
    r.sum6(p1, p2, glue);
    Ok(r)
}

fn check_region(e: i64, s: i64) -> Result<()> {
    geography_block(e, s, GeoVariant::Z11)
        .map(|_| ())
        .map_err(|err| CalcError::Inadmissible(err.to_string()))
}

fn check_spin(n: i64, s: i64) -> Result<()> {
    spin_block(n, s).map(|_| ()).map_err(|err| CalcError::Inadmissible(err.to_string()))
}

/// Chern numbers of `W_i` with simply connected blocks.
pub fn closed_form_w(family: WFamily, e1: i64, s1: i64, e2: i64, s2: i64) -> Result<ChernTriple> {
    check_region(e1, s1)?;
    check_region(e2, s2)?;
    Ok(match family {
        WFamily::W0 => ChernTriple::new(
            18 * (s1 + s2) + 12 * (e1 + e2),
            6 * (e1 + s1 + e2 + s2),
            2 * (e1 + e2),
        ),
        WFamily::W1 => ChernTriple::ZERO,
        WFamily::W2 => ChernTriple::new(
            -18 * (s1 + s2) - 12 * (e1 + e2) - 48,
            -6 * (e1 + s1 + e2 + s2) - 24,
            -2 * (e1 + e2) - 8,
        ),
    })
}

/// Chern numbers of `W_i(G)` for a group with `g` generators and `r`
/// relators. `c3` selects the `W2` constant.
pub fn closed_form_w_groups(
    family: WFamily,
    e1: i64,
    s1: i64,
    e2: i64,
    s2: i64,
    g: i64,
    r: i64,
    c3: C3Constant,
) -> Result<ChernTriple> {
    check_region(e1, s1)?;
    check_region(e2, s2)?;
    if g < 0 || r < 0 {
        return Err(CalcError::Inadmissible(format!("g and r must be non-negative (g = {g}, r = {r})")));
    }
    let k = g + r;
    Ok(match family {
        WFamily::W0 => ChernTriple::new(
            18 * (s1 + s2) + 12 * (e1 + e2) + 48 * k,
            6 * (e1 + s1 + e2 + s2) + 24 * k,
            2 * (e1 + e2) + 8 * k,
        ),
        WFamily::W1 => ChernTriple::ZERO,
        WFamily::W2 => {
            let tail = match c3 {
                C3Constant::Included => 8,
                C3Constant::Omitted => 0,
            };
            ChernTriple::new(
                -18 * (s1 + s2) - 12 * (e1 + e2) - 48 * k - 48,
                -6 * (e1 + s1 + e2 + s2) - 24 * k - 24,
                -2 * (e1 + e2) - 8 * k - tail,
            )
        }
    })
}

/// Chern numbers of the spin family `Y_i`.
pub fn closed_form_y(family: YFamily, n1: i64, s1: i64, n2: i64, s2: i64) -> Result<ChernTriple> {
    check_spin(n1, s1)?;
    check_spin(n2, s2)?;
    Ok(match family {
        YFamily::Y0 => ChernTriple::new(
            48 * (n1 + n2 - 2),
            48 * (s1 + s2) + 24 * (n1 + n2 - 2),
            48 * (s1 + s2) + 8 * (n1 + n2 - 2),
        ),
        YFamily::Y1 => ChernTriple::ZERO,
        YFamily::Y2 => ChernTriple::new(
            -48 * (n1 + n2 - 1),
            -48 * (s1 + s2) - 24 * (n1 + n2 - 1),
            -48 * (s1 + s2) - 8 * (n1 + n2 - 1),
        ),
    })
}

/// Chern numbers of `Y_i(G)`.
pub fn closed_form_y_groups(
    family: YFamily,
    n1: i64,
    s1: i64,
    n2: i64,
    s2: i64,
    g: i64,
    r: i64,
) -> Result<ChernTriple> {
    check_spin(n1, s1)?;
    check_spin(n2, s2)?;
    if g < 0 || r < 0 {
        return Err(CalcError::Inadmissible(format!("g and r must be non-negative (g = {g}, r = {r})")));
    }
    let k = g + r;
    Ok(match family {
        YFamily::Y0 => ChernTriple::new(
            48 * (n1 + n2 - 2) + 48 * k,
            48 * (s1 + s2) + 24 * (n1 + n2 - 2) + 24 * k,
            48 * (s1 + s2) + 8 * (n1 + n2 - 2) + 8 * k,
        ),
        YFamily::Y1 => ChernTriple::ZERO,
        YFamily::Y2 => ChernTriple::new(
            -48 * (n1 + n2 - 2) - 48 * k - 48,
            -24 * (n1 + n2 - 2) - 48 * (s1 + s2) - 24 * k - 24,
            -48 * (s1 + s2) - 8 * (n1 + n2 - 2) - 8 * k - 8,
        ),
    })
}
