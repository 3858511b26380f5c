//! Construction recipes and their evaluation: characteristic numbers, Chern
//! numbers and fundamental group presentations folded over a DAG of sums,
//! surgeries, products and blow-ups.

mod dot;
mod pipelines;
mod recipe;

use crate::blocks::{BlockError, Construction, Registry, SubKind, SubmanifoldData};
use crate::charnum::{self, CharError, CharNum4, ChernTriple, FourFiber, SurfaceGenus};
use crate::fpgroup::{
    self, direct_product, direct_product_free_abelian, tietze_simplify, FpError, GluingMap, Presentation, Word,
    DEFAULT_TIETZE_BUDGET,
};

pub use dot::to_dot;
pub use pipelines::{
    closed_form_w, closed_form_w_groups, closed_form_y, closed_form_y_groups, w_pipeline, y_pipeline, C3Constant,
    WFamily, YFamily,
};
pub use recipe::{Glue, GlueMap, Recipe, Step, Surgery};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalcError {
    #[error("recipe parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("malformed recipe: {0}")]
    Structure(String),
    #[error("node {node}: {msg}")]
    Node { node: usize, msg: String },
    #[error("node {node}: {source}")]
    Block { node: usize, source: BlockError },
    #[error("node {node}: {source}")]
    Char { node: usize, source: CharError },
    #[error("node {node}: {source}")]
    Group { node: usize, source: FpError },
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
}

pub type Result<T> = std::result::Result<T, CalcError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariants {
    Four(CharNum4),
    Six(ChernTriple),
}

impl Invariants {
    pub fn dim(&self) -> u8 {
        match self {
            Invariants::Four(_) => 4,
            Invariants::Six(_) => 6,
        }
    }
}

/// An embedded surface of a node. In dimension 6 it is `S x Sigma_h`, with
/// push-offs of `S` followed by the `Sigma_h` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    pub data: SubmanifoldData,
    pub factor_genus: Option<u32>,
}

impl Surface {
    fn base_genus(&self) -> u32 {
        self.data.kind.genus().0
    }
}

/// Full evaluation state of one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeValue {
    pub invariants: Invariants,
    /// Unsimplified presentation.
    pub pi1: Presentation,
    pub surfaces: Vec<Surface>,
    pub pi1_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalResult {
    pub dim: u8,
    pub char4: Option<CharNum4>,
    pub chern: Option<ChernTriple>,
    /// Presentation after bounded Tietze simplification.
    pub pi1: Presentation,
    /// False when any node relied on claimed gluing data.
    pub pi1_verified: bool,
}

/// Left-nested chain of default-glued `sum4` steps for a printed sum such as
/// `E1 #T2 S #Sigma2 X_1_2`.
pub fn construction_recipe(c: &Construction) -> Recipe {
    let mut r = Recipe::new();
    let mut acc = r.leaf(c.first.clone());
    for (g, operand) in &c.steps {
        let b = r.leaf(operand.clone());
        acc = r.sum4(acc, b, g.0, Glue::default());
    }
    r
}

/// Evaluates the recipe at its root.
pub fn evaluate(recipe: &Recipe, registry: &Registry) -> Result<EvalResult> {
    let values = evaluate_nodes(recipe, registry)?;
    let v = &values[recipe.root()];
    let (char4, chern) = match v.invariants {
        Invariants::Four(c) => (Some(c), None),
        Invariants::Six(t) => (None, Some(t)),
    };
    Ok(EvalResult {
        dim: v.invariants.dim(),
        char4,
        chern,
        pi1: tietze_simplify(&v.pi1, DEFAULT_TIETZE_BUDGET),
        pi1_verified: v.pi1_verified,
    })
}

/// Evaluates every node; entry `i` belongs to node `i`.
pub fn evaluate_nodes(recipe: &Recipe, registry: &Registry) -> Result<Vec<NodeValue>> {
    if recipe.is_empty() {
        return Err(CalcError::Structure("empty recipe".into()));
    }
    let mut out: Vec<NodeValue> = Vec::with_capacity(recipe.len());
    for (i, step) in recipe.nodes().iter().enumerate() {
        let v = eval_step(i, step, &out, registry)?;
        out.push(v);
    }
    Ok(out)
}

fn node_err(node: usize, msg: impl Into<String>) -> CalcError {
    CalcError::Node { node, msg: msg.into() }
}

fn four(node: usize, v: &NodeValue, op: &str) -> Result<CharNum4> {
    match v.invariants {
        Invariants::Four(c) => Ok(c),
        Invariants::Six(_) => Err(node_err(node, format!("{op} needs a 4-dimensional input, got dimension 6"))),
    }
}

fn six(node: usize, v: &NodeValue, op: &str) -> Result<ChernTriple> {
    match v.invariants {
        Invariants::Six(t) => Ok(t),
        Invariants::Four(_) => Err(node_err(node, format!("{op} needs a 6-dimensional input, got dimension 4"))),
    }
}

/// Picks the named surface, or by default the first non-Lagrangian surface
/// of the wanted genus, else the first of that genus.
fn choose(node: usize, surfaces: &[Surface], name: Option<&str>, genus: u32, side: &str) -> Result<usize> {
    if let Some(n) = name {
        let i = surfaces
            .iter()
            .position(|s| s.data.name == n)
            .ok_or_else(|| node_err(node, format!("{side} side has no surface named {n:?}")))?;
        if surfaces[i].base_genus() != genus {
            return Err(node_err(
                node,
                format!("{side} surface {n} has genus {}, the sum needs genus {genus}", surfaces[i].base_genus()),
            ));
        }
        return Ok(i);
    }
    surfaces
        .iter()
        .position(|s| s.base_genus() == genus && !s.data.lagrangian)
        .or_else(|| surfaces.iter().position(|s| s.base_genus() == genus))
        .ok_or_else(|| node_err(node, format!("{side} side has no surface of genus {genus}")))
}

/// The complement presentation: the ambient one, minus the meridian's
/// relator when the complement differs. Returns false when that relator is
/// missing, in which case the ambient presentation is kept.
fn complement(pi1: &Presentation, s: &SubmanifoldData) -> (Presentation, bool) {
    if s.complement_pi1_equals_ambient {
        return (pi1.clone(), true);
    }
    let mut c = pi1.clone();
    let removed = c.remove_relator(&s.meridian);
    (c, removed > 0)
}

fn shift_sub(s: &SubmanifoldData, off: usize) -> SubmanifoldData {
    let mut s = s.clone();
    s.meridian = s.meridian.shifted(off);
    s.fiber_generator_pushoffs = s.fiber_generator_pushoffs.iter().map(|w| w.shifted(off)).collect();
    s
}

/// Surviving surfaces of both sides, right-hand words shifted and clashing
/// names suffixed.
fn merge_surfaces(left: &[Surface], li: usize, right: &[Surface], ri: usize, off: usize) -> Vec<Surface> {
    let mut out: Vec<Surface> = left.iter().enumerate().filter(|&(i, _)| i != li).map(|(_, s)| s.clone()).collect();
    for (i, s) in right.iter().enumerate() {
        if i == ri {
            continue;
        }
        let mut s = Surface {
            data: shift_sub(&s.data, off),
            factor_genus: s.factor_genus,
        };
        let base = s.data.name.clone();
        let mut k = 2;
        while out.iter().any(|o| o.data.name == s.data.name) {
            s.data.name = format!("{base}.{k}");
            k += 1;
        }
        out.push(s);
    }
    out
}

struct Glued {
    pi1: Presentation,
    surfaces: Vec<Surface>,
    verified: bool,
}

fn glue_along(node: usize, l: &NodeValue, li: usize, r: &NodeValue, ri: usize, map: GlueMap) -> Result<Glued> {
    let (ls, rs) = (&l.surfaces[li], &r.surfaces[ri]);
    let (pl, okl) = complement(&l.pi1, &ls.data);
    let (pr, okr) = complement(&r.pi1, &rs.data);
    let lp = &ls.data.fiber_generator_pushoffs;
    let rp = &rs.data.fiber_generator_pushoffs;
    if lp.len() != rp.len() {
        return Err(node_err(
            node,
            format!("push-off counts differ: {} on the left, {} on the right", lp.len(), rp.len()),
        ));
    }
    let right_images = match (map, rs.factor_genus) {
        (GlueMap::Transverse, Some(h)) if h == rs.base_genus() && h > 0 => {
            let k = 2 * h as usize;
            rp[k..].iter().chain(&rp[..k]).cloned().collect()
        }
        _ => rp.clone(),
    };
    let glue = GluingMap {
        left_pushoffs: lp.clone(),
        right_images,
        left_meridian: ls.data.meridian.clone(),
        right_meridian: rs.data.meridian.clone(),
    };
    let pi1 = fpgroup::van_kampen_sum(&pl, &pr, &glue).map_err(|source| CalcError::Group { node, source })?;
    let off = l.pi1.generator_count();
    Ok(Glued {
        pi1,
        surfaces: merge_surfaces(&l.surfaces, li, &r.surfaces, ri, off),
        verified: l.pi1_verified && r.pi1_verified && ls.data.verified && rs.data.verified && okl && okr,
    })
}

fn eval_step(node: usize, step: &Step, done: &[NodeValue], registry: &Registry) -> Result<NodeValue> {
    let char_err = |source| CalcError::Char { node, source };
    match step {
        Step::Leaf { block } => {
            let b = registry.resolve(block).map_err(|source| CalcError::Block { node, source })?;
            Ok(NodeValue {
                invariants: Invariants::Four(b.char4),
                surfaces: b
                    .submanifolds
                    .iter()
                    .map(|s| Surface {
                        data: s.clone(),
                        factor_genus: None,
                    })
                    .collect(),
                pi1_verified: b.pi1_verified,
                pi1: b.pi1,
            })
        }
        Step::Sum4 { left, right, genus, glue } => {
            let (l, r) = (&done[*left], &done[*right]);
            let (x, y) = (four(node, l, "sum4")?, four(node, r, "sum4")?);
            if *genus == 0 {
                return Err(node_err(node, "sum4 along a sphere is not supported"));
            }
            let li = choose(node, &l.surfaces, glue.left.as_deref(), *genus, "left")?;
            let ri = choose(node, &r.surfaces, glue.right.as_deref(), *genus, "right")?;
            let c = charnum::sum4(&x, &y, SurfaceGenus(*genus)).map_err(char_err)?;
            let g = glue_along(node, l, li, r, ri, glue.map.unwrap_or(GlueMap::Identity))?;
            Ok(NodeValue {
                invariants: Invariants::Four(c),
                pi1: g.pi1,
                surfaces: g.surfaces,
                pi1_verified: g.verified,
            })
        }
        Step::Luttinger { child, surgery } => {
            let v = &done[*child];
            let c = four(node, v, "luttinger")?;
            let i = v
                .surfaces
                .iter()
                .position(|s| s.data.name == surgery.torus)
                .ok_or_else(|| node_err(node, format!("no torus named {:?}", surgery.torus)))?;
            let t = &v.surfaces[i].data;
            if t.kind != SubKind::Torus || !t.lagrangian {
                return Err(node_err(node, format!("{} is not a Lagrangian torus", t.name)));
            }
            if surgery.sign != 1 && surgery.sign != -1 {
                return Err(node_err(node, format!("surgery sign must be +1 or -1, got {}", surgery.sign)));
            }
            let l = t
                .fiber_generator_pushoffs
                .get(surgery.pushoff)
                .ok_or_else(|| node_err(node, format!("torus {} has no push-off {}", t.name, surgery.pushoff)))?;
            let (mut pi1, ok) = complement(&v.pi1, t);
            let rel = t.meridian.concat(&l.pow(surgery.sign as i64));
            pi1 = fpgroup::quotient_by_words(&pi1, &[rel]).map_err(|source| CalcError::Group { node, source })?;
            let mut surfaces = v.surfaces.clone();
            let verified = v.pi1_verified && t.verified && ok;
            surfaces.remove(i);
            Ok(NodeValue {
                invariants: Invariants::Four(charnum::luttinger(&c)),
                pi1,
                surfaces,
                pi1_verified: verified,
            })
        }
        Step::Product { child, genus } => {
            let v = &done[*child];
            let x = four(node, v, "product")?;
            let h = *genus;
            let t = charnum::product_with_surface(&x, SurfaceGenus(h)).map_err(char_err)?;
            let n = v.pi1.generator_count();
            let pi1 = match h {
                0 => v.pi1.clone(),
                1 => direct_product_free_abelian(&v.pi1, 2, "c"),
                _ => direct_product(&v.pi1, &Presentation::surface_named(h as usize, "c", "d")),
            };
            let factor: Vec<Word> = (0..2 * h as usize).map(|k| Word::gen(n + k)).collect();
            let surfaces = v
                .surfaces
                .iter()
                .map(|s| {
                    let mut d = s.data.clone();
                    d.fiber_generator_pushoffs.extend(factor.iter().cloned());
                    Surface {
                        data: d,
                        factor_genus: Some(h),
                    }
                })
                .collect();
            Ok(NodeValue {
                invariants: Invariants::Six(t),
                pi1,
                surfaces,
                pi1_verified: v.pi1_verified,
            })
        }
        Step::Sum6 { left, right, glue } => {
            let (l, r) = (&done[*left], &done[*right]);
            let (x, y) = (six(node, l, "sum6")?, six(node, r, "sum6")?);
            let (hl, hr) = (factor_genus(l), factor_genus(r));
            let h = match (hl, hr) {
                (Some(a), Some(b)) if a == b => a,
                (Some(a), Some(b)) => {
                    return Err(node_err(node, format!("product factors differ: genus {a} and genus {b}")))
                }
                _ => return Err(node_err(node, "sum6 needs both sides to carry product surfaces")),
            };
            let base = match (&glue.left, &glue.right) {
                (Some(n), _) => l
                    .surfaces
                    .iter()
                    .find(|s| &s.data.name == n)
                    .map(Surface::base_genus)
                    .ok_or_else(|| node_err(node, format!("left side has no surface named {n:?}")))?,
                (None, Some(n)) => r
                    .surfaces
                    .iter()
                    .find(|s| &s.data.name == n)
                    .map(Surface::base_genus)
                    .ok_or_else(|| node_err(node, format!("right side has no surface named {n:?}")))?,
                _ => h.max(1),
            };
            let li = choose(node, &l.surfaces, glue.left.as_deref(), base, "left")?;
            let ri = choose(node, &r.surfaces, glue.right.as_deref(), base, "right")?;
            let fiber = FourFiber::surface_product(SurfaceGenus(base), SurfaceGenus(h));
            let t = charnum::sum6(&x, &y, &fiber).map_err(char_err)?;
            let g = glue_along(node, l, li, r, ri, glue.map.unwrap_or(GlueMap::Transverse))?;
            Ok(NodeValue {
                invariants: Invariants::Six(t),
                pi1: g.pi1,
                surfaces: g.surfaces,
                pi1_verified: g.verified,
            })
        }
        Step::BlowUpPoint { child } => {
            let v = &done[*child];
            let t = six(node, v, "blowup_point")?;
            Ok(NodeValue {
                invariants: Invariants::Six(charnum::blow_up_point(&t).map_err(char_err)?),
                ..v.clone()
            })
        }
        Step::BlowUpSurface { child, genus, pairing } => {
            let v = &done[*child];
            let t = six(node, v, "blowup_surface")?;
            let t = charnum::blow_up_surface(&t, SurfaceGenus(*genus), *pairing).map_err(char_err)?;
            Ok(NodeValue {
                invariants: Invariants::Six(t),
                ..v.clone()
            })
        }
    }
}

fn factor_genus(v: &NodeValue) -> Option<u32> {
    v.surfaces.iter().find_map(|s| s.factor_genus)
}
