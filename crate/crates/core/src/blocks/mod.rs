//! Building blocks: a registry of fixed 4-manifolds loaded from a text file
//! and code-defined parametric families, each with characteristic data, a
//! fundamental group presentation and embedded-surface gluing data.

mod families;
mod registry;

use std::collections::BTreeSet;
use std::fmt;

use crate::charnum::{CharError, CharNum4, SurfaceGenus};
use crate::fpgroup::{FpError, Presentation, Word};

pub use families::{
    bk_block, bk_quotient, bk_raw_presentation, free_group_block, geography_block, spin_block, surface_product_block,
    telescoping, BkRaw, GeoVariant, Telescope,
};
pub use registry::{Registry, BUNDLED_REGISTRY};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlockError {
    #[error("unknown block {0:?}")]
    UnknownBlock(String),
    #[error("inadmissible point: {0}")]
    Inadmissible(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("registry line {line}: {msg}")]
    Registry { line: usize, msg: String },
    #[error("cannot read registry {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] FpError),
}

pub type Result<T> = std::result::Result<T, BlockError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubKind {
    Torus,
    Genus2Surface,
    Sphere,
}

impl SubKind {
    pub fn genus(&self) -> SurfaceGenus {
        match self {
            SubKind::Torus => SurfaceGenus::TORUS,
            SubKind::Genus2Surface => SurfaceGenus::TWO,
            SubKind::Sphere => SurfaceGenus::SPHERE,
        }
    }

    /// Number of fiber-generator push-offs a surface of this kind carries.
    pub fn pushoff_count(&self) -> usize {
        2 * self.genus().0 as usize
    }

    pub fn from_genus(g: SurfaceGenus) -> Option<SubKind> {
        match g.0 {
            0 => Some(SubKind::Sphere),
            1 => Some(SubKind::Torus),
            2 => Some(SubKind::Genus2Surface),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SubKind::Torus => "torus",
            SubKind::Genus2Surface => "genus2",
            SubKind::Sphere => "sphere",
        }
    }
}

/// An embedded surface with the data needed to glue along it.
///
/// Words are over the ambient presentation. When the complement group
/// differs from the ambient group, the complement is modelled as the ambient
/// presentation without the relator that the meridian kills.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmanifoldData {
    pub name: String,
    pub kind: SubKind,
    pub self_intersection: i64,
    pub complement_pi1_equals_ambient: bool,
    pub meridian: Word,
    pub fiber_generator_pushoffs: Vec<Word>,
    pub homologically_essential: bool,
    pub lagrangian: bool,
    /// False when the words are placeholders for data that is only claimed.
    pub verified: bool,
}

impl SubmanifoldData {
    /// A surface whose complement has the ambient (here trivial) group, with
    /// trivial meridian and push-offs.
    pub fn trivial(name: &str, kind: SubKind, lagrangian: bool, verified: bool) -> Self {
        SubmanifoldData {
            name: name.to_string(),
            kind,
            self_intersection: 0,
            complement_pi1_equals_ambient: true,
            meridian: Word::identity(),
            fiber_generator_pushoffs: vec![Word::identity(); kind.pushoff_count()],
            homologically_essential: true,
            lagrangian,
            verified,
        }
    }

    pub fn validate(&self, pi1: &Presentation) -> std::result::Result<(), String> {
        if self.fiber_generator_pushoffs.len() != self.kind.pushoff_count() {
            return Err(format!(
                "submanifold {} of kind {} needs {} push-offs, has {}",
                self.name,
                self.kind.as_str(),
                self.kind.pushoff_count(),
                self.fiber_generator_pushoffs.len()
            ));
        }
        for w in self.fiber_generator_pushoffs.iter().chain(std::iter::once(&self.meridian)) {
            pi1.check_word(w).map_err(|e| format!("submanifold {}: {e}", self.name))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Minimal,
    OddForm,
    Spin,
}

impl Claim {
    pub fn as_str(&self) -> &'static str {
        match self {
            Claim::Minimal => "minimal",
            Claim::OddForm => "odd_form",
            Claim::Spin => "spin",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        match s {
            "minimal" => Some(Claim::Minimal),
            "odd_form" => Some(Claim::OddForm),
            "spin" => Some(Claim::Spin),
            _ => None,
        }
    }
}

/// A symplectic-sum construction `B0 #L1 B1 #L2 B2 ...`, folded left to
/// right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub first: String,
    pub steps: Vec<(SurfaceGenus, String)>,
}

impl Construction {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut toks = text.split_whitespace();
        let first = toks.next().ok_or("empty construction")?.to_string();
        let mut steps = Vec::new();
        while let Some(op) = toks.next() {
            let g = match op {
                "#T2" => SurfaceGenus::TORUS,
                "#Sigma2" => SurfaceGenus::TWO,
                other => return Err(format!("expected #T2 or #Sigma2, found {other:?}")),
            };
            let operand = toks.next().ok_or("construction ends with a sum operator")?;
            steps.push((g, operand.to_string()));
        }
        Ok(Construction { first, steps })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.first)?;
        for (g, b) in &self.steps {
            let op = if g.0 == 1 { "#T2" } else { "#Sigma2" };
            write!(f, " {op} {b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDescriptor {
    pub id: String,
    pub char4: CharNum4,
    pub pi1: Presentation,
    pub submanifolds: Vec<SubmanifoldData>,
    pub claims: BTreeSet<Claim>,
    pub provenance: String,
    /// False when the presentation itself is a placeholder.
    pub pi1_verified: bool,
    pub table_row: Option<u32>,
    pub construction: Option<Construction>,
    pub luttinger_surgeries: u32,
}

impl BlockDescriptor {
    pub fn new(id: impl Into<String>, char4: CharNum4, pi1: Presentation) -> Self {
        BlockDescriptor {
            id: id.into(),
            char4,
            pi1,
            submanifolds: Vec::new(),
            claims: BTreeSet::new(),
            provenance: String::new(),
            pi1_verified: true,
            table_row: None,
            construction: None,
            luttinger_surgeries: 0,
        }
    }

    pub fn submanifold(&self, name: &str) -> Option<&SubmanifoldData> {
        self.submanifolds.iter().find(|s| s.name == name)
    }

    /// True when the block and all its gluing data are printed, not claimed.
    pub fn fully_verified(&self) -> bool {
        self.pi1_verified && self.submanifolds.iter().all(|s| s.verified)
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        self.char4.c1_squared().map_err(|e| e.to_string())?;
        if self.char4.spin && self.char4.sigma % 16 != 0 {
            return Err(format!(
                "block {} is marked spin but sigma = {} is not divisible by 16",
                self.id, self.char4.sigma
            ));
        }
        for s in &self.submanifolds {
            if s.kind == SubKind::Sphere {
                return Err(format!("block {}: sphere submanifolds only arise from blow-ups", self.id));
            }
            s.validate(&self.pi1)?;
        }
        Ok(())
    }
}

/// Parametric families listed by `blocks` alongside the registry entries.
pub const PARAMETRIC_FAMILIES: &[(&str, &str)] = &[
    ("Z11(e,sigma)", "geography block with two essential Lagrangian tori, trivial pi1"),
    ("Z12(e,sigma)", "geography block with a Lagrangian torus and a genus-2 surface, trivial pi1"),
    ("spin(n,s)", "simply connected spin block, (c1^2, chi_h) = (8n-8, 2s+n-1)"),
    ("BK(<presentation>)", "block with prescribed pi1, e = 4(g+r), sigma = 0"),
    ("tele(A|B,g|C|D|F)", "telescoping triple, pi1 = Z^2"),
    ("T2xSigma(g)", "product of a torus and a genus-g surface"),
    ("free(n)", "mapping torus times a circle; free group after killing t, s"),
];

fn parse_args(s: &str) -> Option<(&str, &str)> {
    let open = s.find('(')?;
    let inner = s[open + 1..].strip_suffix(')')?;
    Some((&s[..open], inner))
}

fn int_args(inner: &str, n: usize, leaf: &str) -> Result<Vec<i64>> {
    let v: std::result::Result<Vec<i64>, _> = inner.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match v {
        Ok(v) if v.len() == n => Ok(v),
        _ => Err(BlockError::UnknownBlock(format!("{leaf} (expected {n} integer arguments)"))),
    }
}

fn nonneg(x: i64, what: &str) -> Result<u32> {
    u32::try_from(x).map_err(|_| BlockError::Inadmissible(format!("{what} must be a non-negative integer, got {x}")))
}

impl Registry {
    /// Resolves a leaf reference: a registered id or a parametric call such
    /// as `Z11(9,-1)`, `spin(1,1)`, `BK(a | a a)`, `tele(B,2)`.
    pub fn resolve(&self, leaf: &str) -> Result<BlockDescriptor> {
        let leaf = leaf.trim();
        if let Ok(b) = self.lookup(leaf) {
            return Ok(b.clone());
        }
        let (head, inner) = parse_args(leaf).ok_or_else(|| BlockError::UnknownBlock(leaf.to_string()))?;
        match head {
            "Z11" | "Z12" => {
                let a = int_args(inner, 2, leaf)?;
                let v = if head == "Z11" { GeoVariant::Z11 } else { GeoVariant::Z12 };
                geography_block(a[0], a[1], v)
            }
            "spin" => {
                let a = int_args(inner, 2, leaf)?;
                spin_block(a[0], a[1])
            }
            "BK" => {
                let p: Presentation = inner.parse()?;
                bk_block(p.generator_count(), p.relator_count(), &p)
            }
            "tele" => {
                let mut parts = inner.split(',').map(str::trim);
                let which = parts.next().unwrap_or("");
                let g = match parts.next() {
                    Some(t) => nonneg(t.parse().map_err(|_| BlockError::UnknownBlock(leaf.to_string()))?, "g")?,
                    None => 0,
                };
                let t = match which {
                    "A" => Telescope::A,
                    "B" => Telescope::B(g),
                    "C" => Telescope::C,
                    "D" => Telescope::D,
                    "F" => Telescope::F,
                    _ => return Err(BlockError::UnknownBlock(leaf.to_string())),
                };
                Ok(telescoping(t))
            }
            "T2xSigma" => {
                let a = int_args(inner, 1, leaf)?;
                surface_product_block(nonneg(a[0], "genus")?)
            }
            "free" => {
                let a = int_args(inner, 1, leaf)?;
                free_group_block(nonneg(a[0], "rank")?)
            }
            _ => Err(BlockError::UnknownBlock(leaf.to_string())),
        }
    }
}
