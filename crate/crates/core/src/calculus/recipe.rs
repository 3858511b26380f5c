use serde::{Deserialize, Serialize};

use super::CalcError;

/// How fiber-generator push-offs are matched across a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GlueMap {
    /// i-th push-off to i-th push-off.
    Identity,
    /// In a 6-dimensional sum along `S x Sigma_h` with genus(S) = h, the
    /// push-offs of `S` go to the `Sigma_h` generators of the other side
    /// and vice versa. Falls back to `Identity` otherwise.
    Transverse,
}

/// Which surfaces to glue along. Missing fields take defaults at
/// evaluation time.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Glue {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<GlueMap>,
}

impl Glue {
    pub fn along(left: &str, right: &str) -> Glue {
        Glue {
            left: Some(left.to_string()),
            right: Some(right.to_string()),
            map: None,
        }
    }

    fn is_default(&self) -> bool {
        *self == Glue::default()
    }
}

/// Luttinger surgery on a Lagrangian torus: the relation
/// `meridian * pushoff^sign = 1` is imposed on the torus complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Surgery {
    pub torus: String,
    pub pushoff: usize,
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Step {
    Leaf { block: String },
    Sum4 { left: usize, right: usize, genus: u32, glue: Glue },
    Luttinger { child: usize, surgery: Surgery },
    Product { child: usize, genus: u32 },
    Sum6 { left: usize, right: usize, glue: Glue },
    BlowUpPoint { child: usize },
    BlowUpSurface { child: usize, genus: u32, pairing: i64 },
}

impl Step {
    pub fn op_name(&self) -> &'static str {
        match self {
            Step::Leaf { .. } => "leaf",
            Step::Sum4 { .. } => "sum4",
            Step::Luttinger { .. } => "luttinger",
            Step::Product { .. } => "product",
            Step::Sum6 { .. } => "sum6",
            Step::BlowUpPoint { .. } => "blowup_point",
            Step::BlowUpSurface { .. } => "blowup_surface",
        }
    }

    pub fn children(&self) -> Vec<usize> {
        match self {
            Step::Leaf { .. } => vec![],
            Step::Sum4 { left, right, .. } | Step::Sum6 { left, right, .. } => vec![*left, *right],
            Step::Luttinger { child, .. }
            | Step::Product { child, .. }
            | Step::BlowUpPoint { child }
            | Step::BlowUpSurface { child, .. } => vec![*child],
        }
    }
}

/// A construction plan. Nodes only reference earlier nodes, so the list is
/// a topological order of the DAG.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Recipe {
    nodes: Vec<Step>,
    root: usize,
}

impl Recipe {
    pub fn new() -> Recipe {
        Recipe::default()
    }

    /// Builds a recipe from nodes, checking that children precede parents.
    pub fn from_nodes(nodes: Vec<Step>, root: usize) -> Result<Recipe, CalcError> {
        if root >= nodes.len() {
            return Err(CalcError::Structure(format!("root {root} out of range ({} nodes)", nodes.len())));
        }
        for (i, s) in nodes.iter().enumerate() {
            if let Some(c) = s.children().into_iter().find(|&c| c >= i) {
                return Err(CalcError::Structure(format!("node {i} references node {c}, which does not precede it")));
            }
        }
        Ok(Recipe { nodes, root })
    }

    /// Appends a node and makes it the root.
    ///
    /// # Panics
    /// If the step references a node that does not exist yet.
    pub fn push(&mut self, step: Step) -> usize {
        let i = self.nodes.len();
        assert!(step.children().iter().all(|&c| c < i), "child index out of range");
        self.nodes.push(step);
        self.root = i;
        i
    }

    pub fn leaf(&mut self, block: impl Into<String>) -> usize {
        self.push(Step::Leaf { block: block.into() })
    }

    pub fn sum4(&mut self, left: usize, right: usize, genus: u32, glue: Glue) -> usize {
        self.push(Step::Sum4 { left, right, genus, glue })
    }

    pub fn luttinger(&mut self, child: usize, torus: &str, pushoff: usize, sign: i32) -> usize {
        let surgery = Surgery {
            torus: torus.to_string(),
            pushoff,
            sign,
        };
        self.push(Step::Luttinger { child, surgery })
    }

    pub fn product(&mut self, child: usize, genus: u32) -> usize {
        self.push(Step::Product { child, genus })
    }

    pub fn sum6(&mut self, left: usize, right: usize, glue: Glue) -> usize {
        self.push(Step::Sum6 { left, right, glue })
    }

    pub fn blow_up_point(&mut self, child: usize) -> usize {
        self.push(Step::BlowUpPoint { child })
    }

    pub fn blow_up_surface(&mut self, child: usize, genus: u32, pairing: i64) -> usize {
        self.push(Step::BlowUpSurface { child, genus, pairing })
    }

    pub fn nodes(&self) -> &[Step] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Serializes the tree below the root as pretty-printed JSON. Shared
    /// nodes are written once per use.
    pub fn to_json(&self) -> String {
        let tree = self.tree(self.root);
        let mut s = serde_json::to_string_pretty(&tree).expect("tree serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Recipe, CalcError> {
        let tree: TreeNode = serde_json::from_str(text).map_err(|e| CalcError::Parse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        let mut r = Recipe::new();
        let root = flatten(&tree, "root", &mut r)?;
        r.root = root;
        Ok(r)
    }

    /// Runs of identical blow-ups collapse into one node with a `count`.
    fn tree(&self, i: usize) -> TreeNode {
        let step = &self.nodes[i];
        let mut t = TreeNode {
            op: step.op_name().to_string(),
            ..TreeNode::default()
        };
        let mut bottom = i;
        if matches!(step, Step::BlowUpPoint { .. } | Step::BlowUpSurface { .. }) {
            let mut n = 1u32;
            loop {
                let c = self.nodes[bottom].children()[0];
                if !same_blow_up(&self.nodes[c], step) {
                    break;
                }
                bottom = c;
                n += 1;
            }
            t.count = (n > 1).then_some(n);
        }
        t.children = self.nodes[bottom].children().into_iter().map(|c| self.tree(c)).collect();
        match step {
            Step::Leaf { block } => t.block = Some(block.clone()),
            Step::Sum4 { genus, glue, .. } => {
                t.genus = Some(*genus);
                t.glue = (!glue.is_default()).then(|| glue.clone());
            }
            Step::Luttinger { surgery, .. } => t.surgery = Some(surgery.clone()),
            Step::Product { genus, .. } => t.genus = Some(*genus),
            Step::Sum6 { glue, .. } => t.glue = (!glue.is_default()).then(|| glue.clone()),
            Step::BlowUpPoint { .. } => {}
            Step::BlowUpSurface { genus, pairing, .. } => {
                t.genus = Some(*genus);
                t.pairing = Some(*pairing);
            }
        }
        t
    }
}

fn same_blow_up(a: &Step, b: &Step) -> bool {
    match (a, b) {
        (Step::BlowUpPoint { .. }, Step::BlowUpPoint { .. }) => true,
        (
            Step::BlowUpSurface { genus, pairing, .. },
            Step::BlowUpSurface {
                genus: g2, pairing: p2, ..
            },
        ) => genus == g2 && pairing == p2,
        _ => false,
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeNode {
    op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    block: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairing: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    surgery: Option<Surgery>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    glue: Option<Glue>,
    /// Repetitions of a blow-up; absent means one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    children: Vec<TreeNode>,
}

fn flatten(t: &TreeNode, path: &str, r: &mut Recipe) -> Result<usize, CalcError> {
    let bad = |msg: String| CalcError::Parse {
        line: 0,
        column: 0,
        msg: format!("{path}: {msg}"),
    };
    let arity = match t.op.as_str() {
        "leaf" => 0,
        "sum4" | "sum6" => 2,
        "luttinger" | "product" | "blowup_point" | "blowup_surface" => 1,
        other => return Err(bad(format!("unknown op {other:?}"))),
    };
    if t.children.len() != arity {
        return Err(bad(format!("op {} takes {arity} children, found {}", t.op, t.children.len())));
    }
    let allowed: &[&str] = match t.op.as_str() {
        "leaf" => &["block"],
        "sum4" => &["genus", "glue"],
        "luttinger" => &["surgery"],
        "product" => &["genus"],
        "sum6" => &["glue"],
        "blowup_point" => &["count"],
        _ => &["genus", "pairing", "count"],
    };
    let present = [
        ("block", t.block.is_some()),
        ("genus", t.genus.is_some()),
        ("pairing", t.pairing.is_some()),
        ("surgery", t.surgery.is_some()),
        ("glue", t.glue.is_some()),
        ("count", t.count.is_some()),
    ];
    if t.count == Some(0) {
        return Err(bad("count must be at least 1".into()));
    }
    if let Some((f, _)) = present.iter().find(|(f, p)| *p && !allowed.contains(f)) {
        return Err(bad(format!("field {f:?} not allowed on op {}", t.op)));
    }
    let mut kids = Vec::new();
    for (k, c) in t.children.iter().enumerate() {
        kids.push(flatten(c, &format!("{path}.children[{k}]"), r)?);
    }
    let need = |f: &str| bad(format!("op {} requires field {f:?}", t.op));
    if let Some(n) = t.count {
        let mut at = kids[0];
        for _ in 0..n {
            at = match t.op.as_str() {
                "blowup_point" => r.blow_up_point(at),
                _ => r.blow_up_surface(
                    at,
                    t.genus.ok_or_else(|| need("genus"))?,
                    t.pairing.ok_or_else(|| need("pairing"))?,
                ),
            };
        }
        return Ok(at);
    }
    let step = match t.op.as_str() {
        "leaf" => Step::Leaf {
            block: t.block.clone().ok_or_else(|| need("block"))?,
        },
        "sum4" => Step::Sum4 {
            left: kids[0],
            right: kids[1],
            genus: t.genus.ok_or_else(|| need("genus"))?,
            glue: t.glue.clone().unwrap_or_default(),
        },
        "luttinger" => Step::Luttinger {
            child: kids[0],
            surgery: t.surgery.clone().ok_or_else(|| need("surgery"))?,
        },
        "product" => Step::Product {
            child: kids[0],
            genus: t.genus.ok_or_else(|| need("genus"))?,
        },
        "sum6" => Step::Sum6 {
            left: kids[0],
            right: kids[1],
            glue: t.glue.clone().unwrap_or_default(),
        },
        "blowup_point" => Step::BlowUpPoint { child: kids[0] },
        _ => Step::BlowUpSurface {
            child: kids[0],
            genus: t.genus.ok_or_else(|| need("genus"))?,
            pairing: t.pairing.ok_or_else(|| need("pairing"))?,
        },
    };
    Ok(r.push(step))
}
