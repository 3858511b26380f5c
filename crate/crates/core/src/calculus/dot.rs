use std::fmt::Write;

use crate::blocks::Registry;

use super::{evaluate_nodes, Invariants, Recipe, Step};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering of a recipe. Nodes are labelled with their operation
/// and, when the recipe evaluates, with their invariants; edges run from
/// child to parent.
pub fn to_dot(recipe: &Recipe, registry: &Registry) -> String {
    let values = evaluate_nodes(recipe, registry).ok();
    let mut out = String::from("digraph recipe {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, step) in recipe.nodes().iter().enumerate() {
        let mut label = match step {
            Step::Leaf { block } => format!("leaf {block}"),
            Step::Sum4 { genus, glue, .. } => {
                let mut l = format!("sum4 genus {genus}");
                if let (Some(a), Some(b)) = (&glue.left, &glue.right) {
                    let _ = write!(l, " ({a} = {b})");
                }
                l
            }
            Step::Luttinger { surgery, .. } => format!(
                "luttinger {} pushoff {} sign {:+}",
                surgery.torus, surgery.pushoff, surgery.sign
            ),
            Step::Product { genus, .. } => format!("product genus {genus}"),
            Step::Sum6 { .. } => "sum6".to_string(),
            Step::BlowUpPoint { .. } => "blowup_point".to_string(),
            Step::BlowUpSurface { genus, pairing, .. } => format!("blowup_surface genus {genus} pairing {pairing}"),
        };
        if let Some(v) = values.as_ref().map(|v| &v[i]) {
            match v.invariants {
                Invariants::Four(c) => {
                    let _ = write!(label, "\\ne = {}, sigma = {}", c.e, c.sigma);
                }
                Invariants::Six(t) => {
                    let _ = write!(label, "\\n(c1^3, c1c2, c3) = ({}, {}, {})", t.c13, t.c1c2, t.c3);
                }
            }
        }
        let label = escape(&label).replace("\\\\n", "\\n");
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for (i, step) in recipe.nodes().iter().enumerate() {
        for c in step.children() {
            let _ = writeln!(out, "  n{c} -> n{i};");
        }
    }
    out.push_str("}\n");
    out
}
