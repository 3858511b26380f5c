//! Rebuilds every registry row that has a printed sum construction and
//! compares the evaluated (c1^2, chi_h, sigma) with the stored entry.

use sympgeo::blocks::Registry;
use sympgeo::calculus::{construction_recipe, evaluate};

fn main() {
    let reg = Registry::bundled();
    println!("{:<10} {:<40} {:>14} {:>14}", "row", "construction", "stored", "evaluated");
    for row in reg.table_rows() {
        let stored = row.char4;
        let shown = |e: i64, s: i64| format!("({}, {}, {})", 2 * e + 3 * s, (e + s) / 4, s);
        let Some(c) = &row.construction else {
            println!("{:<10} {:<40} {:>14} {:>14}", row.id, "(no sum construction)", shown(stored.e, stored.sigma), "-");
            continue;
        };
        let v = evaluate(&construction_recipe(c), &reg).expect("row evaluates");
        let got = v.char4.expect("4-dimensional");
        let mark = if (got.e, got.sigma) == (stored.e, stored.sigma) { "" } else { "  MISMATCH" };
        println!(
            "{:<10} {:<40} {:>14} {:>14}{mark}",
            row.id,
            c.to_string(),
            shown(stored.e, stored.sigma),
            shown(got.e, got.sigma)
        );
    }
}
