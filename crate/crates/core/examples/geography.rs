//! Lists the realized (c1^2, chi_h) points of 4-manifolds with fundamental
//! group of a given presentation size, spin and non-spin.

use sympgeo::planner::{enumerate_region_4d, Window};

fn main() {
    let (g, r) = (1, 1);
    for spin in [false, true] {
        let pts = enumerate_region_4d(&Window::chi(2, 5), g, r, spin);
        println!("{} points, g = {g}, r = {r}:", if spin { "spin" } else { "non-spin" });
        for p in pts {
            println!(
                "  (c1^2, chi_h) = ({:>3}, {})  e = {:>3}  sigma = {:>4}  via {}",
                p.c1sq, p.chi_h, p.e, p.sigma, p.witness
            );
        }
    }
}
