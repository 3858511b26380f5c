//! Sums a simply connected geography block with T^2 x Sigma_g along a torus
//! and shows the resulting fundamental group is the genus-g surface group.

use sympgeo::blocks::Registry;
use sympgeo::calculus::{evaluate, Glue, Recipe};
use sympgeo::cli::compare_pi1;
use sympgeo::fpgroup::{abelianization, Presentation};

fn main() {
    let reg = Registry::bundled();
    for g in 1..=3 {
        let mut r = Recipe::new();
        let a = r.leaf("Z11(9,-1)");
        let b = r.leaf(format!("T2xSigma({g})"));
        r.sum4(a, b, 1, Glue::along("T1", "T"));
        let v = evaluate(&r, &reg).unwrap();
        let expect = Presentation::surface(g);
        let (status, log) = compare_pi1(&v.pi1, &expect, v.pi1_verified);
        println!("g = {g}: pi1 = {}  (H1 = {})", v.pi1, abelianization(&v.pi1));
        println!("  status {}: {}", status.label(), log.join("; "));
    }
}
