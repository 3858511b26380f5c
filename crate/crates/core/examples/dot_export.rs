//! Writes a planned recipe as JSON and Graphviz DOT to stdout.

use sympgeo::blocks::Registry;
use sympgeo::calculus::to_dot;
use sympgeo::planner::{realize, Target6};

fn main() {
    let reg = Registry::bundled();
    let t = Target6::simply_connected(166, 96, 40);
    let r = realize(&t, &reg).unwrap();
    print!("{}", r.recipe.to_json());
    print!("{}", to_dot(&r.recipe, &reg));
}
