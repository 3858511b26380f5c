//! Evaluates the W and Y pipelines at a few parameters next to their closed
//! forms, including both readings of the W2 constant for nontrivial groups.

use sympgeo::blocks::Registry;
use sympgeo::calculus::{
    closed_form_w, closed_form_w_groups, closed_form_y, evaluate, w_pipeline, y_pipeline, C3Constant, WFamily, YFamily,
};
use sympgeo::fpgroup::Presentation;

fn main() {
    let reg = Registry::bundled();
    let trivial = Presentation::trivial();
    for f in [WFamily::W0, WFamily::W1, WFamily::W2] {
        let r = w_pipeline(f, 9, -1, 10, -2, &trivial).unwrap();
        let v = evaluate(&r, &reg).unwrap().chern.unwrap();
        println!("{f:?}(9,-1,10,-2): pipeline {v}, closed form {}", closed_form_w(f, 9, -1, 10, -2).unwrap());
    }
    for f in [YFamily::Y0, YFamily::Y1, YFamily::Y2] {
        let r = y_pipeline(f, 1, 1, 2, 1, &trivial).unwrap();
        let v = evaluate(&r, &reg).unwrap().chern.unwrap();
        println!("{f:?}(1,1,2,1): pipeline {v}, closed form {}", closed_form_y(f, 1, 1, 2, 1).unwrap());
    }
    let z: Presentation = "a |".parse().unwrap();
    let r = w_pipeline(WFamily::W2, 9, -1, 9, -1, &z).unwrap();
    let v = evaluate(&r, &reg).unwrap();
    println!("W2(Z) pipeline {} with pi1 {}", v.chern.unwrap(), v.pi1);
    for c in [C3Constant::Included, C3Constant::Omitted] {
        let t = closed_form_w_groups(WFamily::W2, 9, -1, 9, -1, 1, 0, c).unwrap();
        println!("  closed form with constant {c:?}: {t}");
    }
}
