//! Plans recipes for a few target Chern triples and checks them by
//! evaluation. Pass `c13 c1c2 c3 [group]` to try your own.

use sympgeo::blocks::Registry;
use sympgeo::calculus::evaluate;
use sympgeo::planner::{realize, Target6};

fn main() {
    let reg = Registry::bundled();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let targets: Vec<(i64, i64, i64, String)> = if args.len() >= 3 {
        let n = |i: usize| args[i].parse::<i64>().expect("integer");
        vec![(n(0), n(1), n(2), args.get(3).cloned().unwrap_or_default())]
    } else {
        vec![
            (0, 0, 0, String::new()),
            (-228, -120, -44, String::new()),
            (2, 24, 2, String::new()),
            (2, 24, 2, "a | a a".into()),
            (500, 240, -10, "a,b | a b a' b'".into()),
        ]
    };
    for (a, b, c, g) in targets {
        let group = g.parse().expect("presentation");
        let t = Target6::new(a, b, c, group);
        match realize(&t, &reg) {
            Ok(r) => {
                let v = evaluate(&r.recipe, &reg).unwrap();
                println!(
                    "({a}, {b}, {c}) pi1 [{g}]: {:?} {:?}, {} blow-ups, {} nodes, evaluates to {}",
                    r.family,
                    r.blocks,
                    r.blow_up_count(),
                    r.recipe.len(),
                    v.chern.unwrap()
                );
            }
            Err(e) => println!("({a}, {b}, {c}) pi1 [{g}]: {e}"),
        }
    }
}
