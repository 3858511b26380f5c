//! Smith normal form of a small integer matrix and the abelianization of a
//! few presentations.

use sympgeo::fpgroup::{abelianization, smith_normal_form, Presentation};

fn main() {
    let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let snf = smith_normal_form(&a);
    println!("matrix {a:?}");
    println!("invariant factors {:?}, rank {}", snf.invariant_factors(), snf.rank());
    for text in ["x | x^12", "a, b | a b a' b'", "a, b | a a; b b b; a b a' b'", "a, b, c | a b; b c; c a"] {
        let text = text.replace("x^12", &"x ".repeat(12));
        let p: Presentation = text.parse().unwrap();
        println!("H1<{p}> = {}", abelianization(&p));
    }
}
