//! The raw presentation of the mapping-torus building block for a target
//! group and its abelianization after killing the section and fibre loops.

use sympgeo::blocks::{bk_block, bk_quotient, bk_raw_presentation};
use sympgeo::fpgroup::{abelianization, Presentation};

fn main() {
    for text in ["a | a a a", "a, b | a b a' b'", "a, b |"] {
        let g: Presentation = text.parse().unwrap();
        let raw = bk_raw_presentation(&g);
        let q = bk_quotient(&g);
        let b = bk_block(g.generator_count(), g.relator_count(), &g).unwrap();
        println!("target <{g}>");
        println!("  raw: {} generators, {} relators", raw.presentation.generator_count(), raw.presentation.relator_count());
        println!("  H1(quotient) = {}, H1(target) = {}", abelianization(&q), abelianization(&g));
        println!("  e = {}, sigma = {}", b.char4.e, b.char4.sigma);
    }
}
