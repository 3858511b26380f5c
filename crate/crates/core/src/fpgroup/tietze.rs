use std::collections::HashSet;

use super::{Presentation, Word};

pub const DEFAULT_TIETZE_BUDGET: usize = 64;

fn delete_generator(names: &mut Vec<String>, rels: &mut [Word], idx: usize) {
    names.remove(idx);
    for r in rels.iter_mut() {
        *r = r.map_generators(|g| if g > idx { g - 1 } else { g });
    }
}

fn tidy(rels: &mut Vec<Word>) {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rels.len());
    for r in rels.drain(..) {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.cyclic_canonical()) {
            out.push(r);
        }
    }
    *rels = out;
}

/// If generator `g` occurs exactly once in `r`, returns the word it equals
/// according to `r = 1`.
fn solve_for(r: &Word, g: usize) -> Option<Word> {
    if r.occurrences(g) != 1 {
        return None;
    }
    let t = g as i32 + 1;
    let letters = r.letters();
    let pos = letters.iter().position(|l| l.abs() == t)?;
    // Rotate so the generator leads: r ~ g^e w.
    let rest = Word::from_letters(letters[pos + 1..].iter().chain(&letters[..pos]).copied());
    Some(if letters[pos] > 0 { rest.inverse() } else { rest })
}

/// One simplification move; returns false when nothing applies.
fn step(names: &mut Vec<String>, rels: &mut Vec<Word>) -> bool {
    tidy(rels);
    let n = names.len();

    // Relators of length one kill a generator outright.
    if let Some(i) = rels.iter().position(|r| r.len() == 1) {
        let g = rels[i].letters()[0].unsigned_abs() as usize - 1;
        rels.remove(i);
        for r in rels.iter_mut() {
            *r = r.substitute(g, &Word::identity());
        }
        delete_generator(names, rels, g);
        return true;
    }

    // A generator occurring once in the whole presentation goes away
    // together with its relator.
    for g in 0..n {
        let total: usize = rels.iter().map(|r| r.occurrences(g)).sum();
        if total == 1 {
            let i = rels.iter().position(|r| r.occurrences(g) == 1).expect("occurs");
            rels.remove(i);
            delete_generator(names, rels, g);
            return true;
        }
    }

    // Substitution when it does not grow the presentation.
    let before: usize = rels.iter().map(Word::len).sum();
    let mut best: Option<(usize, usize, Vec<Word>, usize)> = None;
    for (i, r) in rels.iter().enumerate() {
        for g in 0..n {
            let Some(image) = solve_for(r, g) else { continue };
            let others: Vec<Word> = rels
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| w.substitute(g, &image).cyclically_reduced())
                .collect();
            let after: usize = others.iter().map(Word::len).sum();
            if after <= before && best.as_ref().is_none_or(|b| after < b.3) {
                best = Some((i, g, others, after));
            }
        }
    }
    if let Some((_, g, others, _)) = best {
        *rels = others;
        delete_generator(names, rels, g);
        return true;
    }
    false
}

/// Bounded Tietze simplification. Each pass applies one move; the result
/// never has larger total relator length than the input.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut names = p.names().to_vec();
    let mut rels = p.relators().to_vec();
    for _ in 0..budget {
        if !step(&mut names, &mut rels) {
            break;
        }
    }
    tidy(&mut rels);
    let out = Presentation::from_parts_unchecked(names, rels);
    if out.total_length() > p.total_length() {
        p.clone()
    } else {
        out
    }
}
