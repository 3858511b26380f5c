use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::{FpError, Result, Word};

/// A finitely presented group `<generators | relators>`.
///
/// Generators are addressed by index; names are display metadata only.
/// Relators are kept freely and cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// The trivial group `< | >`.
    pub fn trivial() -> Self {
        Presentation::default()
    }

    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = names.len();
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= n {
                    return Err(FpError::InvalidGenerator { index: m, count: n });
                }
            }
        }
        Ok(Presentation {
            names,
            relators: relators.into_iter().map(|r| r.cyclically_reduced()).collect(),
        })
    }

    /// Convenience constructor from string names.
    pub fn with_names<S: AsRef<str>>(names: &[S], relators: Vec<Word>) -> Result<Self> {
        Self::new(names.iter().map(|s| s.as_ref().to_string()).collect(), relators)
    }

    /// Free group on the given generator names.
    pub fn free<S: AsRef<str>>(names: &[S]) -> Self {
        Self::with_names(names, Vec::new()).expect("no relators")
    }

    /// Free abelian group of rank `k` with generators named `prefix1..prefixk`.
    pub fn free_abelian(k: usize, prefix: &str) -> Self {
        direct_product_free_abelian(&Presentation::trivial(), k, prefix)
    }

    /// `<x | x^p>`.
    pub fn cyclic(p: u32) -> Self {
        Self::with_names(&["x"], vec![Word::gen(0).pow(p as i64)]).expect("valid")
    }

    /// Fundamental group of the closed genus-g surface with generators
    /// `a1, b1, ..., ag, bg` and relator `[a1,b1]...[ag,bg]`.
    pub fn surface(g: usize) -> Self {
        Self::surface_named(g, "a", "b")
    }

    pub fn surface_named(g: usize, a: &str, b: &str) -> Self {
        let mut names = Vec::with_capacity(2 * g);
        for i in 1..=g {
            names.push(format!("{a}{i}"));
            names.push(format!("{b}{i}"));
        }
        let rel = surface_relator(0, g);
        let relators = if g == 0 { Vec::new() } else { vec![rel] };
        Self::new(names, relators).expect("valid")
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Checks that every letter of `w` addresses a generator.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(m) if m >= self.names.len() => Err(FpError::InvalidGenerator {
                index: m,
                count: self.names.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Appends relators (already validated).
    pub(crate) fn push_relators(&mut self, words: impl IntoIterator<Item = Word>) {
        self.relators.extend(words.into_iter().map(|w| w.cyclically_reduced()));
    }

    pub(crate) fn from_parts_unchecked(names: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation { names, relators }
    }

    /// Removes every relator equal to `w` up to rotation and inversion.
    /// Returns how many were removed.
    pub fn remove_relator(&mut self, w: &Word) -> usize {
        let key = w.cyclic_canonical();
        let before = self.relators.len();
        self.relators.retain(|r| r.cyclic_canonical() != key);
        before - self.relators.len()
    }

    /// Parses a word written with this presentation's generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word_with(&self.names, text)
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_word_with(&self.names, w)
    }

    /// Relators sorted by their cyclic canonical form; used to compare
    /// presentations syntactically.
    pub fn canonical_relators(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self
            .relators
            .iter()
            .map(Word::cyclic_canonical)
            .filter(|w| !w.is_empty())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Same generator count and same relator set up to rotation/inversion
    /// (names ignored).
    pub fn syntactically_equal(&self, other: &Presentation) -> bool {
        self.generator_count() == other.generator_count()
            && self.canonical_relators() == other.canonical_relators()
    }
}

pub(crate) fn surface_relator(offset: usize, g: usize) -> Word {
    let mut rel = Word::identity();
    for i in 0..g {
        let a = Word::gen(offset + 2 * i);
        let b = Word::gen(offset + 2 * i + 1);
        rel = rel.concat(&Word::commutator(&a, &b));
    }
    rel
}

fn unique_name(taken: &HashSet<String>, base: &str) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    let mut k = 2;
    loop {
        let cand = format!("{base}.{k}");
        if !taken.contains(&cand) {
            return cand;
        }
        k += 1;
    }
}

/// Free product: disjoint union of generators, union of relators. Clashing
/// names on the right are suffixed (`a.2`), indices shift by `p`'s rank.
pub fn free_product(p: &Presentation, q: &Presentation) -> Presentation {
    let mut taken: HashSet<String> = p.names.iter().cloned().collect();
    let mut names = p.names.clone();
    for n in &q.names {
        let u = unique_name(&taken, n);
        taken.insert(u.clone());
        names.push(u);
    }
    let off = p.generator_count();
    let mut relators = p.relators.clone();
    relators.extend(q.relators.iter().map(|r| r.shifted(off)));
    Presentation { names, relators }
}

/// Direct product: free product plus commutators between every generator
/// of `p` and every generator of `q`.
pub fn direct_product(p: &Presentation, q: &Presentation) -> Presentation {
    let mut out = free_product(p, q);
    let off = p.generator_count();
    let mut extra = Vec::new();
    for i in 0..off {
        for j in 0..q.generator_count() {
            extra.push(Word::commutator(&Word::gen(i), &Word::gen(off + j)));
        }
    }
    out.push_relators(extra);
    out
}

/// Adjoins `k` new generators commuting with everything (`p × Z^k`).
pub fn direct_product_free_abelian(p: &Presentation, k: usize, prefix: &str) -> Presentation {
    let names: Vec<String> = (1..=k).map(|i| format!("{prefix}{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            rels.push(Word::commutator(&Word::gen(i), &Word::gen(j)));
        }
    }
    let zk = Presentation::from_parts_unchecked(names, rels);
    if p.generator_count() == 0 {
        return zk;
    }
    direct_product(p, &zk)
}

/// Quotient by the normal closure of `killed`.
pub fn quotient_by_words(p: &Presentation, killed: &[Word]) -> Result<Presentation> {
    for w in killed {
        p.check_word(w)?;
    }
    let mut out = p.clone();
    out.push_relators(killed.iter().cloned());
    Ok(out)
}

/// Gluing data for a van Kampen amalgamation along a codimension-2 surface.
///
/// `left_pushoffs[i]` (a word over side 1) is identified with
/// `right_images[i]` (a word over side 2); the meridians are identified as
/// `mu_left * mu_right = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingMap {
    pub left_pushoffs: Vec<Word>,
    pub right_images: Vec<Word>,
    pub left_meridian: Word,
    pub right_meridian: Word,
}

/// Fundamental group of a symplectic sum from the two complement groups.
pub fn van_kampen_sum(pc1: &Presentation, pc2: &Presentation, glue: &GluingMap) -> Result<Presentation> {
    if glue.left_pushoffs.len() != glue.right_images.len() {
        return Err(FpError::GluingArity {
            left: glue.left_pushoffs.len(),
            right: glue.right_images.len(),
        });
    }
    for w in glue.left_pushoffs.iter().chain(std::iter::once(&glue.left_meridian)) {
        pc1.check_word(w)?;
    }
    for w in glue.right_images.iter().chain(std::iter::once(&glue.right_meridian)) {
        pc2.check_word(w)?;
    }
    let off = pc1.generator_count();
    let mut out = free_product(pc1, pc2);
    let mut extra = Vec::new();
    for (l, r) in glue.left_pushoffs.iter().zip(&glue.right_images) {
        extra.push(l.concat(&r.shifted(off).inverse()));
    }
    extra.push(glue.left_meridian.concat(&glue.right_meridian.shifted(off)));
    out.push_relators(extra);
    Ok(out)
}

fn is_name_char(c: char) -> bool {
    !(c.is_whitespace() || matches!(c, ',' | ';' | '|' | '\''))
}

fn parse_word_with(names: &[String], text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Ok(Word::identity());
    }
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (name, inv) = match tok.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| FpError::UnknownGenerator(name.to_string()))?;
        let l = idx as i32 + 1;
        letters.push(if inv { -l } else { l });
    }
    Ok(Word::from_letters(letters))
}

fn format_word_with(names: &[String], w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut s = String::new();
    for (i, &l) in w.letters().iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&names[l.unsigned_abs() as usize - 1]);
        if l < 0 {
            s.push('\'');
        }
    }
    s
}

impl FromStr for Presentation {
    type Err = FpError;

    /// Text form `a,b | a b a' b'; a a`. The relator part (and the bar) may
    /// be omitted; the empty string is the trivial group.
    fn from_str(text: &str) -> Result<Self> {
        let (gens, rels) = match text.split_once('|') {
            Some((g, r)) => (g, r),
            None => (text, ""),
        };
        if rels.contains('|') {
            return Err(FpError::Parse("more than one '|'".into()));
        }
        let mut names: Vec<String> = Vec::new();
        let gens = gens.trim();
        if !gens.is_empty() {
            for g in gens.split(',') {
                let g = g.trim();
                if g.is_empty() || !g.chars().all(is_name_char) {
                    return Err(FpError::Parse(format!("bad generator name {g:?}")));
                }
                if names.iter().any(|n| n == g) {
                    return Err(FpError::Parse(format!("duplicate generator {g:?}")));
                }
                names.push(g.to_string());
            }
        }
        let mut relators = Vec::new();
        let rels = rels.trim();
        if !rels.is_empty() {
            for r in rels.split(';') {
                relators.push(parse_word_with(&names, r)?);
            }
        }
        Presentation::new(names, relators)
    }
}

impl fmt::Display for Presentation {
    /// Canonical text form; `parse(print(p)) == p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))?;
        if self.names.is_empty() {
            write!(f, "|")?;
        } else {
            write!(f, " |")?;
        }
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            write!(f, "{sep}{}", format_word_with(&self.names, r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_print() {
        let p: Presentation = "a,b | a b a' b'".parse().unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators()[0].letters(), &[1, 2, -1, -2]);
        assert_eq!(p.to_string(), "a,b | a b a' b'");

        for text in ["|", "a |", "a,b |", "x | x x x", "a,b | a; b", "x_1,y_1 | x_1 y_1; 1"] {
            assert_eq!(text.parse::<Presentation>().unwrap().to_string(), text);
        }
        assert_eq!("".parse::<Presentation>().unwrap(), Presentation::trivial());
        assert_eq!("a,b".parse::<Presentation>().unwrap(), Presentation::free(&["a", "b"]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("a | b".parse::<Presentation>(), Err(FpError::UnknownGenerator(_))));
        assert!("a,a |".parse::<Presentation>().is_err());
        assert!("a | a | a".parse::<Presentation>().is_err());
        assert!("a,,b |".parse::<Presentation>().is_err());
    }

    #[test]
    fn free_product_examples() {
        let a = Presentation::free(&["a"]);
        let b = Presentation::free(&["b"]);
        let f2 = free_product(&a, &b);
        assert_eq!(f2.to_string(), "a,b |");

        let p: Presentation = "a,b | a b b".parse().unwrap();
        assert_eq!(free_product(&Presentation::trivial(), &p), p);

        let z2: Presentation = "a | a a".parse().unwrap();
        let z3: Presentation = "b | b b b".parse().unwrap();
        assert_eq!(free_product(&z2, &z3).to_string(), "a,b | a a; b b b");
    }

    #[test]
    fn free_product_renames_clashes() {
        let a = Presentation::free(&["a"]);
        assert_eq!(free_product(&a, &a).to_string(), "a,a.2 |");
    }

    #[test]
    fn direct_product_free_abelian_examples() {
        let z2 = direct_product_free_abelian(&Presentation::trivial(), 2, "t");
        assert_eq!(z2.to_string(), "t1,t2 | t1 t2 t1' t2'");
        let a = Presentation::free(&["a"]);
        let z2b = direct_product_free_abelian(&a, 1, "t");
        assert_eq!(z2b.to_string(), "a,t1 | a t1 a' t1'");
        let p: Presentation = "a,b | a b".parse().unwrap();
        assert_eq!(direct_product_free_abelian(&p, 0, "t"), p);
    }

    #[test]
    fn quotient_examples() {
        let f2 = Presentation::free(&["a", "b"]);
        let q = quotient_by_words(&f2, &[Word::gen(0)]).unwrap();
        assert_eq!(q.to_string(), "a,b | a");
        let z = Presentation::free(&["a"]);
        assert_eq!(quotient_by_words(&z, &[Word::gen(0).pow(3)]).unwrap().to_string(), "a | a a a");
        assert!(quotient_by_words(&z, &[Word::gen(4)]).is_err());
    }

    #[test]
    fn van_kampen_trivial_sides() {
        let glue = GluingMap {
            left_pushoffs: vec![],
            right_images: vec![],
            left_meridian: Word::identity(),
            right_meridian: Word::identity(),
        };
        let out = van_kampen_sum(&Presentation::trivial(), &Presentation::trivial(), &glue).unwrap();
        assert_eq!(out.generator_count(), 0);
    }

    #[test]
    fn van_kampen_rejects_bad_words() {
        let glue = GluingMap {
            left_pushoffs: vec![Word::gen(3)],
            right_images: vec![Word::identity()],
            left_meridian: Word::identity(),
            right_meridian: Word::identity(),
        };
        assert!(van_kampen_sum(&Presentation::free(&["a"]), &Presentation::trivial(), &glue).is_err());
    }

    #[test]
    fn remove_relator_matches_rotations() {
        let mut p: Presentation = "x,y,b | y b y' b'; x x".parse().unwrap();
        let mu = p.parse_word("b' y' b y").unwrap();
        assert_eq!(p.remove_relator(&mu), 1);
        assert_eq!(p.to_string(), "x,y,b | x x");
    }

    fn arb_presentation() -> impl Strategy<Value = Presentation> {
        (1usize..5).prop_flat_map(|n| {
            let letter = prop_oneof![1i32..=(n as i32), -(n as i32)..=-1];
            proptest::collection::vec(proptest::collection::vec(letter, 0..8), 0..5).prop_map(move |rels| {
                let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
                Presentation::new(names, rels.into_iter().map(Word::from_letters).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_presentation()) {
            let text = p.to_string();
            let q: Presentation = text.parse().unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), text);
        }
    }
}
