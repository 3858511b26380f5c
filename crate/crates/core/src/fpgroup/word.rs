use std::fmt;

/// A word in the free group on indexed generators.
///
/// Letters are signed 1-based generator indices: `k > 0` is generator
/// `k - 1`, `-k` its inverse. Zero never occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw signed letters and freely reduces it.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = Word(Vec::new());
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            w.push(l);
        }
        w
    }

    /// The generator with 0-based index `idx`.
    pub fn gen(idx: usize) -> Self {
        Word(vec![idx as i32 + 1])
    }

    pub fn gen_inv(idx: usize) -> Self {
        Word(vec![-(idx as i32 + 1)])
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: &Word, y: &Word) -> Self {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling against the last one when possible.
    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Removes conjugating prefix/suffix pairs `a ... a^-1`.
    pub fn cyclically_reduced(&self) -> Word {
        let v = &self.0;
        let (mut i, mut j) = (0usize, v.len());
        while j - i >= 2 && v[i] == -v[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(v[i..j].to_vec())
    }

    /// Largest 0-based generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    /// Number of occurrences of generator `idx` (either sign).
    pub fn occurrences(&self, idx: usize) -> usize {
        let t = idx as i32 + 1;
        self.0.iter().filter(|l| l.abs() == t).count()
    }

    /// Exponent sum of generator `idx`.
    pub fn exponent_sum(&self, idx: usize) -> i64 {
        let t = idx as i32 + 1;
        self.0
            .iter()
            .map(|&l| if l == t { 1 } else if l == -t { -1 } else { 0 })
            .sum()
    }

    /// Replaces every occurrence of generator `idx` by `image` (inverted for
    /// inverse letters). The result is freely reduced.
    pub fn substitute(&self, idx: usize, image: &Word) -> Word {
        let t = idx as i32 + 1;
        let inv = image.inverse();
        let mut w = Word::identity();
        for &l in &self.0 {
            if l == t {
                for &m in &image.0 {
                    w.push(m);
                }
            } else if l == -t {
                for &m in &inv.0 {
                    w.push(m);
                }
            } else {
                w.push(l);
            }
        }
        w
    }

    /// Applies `f` to every generator index (signs are preserved).
    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.0.iter().map(|&l| {
            let g = f(l.unsigned_abs() as usize - 1) as i32 + 1;
            if l > 0 {
                g
            } else {
                -g
            }
        }))
    }

    /// Shifts every generator index by `offset`.
    pub fn shifted(&self, offset: usize) -> Word {
        self.map_generators(|g| g + offset)
    }

    /// Canonical representative of the conjugacy class of `w` and `w^-1`
    /// among cyclic rotations: the lexicographically least rotation of the
    /// cyclically reduced word or of its inverse.
    pub fn cyclic_canonical(&self) -> Word {
        let c = self.cyclically_reduced();
        if c.is_empty() {
            return c;
        }
        let inv = c.inverse();
        let mut best: Option<Vec<i32>> = None;
        for base in [&c.0, &inv.0] {
            for k in 0..base.len() {
                let rot: Vec<i32> = base[k..].iter().chain(base[..k].iter()).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Word(best.unwrap_or_default())
    }

    /// Whether the two words define the same relator (equal up to cyclic
    /// rotation and inversion after cyclic reduction).
    pub fn same_relator(&self, other: &Word) -> bool {
        self.cyclic_canonical() == other.cyclic_canonical()
    }
}

impl fmt::Display for Word {
    /// Index form, e.g. `g0 g1 g0' g1'`; named printing lives on
    /// `Presentation`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{}", l.unsigned_abs() - 1)?;
            if l < 0 {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}
