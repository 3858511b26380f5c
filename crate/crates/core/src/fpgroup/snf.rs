use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Presentation;

/// Smith normal form `D = U·A·V` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub d: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl Snf {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..k).map(|i| self.d[i][i].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// `row[dst] += k * row[src]`
fn add_row(m: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    let s = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(s) {
        *x += k * y;
    }
}

fn add_col(m: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] += k * s;
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Computes the Smith normal form of an integer matrix given as rows of
/// equal length.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Snf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut d: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[i][t].div_floor(&d[t][t]);
                let nq = -q;
                add_row(&mut d, i, t, &nq);
                add_row(&mut u, i, t, &nq);
                dirty |= !d[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = d[t][j].div_floor(&d[t][t]);
                let nq = -q;
                add_col(&mut d, j, t, &nq);
                add_col(&mut v, j, t, &nq);
                dirty |= !d[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&d[i][j] % &d[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    add_row(&mut d, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    finish(d, u, v)
}

fn finish(mut d: Vec<Vec<BigInt>>, mut u: Vec<Vec<BigInt>>, v: Vec<Vec<BigInt>>) -> Snf {
    let k = d.len().min(d.first().map_or(0, Vec::len));
    for t in 0..k {
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Snf { d, u, v }
}

/// Relator-by-generator matrix of exponent sums.
pub fn exponent_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators()
        .iter()
        .map(|r| (0..p.generator_count()).map(|g| r.exponent_sum(g)).collect())
        .collect()
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with
/// `d1 | d2 | ... | dk`, each `di ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianInvariants {
            free_rank,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Invariants of a direct sum, renormalized into a divisibility chain.
    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        let mut t: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let g = t[i].gcd(&t[j]);
                let l = t[i].lcm(&t[j]);
                t[i] = g;
                t[j] = l;
            }
        }
        let torsion = t.into_iter().filter(|x| !x.is_one()).collect();
        AbelianInvariants {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// First homology of the presented group.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let m = exponent_matrix(p);
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    AbelianInvariants {
        free_rank: p.generator_count() - factors.len(),
        torsion: factors.into_iter().filter(|x| !x.is_one()).collect(),
    }
}
