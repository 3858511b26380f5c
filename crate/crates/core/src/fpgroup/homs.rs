use std::collections::{BTreeSet, HashMap};

use super::{FpError, Presentation, Result, Word};

/// Largest generator count accepted by [`count_homs_to_sym`].
pub const MAX_HOM_GENERATORS: usize = 6;

/// The symmetric group S_n with a full multiplication table.
struct SymGroup {
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    identity: u8,
    /// (representative, class size) for each conjugacy class.
    classes: Vec<(u8, u64)>,
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut t = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        t.push(len);
    }
    t.sort();
    t
}

impl SymGroup {
    fn new(n: usize) -> Self {
        let perms = permutations(n);
        let index: HashMap<Vec<u8>, u8> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u8)).collect();
        let order = perms.len();
        let mut mul = vec![0u8; order * order];
        let mut inv = vec![0u8; order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // (p*q)(x) = p(q(x))
                let c: Vec<u8> = (0..n).map(|x| p[q[x] as usize]).collect();
                mul[i * order + j] = index[&c];
            }
            let mut pi = vec![0u8; n];
            for (x, &y) in p.iter().enumerate() {
                pi[y as usize] = x as u8;
            }
            inv[i] = index[&pi];
        }
        let mut by_type: Vec<(Vec<usize>, u8, u64)> = Vec::new();
        for (i, p) in perms.iter().enumerate() {
            let t = cycle_type(p);
            match by_type.iter_mut().find(|(ty, _, _)| *ty == t) {
                Some(entry) => entry.2 += 1,
                None => by_type.push((t, i as u8, 1)),
            }
        }
        let identity = index[&(0..n as u8).collect::<Vec<_>>()];
        SymGroup {
            order,
            mul,
            inv,
            identity,
            classes: by_type.into_iter().map(|(_, r, c)| (r, c)).collect(),
        }
    }

    fn m(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    fn eval(&self, w: &Word, assign: &[u8]) -> u8 {
        let mut acc = self.identity;
        for &l in w.letters() {
            let g = assign[l.unsigned_abs() as usize - 1];
            acc = self.m(acc, if l > 0 { g } else { self.inv[g as usize] });
        }
        acc
    }
}

fn generators_of(w: &Word) -> BTreeSet<usize> {
    w.letters().iter().map(|l| l.unsigned_abs() as usize - 1).collect()
}

/// Splits a relator into consecutive pieces whose generator sets are
/// pairwise disjoint.
fn segments(w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut last: HashMap<u32, usize> = HashMap::new();
    for (i, l) in letters.iter().enumerate() {
        last.insert(l.unsigned_abs(), i);
    }
    let mut out = Vec::new();
    let mut start = 0;
    let mut reach = 0;
    for (i, l) in letters.iter().enumerate() {
        reach = reach.max(last[&l.unsigned_abs()]);
        if reach == i {
            out.push(Word::from_letters(letters[start..=i].iter().copied()));
            start = i + 1;
        }
    }
    out
}

/// Distribution of the value of `w` over all assignments of its generators.
fn value_distribution(s: &SymGroup, w: &Word, total_gens: usize) -> Vec<u64> {
    let gens: Vec<usize> = generators_of(w).into_iter().collect();
    let mut dist = vec![0u64; s.order];
    let mut assign = vec![0u8; total_gens];
    let mut counter = vec![0usize; gens.len()];
    loop {
        for (k, &g) in gens.iter().enumerate() {
            assign[g] = counter[k] as u8;
        }
        dist[s.eval(w, &assign) as usize] += 1;
        let mut k = 0;
        loop {
            if k == gens.len() {
                return dist;
            }
            counter[k] += 1;
            if counter[k] < s.order {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

fn convolve(s: &SymGroup, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; s.order];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[s.m(i as u8, j as u8) as usize] += x * y;
            }
        }
    }
    out
}

/// Backtracking count for one connected block of relators.
fn count_component(s: &SymGroup, rels: &[Word], gens: &[usize], total_gens: usize) -> u64 {
    if rels.len() == 1 {
        let segs = segments(&rels[0]);
        if segs.len() > 1 {
            let mut dist = value_distribution(s, &segs[0], total_gens);
            for seg in &segs[1..] {
                dist = convolve(s, &dist, &value_distribution(s, seg, total_gens));
            }
            return dist[s.identity as usize];
        }
    }
    // Each relator is checked at the depth where its last generator is set.
    let depth_of = |w: &Word| -> usize {
        generators_of(w)
            .iter()
            .map(|g| gens.iter().position(|x| x == g).expect("component generator"))
            .max()
            .unwrap_or(0)
    };
    let mut checks: Vec<Vec<&Word>> = vec![Vec::new(); gens.len()];
    for r in rels {
        checks[depth_of(r)].push(r);
    }

    fn rec(s: &SymGroup, depth: usize, gens: &[usize], checks: &[Vec<&Word>], assign: &mut [u8]) -> u64 {
        if depth == gens.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..s.order {
            assign[gens[depth]] = v as u8;
            if checks[depth].iter().all(|r| s.eval(r, assign) == s.identity) {
                total += rec(s, depth + 1, gens, checks, assign);
            }
        }
        total
    }

    // Conjugation symmetry: fix the first generator to class representatives.
    let mut assign = vec![0u8; total_gens];
    let mut total = 0;
    for &(rep, size) in &s.classes {
        assign[gens[0]] = rep;
        if checks[0].iter().all(|r| s.eval(r, &assign) == s.identity) {
            total += size * rec(s, 1, gens, &checks, &mut assign);
        }
    }
    total
}

/// Number of homomorphisms from the presented group to the symmetric group
/// S_n, for `n` in `2..=5` and at most [`MAX_HOM_GENERATORS`] generators.
pub fn count_homs_to_sym(p: &Presentation, n: usize) -> Result<u128> {
    if !(2..=5).contains(&n) {
        return Err(FpError::BoundExceeded(format!("n = {n} outside 2..=5")));
    }
    let k = p.generator_count();
    if k > MAX_HOM_GENERATORS {
        return Err(FpError::BoundExceeded(format!(
            "{k} generators exceeds the limit of {MAX_HOM_GENERATORS}"
        )));
    }
    let s = SymGroup::new(n);
    let rels: Vec<Word> = p.relators().iter().filter(|r| !r.is_empty()).cloned().collect();

    // Union-find over relators sharing generators.
    let mut owner: Vec<Option<usize>> = vec![None; k];
    let mut parent: Vec<usize> = (0..rels.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, r) in rels.iter().enumerate() {
        for g in generators_of(r) {
            match owner[g] {
                Some(j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
                None => owner[g] = Some(i),
            }
        }
    }

    let mut total: u128 = 1;
    let free = owner.iter().filter(|o| o.is_none()).count();
    for _ in 0..free {
        total *= s.order as u128;
    }
    let mut roots: Vec<usize> = (0..rels.len()).map(|i| find(&mut parent, i)).collect();
    roots.sort();
    roots.dedup();
    for root in roots {
        let comp: Vec<Word> = (0..rels.len())
            .filter(|&i| find(&mut parent, i) == root)
            .map(|i| rels[i].clone())
            .collect();
        let mut gens: Vec<usize> = Vec::new();
        for r in &comp {
            for l in r.letters() {
                let g = l.unsigned_abs() as usize - 1;
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
        }
        total *= count_component(&s, &comp, &gens, k) as u128;
    }
    Ok(total)
}
