use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use crate::charnum::CharNum4;
use crate::fpgroup::{Presentation, Word};

use super::{BlockDescriptor, BlockError, Claim, Construction, Result, SubKind, SubmanifoldData};

/// Registry text shipped with the crate.
pub const BUNDLED_REGISTRY: &str = include_str!("../../data/blocks.reg");

/// Fixed blocks, in file order.
#[derive(Debug, Clone)]
pub struct Registry {
    blocks: Vec<BlockDescriptor>,
    index: HashMap<String, usize>,
}

#[derive(Default)]
struct Pending {
    id: String,
    line: usize,
    e: Option<(i64, usize)>,
    sigma: Option<(i64, usize)>,
    spin: bool,
    claims: BTreeSet<Claim>,
    provenance: String,
    pi1: Option<Presentation>,
    c1sq: Option<(i64, usize)>,
    chi_h: Option<(i64, usize)>,
    table_row: Option<u32>,
    construction: Option<Construction>,
    luttinger: u32,
    verified: bool,
    subs: Vec<(String, String, usize)>,
    seen: BTreeSet<String>,
}

fn err(line: usize, msg: impl Into<String>) -> BlockError {
    BlockError::Registry { line, msg: msg.into() }
}

fn parse_int(v: &str, line: usize) -> Result<i64> {
    v.parse().map_err(|_| err(line, format!("expected an integer, found {v:?}")))
}

fn parse_bool(v: &str, line: usize) -> Result<bool> {
    match v {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        _ => Err(err(line, format!("expected true or false, found {v:?}"))),
    }
}

fn parse_sub(name: &str, spec: &str, pi1: &Presentation, line: usize) -> Result<SubmanifoldData> {
    let mut kind = None;
    let mut sub = SubmanifoldData::trivial(name, SubKind::Torus, false, true);
    let mut pushoffs = None;
    for field in spec.split(';') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| err(line, format!("submanifold field {field:?} is not key=value")))?;
        let (k, v) = (k.trim(), v.trim());
        let word = |t: &str| pi1.parse_word(t).map_err(|e| err(line, format!("submanifold {name}: {e}")));
        match k {
            "kind" => {
                kind = Some(match v {
                    "torus" => SubKind::Torus,
                    "genus2" => SubKind::Genus2Surface,
                    "sphere" => return Err(err(line, format!("submanifold {name}: spheres only arise from blow-ups"))),
                    _ => return Err(err(line, format!("unknown submanifold kind {v:?}"))),
                })
            }
            "self" => sub.self_intersection = parse_int(v, line)?,
            "meridian" => sub.meridian = word(v)?,
            "pushoffs" => pushoffs = Some(v.split(',').map(word).collect::<Result<Vec<Word>>>()?),
            "complement" => {
                sub.complement_pi1_equals_ambient = match v {
                    "ambient" => true,
                    "differs" => false,
                    _ => return Err(err(line, format!("complement must be ambient or differs, found {v:?}"))),
                }
            }
            "lagrangian" => sub.lagrangian = parse_bool(v, line)?,
            "essential" => sub.homologically_essential = parse_bool(v, line)?,
            "verified" => sub.verified = parse_bool(v, line)?,
            _ => return Err(err(line, format!("unknown submanifold field {k:?}"))),
        }
    }
    sub.kind = kind.ok_or_else(|| err(line, format!("submanifold {name} has no kind")))?;
    sub.fiber_generator_pushoffs = pushoffs.unwrap_or_else(|| vec![Word::identity(); sub.kind.pushoff_count()]);
    sub.validate(pi1).map_err(|m| err(line, m))?;
    Ok(sub)
}

impl Pending {
    fn finish(self) -> Result<BlockDescriptor> {
        let line = self.line;
        let (e, _) = self.e.ok_or_else(|| err(line, format!("block {} has no e", self.id)))?;
        let (sigma, _) = self.sigma.ok_or_else(|| err(line, format!("block {} has no sigma", self.id)))?;
        let char4 = CharNum4 { e, sigma, spin: self.spin };
        if let Some((c, l)) = self.c1sq {
            let actual = char4.c1_squared().map_err(|x| err(l, x.to_string()))?;
            if actual != c {
                return Err(err(l, format!("c1sq = {c} but 2e + 3sigma = {actual}")));
            }
        }
        if let Some((c, l)) = self.chi_h {
            let actual = char4.chi_h().map_err(|x| err(l, x.to_string()))?;
            if actual != c {
                return Err(err(l, format!("chi_h = {c} but (e + sigma)/4 = {actual}")));
            }
        }
        let pi1 = self.pi1.unwrap_or_else(Presentation::trivial);
        let mut b = BlockDescriptor::new(self.id, char4, pi1);
        for (name, spec, l) in &self.subs {
            let s = parse_sub(name, spec, &b.pi1, *l)?;
            if b.submanifold(name).is_some() {
                return Err(err(*l, format!("duplicate submanifold {name}")));
            }
            b.submanifolds.push(s);
        }
        b.claims = self.claims;
        b.provenance = self.provenance;
        b.pi1_verified = self.verified;
        b.table_row = self.table_row;
        b.construction = self.construction;
        b.luttinger_surgeries = self.luttinger;
        let at = self.sigma.map_or(line, |s| s.1);
        b.validate().map_err(|m| err(at, m))?;
        Ok(b)
    }
}

impl Registry {
    /// Parses registry text: `[id]` sections of `key = value` lines, `#`
    /// comment lines.
    pub fn parse(text: &str) -> Result<Registry> {
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut cur: Option<Pending> = None;
        let mut push = |p: Pending, blocks: &mut Vec<BlockDescriptor>| -> Result<()> {
            let line = p.line;
            let b = p.finish()?;
            if index.contains_key(&b.id) {
                return Err(err(line, format!("duplicate block id {}", b.id)));
            }
            index.insert(b.id.clone(), blocks.len());
            blocks.push(b);
            Ok(())
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(id) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                if let Some(p) = cur.take() {
                    push(p, &mut blocks)?;
                }
                let id = id.trim();
                if id.is_empty() || id.contains(char::is_whitespace) || id.contains('(') {
                    return Err(err(line, format!("bad block id {id:?}")));
                }
                cur = Some(Pending {
                    id: id.to_string(),
                    line,
                    verified: true,
                    ..Pending::default()
                });
                continue;
            }
            let p = cur.as_mut().ok_or_else(|| err(line, "entry outside a [block] section"))?;
            let (k, v) = t.split_once('=').ok_or_else(|| err(line, format!("expected key = value, found {t:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            if let Some(name) = k.strip_prefix("sub ") {
                p.subs.push((name.trim().to_string(), v.to_string(), line));
                continue;
            }
            if !p.seen.insert(k.to_string()) {
                return Err(err(line, format!("key {k} given twice")));
            }
            match k {
                "e" => p.e = Some((parse_int(v, line)?, line)),
                "sigma" => p.sigma = Some((parse_int(v, line)?, line)),
                "spin" => p.spin = parse_bool(v, line)?,
                "claims" => {
                    for c in v.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                        p.claims.insert(Claim::parse(c).ok_or_else(|| err(line, format!("unknown claim {c:?}")))?);
                    }
                }
                "provenance" => p.provenance = v.to_string(),
                "pi1" => p.pi1 = Some(v.parse().map_err(|e| err(line, format!("{e}")))?),
                "c1sq" => p.c1sq = Some((parse_int(v, line)?, line)),
                "chi_h" => p.chi_h = Some((parse_int(v, line)?, line)),
                "table_row" => {
                    p.table_row = Some(u32::try_from(parse_int(v, line)?).map_err(|_| err(line, "negative table row"))?)
                }
                "construction" => p.construction = Some(Construction::parse(v).map_err(|m| err(line, m))?),
                "luttinger" => {
                    p.luttinger = u32::try_from(parse_int(v, line)?).map_err(|_| err(line, "negative surgery count"))?
                }
                "verified" => p.verified = parse_bool(v, line)?,
                _ => return Err(err(line, format!("unknown key {k:?}"))),
            }
        }
        if let Some(p) = cur.take() {
            push(p, &mut blocks)?;
        }
        Ok(Registry { blocks, index })
    }

    pub fn bundled() -> Registry {
        Registry::parse(BUNDLED_REGISTRY).expect("bundled registry is valid")
    }

    pub fn load(path: &Path) -> Result<Registry> {
        let text = std::fs::read_to_string(path).map_err(|e| BlockError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Registry::parse(&text)
    }

    pub fn lookup(&self, id: &str) -> Result<&BlockDescriptor> {
        self.index
            .get(id)
            .map(|&i| &self.blocks[i])
            .ok_or_else(|| BlockError::UnknownBlock(id.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &BlockDescriptor> {
        self.blocks.iter()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks carrying a table row, sorted by row.
    pub fn table_rows(&self) -> Vec<&BlockDescriptor> {
        let mut v: Vec<_> = self.blocks.iter().filter(|b| b.table_row.is_some()).collect();
        v.sort_by_key(|b| b.table_row);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::abelianization;
    use crate::fpgroup::AbelianInvariants;

    #[test]
    fn bundled_loads() {
        let r = Registry::bundled();
        let b = r.lookup("X_3_5").unwrap();
        assert_eq!((b.char4.c1_squared().unwrap(), b.char4.chi_h().unwrap(), b.char4.sigma), (14, 2, -2));
        let b = r.lookup("E1_T4_E1").unwrap();
        assert_eq!((b.char4.c1_squared().unwrap(), b.char4.chi_h().unwrap(), b.char4.sigma), (0, 2, -16));
        assert_eq!(r.table_rows().len(), 16);
        assert!(matches!(r.lookup("nope"), Err(BlockError::UnknownBlock(_))));
    }

    #[test]
    fn every_block_satisfies_identities() {
        for b in Registry::bundled().iter() {
            let c = b.char4.c1_squared().unwrap();
            assert_eq!(c, 2 * b.char4.e + 3 * b.char4.sigma);
            if let Ok(chi) = b.char4.chi_h() {
                assert_eq!(4 * chi, b.char4.e + b.char4.sigma);
            }
        }
    }

    #[test]
    fn t2_sigma2_data() {
        let r = Registry::bundled();
        let b = r.lookup("T2xSigma2").unwrap();
        assert_eq!(b.pi1.generator_count(), 6);
        assert_eq!(abelianization(&b.pi1), AbelianInvariants::new(6, &[]));
        let lag = b.submanifolds.iter().filter(|s| s.lagrangian && s.kind == SubKind::Torus).count();
        assert_eq!(lag, 4);
        // each differing complement drops exactly one ambient relator
        for s in &b.submanifolds {
            if !s.complement_pi1_equals_ambient {
                let mut c = b.pi1.clone();
                assert_eq!(c.remove_relator(&s.meridian), 1, "{}", s.name);
            }
        }
        let f = b.submanifold("F").unwrap();
        assert_eq!(b.pi1.format_word(&f.meridian), "x y x' y'");
    }

    #[test]
    fn rejects_duplicates_with_line() {
        let text = "[A]\ne = 4\nsigma = 0\n\n[A]\ne = 4\nsigma = 0\n";
        match Registry::parse(text) {
            Err(BlockError::Registry { line, msg }) => {
                assert_eq!(line, 5);
                assert!(msg.contains("duplicate"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_invariant_violations() {
        let bad_spin = "[A]\ne = 4\nsigma = -8\nspin = true\n";
        assert!(matches!(Registry::parse(bad_spin), Err(BlockError::Registry { line: 3, .. })));
        let bad_c1 = "[A]\ne = 9\nsigma = -1\nc1sq = 14\n";
        assert!(matches!(Registry::parse(bad_c1), Err(BlockError::Registry { line: 4, .. })));
        let bad_word = "[A]\ne = 0\nsigma = 0\npi1 = a |\nsub T = kind=torus; pushoffs=a, q\n";
        assert!(matches!(Registry::parse(bad_word), Err(BlockError::Registry { line: 5, .. })));
        let sphere = "[A]\ne = 0\nsigma = 0\nsub S = kind=sphere\n";
        assert!(matches!(Registry::parse(sphere), Err(BlockError::Registry { line: 4, .. })));
        let arity = "[A]\ne = 0\nsigma = 0\nsub F = kind=genus2; pushoffs=1, 1\n";
        assert!(matches!(Registry::parse(arity), Err(BlockError::Registry { line: 4, .. })));
        assert!(matches!(Registry::parse("e = 1\n"), Err(BlockError::Registry { line: 1, .. })));
    }
}
