//! Named families of semigroups.
//!
//! Element naming conventions:
//!
//! * `gcd n`: elements `1..n` (unnamed; labels are the 1-based indices, which
//!   coincide with the integers).
//! * `cyclic_nilpotent k`: `I, a, a2, ..., a<k-1>, z` where `z = a^k`.
//! * `three_nil B`: `I, s1, ..., sn, z', z`.
//! * `rook n`, `full_transform n`: maps on `{1..n}` written as image lists,
//!   `[21]` for the transposition and `-` for undefined points, e.g. `[1-]`.
//!   Composition applies the right factor first.
//! * `left_zero n`, `chain_semilattice n`: unnamed; the chain lists the bottom first.
//! * `zmod_add n`, `zmod_mul n`: residues `0..n-1`.
//! * `adjoin_identity`, `adjoin_zero`: the new element is appended last and
//!   named `I` (resp. `z`), primed as needed to stay unique.

use num_integer::Integer;

use super::{validate_table, RawTable, Semigroup, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Family {
    Gcd(usize),
    CyclicNilpotent(usize),
    ThreeNil(Vec<Vec<u8>>),
    Rook(usize),
    FullTransform(usize),
    LeftZero(usize),
    ChainSemilattice(usize),
    AdjoinIdentity(Box<Semigroup>),
    AdjoinZero(Box<Semigroup>),
    ZmodAdd(usize),
    ZmodMul(usize),
    Symmetric(usize),
}

/// Names accepted by [`parse_family`].
pub const FAMILY_NAMES: &[&str] = &[
    "gcd",
    "cyclic_nilpotent",
    "three_nil",
    "rook",
    "full_transform",
    "left_zero",
    "chain_semilattice",
    "zmod_add",
    "zmod_mul",
    "symmetric",
    "wenger9",
    "wenger11",
];

pub fn build_family(family: &Family) -> Result<Semigroup> {
    match family {
        Family::Gcd(n) => gcd(*n),
        Family::CyclicNilpotent(k) => cyclic_nilpotent(*k),
        Family::ThreeNil(b) => three_nil(b),
        Family::Rook(n) => rook(*n),
        Family::FullTransform(n) => full_transform(*n),
        Family::LeftZero(n) => left_zero(*n),
        Family::ChainSemilattice(n) => chain_semilattice(*n),
        Family::AdjoinIdentity(s) => adjoin_identity(s),
        Family::AdjoinZero(s) => adjoin_zero(s),
        Family::ZmodAdd(n) => zmod_add(*n),
        Family::ZmodMul(n) => zmod_mul(*n),
        Family::Symmetric(n) => symmetric(*n),
    }
}

/// Builds a family from a name and textual parameters, as on the command line.
///
/// `three_nil` takes the rows of `B` as 0/1 strings, e.g. `three_nil 10 01`.
pub fn parse_family(name: &str, params: &[String]) -> Result<Semigroup> {
    let int = |i: usize| -> Result<usize> {
        params
            .get(i)
            .ok_or_else(|| Error::ParamOutOfRange(format!("{name} needs a parameter")))?
            .parse()
            .map_err(|_| Error::ParamOutOfRange(format!("`{}` is not a nonnegative integer", params[i])))
    };
    let fam = match name {
        "gcd" => Family::Gcd(int(0)?),
        "cyclic_nilpotent" => Family::CyclicNilpotent(int(0)?),
        "three_nil" => Family::ThreeNil(
            params
                .iter()
                .map(|row| {
                    row.chars()
                        .map(|c| match c {
                            '0' => Ok(0),
                            '1' => Ok(1),
                            _ => Err(Error::ParamOutOfRange(format!("matrix row `{row}` must be 0/1"))),
                        })
                        .collect()
                })
                .collect::<Result<_>>()?,
        ),
        "rook" => Family::Rook(int(0)?),
        "full_transform" => Family::FullTransform(int(0)?),
        "left_zero" => Family::LeftZero(int(0)?),
        "chain_semilattice" => Family::ChainSemilattice(int(0)?),
        "zmod_add" => Family::ZmodAdd(int(0)?),
        "zmod_mul" => Family::ZmodMul(int(0)?),
        "symmetric" => Family::Symmetric(int(0)?),
        "wenger9" => return wenger9(),
        "wenger11" => return wenger11(),
        _ => return Err(Error::UnknownFamily(name.to_string())),
    };
    build_family(&fam)
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(msg()))
    }
}

fn cap(n: usize) -> Result<()> {
    if n > DEFAULT_SIZE_CAP {
        Err(Error::SizeOverflow { size: n, cap: DEFAULT_SIZE_CAP })
    } else {
        Ok(())
    }
}

pub fn gcd(n: usize) -> Result<Semigroup> {
    need(n >= 1, || "gcd needs n >= 1".into())?;
    cap(n)?;
    Semigroup::from_fn(n, |i, j| (i + 1).gcd(&(j + 1)) - 1)
}

/// `{I} ∪ ⟨a | a^k = a^(k+1)⟩`, with `k + 1` elements.
pub fn cyclic_nilpotent(k: usize) -> Result<Semigroup> {
    need(k >= 1, || "cyclic_nilpotent needs k >= 1".into())?;
    cap(k + 1)?;
    // index 0 = I, index i = a^i for 1 <= i <= k, and a^k = z is last
    let table = (0..=k).map(|i| (0..=k).map(|j| (i + j).min(k)).collect()).collect();
    let mut names = vec!["I".to_string()];
    for i in 1..k {
        names.push(if i == 1 { "a".into() } else { format!("a{i}") });
    }
    names.push("z".into());
    validate_table(RawTable::new(table).with_names(names))
}

/// `S ∪ {I}` where `S = {s1..sn, z', z}` with `si sj = z'` iff `B[i][j] = 1`.
pub fn three_nil(b: &[Vec<u8>]) -> Result<Semigroup> {
    let n = b.len();
    need(n >= 1 && b.iter().all(|r| r.len() == n), || "three_nil needs a square 0/1 matrix".into())?;
    need(b.iter().flatten().all(|&v| v <= 1), || "three_nil matrix entries must be 0 or 1".into())?;
    cap(n + 3)?;
    let (zp, z) = (n + 1, n + 2);
    let table = (0..n + 3)
        .map(|s| {
            (0..n + 3)
                .map(|t| match (s, t) {
                    (0, t) => t,
                    (s, 0) => s,
                    (s, t) if s <= n && t <= n => {
                        if b[s - 1][t - 1] == 1 {
                            zp
                        } else {
                            z
                        }
                    }
                    _ => z,
                })
                .collect()
        })
        .collect();
    let mut names = vec!["I".to_string()];
    names.extend((1..=n).map(|i| format!("s{i}")));
    names.push("z'".into());
    names.push("z".into());
    validate_table(RawTable::new(table).with_names(names))
}

fn map_name(images: &[Option<usize>]) -> String {
    let body: String = images.iter().map(|im| im.map_or('-', |v| char::from(b'1' + v as u8))).collect();
    format!("[{body}]")
}

fn compose_maps(maps: &[Vec<Option<usize>>]) -> Result<Semigroup> {
    let idx = |m: &[Option<usize>]| maps.iter().position(|x| x == m).expect("closed under composition");
    let table = maps
        .iter()
        .map(|s| {
            maps.iter()
                .map(|t| {
                    let st: Vec<Option<usize>> = t.iter().map(|im| im.and_then(|v| s[v])).collect();
                    idx(&st)
                })
                .collect()
        })
        .collect();
    validate_table(RawTable::new(table).with_names(maps.iter().map(|m| map_name(m))))
}

fn all_maps(n: usize, partial: bool) -> Vec<Vec<Option<usize>>> {
    let choices: Vec<Option<usize>> = if partial { std::iter::once(None).chain((0..n).map(Some)).collect() } else { (0..n).map(Some).collect() };
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(*c);
                    p
                })
            })
            .collect();
    }
    out
}

/// Rook monoid: partial injective maps on `{1..n}`.
pub fn rook(n: usize) -> Result<Semigroup> {
    need((1..=3).contains(&n), || "rook needs 1 <= n <= 3".into())?;
    let maps: Vec<_> = all_maps(n, true)
        .into_iter()
        .filter(|m| {
            let imgs: Vec<usize> = m.iter().flatten().copied().collect();
            let mut d = imgs.clone();
            d.sort_unstable();
            d.dedup();
            d.len() == imgs.len()
        })
        .collect();
    compose_maps(&maps)
}

/// Full transformation monoid on `{1..n}`.
pub fn full_transform(n: usize) -> Result<Semigroup> {
    need((1..=3).contains(&n), || "full_transform needs 1 <= n <= 3".into())?;
    compose_maps(&all_maps(n, false))
}

pub fn symmetric(n: usize) -> Result<Semigroup> {
    need((1..=5).contains(&n), || "symmetric needs 1 <= n <= 5".into())?;
    let maps: Vec<Vec<Option<usize>>> = permutations(n).into_iter().map(|p| p.into_iter().map(Some).collect()).collect();
    compose_maps(&maps)
}

/// Permutations of `{0..n-1}` as image lists, in the element order of [`symmetric`].
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_maps(n, false)
        .into_iter()
        .map(|m| m.into_iter().flatten().collect::<Vec<_>>())
        .filter(|m| {
            let mut d = m.clone();
            d.sort_unstable();
            d.dedup();
            d.len() == n
        })
        .collect()
}

pub fn left_zero(n: usize) -> Result<Semigroup> {
    need(n >= 1, || "left_zero needs n >= 1".into())?;
    cap(n)?;
    Semigroup::from_fn(n, |s, _| s)
}

pub fn chain_semilattice(n: usize) -> Result<Semigroup> {
    need(n >= 1, || "chain_semilattice needs n >= 1".into())?;
    cap(n)?;
    Semigroup::from_fn(n, |s, t| s.min(t))
}

fn fresh_name(s: &Semigroup, base: &str) -> String {
    let mut name = base.to_string();
    while s.index_of(&name).is_some() {
        name.push('\'');
    }
    name
}

fn adjoin(s: &Semigroup, base: &str, prod: impl Fn(usize, usize) -> Option<usize>) -> Result<Semigroup> {
    let n = s.len();
    cap(n + 1)?;
    let table = (0..=n)
        .map(|a| (0..=n).map(|b| prod(a, b).unwrap_or_else(|| s.mul(a, b))).collect())
        .collect();
    let mut raw = RawTable::new(table);
    if s.names().is_some() {
        let mut names = s.labels();
        names.push(fresh_name(s, base));
        raw.names = Some(names);
    }
    validate_table(raw)
}

pub fn adjoin_identity(s: &Semigroup) -> Result<Semigroup> {
    let n = s.len();
    adjoin(s, "I", |a, b| {
        if a == n {
            Some(b)
        } else if b == n {
            Some(a)
        } else {
            None
        }
    })
}

pub fn adjoin_zero(s: &Semigroup) -> Result<Semigroup> {
    let n = s.len();
    adjoin(s, "z", |a, b| (a == n || b == n).then_some(n))
}

pub fn zmod_add(n: usize) -> Result<Semigroup> {
    need(n >= 1, || "zmod_add needs n >= 1".into())?;
    cap(n)?;
    Semigroup::from_fn(n, |a, b| (a + b) % n)?.with_names((0..n).map(|i| i.to_string()))
}

pub fn zmod_mul(n: usize) -> Result<Semigroup> {
    need(n >= 1, || "zmod_mul needs n >= 1".into())?;
    cap(n)?;
    Semigroup::from_fn(n, |a, b| a * b % n)?.with_names((0..n).map(|i| i.to_string()))
}

/// Builds a commutative monoid `G × N` modulo the zero, where `G = {1, a}`
/// and `N` is given by a product rule on nilpotent "parts".
fn twofold_monoid(parts: &[&str], rule: impl Fn(usize, usize) -> (usize, usize)) -> Result<Semigroup> {
    // element list: (g, part) for every non-zero part, then z; the zero part is last in `parts`
    let zp = parts.len() - 1;
    let mut elems = Vec::new();
    for p in 0..zp {
        elems.push((0, p));
        elems.push((1, p));
    }
    let zidx = elems.len();
    let idx = |g: usize, p: usize| if p == zp { zidx } else { elems.iter().position(|&e| e == (g, p)).unwrap() };
    let table = (0..=zidx)
        .map(|x| {
            (0..=zidx)
                .map(|y| {
                    if x == zidx || y == zidx {
                        return zidx;
                    }
                    let (gx, px) = elems[x];
                    let (gy, py) = elems[y];
                    let (extra, p) = rule(px, py);
                    idx((gx + gy + extra) % 2, p)
                })
                .collect()
        })
        .collect();
    let mut names: Vec<String> = elems
        .iter()
        .map(|&(g, p)| match (g, p) {
            (0, 0) => "1".to_string(),
            (1, 0) => "a".to_string(),
            (0, p) => parts[p].to_string(),
            (_, p) => format!("a{}", parts[p]),
        })
        .collect();
    names.push("z".into());
    validate_table(RawTable::new(table).with_names(names))
}

/// The 9-element monoid `⟨a, r, s | a² = 1, rs = r³ = s³ = z, r² = as²⟩`,
/// elements `1, a, r, ar, s, as, z', az', z` with `z' = r²`.
pub fn wenger9() -> Result<Semigroup> {
    // parts: 0 = 1, 1 = r, 2 = s, 3 = z', 4 = z
    twofold_monoid(&["1", "r", "s", "z'", "z"], |x, y| match (x.min(y), x.max(y)) {
        (0, p) => (0, p),
        (1, 1) => (0, 3),
        (2, 2) => (1, 3),
        _ => (0, 4),
    })
}

/// The 11-element monoid `⟨a, r, s, t | a² = 1, rt = s² = z, r² = rs = ast = at²⟩`
/// with all words of length 3 in `r, s, t` equal to `z`;
/// elements `1, a, r, ar, s, as, t, at, z', az', z` with `z' = r²`.
pub fn wenger11() -> Result<Semigroup> {
    // parts: 0 = 1, 1 = r, 2 = s, 3 = t, 4 = z', 5 = z
    twofold_monoid(&["1", "r", "s", "t", "z'", "z"], |x, y| match (x.min(y), x.max(y)) {
        (0, p) => (0, p),
        (1, 1) | (1, 2) => (0, 4),
        (2, 3) | (3, 3) => (1, 4),
        _ => (0, 5),
    })
}
