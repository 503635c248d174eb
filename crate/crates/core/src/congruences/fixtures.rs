//! The worked examples: congruences given by rules on left-infinite words
//! and two hat-lifts from partitions of `{a,b}^3`.

use std::sync::Arc;

use super::{lcs_verdict, CongruenceRepr, Lcs, RightCongruenceK, RuleFixture, Schema, Verdict};
use crate::error::{Error, Result};
use crate::leftinf::{LeftInfiniteWord, DEFAULT_DEPTH_BOUND};
use crate::words::{colex_chain, Alphabet, Letter, Word};

pub const FIXTURE_NAMES: [&str; 7] = [
    "cnc",
    "notr",
    "cir",
    "cnp",
    "newnotsp",
    "newcer",
    "newcer-prime",
];

const A: Letter = 0;
const B: Letter = 1;
const CNC: &str = "cnc-w";

/// `w = …a⁴ba³ba²bab`: `b` exactly at the triangular positions.
pub fn cnc_word(alphabet: &Alphabet) -> LeftInfiniteWord {
    LeftInfiniteWord::rule(alphabet, CNC, DEFAULT_DEPTH_BOUND, |i| {
        // i is triangular iff 8i+1 is a perfect square
        let s = 8 * i as u64 + 1;
        let r = (s as f64).sqrt() as u64;
        if (r.saturating_sub(1)..=r + 1).any(|t| t * t == s) {
            B
        } else {
            A
        }
    })
}

fn nth_prime(k: usize) -> u64 {
    let mut count = 0;
    let mut n = 1u64;
    while count < k {
        n += 1;
        if (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
        {
            count += 1;
        }
    }
    n
}

/// `w_n = …a^{p₃ⁿ}ba^{p₂ⁿ}ba^{p₁ⁿ}b` for `n = p_k^i`.
pub fn cnp_word(alphabet: &Alphabet, k: usize, i: u32) -> LeftInfiniteWord {
    let n = nth_prime(k).saturating_pow(i);
    let n = u32::try_from(n).unwrap_or(u32::MAX);
    LeftInfiniteWord::rule(
        alphabet,
        &format!("cnp-w[{k},{i}]"),
        DEFAULT_DEPTH_BOUND,
        move |pos| {
            let mut pos = pos as u64;
            let mut j = 1;
            loop {
                if pos == 1 {
                    return B;
                }
                pos -= 1;
                let run = nth_prime(j).saturating_pow(n);
                if pos <= run {
                    return A;
                }
                pos -= run;
                j += 1;
            }
        },
    )
}

fn parse_cnp_name(name: &str) -> Option<(usize, u32)> {
    let inner = name.strip_prefix("cnp-w[")?.strip_suffix(']')?;
    let (k, i) = inner.split_once(',')?;
    Some((k.parse().ok()?, i.parse().ok()?))
}

/// Three-valued disjunction.
fn or3(a: Option<bool>, b: Option<bool>, depth: usize) -> Verdict {
    match (a, b) {
        (Some(true), _) | (_, Some(true)) => Verdict::True,
        (Some(false), Some(false)) => Verdict::False,
        _ => Verdict::Undetermined { depth },
    }
}

fn equality(x: &LeftInfiniteWord, y: &LeftInfiniteWord, depth: usize) -> Result<Option<bool>> {
    Ok(match lcs_verdict(x, y, depth)? {
        Lcs::Equal => Some(true),
        Lcs::Exact(_) => Some(false),
        Lcs::AtLeast(_) => None,
    })
}

enum Factor {
    /// `x = w·u`.
    Exact(Word),
    /// Eventually periodic, so never of the form `w·u`.
    Never,
    Unknown,
}

fn factor(x: &LeftInfiniteWord, name: &str) -> Factor {
    match x.rule_parts() {
        Some((n, t)) if n == name => Factor::Exact(t.clone()),
        Some(_) => Factor::Unknown,
        None => Factor::Never,
    }
}

/// Decides a congruence `{(w·u, w·v) : related(u, v)} ∪ id` with `w`
/// aperiodic.
fn w_membership<F>(
    related: F,
) -> impl Fn(&LeftInfiniteWord, &LeftInfiniteWord, usize) -> Result<Verdict>
where
    F: Fn(&Word, &Word) -> bool,
{
    move |x, y, depth| {
        let eq = equality(x, y, depth)?;
        let fac = match (factor(x, CNC), factor(y, CNC)) {
            (Factor::Exact(u), Factor::Exact(v)) => Some(related(&u, &v)),
            (Factor::Never, _) | (_, Factor::Never) => Some(false),
            _ => None,
        };
        Ok(or3(eq, fac, depth))
    }
}

fn shifted_pair(u: &Word, v: &Word, p: &[Letter], q: &[Letter]) -> bool {
    let split = |w: &Word, pre: &[Letter]| w.0.strip_prefix(pre).map(|s| s.to_vec());
    match (split(u, p), split(v, q)) {
        (Some(s), Some(t)) => s == t,
        _ => false,
    }
}

fn cnc(a: &Alphabet) -> RuleFixture {
    RuleFixture {
        name: "cnc".into(),
        alphabet: a.clone(),
        membership: Arc::new(w_membership(|u, v| u.len() == v.len())),
        schema: Some(Schema::EqualLength(cnc_word(a))),
    }
}

fn notr(a: &Alphabet) -> RuleFixture {
    let w = cnc_word(a);
    let gens = move |_depth: usize| {
        [(vec![A, A], vec![B, A]), (vec![B, B, A], vec![B, B, B])]
            .into_iter()
            .map(|(p, q)| {
                (
                    w.append(&Word(p)).expect("letters"),
                    w.append(&Word(q)).expect("letters"),
                )
            })
            .collect()
    };
    let related = |u: &Word, v: &Word| {
        [(&[A, A][..], &[B, A][..]), (&[B, B, A][..], &[B, B, B][..])]
            .iter()
            .any(|(p, q)| shifted_pair(u, v, p, q) || shifted_pair(v, u, p, q))
    };
    RuleFixture {
        name: "notr".into(),
        alphabet: a.clone(),
        membership: Arc::new(w_membership(related)),
        schema: Some(Schema::Shifted(Arc::new(gens))),
    }
}

fn contains_b(x: &LeftInfiniteWord, depth: usize) -> Result<Option<bool>> {
    if let Some((p, t)) = x.parts() {
        return Ok(Some(p.0.contains(&B) || t.0.contains(&B)));
    }
    let limit = x.depth_bound().map_or(depth, |b| b.min(depth));
    for i in 1..=limit {
        if x.letter_at(i)? == B {
            return Ok(Some(true));
        }
    }
    Ok(None)
}

fn cir(a: &Alphabet) -> RuleFixture {
    let membership =
        |x: &LeftInfiniteWord, y: &LeftInfiniteWord, depth: usize| -> Result<Verdict> {
            Ok(match (contains_b(x, depth)?, contains_b(y, depth)?) {
                (Some(p), Some(q)) => Verdict::from_bool(p == q),
                _ => Verdict::Undetermined { depth },
            })
        };
    RuleFixture {
        name: "cir".into(),
        alphabet: a.clone(),
        membership: Arc::new(membership),
        schema: None,
    }
}

/// Whether `{x, y}` is `{b^{-ω}a·s, a^{-ω}b·s}`.
fn cnp_periodic_pair(x: &LeftInfiniteWord, y: &LeftInfiniteWord) -> Option<bool> {
    let (p, t) = x.parts()?;
    let (q, s) = y.parts()?;
    let shape = |p: &Word, t: &Word, c: Letter, d: Letter| p.0 == [c] && t.0.first() == Some(&d);
    let ok = |p: &Word, t: &Word, q: &Word, s: &Word| {
        shape(p, t, B, A) && shape(q, s, A, B) && t.0[1..] == s.0[1..]
    };
    Some(ok(p, t, q, s) || ok(q, s, p, t))
}

fn cnp_rule_pair(x: &LeftInfiniteWord, y: &LeftInfiniteWord) -> Option<bool> {
    let (nx, tx) = x.rule_parts()?;
    let (ny, ty) = y.rule_parts()?;
    let (kx, ix) = parse_cnp_name(nx)?;
    let (ky, iy) = parse_cnp_name(ny)?;
    if (kx, ix) != (ky, iy) {
        return Some(false);
    }
    if kx == 0 || kx > 16 || ix == 0 || ix as usize >= 1 << kx {
        return Some(false);
    }
    let chain = colex_chain(x.alphabet(), kx).ok()?;
    let (u, v) = (&chain[ix as usize - 1].0[..], &chain[ix as usize].0[..]);
    Some(shifted_pair(tx, ty, u, v) || shifted_pair(ty, tx, u, v))
}

fn cnp(a: &Alphabet) -> RuleFixture {
    let alpha = a.clone();
    let gens = move |depth: usize| {
        let mut out = vec![(
            LeftInfiniteWord::periodic(&alpha, Word(vec![B]), Word(vec![A])).expect("periodic"),
            LeftInfiniteWord::periodic(&alpha, Word(vec![A]), Word(vec![B])).expect("periodic"),
        )];
        for k in 1..=depth.min(16) {
            let chain = colex_chain(&alpha, k).expect("binary");
            for i in 1..chain.len() {
                let w = cnp_word(&alpha, k, i as u32);
                out.push((
                    w.append(&chain[i - 1]).expect("letters"),
                    w.append(&chain[i]).expect("letters"),
                ));
            }
        }
        out
    };
    let membership =
        |x: &LeftInfiniteWord, y: &LeftInfiniteWord, depth: usize| -> Result<Verdict> {
            let eq = equality(x, y, depth)?;
            let is_cnp = |w: &LeftInfiniteWord| {
                w.rule_parts()
                    .is_some_and(|(n, _)| parse_cnp_name(n).is_some())
            };
            let fac = match (x.is_eventually_periodic(), y.is_eventually_periodic()) {
                (true, true) => cnp_periodic_pair(x, y),
                (false, false) if is_cnp(x) && is_cnp(y) => cnp_rule_pair(x, y),
                (true, false) if is_cnp(y) => Some(false),
                (false, true) if is_cnp(x) => Some(false),
                _ => None,
            };
            Ok(or3(eq, fac, depth))
        };
    RuleFixture {
        name: "cnp".into(),
        alphabet: a.clone(),
        membership: Arc::new(membership),
        schema: Some(Schema::Shifted(Arc::new(gens))),
    }
}

fn partition(a: &Alphabet, blocks: &[&[&str]]) -> RightCongruenceK {
    let blocks: Vec<Vec<Word>> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|s| a.parse_word(s).expect("letters"))
                .collect()
        })
        .collect();
    RightCongruenceK::from_blocks(a, 3, &blocks).expect("example partitions are right congruences")
}

pub fn fixture(name: &str) -> Result<CongruenceRepr> {
    let a = Alphabet::binary();
    Ok(match name {
        "cnc" => CongruenceRepr::RuleFixture(cnc(&a)),
        "notr" => CongruenceRepr::RuleFixture(notr(&a)),
        "cir" => CongruenceRepr::RuleFixture(cir(&a)),
        "cnp" => CongruenceRepr::RuleFixture(cnp(&a)),
        "newnotsp" | "newcer" => CongruenceRepr::HatLift(partition(
            &a,
            &[
                &["aaa", "aba", "baa"],
                &["bab", "aab"],
                &["abb"],
                &["bba"],
                &["bbb"],
            ],
        )),
        "newcer-prime" => CongruenceRepr::HatLift(partition(
            &a,
            &[
                &["aaa", "bba", "baa"],
                &["bab", "aab"],
                &["abb"],
                &["aba"],
                &["bbb"],
            ],
        )),
        other => return Err(Error::Invalid(format!("unknown fixture `{other}`"))),
    })
}

pub fn examples_fixtures() -> Vec<(String, CongruenceRepr)> {
    FIXTURE_NAMES
        .iter()
        .map(|n| (n.to_string(), fixture(n).expect("known fixture")))
        .collect()
}
