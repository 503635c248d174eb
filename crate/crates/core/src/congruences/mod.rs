//! Right congruences on `A^k` and on left-infinite words.
//!
//! A congruence on `A^k` acts by the sliding window `u·a = ξ_k(ua)`; its
//! hat-lift relates left-infinite words through their last `k` letters.

mod analysis;
mod fixtures;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{parse_err, Error, Result};
use crate::leftinf::LeftInfiniteWord;
use crate::uf::UnionFind;
use crate::words::{Alphabet, Ideal, Letter, Side, Word};

pub use analysis::{
    cayley_graph, classify, lambda_sets, res_set, underline_overline, Caps, CayleyGraph,
    Classification, LambdaSets,
};
pub use fixtures::{cnc_word, cnp_word, examples_fixtures, fixture, FIXTURE_NAMES};

/// Three-valued answer for questions a depth cap can leave open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Undetermined { depth: usize },
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Undetermined { .. } => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Undetermined { .. } => "undetermined",
        }
    }
}

/// A partition of `A^k` stable under `u·a = ξ_k(ua)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RightCongruenceK {
    alphabet: Alphabet,
    k: usize,
    /// Block label per word, words indexed in lexicographic order and
    /// labels numbered by first occurrence.
    labels: Vec<usize>,
}

impl fmt::Debug for RightCongruenceK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|w| self.alphabet.render(w))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "RC(k={}; {})", self.k, blocks.join(" | "))
    }
}

impl RightCongruenceK {
    /// Validates a labelling; fails if it is not stable.
    pub fn from_labels(alphabet: &Alphabet, k: usize, labels: Vec<usize>) -> Result<Self> {
        let n = alphabet.len().pow(k as u32);
        if labels.len() != n {
            return Err(Error::Invalid(format!(
                "expected {n} labels, got {}",
                labels.len()
            )));
        }
        let mut uf = UnionFind::new(n);
        let mut first = std::collections::HashMap::new();
        for (i, &l) in labels.iter().enumerate() {
            let r = *first.entry(l).or_insert(i);
            uf.union(r, i);
        }
        let rc = RightCongruenceK {
            alphabet: alphabet.clone(),
            k,
            labels: uf.labels(),
        };
        if let Some((u, v)) = rc.stability_violation() {
            return Err(Error::Invalid(format!(
                "not a right congruence: {} ~ {} but their successors split",
                alphabet.render(&u),
                alphabet.render(&v)
            )));
        }
        Ok(rc)
    }

    /// Blocks must partition `A^k`.
    pub fn from_blocks(alphabet: &Alphabet, k: usize, blocks: &[Vec<Word>]) -> Result<Self> {
        let n = alphabet.len().pow(k as u32);
        let mut labels = vec![usize::MAX; n];
        for (b, words) in blocks.iter().enumerate() {
            for w in words {
                if w.len() != k {
                    return Err(Error::LengthMismatch {
                        expected: k,
                        word: alphabet.render(w),
                    });
                }
                let i = index_of(alphabet, w);
                if labels[i] != usize::MAX {
                    return Err(Error::Invalid(format!(
                        "`{}` occurs in two blocks",
                        alphabet.render(w)
                    )));
                }
                labels[i] = b;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Invalid(format!(
                "`{}` is in no block",
                alphabet.render(&word_at(alphabet, k, i))
            )));
        }
        Self::from_labels(alphabet, k, labels)
    }

    pub fn identity(alphabet: &Alphabet, k: usize) -> Self {
        let n = alphabet.len().pow(k as u32);
        RightCongruenceK {
            alphabet: alphabet.clone(),
            k,
            labels: (0..n).collect(),
        }
    }

    pub fn universal(alphabet: &Alphabet, k: usize) -> Self {
        let n = alphabet.len().pow(k as u32);
        RightCongruenceK {
            alphabet: alphabet.clone(),
            k,
            labels: vec![0; n],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, w: &Word) -> usize {
        self.labels[index_of(&self.alphabet, w)]
    }

    pub fn related(&self, u: &Word, v: &Word) -> bool {
        self.block_of(u) == self.block_of(v)
    }

    /// Blocks in label order, each sorted.
    pub fn blocks(&self) -> Vec<Vec<Word>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].push(word_at(&self.alphabet, self.k, i));
        }
        out
    }

    /// Index of `ξ_k(ua)`.
    pub(crate) fn act(&self, i: usize, a: Letter) -> usize {
        act_index(self.alphabet.len(), self.k, i, a)
    }

    fn stability_violation(&self) -> Option<(Word, Word)> {
        let mut rep = vec![usize::MAX; self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            if rep[l] == usize::MAX {
                rep[l] = i;
                continue;
            }
            for a in self.alphabet.letters() {
                if self.labels[self.act(i, a)] != self.labels[self.act(rep[l], a)] {
                    return Some((
                        word_at(&self.alphabet, self.k, rep[l]),
                        word_at(&self.alphabet, self.k, i),
                    ));
                }
            }
        }
        None
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &RightCongruenceK) -> bool {
        self.k == other.k && self.alphabet == other.alphabet && {
            let mut img = vec![usize::MAX; self.block_count()];
            self.labels.iter().zip(&other.labels).all(|(&a, &b)| {
                if img[a] == usize::MAX {
                    img[a] = b;
                }
                img[a] == b
            })
        }
    }

    /// `k: …`, `alphabet: …` and one `block:` line per block.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "k: {}\nalphabet: {}\n",
            self.k,
            self.alphabet.names().join(" ")
        );
        for b in self.blocks() {
            let ws: Vec<String> = b.iter().map(|w| self.alphabet.render(w)).collect();
            s.push_str(&format!("block: {}\n", ws.join(" ")));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut k = None;
        let mut alphabet = None;
        let mut blocks = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(i + 1, "expected `key: value`"))?;
            match key.trim() {
                "k" => {
                    k = Some(
                        rest.trim()
                            .parse::<usize>()
                            .map_err(|e| parse_err(i + 1, e.to_string()))?,
                    )
                }
                "alphabet" => {
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    alphabet =
                        Some(Alphabet::new(&toks).map_err(|e| parse_err(i + 1, e.to_string()))?);
                }
                "block" => {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| parse_err(i + 1, "block before alphabet"))?;
                    let ws = rest
                        .split_whitespace()
                        .map(|t| a.parse_word(t))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| parse_err(i + 1, e.to_string()))?;
                    blocks.push(ws);
                }
                other => return Err(parse_err(i + 1, format!("unknown key `{other}`"))),
            }
        }
        let k = k.ok_or_else(|| parse_err(1, "missing `k:`"))?;
        let alphabet = alphabet.ok_or_else(|| parse_err(1, "missing `alphabet:`"))?;
        Self::from_blocks(&alphabet, k, &blocks)
    }
}

pub(crate) fn index_of(alphabet: &Alphabet, w: &Word) -> usize {
    let m = alphabet.len();
    w.0.iter().fold(0, |acc, &a| acc * m + a as usize)
}

pub(crate) fn word_at(alphabet: &Alphabet, k: usize, mut i: usize) -> Word {
    let m = alphabet.len();
    let mut v = vec![0; k];
    for slot in v.iter_mut().rev() {
        *slot = (i % m) as Letter;
        i /= m;
    }
    Word(v)
}

fn act_index(m: usize, k: usize, i: usize, a: Letter) -> usize {
    if k == 0 {
        return 0;
    }
    (i * m + a as usize) % m.pow(k as u32)
}

/// Smallest right congruence on `A^k` containing `pairs`.
pub fn rc_closure(
    alphabet: &Alphabet,
    k: usize,
    pairs: &[(Word, Word)],
) -> Result<RightCongruenceK> {
    let m = alphabet.len();
    let n = m.pow(k as u32);
    let mut uf = UnionFind::new(n);
    let mut work = Vec::new();
    for (u, v) in pairs {
        for w in [u, v] {
            if w.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    word: alphabet.render(w),
                });
            }
        }
        work.push((index_of(alphabet, u), index_of(alphabet, v)));
    }
    // every merge forces the merge of the successors
    while let Some((i, j)) = work.pop() {
        if uf.union(i, j) {
            for a in 0..m as Letter {
                work.push((act_index(m, k, i, a), act_index(m, k, j, a)));
            }
        }
    }
    Ok(RightCongruenceK {
        alphabet: alphabet.clone(),
        k,
        labels: uf.labels(),
    })
}

type Membership =
    Arc<dyn Fn(&LeftInfiniteWord, &LeftInfiniteWord, usize) -> Result<Verdict> + Send + Sync>;
type Generators = Arc<dyn Fn(usize) -> Vec<(LeftInfiniteWord, LeftInfiniteWord)> + Send + Sync>;

/// How a fixture enumerates the pairs that generate it.
#[derive(Clone)]
pub enum Schema {
    /// The congruence is `{(Xu, Yu), (Yu, Xu)} ∪ id` over the generator
    /// pairs `(X, Y)`; the argument bounds the finite part of the pairs.
    Shifted(Generators),
    /// `(wu, wv)` for all `|u| = |v|`, plus the identity.
    EqualLength(LeftInfiniteWord),
}

/// A congruence given by a membership predicate.
#[derive(Clone)]
pub struct RuleFixture {
    pub name: String,
    pub alphabet: Alphabet,
    pub membership: Membership,
    pub schema: Option<Schema>,
}

#[derive(Clone)]
pub enum CongruenceRepr {
    HatLift(RightCongruenceK),
    /// `τ_I` for a two-sided ideal `I`.
    SpecialFromIdeal(Ideal),
    RuleFixture(RuleFixture),
}

impl fmt::Debug for CongruenceRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceRepr::HatLift(s) => write!(f, "HatLift({s:?})"),
            CongruenceRepr::SpecialFromIdeal(i) => write!(f, "SpecialFromIdeal({i:?})"),
            CongruenceRepr::RuleFixture(r) => write!(f, "RuleFixture({})", r.name),
        }
    }
}

impl CongruenceRepr {
    pub fn special(ideal: Ideal) -> Result<Self> {
        if ideal.side() != Side::TwoSided {
            return Err(Error::SideMismatch);
        }
        Ok(CongruenceRepr::SpecialFromIdeal(ideal))
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            CongruenceRepr::HatLift(s) => s.alphabet(),
            CongruenceRepr::SpecialFromIdeal(i) => i.alphabet(),
            CongruenceRepr::RuleFixture(r) => &r.alphabet,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CongruenceRepr::HatLift(_) => "hat-lift",
            CongruenceRepr::SpecialFromIdeal(_) => "special",
            CongruenceRepr::RuleFixture(_) => "fixture",
        }
    }

    /// A finite congruence whose hat-lift equals this one, when the index is
    /// finite and the congruence is closed.
    pub fn as_hat_lift(&self) -> Result<RightCongruenceK> {
        match self {
            CongruenceRepr::HatLift(s) => Ok(s.clone()),
            CongruenceRepr::SpecialFromIdeal(i) => {
                let comp = i.finite_complement().ok_or(Error::InfiniteIndex)?;
                // ξ_{m+1} decides τ_I when the complement sits in A^{≤m}
                let k = comp.iter().map(|w| w.len()).max().unwrap_or(0) + 1;
                rho_bracket_k(self, k, k)
            }
            CongruenceRepr::RuleFixture(r) => Err(Error::Invalid(format!(
                "fixture `{}` has no finite closed representation",
                r.name
            ))),
        }
    }
}

/// Decides `x ρ y`, looking at most `depth` letters into rule-based words.
pub fn tau_membership(
    repr: &CongruenceRepr,
    x: &LeftInfiniteWord,
    y: &LeftInfiniteWord,
    depth: usize,
) -> Result<Verdict> {
    if x.alphabet() != repr.alphabet() || y.alphabet() != repr.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    match repr {
        CongruenceRepr::HatLift(s) => {
            if s.k() > depth {
                return Err(Error::DepthExceeded {
                    requested: s.k(),
                    bound: depth,
                });
            }
            Ok(Verdict::from_bool(s.related(&x.xi(s.k())?, &y.xi(s.k())?)))
        }
        CongruenceRepr::SpecialFromIdeal(ideal) => {
            // a common suffix in I exists iff the lcs is in I
            match lcs_verdict(x, y, depth)? {
                Lcs::Equal => Ok(Verdict::True),
                Lcs::Exact(w) => Ok(Verdict::from_bool(ideal.contains(&w))),
                Lcs::AtLeast(w) => Ok(if ideal.contains(&w) {
                    Verdict::True
                } else {
                    Verdict::Undetermined { depth }
                }),
            }
        }
        CongruenceRepr::RuleFixture(r) => (r.membership)(x, y, depth),
    }
}

pub(crate) enum Lcs {
    Equal,
    Exact(Word),
    /// The words agree on this suffix and were not examined further.
    AtLeast(Word),
}

pub(crate) fn lcs_verdict(x: &LeftInfiniteWord, y: &LeftInfiniteWord, depth: usize) -> Result<Lcs> {
    if let (Some((n1, t1)), Some((n2, t2))) = (x.rule_parts(), y.rule_parts()) {
        if n1 == n2 && t1 == t2 {
            return Ok(Lcs::Equal);
        }
    }
    if x.is_eventually_periodic() && y.is_eventually_periodic() {
        return Ok(match x.lcs_exact(y) {
            None => Lcs::Equal,
            Some(w) => Lcs::Exact(w),
        });
    }
    let limit = [x.depth_bound(), y.depth_bound()]
        .into_iter()
        .flatten()
        .fold(depth, usize::min);
    let (m, exact) = x.lcs_upto(y, limit)?;
    let w = x.xi(m)?;
    Ok(if exact {
        Lcs::Exact(w)
    } else {
        Lcs::AtLeast(w)
    })
}

/// `ρ^(k)`: pairs `(u, v)` of `A^k` with `(A^{-ω}u × A^{-ω}v) ∩ ρ ≠ ∅`.
/// Symmetric and reflexive; `depth` bounds fixture enumeration.
pub fn rho_k(repr: &CongruenceRepr, k: usize, depth: usize) -> Result<BTreeSet<(Word, Word)>> {
    if k > depth {
        return Err(Error::DepthExceeded {
            requested: k,
            bound: depth,
        });
    }
    let a = repr.alphabet().clone();
    let words = a.words_of_len(k);
    let mut rel: BTreeSet<(Word, Word)> = words.iter().map(|w| (w.clone(), w.clone())).collect();
    match repr {
        CongruenceRepr::HatLift(s) => {
            let m = s.k();
            // extend both sides on the left to length m
            let pad = m.saturating_sub(k);
            let exts = a.words_of_len(pad);
            let mut classes: Vec<BTreeSet<usize>> = Vec::with_capacity(words.len());
            for u in &words {
                let set = exts
                    .iter()
                    .map(|e| s.block_of(&e.concat(u).suffix(m)))
                    .collect();
                classes.push(set);
            }
            for (i, u) in words.iter().enumerate() {
                for (j, v) in words.iter().enumerate() {
                    if !classes[i].is_disjoint(&classes[j]) {
                        rel.insert((u.clone(), v.clone()));
                    }
                }
            }
        }
        CongruenceRepr::SpecialFromIdeal(ideal) => {
            // distinct u, v of equal length: the lcs of xu and yv is lcs(u, v)
            for u in &words {
                for v in &words {
                    if u != v && ideal.contains(&crate::words::lcs(u, v)) {
                        rel.insert((u.clone(), v.clone()));
                    }
                }
            }
        }
        CongruenceRepr::RuleFixture(r) => match &r.schema {
            None => return Err(Error::NoSchema(r.name.clone())),
            Some(Schema::EqualLength(w)) => {
                for n in 0..=k {
                    let tails = a.words_of_len(n);
                    for s in &tails {
                        let x = w.append(s)?.xi(k)?;
                        for t in &tails {
                            rel.insert((x.clone(), w.append(t)?.xi(k)?));
                        }
                    }
                }
            }
            Some(Schema::Shifted(gens)) => {
                for (x, y) in gens(depth) {
                    for u in a.words_upto(k.saturating_sub(1)) {
                        let (p, q) = (x.append(&u)?.xi(k)?, y.append(&u)?.xi(k)?);
                        rel.insert((p.clone(), q.clone()));
                        rel.insert((q, p));
                    }
                }
            }
        },
    }
    Ok(rel)
}

/// `ρ^[k]`, the transitive closure of `ρ^(k)`.
pub fn rho_bracket_k(repr: &CongruenceRepr, k: usize, depth: usize) -> Result<RightCongruenceK> {
    let pairs: Vec<(Word, Word)> = rho_k(repr, k, depth)?.into_iter().collect();
    rc_closure(repr.alphabet(), k, &pairs)
}
